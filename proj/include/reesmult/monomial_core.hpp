#pragma once

// Monomial ideals in a power-series ring k[[x_1..x_d]], represented by
// their minimal generating sets (the staircase corners).  All operations
// keep generators minimal and sorted, so equal ideals compare equal.

#include <memory>
#include <string>
#include <vector>

#include "reesmult/errors.hpp"
#include "reesmult/numeric.hpp"

namespace reesmult {

struct RingContext {
    int dim;
    std::vector<std::string> vars;  // dim distinct identifiers

    bool operator==(const RingContext& o) const {
        return dim == o.dim && vars == o.vars;
    }
};

using RingCtxPtr = std::shared_ptr<const RingContext>;

// Validates dim >= 1, names distinct, identifier syntax.
RingCtxPtr make_ring(int dim, std::vector<std::string> vars);
RingCtxPtr make_ring(std::vector<std::string> vars);

struct Monomial {
    std::vector<int> e;  // exponents, one per ring variable

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    int degree() const {
        int s = 0;
        for (int x : e) s += x;
        return s;
    }
    bool is_unit() const {
        for (int x : e)
            if (x) return false;
        return true;
    }
    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    // lcm(*this, o) / o; the generator contributed to a colon ideal.
    Monomial colon_by(const Monomial& o) const {
        Monomial r = *this;
        for (size_t i = 0; i < e.size(); ++i)
            r.e[i] = e[i] > o.e[i] ? e[i] - o.e[i] : 0;
        return r;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator<(const Monomial& o) const { return e < o.e; }  // lex
};

// Grammar: monomial = term ("*" term)*, term = var ("^" posint)? | "1".
Monomial parse_monomial(const RingContext& ctx, const std::string& text);
std::string monomial_string(const RingContext& ctx, const Monomial& m);

class MonomialIdeal {
  public:
    MonomialIdeal() = default;
    // Prunes non-minimal generators and sorts; accepts any spanning set.
    MonomialIdeal(RingCtxPtr ctx, std::vector<Monomial> gens);

    const RingCtxPtr& ring() const { return ctx_; }
    const std::vector<Monomial>& gens() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
    // Proper and nonzero: the hypothesis "ideal of positive height" for
    // monomial ideals presented by generators.
    bool is_nonzero_proper() const { return !is_zero() && !is_unit(); }

    bool operator==(const MonomialIdeal& o) const { return gens_ == o.gens_; }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    RingCtxPtr ctx_;
    std::vector<Monomial> gens_;
};

MonomialIdeal zero_ideal(RingCtxPtr ctx);
MonomialIdeal unit_ideal(RingCtxPtr ctx);
// The maximal ideal (x_1, .., x_d).
MonomialIdeal max_ideal(RingCtxPtr ctx);
// Parse a generator list in the monomial grammar.
MonomialIdeal parse_ideal(RingCtxPtr ctx, const std::vector<std::string>& gens);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, int n);
// (a : u) = ideal of v with v*u in a; generator-wise for monomial ideals.
MonomialIdeal colon_by_monomial(const MonomialIdeal& a, const Monomial& u);
bool contains(const MonomialIdeal& a, const Monomial& u);
// ideal containment b subset of a
bool contains(const MonomialIdeal& a, const MonomialIdeal& b);

// True iff the radical is the maximal ideal: a proper ideal whose minimal
// generators include a pure power of every variable.  Equivalent to finite
// nonzero colength.
bool is_m_primary(const MonomialIdeal& a);

// ell(R/a) = number of standard monomials, counted inside the bounding box
// cut out by the pure-power generators.  0 for the unit ideal.
Int colength(const MonomialIdeal& a);

// ell(a/b) for b subset of a, via the colon filtration
//   ell(a/b) = sum_k ell(R / ((b + (g_1..g_{k-1})) : g_k))
// over the canonical generator order of a.
Int quotient_length(const MonomialIdeal& a, const MonomialIdeal& b);

namespace detail {
// Filtration with an explicit generator sequence; the result does not
// depend on the order (exposed so tests can permute it).
Int quotient_length_ordered(const std::vector<Monomial>& gens_of_a,
                            const MonomialIdeal& b);
}  // namespace detail

}  // namespace reesmult
