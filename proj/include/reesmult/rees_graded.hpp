#pragma once

// Brute-force side of the verification pipeline: homogeneous ideals of the
// (extended) Rees algebra of a family I_1..I_g are represented degreewise,
// lengths of quotients of their powers are summed over a verified box, and
// multiplicities are extracted by exact polynomial fitting.  Nothing here
// knows any closed-form multiplicity expression.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "reesmult/binomial_poly.hpp"
#include "reesmult/errors.hpp"
#include "reesmult/hilbert.hpp"
#include "reesmult/monomial_core.hpp"
#include "reesmult/options.hpp"

namespace reesmult {

enum class ReesVariant { Rees, ExtendedRees };

// The ambient algebra: degrees n in Z^g (ExtendedRees) or N^g (Rees), the
// degree-n piece being prod_i I_i^{n_i} with negative exponents meaning R.
class ReesContext {
public:
    ReesContext(ReesVariant variant, std::vector<MonomialIdeal> ideals);

    ReesVariant variant() const { return variant_; }
    const RingCtxPtr& ring() const { return ring_; }
    const std::vector<MonomialIdeal>& ideals() const { return ideals_; }
    int nideals() const { return static_cast<int>(ideals_.size()); }

    // prod_i I_i^{k_i}; ExtendedRees clamps negative k_i to 0, Rees rejects
    // them.  Cached; safe to call concurrently.
    const MonomialIdeal& piece(const std::vector<int>& k) const;

private:
    ReesVariant variant_;
    RingCtxPtr ring_;
    std::vector<MonomialIdeal> ideals_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::vector<int>, MonomialIdeal> piece_cache_;
};

using ReesCtxPtr = std::shared_ptr<const ReesContext>;

ReesCtxPtr make_rees_context(ReesVariant variant, std::vector<MonomialIdeal> ideals);

inline const MonomialIdeal& context_piece(const ReesCtxPtr& rc, const std::vector<int>& k) {
    return rc->piece(k);
}

// Finitely generated homogeneous ideal of the context algebra: support maps a
// degree to the ideal of coefficients placed there.  The representation is
// not unique; semantics are given by piece_eval.
struct MultiGradedIdeal {
    ReesCtxPtr rc;
    std::map<std::vector<int>, MonomialIdeal> support;
};

// Validates keys, minimalizes coefficients, drops zero entries.
MultiGradedIdeal mg_make(ReesCtxPtr rc, std::map<std::vector<int>, MonomialIdeal> support);
// The algebra itself, {0 -> R}: the unit of mg_product.
MultiGradedIdeal mg_unit(ReesCtxPtr rc);
// The expansion I·B of an ideal of the base ring, {0 -> I}.
MultiGradedIdeal mg_constant(ReesCtxPtr rc, const MonomialIdeal& ideal);
// Maximal homogeneous ideal with the degree-0 slot generalized to `base`
// (default m): ExtendedRees {-e_i -> R, 0 -> base, +e_i -> I_i}, Rees drops
// the -e_i entries.  `base` must be m-primary.
MultiGradedIdeal maximal_ideal(const ReesCtxPtr& rc,
                               std::optional<MonomialIdeal> base = std::nullopt);

MultiGradedIdeal mg_sum(const MultiGradedIdeal& a, const MultiGradedIdeal& b);
MultiGradedIdeal mg_product(const MultiGradedIdeal& a, const MultiGradedIdeal& b);
MultiGradedIdeal mg_power(const MultiGradedIdeal& a, int r);

// Degree-n piece of the represented ideal: sum of gens(v)·piece(n-v).  For
// the Rees variant contributions with any (n-v)_i < 0 do not exist.
MonomialIdeal piece_eval(const MultiGradedIdeal& a, const std::vector<int>& n);

// Sum of the piecewise quotient lengths over a box, verified to have hit all
// nonzero contributions: the two outermost shells must consist of equal piece
// pairs, else the box doubles (up to opt.box_cap).  B must be contained in A
// piecewise on the visited degrees.
Int graded_quotient_length(const MultiGradedIdeal& a, const MultiGradedIdeal& b,
                           const ComputeOptions& opt = {});

struct GradedMultiplicity {
    Int value;          // leading coefficient of the fit in the binomial basis
    int fitted_degree;  // stabilized degree of r -> ell(A^r/A^{r+1})
    BinomialPolynomial poly;
};

// Multiplicity of an ideal primary to the maximal homogeneous ideal, by
// fitting r -> ell(A^r/A^{r+1}).  For ExtendedRees the fitted degree must be
// exactly dim R + g - 1; the Rees variant reports whatever stabilizes.
GradedMultiplicity graded_multiplicity(const MultiGradedIdeal& a,
                                       const ComputeOptions& opt = {});

// Mixed multiplicities on the algebra side: fits
//   (r, s_1, ..., s_k) -> ell(A^r·prod C_i^{s_i} / A^{r+1}·prod C_i^{s_i})
// at total degree dim R + g - 1 and returns the top-shell table, so entry
// (q_0, q_1, ..., q_k) is e(A^[q_0+1] | C_1^[q_1] | ... | C_k^[q_k]).
MixedMultiplicityTable mg_mixed_multiplicities(const MultiGradedIdeal& primary,
                                               const std::vector<MultiGradedIdeal>& companions,
                                               const ComputeOptions& opt = {});
MixedMultiplicityTable pair_mixed_multiplicities(const MultiGradedIdeal& a,
                                                 const MultiGradedIdeal& c,
                                                 const ComputeOptions& opt = {});

// Piece-by-piece comparison of the power M^{2(r-j)}, M = (t^{-1}, J, It) in
// the extended Rees algebra of I, against its displayed direct-sum
// decomposition built from K = J^2 + I and H = J + I.  True iff every
// t-degree in the inspected window matches.
bool power_decomposition_check(const MonomialIdeal& J, const MonomialIdeal& I,
                               int r, int j, const ComputeOptions& opt = {});

}  // namespace reesmult
