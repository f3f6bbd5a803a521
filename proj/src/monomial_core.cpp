#include "reesmult/monomial_core.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace reesmult {

static bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

RingCtxPtr make_ring(int dim, std::vector<std::string> vars) {
    if (dim < 1) fail(errc::dimension_unsupported, "ring dimension must be >= 1");
    if (static_cast<int>(vars.size()) != dim)
        fail(errc::arity_mismatch, "expected " + std::to_string(dim) +
                                       " variable names, got " +
                                       std::to_string(vars.size()));
    for (const auto& v : vars)
        if (!is_identifier(v))
            fail(errc::parse_error, "bad variable name '" + v + "'");
    auto sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(errc::duplicate_ideal_name, "variable names must be distinct");
    return std::make_shared<RingContext>(RingContext{dim, std::move(vars)});
}

RingCtxPtr make_ring(std::vector<std::string> vars) {
    int d = static_cast<int>(vars.size());
    return make_ring(d, std::move(vars));
}

// ---- monomial text grammar ------------------------------------------------

Monomial parse_monomial(const RingContext& ctx, const std::string& text) {
    Monomial m(std::vector<int>(ctx.dim, 0));
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto parse_term = [&] {
        skip_ws();
        if (i >= text.size())
            fail(errc::parse_error, "expected term at position " +
                                        std::to_string(i) + " in '" + text + "'");
        if (text[i] == '1') {  // the unit factor
            ++i;
            return;
        }
        if (!std::isalpha(static_cast<unsigned char>(text[i])) && text[i] != '_')
            fail(errc::parse_error, "expected variable at position " +
                                        std::to_string(i) + " in '" + text + "'");
        size_t start = i;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
            ++i;
        std::string name = text.substr(start, i - start);
        int var = -1;
        for (int v = 0; v < ctx.dim; ++v)
            if (ctx.vars[v] == name) { var = v; break; }
        if (var < 0)
            fail(errc::unknown_variable,
                 "unknown variable '" + name + "' in '" + text + "'");
        long exp = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
            ++i;
            skip_ws();
            size_t dstart = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            if (dstart == i)
                fail(errc::parse_error, "expected positive exponent after '^' in '" +
                                            text + "'");
            exp = std::stol(text.substr(dstart, i - dstart));
            if (exp < 1)
                fail(errc::parse_error, "exponent must be positive in '" + text + "'");
            if (exp > 1000000)
                fail(errc::parse_error, "exponent too large in '" + text + "'");
        }
        m.e[var] += static_cast<int>(exp);
    };
    parse_term();
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '*')
            fail(errc::parse_error, "expected '*' at position " + std::to_string(i) +
                                        " in '" + text + "'");
        ++i;
        parse_term();
        skip_ws();
    }
    return m;
}

std::string monomial_string(const RingContext& ctx, const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (int v = 0; v < ctx.dim; ++v) {
        if (m.e[v] == 0) continue;
        if (!first) os << "*";
        os << ctx.vars[v];
        if (m.e[v] > 1) os << "^" << m.e[v];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

// ---- ideal construction ----------------------------------------------------

// Dominance pruning: sort by total degree so a monomial can only be divided
// by one seen earlier, then keep the running antichain of minima.
static std::vector<Monomial> minimal_gens(std::vector<Monomial> gens) {
    std::stable_sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e < b.e;
    });
    std::vector<Monomial> minima;
    for (auto& g : gens) {
        bool redundant = false;
        for (const auto& h : minima)
            if (h.divides(g)) { redundant = true; break; }
        if (!redundant) minima.push_back(std::move(g));
    }
    std::sort(minima.begin(), minima.end());  // canonical lex order
    return minima;
}

MonomialIdeal::MonomialIdeal(RingCtxPtr ctx, std::vector<Monomial> gens)
    : ctx_(std::move(ctx)) {
    if (!ctx_) fail(errc::internal, "ideal without ring context");
    for (const auto& g : gens)
        if (static_cast<int>(g.e.size()) != ctx_->dim)
            fail(errc::arity_mismatch, "generator arity does not match ring dimension");
    gens_ = minimal_gens(std::move(gens));
}

std::string MonomialIdeal::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << monomial_string(*ctx_, gens_[i]);
    }
    os << ")";
    return os.str();
}

MonomialIdeal zero_ideal(RingCtxPtr ctx) { return MonomialIdeal(std::move(ctx), {}); }

MonomialIdeal unit_ideal(RingCtxPtr ctx) {
    Monomial one(std::vector<int>(ctx->dim, 0));
    return MonomialIdeal(std::move(ctx), {one});
}

MonomialIdeal max_ideal(RingCtxPtr ctx) {
    std::vector<Monomial> gens;
    for (int v = 0; v < ctx->dim; ++v) {
        Monomial x(std::vector<int>(ctx->dim, 0));
        x.e[v] = 1;
        gens.push_back(std::move(x));
    }
    return MonomialIdeal(std::move(ctx), std::move(gens));
}

MonomialIdeal parse_ideal(RingCtxPtr ctx, const std::vector<std::string>& gens) {
    std::vector<Monomial> ms;
    ms.reserve(gens.size());
    for (const auto& g : gens) ms.push_back(parse_monomial(*ctx, g));
    return MonomialIdeal(std::move(ctx), std::move(ms));
}

static void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.ring() == b.ring()) return;
    if (a.ring() && b.ring() && *a.ring() == *b.ring()) return;
    fail(errc::context_mismatch, "ideals live in different rings");
}

// ---- arithmetic -------------------------------------------------------------

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    std::vector<Monomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    std::vector<Monomial> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const auto& u : a.gens())
        for (const auto& v : b.gens()) gens.push_back(u * v);
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, int n) {
    if (n < 0) fail(errc::negative_degree, "ideal power with negative exponent");
    if (n == 0) return unit_ideal(a.ring());
    MonomialIdeal r = a;
    for (int i = 1; i < n; ++i) r = product(r, a);
    return r;
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& a, const Monomial& u) {
    std::vector<Monomial> gens;
    gens.reserve(a.gens().size());
    for (const auto& g : a.gens()) gens.push_back(g.colon_by(u));
    return MonomialIdeal(a.ring(), std::move(gens));
}

bool contains(const MonomialIdeal& a, const Monomial& u) {
    for (const auto& g : a.gens())
        if (g.divides(u)) return true;
    return false;
}

bool contains(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    for (const auto& g : b.gens())
        if (!contains(a, g)) return false;
    return true;
}

// ---- length computations ----------------------------------------------------

// Per-variable bound a_i from the pure-power generators; -1 if var i has none.
static std::vector<int> pure_power_box(const MonomialIdeal& a) {
    int d = a.ring()->dim;
    std::vector<int> box(d, -1);
    for (const auto& g : a.gens()) {
        int var = -1, nz = 0;
        for (int v = 0; v < d; ++v)
            if (g.e[v]) { var = v; ++nz; }
        if (nz == 1 && (box[var] < 0 || g.e[var] < box[var])) box[var] = g.e[var];
        if (nz == 0)
            for (int v = 0; v < d; ++v) box[v] = 0;  // unit ideal, empty box
    }
    return box;
}

bool is_m_primary(const MonomialIdeal& a) {
    if (a.is_zero() || a.is_unit()) return false;
    for (int b : pure_power_box(a))
        if (b < 0) return false;
    return true;
}

Int colength(const MonomialIdeal& a) {
    if (a.is_unit()) return 0;
    if (!is_m_primary(a))
        fail(errc::infinite_length, "colength of " + a.to_string() + " is infinite");
    std::vector<int> box = pure_power_box(a);
    int d = a.ring()->dim;
    unsigned long long vol = 1;
    for (int b : box) {
        vol *= static_cast<unsigned long long>(b);
        if (vol > (1ull << 40))
            fail(errc::internal, "colength bounding box too large");
    }
    // odometer over the box; count monomials not in the ideal
    std::vector<int> e(d, 0);
    unsigned long long count = 0;
    while (true) {
        bool inside = false;
        for (const auto& g : a.gens()) {
            bool div = true;
            for (int v = 0; v < d; ++v)
                if (g.e[v] > e[v]) { div = false; break; }
            if (div) { inside = true; break; }
        }
        if (!inside) ++count;
        int v = 0;
        while (v < d && ++e[v] == box[v]) e[v++] = 0;
        if (v == d) break;
    }
    return Int(count);
}

namespace detail {
Int quotient_length_ordered(const std::vector<Monomial>& gens_of_a,
                            const MonomialIdeal& b) {
    // ell(a/b) = sum_k ell(R/(a_{k-1} : g_k)) with a_k = b + (g_1..g_k)
    Int total = 0;
    MonomialIdeal cur = b;
    for (const auto& g : gens_of_a) {
        total += colength(colon_by_monomial(cur, g));
        cur = sum(cur, MonomialIdeal(cur.ring(), {g}));
    }
    return total;
}
}  // namespace detail

Int quotient_length(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    if (!contains(a, b))
        fail(errc::not_contained,
             b.to_string() + " is not contained in " + a.to_string());
    if (a == b) return 0;
    return detail::quotient_length_ordered(a.gens(), b);
}

}  // namespace reesmult
