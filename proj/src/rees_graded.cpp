#include "reesmult/rees_graded.hpp"

#include <algorithm>
#include <sstream>

#include "reesmult/parallel.hpp"

namespace reesmult {

namespace {

std::string degree_string(const std::vector<int>& k) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) os << ",";
        os << k[i];
    }
    os << ")";
    return os.str();
}

void check_degree_arity(const ReesContext& rc, const std::vector<int>& k) {
    if (static_cast<int>(k.size()) != rc.nideals())
        fail(errc::arity_mismatch, "degree tuple has " + std::to_string(k.size()) +
                                       " entries, context has " + std::to_string(rc.nideals()) +
                                       " ideals");
}

void check_same_context(const MultiGradedIdeal& a, const MultiGradedIdeal& b) {
    if (a.rc == b.rc) return;
    if (a.rc && b.rc && a.rc->variant() == b.rc->variant() &&
        *a.rc->ring() == *b.rc->ring() && a.rc->ideals() == b.rc->ideals())
        return;
    fail(errc::context_mismatch, "operands live in different Rees contexts");
}

int support_radius(const MultiGradedIdeal& a) {
    int radius = 0;
    for (const auto& [k, coeff] : a.support) {
        (void)coeff;
        for (int x : k) radius = std::max(radius, std::abs(x));
    }
    return radius;
}

// Lattice points of the box in a fixed lexicographic order: ExtendedRees
// walks [-box, box]^g, Rees walks [0, box]^g.
std::vector<std::vector<int>> box_points(const ReesContext& rc, int box) {
    int lo = rc.variant() == ReesVariant::Rees ? 0 : -box;
    std::vector<std::vector<int>> points;
    std::vector<int> cur(rc.nideals(), lo);
    for (;;) {
        points.push_back(cur);
        int i = rc.nideals() - 1;
        while (i >= 0 && cur[i] == box) cur[i--] = lo;
        if (i < 0) break;
        ++cur[i];
    }
    return points;
}

int max_norm(const std::vector<int>& n) {
    int v = 0;
    for (int x : n) v = std::max(v, std::abs(x));
    return v;
}

}  // namespace

ReesContext::ReesContext(ReesVariant variant, std::vector<MonomialIdeal> ideals)
    : variant_(variant), ideals_(std::move(ideals)) {
    if (ideals_.empty()) fail(errc::bad_request, "Rees context needs at least one ideal");
    ring_ = ideals_.front().ring();
    for (const auto& ideal : ideals_) {
        if (!(*ideal.ring() == *ring_))
            fail(errc::context_mismatch, "context ideals live in different rings");
        if (!ideal.is_nonzero_proper())
            fail(errc::hypothesis_violated, "context ideals must be nonzero and proper");
    }
}

const MonomialIdeal& ReesContext::piece(const std::vector<int>& k) const {
    check_degree_arity(*this, k);
    std::vector<int> key = k;
    for (int& x : key) {
        if (x < 0) {
            if (variant_ == ReesVariant::Rees)
                fail(errc::negative_degree,
                     "Rees algebra has no piece at degree " + degree_string(k));
            x = 0;
        }
    }
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = piece_cache_.find(key);
        if (it != piece_cache_.end()) return it->second;
    }
    MonomialIdeal result = unit_ideal(ring_);
    for (std::size_t i = 0; i < ideals_.size(); ++i)
        if (key[i] > 0) result = product(result, power(ideals_[i], key[i]));
    std::lock_guard<std::mutex> lock(cache_mutex_);
    return piece_cache_.try_emplace(std::move(key), std::move(result)).first->second;
}

ReesCtxPtr make_rees_context(ReesVariant variant, std::vector<MonomialIdeal> ideals) {
    return std::make_shared<const ReesContext>(variant, std::move(ideals));
}

MultiGradedIdeal mg_make(ReesCtxPtr rc, std::map<std::vector<int>, MonomialIdeal> support) {
    if (!rc) fail(errc::bad_request, "null Rees context");
    MultiGradedIdeal out{std::move(rc), {}};
    for (auto& [k, coeff] : support) {
        check_degree_arity(*out.rc, k);
        if (out.rc->variant() == ReesVariant::Rees &&
            std::any_of(k.begin(), k.end(), [](int x) { return x < 0; }))
            fail(errc::negative_degree,
                 "Rees-variant support key " + degree_string(k) + " is negative");
        if (!(*coeff.ring() == *out.rc->ring()))
            fail(errc::context_mismatch, "support coefficient lives in the wrong ring");
        if (!coeff.is_zero()) out.support.emplace(k, std::move(coeff));
    }
    return out;
}

MultiGradedIdeal mg_unit(ReesCtxPtr rc) {
    if (!rc) fail(errc::bad_request, "null Rees context");
    std::vector<int> origin(rc->nideals(), 0);
    MonomialIdeal one = unit_ideal(rc->ring());
    return mg_make(std::move(rc), {{origin, one}});
}

MultiGradedIdeal mg_constant(ReesCtxPtr rc, const MonomialIdeal& ideal) {
    if (!rc) fail(errc::bad_request, "null Rees context");
    std::vector<int> origin(rc->nideals(), 0);
    return mg_make(std::move(rc), {{origin, ideal}});
}

MultiGradedIdeal maximal_ideal(const ReesCtxPtr& rc, std::optional<MonomialIdeal> base) {
    if (!rc) fail(errc::bad_request, "null Rees context");
    MonomialIdeal zero_degree = base ? std::move(*base) : max_ideal(rc->ring());
    if (!is_m_primary(zero_degree))
        fail(errc::hypothesis_violated, "degree-zero slot of the maximal ideal must be m-primary");
    std::map<std::vector<int>, MonomialIdeal> support;
    std::vector<int> origin(rc->nideals(), 0);
    support.emplace(origin, std::move(zero_degree));
    for (int i = 0; i < rc->nideals(); ++i) {
        std::vector<int> up(origin), down(origin);
        up[i] = 1;
        down[i] = -1;
        support.emplace(std::move(up), rc->ideals()[i]);
        if (rc->variant() == ReesVariant::ExtendedRees)
            support.emplace(std::move(down), unit_ideal(rc->ring()));
    }
    return mg_make(rc, std::move(support));
}

MultiGradedIdeal mg_sum(const MultiGradedIdeal& a, const MultiGradedIdeal& b) {
    check_same_context(a, b);
    std::map<std::vector<int>, MonomialIdeal> support = a.support;
    for (const auto& [k, coeff] : b.support) {
        auto it = support.find(k);
        if (it == support.end())
            support.emplace(k, coeff);
        else
            it->second = sum(it->second, coeff);
    }
    return mg_make(a.rc, std::move(support));
}

MultiGradedIdeal mg_product(const MultiGradedIdeal& a, const MultiGradedIdeal& b) {
    check_same_context(a, b);
    std::map<std::vector<int>, MonomialIdeal> support;
    for (const auto& [u, ca] : a.support)
        for (const auto& [v, cb] : b.support) {
            std::vector<int> k(u.size());
            for (std::size_t i = 0; i < u.size(); ++i) k[i] = u[i] + v[i];
            MonomialIdeal term = product(ca, cb);
            auto it = support.find(k);
            if (it == support.end())
                support.emplace(std::move(k), std::move(term));
            else
                it->second = sum(it->second, term);
        }
    return mg_make(a.rc, std::move(support));
}

MultiGradedIdeal mg_power(const MultiGradedIdeal& a, int r) {
    if (r < 0) fail(errc::negative_degree, "negative power of a multigraded ideal");
    MultiGradedIdeal out = mg_unit(a.rc);
    for (int i = 0; i < r; ++i) out = mg_product(out, a);
    return out;
}

MonomialIdeal piece_eval(const MultiGradedIdeal& a, const std::vector<int>& n) {
    check_degree_arity(*a.rc, n);
    if (a.rc->variant() == ReesVariant::Rees &&
        std::any_of(n.begin(), n.end(), [](int x) { return x < 0; }))
        fail(errc::negative_degree, "Rees algebra has no piece at degree " + degree_string(n));
    MonomialIdeal acc = zero_ideal(a.rc->ring());
    for (const auto& [v, coeff] : a.support) {
        std::vector<int> k(n.size());
        bool exists = true;
        for (std::size_t i = 0; i < n.size(); ++i) {
            k[i] = n[i] - v[i];
            if (a.rc->variant() == ReesVariant::Rees && k[i] < 0) exists = false;
        }
        if (!exists) continue;
        acc = sum(acc, product(coeff, context_piece(a.rc, k)));
    }
    return acc;
}

Int graded_quotient_length(const MultiGradedIdeal& a, const MultiGradedIdeal& b,
                           const ComputeOptions& opt) {
    check_same_context(a, b);
    int box = std::max(support_radius(a), support_radius(b)) + opt.box_margin;
    struct PointResult {
        Int length{0};
        bool boundary_clear{true};
    };
    for (;;) {
        if (box > opt.box_cap)
            fail(errc::non_vanishing_boundary,
                 "quotient pieces do not vanish within the box cap " +
                     std::to_string(opt.box_cap));
        auto points = box_points(*a.rc, box);
        auto results = map_indexed<PointResult>(
            points.size(),
            [&](std::size_t idx) -> PointResult {
                const auto& n = points[idx];
                MonomialIdeal pa = piece_eval(a, n);
                MonomialIdeal pb = piece_eval(b, n);
                if (max_norm(n) >= box - 1) return {Int(0), pa == pb};
                return {quotient_length(pa, pb), true};
            },
            opt.workers);
        bool clear = true;
        Int total = 0;
        for (const auto& r : results) {
            clear = clear && r.boundary_clear;
            total += r.length;
        }
        if (clear) return total;
        box *= 2;
    }
}

GradedMultiplicity graded_multiplicity(const MultiGradedIdeal& a, const ComputeOptions& opt) {
    int dim = a.rc->ring()->dim + a.rc->nideals();
    auto sampler = [&](const std::vector<int>& r) {
        return graded_quotient_length(mg_power(a, r[0]), mg_power(a, r[0] + 1), opt);
    };
    BinomialPolynomial poly = fit_binomial_polynomial(sampler, 1, dim - 1, opt);
    int fitted = poly.degree();
    if (a.rc->variant() == ReesVariant::ExtendedRees && fitted != dim - 1)
        fail(errc::degree_mismatch, "power growth has degree " + std::to_string(fitted) +
                                        ", expected " + std::to_string(dim - 1));
    Rat lead = fitted >= 0 ? poly.coefficient({fitted}) : Rat(0);
    if (!is_integer(lead) || lead <= 0)
        fail(errc::non_integer_multiplicity,
             "leading coefficient " + rat_string(lead) + " is not a positive integer");
    return {to_int(lead), fitted, std::move(poly)};
}

MixedMultiplicityTable mg_mixed_multiplicities(const MultiGradedIdeal& primary,
                                               const std::vector<MultiGradedIdeal>& companions,
                                               const ComputeOptions& opt) {
    int dim = primary.rc->ring()->dim + primary.rc->nideals();
    for (const auto& c : companions) check_same_context(primary, c);
    int nvars = 1 + static_cast<int>(companions.size());
    auto sampler = [&](const std::vector<int>& p) {
        MultiGradedIdeal low = mg_power(primary, p[0]);
        MultiGradedIdeal high = mg_product(low, primary);
        for (std::size_t i = 0; i < companions.size(); ++i) {
            MultiGradedIdeal factor = mg_power(companions[i], p[i + 1]);
            low = mg_product(low, factor);
            high = mg_product(high, factor);
        }
        return graded_quotient_length(low, high, opt);
    };
    BinomialPolynomial poly = fit_binomial_polynomial(sampler, nvars, dim - 1, opt);
    MixedMultiplicityTable table;
    table.dim = dim;
    table.nideals = nvars;
    for (const auto& q : compositions(nvars, dim - 1)) {
        Rat c = poly.coefficient(q);
        if (!is_integer(c) || c < 0)
            fail(errc::non_integer_multiplicity,
                 "table entry at " + degree_string(q) + " is " + rat_string(c));
        table.entries.emplace(q, to_int(c));
    }
    return table;
}

MixedMultiplicityTable pair_mixed_multiplicities(const MultiGradedIdeal& a,
                                                 const MultiGradedIdeal& c,
                                                 const ComputeOptions& opt) {
    return mg_mixed_multiplicities(a, {c}, opt);
}

bool power_decomposition_check(const MonomialIdeal& J, const MonomialIdeal& I, int r, int j,
                               const ComputeOptions& opt) {
    if (!is_m_primary(J)) fail(errc::hypothesis_violated, "degree-zero ideal must be m-primary");
    if (!I.is_nonzero_proper()) fail(errc::hypothesis_violated, "ideal must be nonzero proper");
    if (!(0 <= j && j < r && r <= 4))
        fail(errc::bad_request, "decomposition check needs 0 <= j < r <= 4");
    auto rc = make_rees_context(ReesVariant::ExtendedRees, {I});
    MultiGradedIdeal lhs = mg_power(maximal_ideal(rc, J), 2 * (r - j));
    MonomialIdeal K = sum(power(J, 2), I);
    MonomialIdeal H = sum(J, I);
    // Asserted decomposition, t-degree by t-degree; an exponent i-j <= 0 on K
    // means no K factor at all.
    auto expected = [&](int n) -> MonomialIdeal {
        if (n <= -2 * r) return unit_ideal(J.ring());
        if (n < 0) {
            if ((n & 1) == 0) {
                int i = (n + 2 * r) / 2;
                return power(K, std::max(i - j, 0));
            }
            int i = (n + 2 * r - 1) / 2;
            if (i < j) return unit_ideal(J.ring());
            return product(H, power(K, i - j));
        }
        if (n == 0) return power(K, r - j);
        if (n >= 2 * r) return power(I, n);
        if ((n & 1) == 0) {
            int i = (2 * r - n) / 2;
            return product(power(K, std::max(i - j, 0)), power(I, n));
        }
        int i = (2 * r - n - 1) / 2;
        if (i < j) return power(I, n);
        return product(product(H, power(K, i - j)), power(I, n));
    };
    int window = 2 * r + opt.box_margin;
    for (int n = -window; n <= window; ++n)
        if (!(piece_eval(lhs, {n}) == expected(n))) return false;
    return true;
}

}  // namespace reesmult
