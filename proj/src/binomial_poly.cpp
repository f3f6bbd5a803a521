#include "reesmult/binomial_poly.hpp"

#include <map>

#include "reesmult/errors.hpp"
#include "reesmult/linalg.hpp"
#include "reesmult/parallel.hpp"

namespace reesmult {

static Int basis_value(const std::vector<int>& q, const std::vector<int>& p) {
    Int v = 1;
    for (size_t i = 0; i < q.size(); ++i)
        v *= binomial(Int(p[i]) + q[i], q[i]);
    return v;
}

Rat BinomialPolynomial::eval(const std::vector<int>& point) const {
    Rat acc(0);
    for (const auto& [q, c] : coeffs) {
        if (c == 0) continue;
        acc += c * Rat(basis_value(q, point));
    }
    return acc;
}

BinomialPolynomial fit_binomial_polynomial(const Sampler& sampler, int nvars,
                                           int degree,
                                           const ComputeOptions& opt) {
    if (nvars < 1 || degree < 0)
        fail(errc::internal, "fit_binomial_polynomial: bad shape");
    const auto basis = lower_simplex(nvars, degree);

    std::map<std::vector<int>, Int> cache;
    auto ensure_sampled = [&](const std::vector<std::vector<int>>& pts) {
        std::vector<std::vector<int>> missing;
        for (const auto& p : pts)
            if (!cache.count(p)) missing.push_back(p);
        if (missing.empty()) return;
        auto vals = map_indexed<Int>(
            missing.size(), [&](size_t i) { return sampler(missing[i]); },
            opt.workers);
        for (size_t i = 0; i < missing.size(); ++i)
            cache.emplace(missing[i], vals[i]);
    };

    for (int offset = opt.offset;; offset *= 2) {
        if (offset > opt.offset_cap)
            fail(errc::not_yet_polynomial,
                 "sampler did not stabilize to a degree-" + std::to_string(degree) +
                     " polynomial by offset " + std::to_string(opt.offset_cap));

        std::vector<std::vector<int>> grid;
        for (const auto& q : basis) {
            std::vector<int> p(q);
            for (int& x : p) x += offset;
            grid.push_back(std::move(p));
        }
        std::vector<std::vector<int>> check;
        for (int s = degree + 1; s <= degree + opt.validation_shells; ++s)
            for (const auto& q : compositions(nvars, s)) {
                std::vector<int> p(q);
                for (int& x : p) x += offset;
                check.push_back(std::move(p));
            }
        auto all = grid;
        all.insert(all.end(), check.begin(), check.end());
        ensure_sampled(all);

        size_t n = basis.size();
        std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n));
        std::vector<Rat> b(n);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j)
                M[i][j] = Rat(basis_value(basis[j], grid[i]));
            b[i] = Rat(cache.at(grid[i]));
        }
        auto x = solve_exact(std::move(M), std::move(b));

        BinomialPolynomial poly;
        poly.nvars = nvars;
        poly.degree_bound = degree;
        for (size_t j = 0; j < n; ++j) poly.coeffs[basis[j]] = x[j];

        bool ok = true;
        for (const auto& p : check)
            if (poly.eval(p) != Rat(cache.at(p))) { ok = false; break; }
        if (ok) return poly;
    }
}

Int binom_sum_lhs(int n, int r, int s) {
    Int acc = 0;
    for (int i = 0; i <= n; ++i)
        acc += binomial(Int(i) + r, r) * binomial(Int(n - i) + s, s);
    return acc;
}

Int binom_sum_rhs(int n, int r, int s) {
    return binomial(Int(n) + r + s + 1, r + s + 1);
}

std::vector<Rat> expand_scaled_binomial(int n, int s) {
    if (n < 0 || s < 0) fail(errc::internal, "expand_scaled_binomial: bad input");
    // collocate at r = 0..s; the basis C(r+s-i, s-i) has degree s-i in r
    size_t m = static_cast<size_t>(s) + 1;
    std::vector<std::vector<Rat>> M(m, std::vector<Rat>(m));
    std::vector<Rat> b(m);
    for (size_t row = 0; row < m; ++row) {
        int r = static_cast<int>(row);
        for (size_t i = 0; i < m; ++i)
            M[row][i] = Rat(binomial(Int(r) + s - static_cast<int>(i),
                                     s - static_cast<int>(i)));
        b[row] = Rat(binomial(Int(n) * r + s, s));
    }
    return solve_exact(std::move(M), std::move(b));
}

}  // namespace reesmult
