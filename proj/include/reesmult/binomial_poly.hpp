#pragma once

// Polynomials in the binomial basis prod_i C(r_i + q_i, q_i) and the exact
// fitting loop.  The basis is the natural one for Hilbert-type counting
// functions: the coefficient on the top total-degree shell is the
// (normalized) multiplicity, no factorial bookkeeping required.

#include <functional>
#include <map>
#include <vector>

#include "reesmult/numeric.hpp"
#include "reesmult/options.hpp"

namespace reesmult {

struct BinomialPolynomial {
    int nvars = 0;
    int degree_bound = 0;  // the fit searched through this total degree
    std::map<std::vector<int>, Rat> coeffs;

    Rat coefficient(const std::vector<int>& q) const {
        auto it = coeffs.find(q);
        return it == coeffs.end() ? Rat(0) : it->second;
    }
    // max total degree carrying a nonzero coefficient; -1 for the zero poly
    int degree() const {
        int deg = -1;
        for (const auto& [q, c] : coeffs) {
            if (c == 0) continue;
            int s = 0;
            for (int x : q) s += x;
            if (s > deg) deg = s;
        }
        return deg;
    }
    Rat eval(const std::vector<int>& point) const;
};

using Sampler = std::function<Int(const std::vector<int>&)>;

// Samples the lower-set grid {offset*1 + q : sum q <= degree}, solves the
// collocation system exactly, and accepts the fit only if it reproduces the
// sampler on the next `validation_shells` total-degree shells.  On failure
// the offset doubles, up to offset_cap; then errc::not_yet_polynomial.
// Sample evaluations are independent and run on `workers` threads; results
// do not depend on the worker count.
BinomialPolynomial fit_binomial_polynomial(const Sampler& sampler, int nvars,
                                           int degree,
                                           const ComputeOptions& opt = {});

// sum_{i=0}^{n} C(i+r, r) C(n-i+s, s), and its closed form C(n+r+s+1, r+s+1).
Int binom_sum_lhs(int n, int r, int s);
Int binom_sum_rhs(int n, int r, int s);

// Coefficients f_0..f_s with C(n r + s, s) = sum_i f_i C(r+s-i, s-i) as
// polynomials in r; f_0 = n^s.
std::vector<Rat> expand_scaled_binomial(int n, int s);

}  // namespace reesmult
