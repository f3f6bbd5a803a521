#include "reesmult/linalg.hpp"

#include <utility>

#include "reesmult/errors.hpp"

namespace reesmult {

std::vector<Rat> solve_exact(std::vector<std::vector<Rat>> M, std::vector<Rat> b) {
    size_t n = M.size();
    if (b.size() != n)
        fail(errc::internal, "solve_exact: shape mismatch");
    // augmented integer matrix: clear denominators row by row
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        if (M[i].size() != n) fail(errc::internal, "solve_exact: shape mismatch");
        Int scale = 1;
        for (size_t j = 0; j < n; ++j)
            scale = lcm(scale, denominator(M[i][j]));
        scale = lcm(scale, denominator(b[i]));
        for (size_t j = 0; j < n; ++j)
            a[i][j] = numerator(M[i][j]) * (scale / denominator(M[i][j]));
        a[i][n] = numerator(b[i]) * (scale / denominator(b[i]));
    }
    // Bareiss: every division below is exact, entries stay integral
    Int prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) fail(errc::internal, "solve_exact: singular matrix");
            std::swap(a[k], a[p]);
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j <= n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    if (a[n - 1][n - 1] == 0) fail(errc::internal, "solve_exact: singular matrix");
    // back substitution in rationals
    std::vector<Rat> x(n);
    for (size_t ii = n; ii-- > 0;) {
        Rat acc(a[ii][n]);
        for (size_t j = ii + 1; j < n; ++j) acc -= Rat(a[ii][j]) * x[j];
        x[ii] = acc / Rat(a[ii][ii]);
    }
    return x;
}

}  // namespace reesmult
