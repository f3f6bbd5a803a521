#include "reesmult/numeric.hpp"

#include <algorithm>

namespace reesmult {

static void compositions_rec(int nvars, int total, int pos,
                             std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
    if (pos == nvars - 1) {
        cur[pos] = total;
        out.push_back(cur);
        return;
    }
    // descending first coordinate would be reverse-lex; we want lex
    // ascending, so start at 0.
    for (int v = 0; v <= total; ++v) {
        cur[pos] = v;
        compositions_rec(nvars, total - v, pos + 1, cur, out);
    }
}

std::vector<std::vector<int>> compositions(int nvars, int total) {
    std::vector<std::vector<int>> out;
    if (nvars <= 0 || total < 0) return out;
    std::vector<int> cur(nvars, 0);
    compositions_rec(nvars, total, 0, cur, out);
    return out;
}

std::vector<std::vector<int>> lower_simplex(int nvars, int total) {
    std::vector<std::vector<int>> out;
    for (int t = 0; t <= total; ++t)
        for (auto& q : compositions(nvars, t)) out.push_back(q);
    return out;
}

std::vector<std::vector<int>> subsets_by_cardinality(int n) {
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> stack;
    // enumerate by cardinality, lexicographic within each
    for (int k = 0; k <= n; ++k) {
        std::vector<int> s(k);
        // first subset of size k
        for (int i = 0; i < k; ++i) s[i] = i;
        while (true) {
            if (k == 0) {
                out.push_back({});
                break;
            }
            out.push_back(s);
            // next k-combination of {0..n-1}
            int i = k - 1;
            while (i >= 0 && s[i] == n - k + i) --i;
            if (i < 0) break;
            ++s[i];
            for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
        }
    }
    return out;
}

}  // namespace reesmult
