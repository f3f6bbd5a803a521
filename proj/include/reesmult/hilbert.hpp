#pragma once

// Mixed multiplicities of monomial ideals via their multi-Bhattacharya
// function: for K m-primary and J_1..J_g nonzero proper,
//   F(r) = ell( J^r / K * J^r ),  J^r = J_1^{r_1} .. J_g^{r_g},
// is eventually a polynomial of total degree <= d-1, and the coefficients
// on the top shell (in the binomial basis) are the mixed multiplicities
// e(K-slot^{[q_1+1]} | J_2^{[q_2]} | ...).

#include <vector>

#include "reesmult/binomial_poly.hpp"
#include "reesmult/monomial_core.hpp"
#include "reesmult/options.hpp"

namespace reesmult {

struct MixedMultiplicityTable {
    int dim = 0;      // dimension of the ambient ring: keys sum to dim-1
    int nideals = 0;  // number of exponent slots
    std::map<std::vector<int>, Int> entries;

    const Int& at(const std::vector<int>& q) const;
    // e_q(A|C) = entry (dim-1-q, q) of a two-slot table; q == dim gives 0
    Int eq(int q) const;
};

// ell( prod J_i^{r_i} / K * prod J_i^{r_i} ); exact, no fitting involved.
Int bhattacharya_sample(const MonomialIdeal& K,
                        const std::vector<MonomialIdeal>& J,
                        const std::vector<int>& r);

// Table of e(primary^{[q_1+1]} | companions...) over the simplex
// q_1 + ... + q_g = d-1, with J = (primary, companions...) and K = primary.
MixedMultiplicityTable mixed_multiplicities(
    const MonomialIdeal& primary, const std::vector<MonomialIdeal>& companions,
    const ComputeOptions& opt = {});

// Samuel multiplicity e(I) of an m-primary ideal.
Int multiplicity_e(const MonomialIdeal& I, const ComputeOptions& opt = {});

// e_q(I1|I2) = e(I1^{[d-q]} | I2^{[q]}) for 0 <= q <= d, with e_d = 0.
Int e_q(const MonomialIdeal& I1, const MonomialIdeal& I2, int q,
        const ComputeOptions& opt = {});

}  // namespace reesmult
