#pragma once

// Closed-form multiplicity expressions for the (extended) Rees algebra of a
// family of monomial ideals, plus drivers that compare each expression with
// the graded brute-force oracle.  Everything is exact rational arithmetic;
// integrality of final values is asserted, never assumed.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reesmult/hilbert.hpp"
#include "reesmult/monomial_core.hpp"
#include "reesmult/options.hpp"
#include "reesmult/rees_graded.hpp"

namespace reesmult {

enum class Mode { FormulaOnly, OracleOnly, Verify };

struct FormulaReport {
    std::string name;
    std::string inputs;
    std::optional<Rat> formula_value;
    std::optional<Rat> oracle_value;
    std::optional<bool> agree;
    // intermediate quantities (mixed multiplicities, per-entry identity sides)
    std::map<std::string, Rat> detail;
};

// e(R(I)) = sum of e(m^[q+1] | I_1^[q_1] | ... | I_g^[q_g]) over the simplex
// q + q_1 + ... + q_g = d-1.
FormulaReport rees_multiplicity_formula(const std::vector<MonomialIdeal>& ideals,
                                        const ComputeOptions& opt = {});

// e(B(I)) = (1/2^d) sum over subsets {i_1<...<i_t} of {1..g} and compositions
// q + q_1 + ... + q_t = d-1 of 2^{q_1+...+q_t} e(L^[q+1] | I_{i_1}^[q_1] | ...),
// with L = m^2 + I_1 + ... + I_g.
FormulaReport ext_rees_multiplicity_formula(const std::vector<MonomialIdeal>& ideals,
                                            const ComputeOptions& opt = {});

// e(t^{-1}, J, It) = (1/2^d) [ e(K) + sum_q 2^q e_q(K|I) ] with K = J^2 + I.
FormulaReport katz_verma_formula(const MonomialIdeal& J, const MonomialIdeal& I,
                                 const ComputeOptions& opt = {});

// Specializations of the extended-Rees formula: d=1 gives 2^{g-1} e(L), d=2
// gives 2^{g-2} [ e(L) + sum_j e_1(L|I_j) ].
FormulaReport low_dim_formula(const std::vector<MonomialIdeal>& ideals,
                              const ComputeOptions& opt = {});

// Right side of the tower-stage identity: for 1 <= j <= g and q_0 plus the
// trailing exponents (q_{j+1}..q_g) summing to d-1,
//   2^j sum_{t=0}^{j} sum_{S={i_1<...<i_t} in {1..j}} sum_{q+q_1+...+q_t=q_0}
//       2^{q_0-q} e(L^[q+1] | I_{i_1}^[q_1] | ... | I_{i_t}^[q_t] | trailing).
Rat tower_stage_rhs(const std::vector<MonomialIdeal>& ideals, int j, int q0,
                    const std::vector<int>& trailing, const ComputeOptions& opt = {});

enum class IdentityKind { PairSquare, PairFirstPower, MultiSquare, TowerStageOne };

struct IdentityInputs {
    // pair/multi kinds: M = (t^{-1}, J, It) in B(I), companions paired against
    // powers of M^2 + J1*B(I) (or M itself); J1 optional, must lie in J + I
    MonomialIdeal J;
    MonomialIdeal I;
    std::vector<MonomialIdeal> companions;
    std::optional<MonomialIdeal> J1;
};

// All q-indexed entries of the algebra-side table must equal the base-ring
// expression; agree is the conjunction, detail holds both sides per entry.
FormulaReport pair_square_identity(const MonomialIdeal& J, const MonomialIdeal& I,
                                   const MonomialIdeal& I1,
                                   const std::optional<MonomialIdeal>& J1 = std::nullopt,
                                   const ComputeOptions& opt = {});
FormulaReport pair_first_power_identity(const MonomialIdeal& J, const MonomialIdeal& I,
                                        const MonomialIdeal& I1,
                                        const ComputeOptions& opt = {});
FormulaReport multi_square_identity(const MonomialIdeal& J, const MonomialIdeal& I,
                                    const std::vector<MonomialIdeal>& companions,
                                    const std::optional<MonomialIdeal>& J1 = std::nullopt,
                                    const ComputeOptions& opt = {});
// Stage-one instance of the tower identity, checked on B(I_1) with base m.
FormulaReport tower_stage_one_identity(const std::vector<MonomialIdeal>& ideals,
                                       const ComputeOptions& opt = {});

FormulaReport identity_check(IdentityKind kind, const IdentityInputs& inputs,
                             const ComputeOptions& opt = {});

// For I_1..I_g inside m^2, the extended-Rees multiplicity decomposes as
// e(R) plus the Rees multiplicities of all nonempty subfamilies.
FormulaReport rees_vs_ext_rees_check(const std::vector<MonomialIdeal>& ideals,
                                     const ComputeOptions& opt = {});

// Formula/oracle drivers behind the CLI verbs.
FormulaReport ext_rees_report(const std::vector<MonomialIdeal>& ideals, Mode mode,
                              const ComputeOptions& opt = {});
FormulaReport rees_report(const std::vector<MonomialIdeal>& ideals, Mode mode,
                          const ComputeOptions& opt = {});
FormulaReport katz_verma_report(const MonomialIdeal& J, const MonomialIdeal& I, Mode mode,
                                const ComputeOptions& opt = {});

}  // namespace reesmult
