#include "reesmult/formulas.hpp"

#include <algorithm>
#include <sstream>

namespace reesmult {

namespace {

void check_family(const std::vector<MonomialIdeal>& ideals) {
    if (ideals.empty()) fail(errc::bad_request, "need at least one ideal");
    const auto& ring = ideals.front().ring();
    for (const auto& ideal : ideals) {
        if (!(*ideal.ring() == *ring))
            fail(errc::context_mismatch, "family ideals live in different rings");
        if (!ideal.is_nonzero_proper())
            fail(errc::hypothesis_violated, "family ideals must be nonzero and proper");
    }
}

std::string ring_string(const RingCtxPtr& ring) {
    std::ostringstream os;
    os << "k[[";
    for (int i = 0; i < ring->dim; ++i) {
        if (i) os << ",";
        os << ring->vars[i];
    }
    os << "]]";
    return os.str();
}

std::string family_string(const std::vector<MonomialIdeal>& ideals) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        if (i) os << ", ";
        os << "I" << (i + 1) << "=" << ideals[i].to_string();
    }
    os << " in " << ring_string(ideals.front().ring());
    return os.str();
}

// "e(L^[2]|I1^[1]|I2^[0])" with the given slot names and exponents.
std::string entry_label(const std::string& primary, const std::vector<std::string>& slots,
                        const std::vector<int>& q) {
    std::ostringstream os;
    os << "e(" << primary << "^[" << q[0] + 1 << "]";
    for (std::size_t i = 0; i < slots.size(); ++i) os << "|" << slots[i] << "^[" << q[i + 1] << "]";
    os << ")";
    return os.str();
}

Rat integral_or_fail(const Rat& value, const std::string& what) {
    if (!is_integer(value))
        fail(errc::non_integer_result, what + " evaluated to non-integer " + rat_string(value));
    return value;
}

MonomialIdeal family_L(const std::vector<MonomialIdeal>& ideals) {
    MonomialIdeal L = power(max_ideal(ideals.front().ring()), 2);
    for (const auto& ideal : ideals) L = sum(L, ideal);
    return L;
}

void check_sub_ideal(const MonomialIdeal& part, const MonomialIdeal& whole,
                     const std::string& what) {
    if (!contains(whole, part))
        fail(errc::hypothesis_violated, what + " is not contained in the required ideal");
}

}  // namespace

FormulaReport rees_multiplicity_formula(const std::vector<MonomialIdeal>& ideals,
                                        const ComputeOptions& opt) {
    check_family(ideals);
    const auto& ring = ideals.front().ring();
    int g = static_cast<int>(ideals.size());
    FormulaReport report;
    report.name = "rees-mult";
    report.inputs = family_string(ideals);
    auto table = mixed_multiplicities(max_ideal(ring), ideals, opt);
    std::vector<std::string> slots;
    for (int i = 1; i <= g; ++i) slots.push_back("I" + std::to_string(i));
    Rat total(0);
    for (const auto& q : compositions(1 + g, ring->dim - 1)) {
        const Int& entry = table.at(q);
        report.detail[entry_label("m", slots, q)] = Rat(entry);
        total += Rat(entry);
    }
    report.formula_value = integral_or_fail(total, "Rees multiplicity formula");
    return report;
}

FormulaReport ext_rees_multiplicity_formula(const std::vector<MonomialIdeal>& ideals,
                                            const ComputeOptions& opt) {
    check_family(ideals);
    const auto& ring = ideals.front().ring();
    int d = ring->dim;
    int g = static_cast<int>(ideals.size());
    FormulaReport report;
    report.name = "ext-rees-mult";
    report.inputs = family_string(ideals);
    MonomialIdeal L = family_L(ideals);
    Rat total(0);
    for (const auto& subset : subsets_by_cardinality(g)) {
        std::vector<MonomialIdeal> companions;
        std::vector<std::string> slots;
        for (int i : subset) {
            companions.push_back(ideals[i]);
            slots.push_back("I" + std::to_string(i + 1));
        }
        auto table = mixed_multiplicities(L, companions, opt);
        for (const auto& q : compositions(1 + static_cast<int>(subset.size()), d - 1)) {
            const Int& entry = table.at(q);
            report.detail[entry_label("L", slots, q)] = Rat(entry);
            int weight = 0;
            for (std::size_t i = 1; i < q.size(); ++i) weight += q[i];
            total += Rat(pow2(weight) * entry);
        }
    }
    total /= Rat(pow2(d));
    report.formula_value = integral_or_fail(total, "extended-Rees multiplicity formula");
    return report;
}

FormulaReport katz_verma_formula(const MonomialIdeal& J, const MonomialIdeal& I,
                                 const ComputeOptions& opt) {
    if (!is_m_primary(J)) fail(errc::hypothesis_violated, "J must be m-primary");
    if (!I.is_nonzero_proper()) fail(errc::hypothesis_violated, "I must be nonzero proper");
    const auto& ring = J.ring();
    int d = ring->dim;
    FormulaReport report;
    report.name = "katz-verma";
    report.inputs = "J=" + J.to_string() + ", I=" + I.to_string() + " in " + ring_string(ring);
    MonomialIdeal K = sum(power(J, 2), I);
    Rat total(multiplicity_e(K, opt));
    report.detail["e(K)"] = total;
    auto table = mixed_multiplicities(K, {I}, opt);
    for (int q = 0; q <= d - 1; ++q) {
        Int entry = table.eq(q);
        report.detail["e_" + std::to_string(q) + "(K|I)"] = Rat(entry);
        total += Rat(pow2(q) * entry);
    }
    total /= Rat(pow2(d));
    report.formula_value = integral_or_fail(total, "Katz-Verma formula");
    return report;
}

FormulaReport low_dim_formula(const std::vector<MonomialIdeal>& ideals,
                              const ComputeOptions& opt) {
    check_family(ideals);
    const auto& ring = ideals.front().ring();
    int d = ring->dim;
    int g = static_cast<int>(ideals.size());
    if (d != 1 && d != 2)
        fail(errc::dimension_unsupported, "closed low-dimension form needs d in {1,2}");
    FormulaReport report;
    report.name = "ext-rees-mult-low-dim";
    report.inputs = family_string(ideals);
    MonomialIdeal L = family_L(ideals);
    Rat eL(multiplicity_e(L, opt));
    report.detail["e(L)"] = eL;
    Rat total;
    if (d == 1) {
        total = Rat(pow2(g - 1)) * eL;
    } else {
        Rat bracket = eL;
        for (int i = 0; i < g; ++i) {
            Rat e1(e_q(L, ideals[i], 1, opt));
            report.detail["e_1(L|I" + std::to_string(i + 1) + ")"] = e1;
            bracket += e1;
        }
        total = Rat(pow2(g)) / Rat(4) * bracket;  // 2^{g-2} exactly, also for g = 1
    }
    report.formula_value = integral_or_fail(total, "low-dimension formula");
    return report;
}

Rat tower_stage_rhs(const std::vector<MonomialIdeal>& ideals, int j, int q0,
                    const std::vector<int>& trailing, const ComputeOptions& opt) {
    check_family(ideals);
    const auto& ring = ideals.front().ring();
    int d = ring->dim;
    int g = static_cast<int>(ideals.size());
    if (j < 1 || j > g) fail(errc::index_out_of_range, "stage j must satisfy 1 <= j <= g");
    if (static_cast<int>(trailing.size()) != g - j)
        fail(errc::index_out_of_range, "expected one trailing exponent per ideal beyond stage j");
    int trail_sum = 0;
    for (int q : trailing) {
        if (q < 0) fail(errc::index_out_of_range, "negative exponent");
        trail_sum += q;
    }
    if (q0 < 0 || q0 + trail_sum != d - 1)
        fail(errc::index_out_of_range, "exponents must satisfy q0 + trailing = d-1");
    MonomialIdeal L = family_L(ideals);
    std::vector<MonomialIdeal> tail_ideals(ideals.begin() + j, ideals.end());
    Rat total(0);
    for (const auto& subset : subsets_by_cardinality(j)) {
        int t = static_cast<int>(subset.size());
        std::vector<MonomialIdeal> companions;
        for (int i : subset) companions.push_back(ideals[i]);
        companions.insert(companions.end(), tail_ideals.begin(), tail_ideals.end());
        auto table = mixed_multiplicities(L, companions, opt);
        for (const auto& head : compositions(1 + t, q0)) {
            std::vector<int> key = head;
            key.insert(key.end(), trailing.begin(), trailing.end());
            total += Rat(pow2(q0 - head[0]) * table.at(key));
        }
    }
    return Rat(pow2(j)) * total;
}

namespace {

// Shared scaffolding of the algebra-side identity checks: builds B(I), the
// ideal A (M or M^2 + J1*B(I)) and the companion list, fits the algebra-side
// table, and hands both tables to a per-entry comparator.
struct IdentitySides {
    MixedMultiplicityTable lhs;     // over B(I), entries sum to d+1-1 = d
    MixedMultiplicityTable rhs0;    // base ring, primary + companions
    MixedMultiplicityTable rhs1;    // base ring, primary + (I, companions...)
};

IdentitySides identity_tables(const MonomialIdeal& J, const MonomialIdeal& I,
                              const std::vector<MonomialIdeal>& companions,
                              const std::optional<MonomialIdeal>& J1, bool square,
                              const ComputeOptions& opt) {
    if (!is_m_primary(J)) fail(errc::hypothesis_violated, "J must be m-primary");
    if (!I.is_nonzero_proper()) fail(errc::hypothesis_violated, "I must be nonzero proper");
    for (const auto& c : companions)
        if (!c.is_nonzero_proper())
            fail(errc::hypothesis_violated, "companions must be nonzero proper");
    if (J1) check_sub_ideal(*J1, sum(J, I), "J1");

    auto rc = make_rees_context(ReesVariant::ExtendedRees, {I});
    MultiGradedIdeal M = maximal_ideal(rc, J);
    MultiGradedIdeal A = square ? mg_power(M, 2) : M;
    if (J1 && !J1->is_zero()) A = mg_sum(A, mg_constant(rc, *J1));
    std::vector<MultiGradedIdeal> algebra_companions;
    for (const auto& c : companions) algebra_companions.push_back(mg_constant(rc, c));

    MonomialIdeal K = sum(power(J, 2), I);
    if (J1) K = sum(K, *J1);

    IdentitySides sides;
    sides.lhs = mg_mixed_multiplicities(A, algebra_companions, opt);
    sides.rhs0 = mixed_multiplicities(K, companions, opt);
    std::vector<MonomialIdeal> with_I{I};
    with_I.insert(with_I.end(), companions.begin(), companions.end());
    sides.rhs1 = mixed_multiplicities(K, with_I, opt);
    return sides;
}

void record_entry(FormulaReport& report, const std::string& tag, const Rat& lhs,
                  const Rat& rhs) {
    report.detail["lhs " + tag] = lhs;
    report.detail["rhs " + tag] = rhs;
    bool ok = lhs == rhs;
    report.agree = report.agree.value_or(true) && ok;
}

}  // namespace

FormulaReport pair_square_identity(const MonomialIdeal& J, const MonomialIdeal& I,
                                   const MonomialIdeal& I1,
                                   const std::optional<MonomialIdeal>& J1,
                                   const ComputeOptions& opt) {
    int d = J.ring()->dim;
    auto sides = identity_tables(J, I, {I1}, J1, true, opt);
    FormulaReport report;
    report.name = "identity-check:pair-square";
    report.inputs = "J=" + J.to_string() + ", I=" + I.to_string() + ", I1=" + I1.to_string() +
                    (J1 ? ", J1=" + J1->to_string() : "");
    for (int q = 0; q <= d; ++q) {
        Rat lhs(sides.lhs.eq(q));
        Rat rhs = Rat(sides.rhs0.eq(q));
        for (int q0 = 0; q0 + q <= d - 1; ++q0) {
            int q1 = d - 1 - q - q0;
            rhs += Rat(pow2(q1) * sides.rhs1.at({q0, q1, q}));
        }
        rhs *= 2;
        record_entry(report, "q=" + std::to_string(q), lhs, rhs);
        if (q == 0) {
            report.formula_value = rhs;
            report.oracle_value = lhs;
        }
    }
    return report;
}

FormulaReport pair_first_power_identity(const MonomialIdeal& J, const MonomialIdeal& I,
                                        const MonomialIdeal& I1, const ComputeOptions& opt) {
    int d = J.ring()->dim;
    auto sides = identity_tables(J, I, {I1}, std::nullopt, false, opt);
    FormulaReport report;
    report.name = "identity-check:pair-first-power";
    report.inputs = "J=" + J.to_string() + ", I=" + I.to_string() + ", I1=" + I1.to_string();
    for (int q = 0; q <= d; ++q) {
        Rat lhs(sides.lhs.eq(q));
        Rat bracket = Rat(sides.rhs0.eq(q));
        for (int q0 = 0; q0 + q <= d - 1; ++q0) {
            int q1 = d - 1 - q - q0;
            bracket += Rat(pow2(q1) * sides.rhs1.at({q0, q1, q}));
        }
        Rat rhs = bracket / Rat(pow2(d - q));
        record_entry(report, "q=" + std::to_string(q), lhs, rhs);
        if (q == 0) {
            report.formula_value = rhs;
            report.oracle_value = lhs;
        }
    }
    return report;
}

FormulaReport multi_square_identity(const MonomialIdeal& J, const MonomialIdeal& I,
                                    const std::vector<MonomialIdeal>& companions,
                                    const std::optional<MonomialIdeal>& J1,
                                    const ComputeOptions& opt) {
    if (companions.empty()) fail(errc::bad_request, "need at least one companion ideal");
    int d = J.ring()->dim;
    int n = static_cast<int>(companions.size());
    auto sides = identity_tables(J, I, companions, J1, true, opt);
    FormulaReport report;
    report.name = "identity-check:multi-square";
    report.inputs = "J=" + J.to_string() + ", I=" + I.to_string() +
                    (J1 ? ", J1=" + J1->to_string() : "") + ", companions=" +
                    family_string(companions);
    bool first = true;
    for (const auto& comp : compositions(1 + n, d - 1)) {
        int q0 = comp[0];
        std::vector<int> lhs_key = comp;
        lhs_key[0] = q0 + 1;
        Rat lhs(sides.lhs.at(lhs_key));
        std::vector<int> rhs_key = comp;
        Rat rhs(sides.rhs0.at(rhs_key));
        for (int k = 0; k <= q0; ++k) {
            int l = q0 - k;
            std::vector<int> key{k, l};
            key.insert(key.end(), comp.begin() + 1, comp.end());
            rhs += Rat(pow2(l) * sides.rhs1.at(key));
        }
        rhs *= 2;
        std::ostringstream tag;
        tag << "q0=" << q0;
        for (std::size_t i = 1; i < comp.size(); ++i) tag << ",q" << i << "=" << comp[i];
        record_entry(report, tag.str(), lhs, rhs);
        if (first) {
            report.formula_value = rhs;
            report.oracle_value = lhs;
            first = false;
        }
    }
    return report;
}

FormulaReport tower_stage_one_identity(const std::vector<MonomialIdeal>& ideals,
                                       const ComputeOptions& opt) {
    check_family(ideals);
    const auto& ring = ideals.front().ring();
    int d = ring->dim;
    int g = static_cast<int>(ideals.size());
    auto rc = make_rees_context(ReesVariant::ExtendedRees, {ideals.front()});
    MultiGradedIdeal N1 = maximal_ideal(rc);
    MultiGradedIdeal A = mg_power(N1, 2);
    if (g > 1) {
        MonomialIdeal rest = ideals[1];
        for (int i = 2; i < g; ++i) rest = sum(rest, ideals[i]);
        A = mg_sum(A, mg_constant(rc, rest));
    }
    std::vector<MultiGradedIdeal> companions;
    for (int i = 1; i < g; ++i) companions.push_back(mg_constant(rc, ideals[i]));
    auto lhs_table = mg_mixed_multiplicities(A, companions, opt);

    FormulaReport report;
    report.name = "identity-check:tower-stage-one";
    report.inputs = family_string(ideals);
    for (const auto& comp : compositions(g, d - 1)) {
        int q0 = comp[0];
        std::vector<int> trailing(comp.begin() + 1, comp.end());
        std::vector<int> lhs_key = comp;
        lhs_key[0] = q0 + 1;
        Rat lhs(lhs_table.at(lhs_key));
        Rat rhs = tower_stage_rhs(ideals, 1, q0, trailing, opt);
        std::ostringstream tag;
        tag << "q0=" << q0;
        for (std::size_t i = 0; i < trailing.size(); ++i)
            tag << ",q" << (i + 2) << "=" << trailing[i];
        record_entry(report, tag.str(), lhs, rhs);
        if (!report.formula_value) {
            report.formula_value = rhs;
            report.oracle_value = lhs;
        }
    }
    return report;
}

FormulaReport identity_check(IdentityKind kind, const IdentityInputs& inputs,
                             const ComputeOptions& opt) {
    switch (kind) {
        case IdentityKind::PairSquare:
            if (inputs.companions.size() != 1)
                fail(errc::bad_request, "pair-square needs exactly one companion");
            return pair_square_identity(inputs.J, inputs.I, inputs.companions.front(),
                                        inputs.J1, opt);
        case IdentityKind::PairFirstPower:
            if (inputs.companions.size() != 1)
                fail(errc::bad_request, "pair-first-power needs exactly one companion");
            if (inputs.J1 && !inputs.J1->is_zero())
                fail(errc::bad_request, "pair-first-power does not take J1");
            return pair_first_power_identity(inputs.J, inputs.I, inputs.companions.front(),
                                             opt);
        case IdentityKind::MultiSquare:
            return multi_square_identity(inputs.J, inputs.I, inputs.companions, inputs.J1,
                                         opt);
        case IdentityKind::TowerStageOne: {
            std::vector<MonomialIdeal> family{inputs.I};
            family.insert(family.end(), inputs.companions.begin(), inputs.companions.end());
            return tower_stage_one_identity(family, opt);
        }
    }
    fail(errc::internal, "unknown identity kind");
}

FormulaReport rees_vs_ext_rees_check(const std::vector<MonomialIdeal>& ideals,
                                     const ComputeOptions& opt) {
    check_family(ideals);
    const auto& ring = ideals.front().ring();
    for (const auto& ideal : ideals)
        for (const auto& gen : ideal.gens())
            if (gen.degree() < 2)
                fail(errc::hypothesis_violated,
                     "every ideal must lie inside the square of the maximal ideal");
    FormulaReport report;
    report.name = "remark-check";
    report.inputs = family_string(ideals);
    Rat left = *ext_rees_multiplicity_formula(ideals, opt).formula_value;
    Rat right(multiplicity_e(max_ideal(ring), opt));
    report.detail["e(R)"] = right;
    int g = static_cast<int>(ideals.size());
    for (const auto& subset : subsets_by_cardinality(g)) {
        if (subset.empty()) continue;
        std::vector<MonomialIdeal> family;
        std::string label = "rees{";
        for (std::size_t i = 0; i < subset.size(); ++i) {
            family.push_back(ideals[subset[i]]);
            label += (i ? "," : "") + std::to_string(subset[i] + 1);
        }
        label += "}";
        Rat value = *rees_multiplicity_formula(family, opt).formula_value;
        report.detail[label] = value;
        right += value;
    }
    report.formula_value = left;
    report.oracle_value = right;
    report.agree = left == right;
    return report;
}

namespace {

FormulaReport multiplicity_report(const std::vector<MonomialIdeal>& ideals, Mode mode,
                                  ReesVariant variant, std::optional<MonomialIdeal> base,
                                  FormulaReport (*formula)(const std::vector<MonomialIdeal>&,
                                                           const ComputeOptions&),
                                  const std::string& name, const ComputeOptions& opt) {
    check_family(ideals);
    FormulaReport report;
    report.name = name;
    report.inputs = family_string(ideals);
    if (mode != Mode::OracleOnly) {
        FormulaReport f = formula(ideals, opt);
        report.formula_value = f.formula_value;
        report.detail = std::move(f.detail);
    }
    if (mode != Mode::FormulaOnly) {
        auto rc = make_rees_context(variant, ideals);
        auto gm = graded_multiplicity(maximal_ideal(rc, std::move(base)), opt);
        report.oracle_value = Rat(gm.value);
        report.detail["fitted_degree"] = Rat(gm.fitted_degree);
    }
    if (mode == Mode::Verify) report.agree = report.formula_value == report.oracle_value;
    return report;
}

}  // namespace

FormulaReport ext_rees_report(const std::vector<MonomialIdeal>& ideals, Mode mode,
                              const ComputeOptions& opt) {
    return multiplicity_report(ideals, mode, ReesVariant::ExtendedRees, std::nullopt,
                               &ext_rees_multiplicity_formula, "ext-rees-mult", opt);
}

FormulaReport rees_report(const std::vector<MonomialIdeal>& ideals, Mode mode,
                          const ComputeOptions& opt) {
    return multiplicity_report(ideals, mode, ReesVariant::Rees, std::nullopt,
                               &rees_multiplicity_formula, "rees-mult", opt);
}

FormulaReport katz_verma_report(const MonomialIdeal& J, const MonomialIdeal& I, Mode mode,
                                const ComputeOptions& opt) {
    FormulaReport report;
    report.name = "katz-verma";
    report.inputs = "J=" + J.to_string() + ", I=" + I.to_string() + " in " +
                    ring_string(J.ring());
    if (mode != Mode::OracleOnly) {
        FormulaReport f = katz_verma_formula(J, I, opt);
        report.formula_value = f.formula_value;
        report.detail = std::move(f.detail);
    }
    if (mode != Mode::FormulaOnly) {
        auto rc = make_rees_context(ReesVariant::ExtendedRees, {I});
        auto gm = graded_multiplicity(maximal_ideal(rc, J), opt);
        report.oracle_value = Rat(gm.value);
        report.detail["fitted_degree"] = Rat(gm.fitted_degree);
    }
    if (mode == Mode::Verify) report.agree = report.formula_value == report.oracle_value;
    return report;
}

}  // namespace reesmult
