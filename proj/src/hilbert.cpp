#include "reesmult/hilbert.hpp"

#include <sstream>

#include "reesmult/errors.hpp"

namespace reesmult {

const Int& MixedMultiplicityTable::at(const std::vector<int>& q) const {
    auto it = entries.find(q);
    if (it == entries.end()) {
        std::ostringstream os;
        os << "no table entry for (";
        for (size_t i = 0; i < q.size(); ++i) os << (i ? "," : "") << q[i];
        os << ")";
        fail(errc::index_out_of_range, os.str());
    }
    return it->second;
}

Int MixedMultiplicityTable::eq(int q) const {
    if (nideals != 2)
        fail(errc::index_out_of_range, "e_q needs a two-slot table");
    if (q < 0 || q > dim)
        fail(errc::index_out_of_range, "e_q index out of range");
    if (q == dim) return 0;  // conventional
    return at({dim - 1 - q, q});
}

Int bhattacharya_sample(const MonomialIdeal& K,
                        const std::vector<MonomialIdeal>& J,
                        const std::vector<int>& r) {
    if (J.size() != r.size())
        fail(errc::arity_mismatch, "exponent tuple does not match ideal list");
    for (int ri : r)
        if (ri < 0) fail(errc::negative_degree, "negative power in sample point");
    MonomialIdeal P = unit_ideal(K.ring());
    for (size_t i = 0; i < J.size(); ++i) P = product(P, power(J[i], r[i]));
    return quotient_length(P, product(K, P));
}

MixedMultiplicityTable mixed_multiplicities(
    const MonomialIdeal& primary, const std::vector<MonomialIdeal>& companions,
    const ComputeOptions& opt) {
    if (!is_m_primary(primary))
        fail(errc::hypothesis_violated,
             "first ideal " + primary.to_string() + " must be m-primary");
    for (const auto& c : companions)
        if (!c.is_nonzero_proper())
            fail(errc::hypothesis_violated,
                 "companion ideal " + c.to_string() + " must be nonzero and proper");
    int d = primary.ring()->dim;
    std::vector<MonomialIdeal> J{primary};
    J.insert(J.end(), companions.begin(), companions.end());
    int g = static_cast<int>(J.size());

    auto poly = fit_binomial_polynomial(
        [&](const std::vector<int>& r) { return bhattacharya_sample(primary, J, r); },
        g, d - 1, opt);

    MixedMultiplicityTable table;
    table.dim = d;
    table.nideals = g;
    for (const auto& q : compositions(g, d - 1)) {
        Rat c = poly.coefficient(q);
        if (!is_integer(c))
            fail(errc::non_integer_multiplicity,
                 "top coefficient " + rat_string(c) + " is not an integer");
        table.entries[q] = to_int(c);
    }
    return table;
}

Int multiplicity_e(const MonomialIdeal& I, const ComputeOptions& opt) {
    int d = I.ring()->dim;
    return mixed_multiplicities(I, {}, opt).at(std::vector<int>{d - 1});
}

Int e_q(const MonomialIdeal& I1, const MonomialIdeal& I2, int q,
        const ComputeOptions& opt) {
    int d = I1.ring()->dim;
    if (q < 0 || q > d) fail(errc::index_out_of_range, "e_q index out of range");
    if (q == d) return 0;
    return mixed_multiplicities(I1, {I2}, opt).eq(q);
}

}  // namespace reesmult
