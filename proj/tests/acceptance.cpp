// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// fail.  Fixtures are small enough for a laptop; every equality is exact.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "reesmult/binomial_poly.hpp"
#include "reesmult/job.hpp"

using namespace reesmult;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Fixture {
    std::string label;
    std::vector<MonomialIdeal> ideals;
};

RingCtxPtr R1() {
    static RingCtxPtr r = make_ring({"x"});
    return r;
}
RingCtxPtr R2() {
    static RingCtxPtr r = make_ring({"x", "y"});
    return r;
}

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> fs = [] {
        auto m = max_ideal(R2());
        return std::vector<Fixture>{
            {"d=2 (x,y)", {m}},
            {"d=2 (x^2,xy,y^2)", {power(m, 2)}},
            {"d=2 (x^2,y^3)", {parse_ideal(R2(), {"x^2", "y^3"})}},
            {"d=2 (x,y^2)", {parse_ideal(R2(), {"x", "y^2"})}},
            {"d=2 g=2 (m,m)", {m, m}},
            {"d=2 g=2 (m^2,(x,y^2))", {power(m, 2), parse_ideal(R2(), {"x", "y^2"})}},
            {"d=1 (x^2)", {parse_ideal(R1(), {"x^2"})}},
            {"d=1 g=2 ((x^2),(x^3))", {parse_ideal(R1(), {"x^2"}), parse_ideal(R1(), {"x^3"})}},
        };
    }();
    return fs;
}

int dim_of(const Fixture& f) { return f.ideals.front().ring()->dim; }

bool run_criterion(int number, const std::string& title, const std::function<bool(std::ostringstream&)>& body,
                   int& failures) {
    std::ostringstream detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << "    exception: " << e.what() << "\n";
        ok = false;
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  " << number << "  " << title << "  ["
              << std::fixed << std::setprecision(1) << seconds_since(t0) << "s]\n"
              << detail.str();
    if (!ok) ++failures;
    return ok;
}

bool verify_family(std::ostringstream& out, const std::map<std::string, Rat>& pins,
                   Mode mode, bool extended) {
    bool ok = true;
    for (const auto& f : fixtures()) {
        auto t0 = std::chrono::steady_clock::now();
        FormulaReport rep = extended ? ext_rees_report(f.ideals, mode)
                                     : rees_report(f.ideals, mode);
        double secs = seconds_since(t0);
        bool agree = rep.agree == true;
        bool pinned = true;
        auto pin = pins.find(f.label);
        if (pin != pins.end()) pinned = *rep.formula_value == pin->second;
        bool in_budget = secs < 60.0;
        ok = ok && agree && pinned && in_budget;
        out << "    " << f.label << ": formula=" << rat_string(*rep.formula_value)
            << " oracle=" << rat_string(*rep.oracle_value)
            << (agree ? " agree" : " DISAGREE") << (pinned ? "" : " PIN-MISMATCH")
            << (in_budget ? "" : " OVER-BUDGET") << " (" << std::fixed
            << std::setprecision(1) << secs << "s)\n";
    }
    return ok;
}

MonomialIdeal random_primary(std::mt19937& rng, const RingCtxPtr& r, int maxdeg) {
    int d = r->dim;
    std::uniform_int_distribution<int> dexp(1, maxdeg);
    std::vector<Monomial> gens;
    for (int i = 0; i < d; ++i) {
        Monomial g(std::vector<int>(d, 0));
        g.e[i] = dexp(rng);
        gens.push_back(g);
    }
    std::uniform_int_distribution<int> dcount(0, 2);
    std::uniform_int_distribution<int> dvar(0, d - 1);
    int extra = dcount(rng);
    for (int k = 0; k < extra; ++k) {
        Monomial g(std::vector<int>(d, 0));
        int total = dexp(rng);
        for (int t = 0; t < total; ++t) ++g.e[dvar(rng)];
        gens.push_back(g);
    }
    return MonomialIdeal(r, gens);
}

}  // namespace

int main() {
    // Exercise the worker pool even on single-CPU machines.
    setenv("OMP_NUM_THREADS", "4", 0);
    int failures = 0;

    run_criterion(1, "extended Rees multiplicity: closed form = graded oracle on all fixtures",
        [&](std::ostringstream& out) {
            std::map<std::string, Rat> pins = {{"d=2 (x,y)", Rat(1)},
                                               {"d=2 (x^2,xy,y^2)", Rat(4)},
                                               {"d=2 g=2 (m,m)", Rat(3)},
                                               {"d=1 (x^2)", Rat(2)}};
            return verify_family(out, pins, Mode::Verify, true);
        }, failures);

    run_criterion(2, "Rees multiplicity: closed form = graded oracle on all fixtures",
        [&](std::ostringstream& out) {
            std::map<std::string, Rat> pins = {{"d=2 (x,y)", Rat(2)},
                                               {"d=2 (x^2,xy,y^2)", Rat(3)},
                                               {"d=2 g=2 (m,m)", Rat(3)}};
            return verify_family(out, pins, Mode::Verify, false);
        }, failures);

    run_criterion(3, "two-ideal closed form = multiplicity of (t^-1, J, It)",
        [&](std::ostringstream& out) {
            auto m = max_ideal(R2());
            struct Case { std::string label; MonomialIdeal J, I; std::optional<Rat> pin; };
            std::vector<Case> cases = {
                {"(m,m)", m, m, Rat(1)},
                {"(m,(x^2,y^3))", m, parse_ideal(R2(), {"x^2", "y^3"}), std::nullopt},
                {"((x^2,y^2),m)", parse_ideal(R2(), {"x^2", "y^2"}), m, std::nullopt},
                {"d=1 ((x),(x^2))", parse_ideal(R1(), {"x"}), parse_ideal(R1(), {"x^2"}),
                 Rat(2)},
            };
            bool ok = true;
            for (const auto& c : cases) {
                auto rep = katz_verma_report(c.J, c.I, Mode::Verify);
                bool agree = rep.agree == true;
                bool pinned = !c.pin || *rep.formula_value == *c.pin;
                ok = ok && agree && pinned;
                out << "    " << c.label << ": formula=" << rat_string(*rep.formula_value)
                    << " oracle=" << rat_string(*rep.oracle_value)
                    << (agree ? " agree" : " DISAGREE") << (pinned ? "" : " PIN-MISMATCH")
                    << "\n";
            }
            return ok;
        }, failures);

    run_criterion(4, "mixed-multiplicity identity checks (pair and multi forms)",
        [&](std::ostringstream& out) {
            auto m = max_ideal(R2());
            auto I = parse_ideal(R2(), {"x^2", "y^3"});
            auto I1 = parse_ideal(R2(), {"x", "y^2"});
            bool ok = true;
            auto note = [&](const std::string& label, const FormulaReport& rep) {
                bool agree = rep.agree == true;
                ok = ok && agree;
                out << "    " << label << (agree ? ": all entries equal" : ": DISAGREE")
                    << "\n";
            };
            auto ps = pair_square_identity(m, m, m);
            note("pair-square J=I=I1=m", ps);
            bool pinned = ps.detail.at("lhs q=0") == Rat(8);
            ok = ok && pinned;
            if (!pinned) out << "    pinned entry e_0 = 8 MISMATCH\n";
            note("pair-square J=I=I1=m, J1=I", pair_square_identity(m, m, m, m));
            note("pair-square J=m I=(x^2,y^3) I1=(x,y^2)", pair_square_identity(m, I, I1));
            note("pair-first-power J=I=I1=m", pair_first_power_identity(m, m, m));
            note("pair-first-power J=m I=(x^2,y^3) I1=(x,y^2)",
                 pair_first_power_identity(m, I, I1));
            note("multi-square J=I=I1=m", multi_square_identity(m, m, {m}));
            note("multi-square J=I=I1=m, J1=I", multi_square_identity(m, m, {m}, m));
            note("multi-square J=m I=(x^2,y^3) I1=(x,y^2)", multi_square_identity(m, I, {I1}));
            return ok;
        }, failures);

    run_criterion(5, "extended Rees value = e(R) + Rees subfamily values; gate rejects I=m",
        [&](std::ostringstream& out) {
            auto m = max_ideal(R2());
            auto rep = rees_vs_ext_rees_check({power(m, 2)});
            bool ok = rep.agree == true && *rep.formula_value == Rat(4) &&
                      rep.detail.at("e(R)") == Rat(1) && rep.detail.at("rees{1}") == Rat(3);
            out << "    I=m^2: " << rat_string(*rep.formula_value) << " = "
                << rat_string(rep.detail.at("e(R)")) << " + "
                << rat_string(rep.detail.at("rees{1}")) << (ok ? "" : " MISMATCH") << "\n";
            bool gated = false;
            try {
                rees_vs_ext_rees_check({m});
            } catch (const Error& e) {
                gated = e.code() == errc::hypothesis_violated;
            }
            out << "    I=m rejected: " << (gated ? "yes" : "NO") << "\n";
            return ok && gated;
        }, failures);

    run_criterion(6, "property suites (binomial identities, degree bounds, laws, pieces)",
        [&](std::ostringstream& out) {
            bool ok = true;

            bool bin = true;
            for (int n = 0; n <= 8 && bin; ++n)
                for (int r = 0; r <= 8 && bin; ++r)
                    for (int s = 0; s <= 8; ++s)
                        if (binom_sum_lhs(n, r, s) != binom_sum_rhs(n, r, s)) {
                            bin = false;
                            break;
                        }
            out << "    binomial convolution identity, n,r,s <= 8: "
                << (bin ? "holds" : "FAILS") << "\n";
            ok = ok && bin;

            bool expand = true;
            for (int n = 0; n <= 5 && expand; ++n)
                for (int s = 0; s <= 5 && expand; ++s) {
                    auto f = expand_scaled_binomial(n, s);
                    if (static_cast<int>(f.size()) != s + 1 || f[0] != Rat(ipow(n, s)))
                        expand = false;
                    for (int r = 0; r <= s + 3 && expand; ++r) {
                        Rat rhs(0);
                        for (int i = 0; i <= s; ++i)
                            rhs += f[i] * Rat(binomial(Int(r + s - i), s - i));
                        if (rhs != Rat(binomial(Int(n) * r + s, s))) expand = false;
                    }
                }
            out << "    rescaled binomial expansion, n,s <= 5: "
                << (expand ? "holds" : "FAILS") << "\n";
            ok = ok && expand;

            std::mt19937 rng(2024);
            bool kdeg = true;
            std::vector<RingCtxPtr> rings = {R1(), R2(), make_ring({"x", "y", "z"})};
            for (int it = 0; it < 25 && kdeg; ++it) {
                const auto& r = rings[it % 3];
                int g = 1 + (it % 2);
                std::vector<MonomialIdeal> fam;
                for (int i = 0; i < g; ++i) fam.push_back(random_primary(rng, r, 4));
                auto sampler = [&](const std::vector<int>& rv) {
                    MonomialIdeal p = unit_ideal(r);
                    for (int i = 0; i < g; ++i) p = product(p, power(fam[i], rv[i]));
                    return colength(p);
                };
                try {
                    fit_binomial_polynomial(sampler, g, r->dim);
                } catch (const Error&) {
                    kdeg = false;
                }
            }
            out << "    colength of products: polynomial of total degree <= d, 25 random "
                   "families: "
                << (kdeg ? "holds" : "FAILS") << "\n";
            ok = ok && kdeg;

            bool laws = true;
            for (int it = 0; it < 10 && laws; ++it) {
                auto I = random_primary(rng, R2(), 3);
                auto J = random_primary(rng, R2(), 3);
                auto base = mixed_multiplicities(I, {J});
                if (base.eq(0) != multiplicity_e(I)) laws = false;
                for (int rr = 1; rr <= 3 && laws; ++rr)
                    for (int ss = 1; ss <= 3 && laws; ++ss) {
                        auto scaled = mixed_multiplicities(power(I, rr), {power(J, ss)});
                        for (int q = 0; q <= 2; ++q)
                            if (scaled.eq(q) !=
                                ipow(rr, 2 - q) * ipow(ss, q) * base.eq(q)) {
                                laws = false;
                                break;
                            }
                    }
            }
            out << "    e_0 law and power homogeneity, 10 random m-primary pairs: "
                << (laws ? "hold" : "FAIL") << "\n";
            ok = ok && laws;

            bool sym = true;
            for (int it = 0; it < 5 && sym; ++it) {
                auto I = random_primary(rng, R2(), 3);
                auto J = random_primary(rng, R2(), 3);
                auto ij = mixed_multiplicities(I, {J});
                auto ji = mixed_multiplicities(J, {I});
                // Only 0 < q < d lands in both tables; the endpoints live in
                // one table each.
                for (int q = 1; q <= 1; ++q)
                    if (ij.eq(q) != ji.eq(2 - q)) sym = false;
            }
            out << "    table symmetry e_q(I|J) = e_{d-q}(J|I) on the overlap, 5 pairs: "
                << (sym ? "holds" : "FAILS") << "\n";
            ok = ok && sym;

            bool pieces = true;
            auto m = max_ideal(R2());
            std::vector<std::pair<MonomialIdeal, MonomialIdeal>> pairs = {
                {m, m},
                {m, parse_ideal(R2(), {"x^2", "y^3"})},
                {parse_ideal(R2(), {"x^2", "y^2"}), parse_ideal(R2(), {"x^3", "x*y"})},
            };
            for (const auto& [J, I] : pairs)
                for (int rr = 1; rr <= 3; ++rr)
                    for (int j = 0; j < rr; ++j)
                        if (!power_decomposition_check(J, I, rr, j)) pieces = false;
            out << "    graded pieces of even powers match the closed decomposition, "
                   "r <= 3: "
                << (pieces ? "hold" : "FAIL") << "\n";
            return ok && pieces;
        }, failures);

    run_criterion(7, "dimension witnesses from the fitted degree",
        [&](std::ostringstream& out) {
            bool ok = true;
            for (const auto& f : fixtures()) {
                auto rc = make_rees_context(ReesVariant::ExtendedRees, f.ideals);
                auto gm = graded_multiplicity(maximal_ideal(rc));
                int expected = dim_of(f) + static_cast<int>(f.ideals.size()) - 1;
                bool good = gm.fitted_degree == expected;
                ok = ok && good;
                out << "    " << f.label << ": fitted degree " << gm.fitted_degree
                    << (good ? "" : " EXPECTED " + std::to_string(expected)) << "\n";
            }
            for (const auto& f : fixtures()) {
                if (f.ideals.size() != 1 || dim_of(f) > 2) continue;
                auto rc = make_rees_context(ReesVariant::ExtendedRees, f.ideals);
                auto N = maximal_ideal(rc);
                Int lhs = graded_multiplicity(mg_power(N, 2)).value;
                Int rhs = pow2(dim_of(f) + 1) * graded_multiplicity(N).value;
                bool good = lhs == rhs;
                ok = ok && good;
                out << "    " << f.label << ": e(N^2) = " << lhs
                    << (good ? " = 2^(d+1) e(N)" : " MISMATCH") << "\n";
            }
            return ok;
        }, failures);

    run_criterion(8, "byte-identical reports for 1 worker and a worker pool",
        [&](std::ostringstream& out) {
            bool ok = true;
            for (const auto& f : fixtures()) {
                JobSpec spec;
                spec.ring = f.ideals.front().ring();
                for (std::size_t i = 0; i < f.ideals.size(); ++i) {
                    std::string name = "I" + std::to_string(i + 1);
                    spec.ideal_names.push_back(name);
                    spec.ideals.emplace(name, f.ideals[i]);
                    spec.arg_ideals.push_back(name);
                }
                spec.command = "ext-rees-mult";
                spec.mode = Mode::Verify;
                spec.options.workers = 1;
                std::string one = render_report(run_job(spec).report, "json");
                spec.options.workers = 4;
                std::string many = render_report(run_job(spec).report, "json");
                bool same = one == many;
                ok = ok && same;
                out << "    " << f.label << ": " << (same ? "identical" : "DIFFER") << "\n";
            }
            return ok;
        }, failures);

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failures))
              << "\n";
    return failures == 0 ? 0 : 1;
}
