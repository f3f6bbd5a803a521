#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "reesmult/monomial_core.hpp"

using namespace reesmult;

namespace {

RingCtxPtr R2() {
    static RingCtxPtr ctx = make_ring({"x", "y"});
    return ctx;
}
RingCtxPtr R3() {
    static RingCtxPtr ctx = make_ring({"x", "y", "z"});
    return ctx;
}

MonomialIdeal I2(const std::vector<std::string>& gens) { return parse_ideal(R2(), gens); }

// Independent colength oracle: inclusion-exclusion over generator subsets
// inside the pure-power bounding box.  Used to cross-check the box walk.
Int colength_incl_excl(const MonomialIdeal& a) {
    int d = a.ring()->dim;
    std::vector<int> box(d, -1);
    for (const auto& g : a.gens()) {
        int var = -1, nz = 0;
        for (int v = 0; v < d; ++v)
            if (g.e[v]) { var = v; ++nz; }
        if (nz == 1 && (box[var] < 0 || g.e[var] < box[var])) box[var] = g.e[var];
    }
    Int vol = 1;
    for (int b : box) vol *= b;
    size_t n = a.gens().size();
    Int covered = 0;
    for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
        std::vector<int> lcm(d, 0);
        int bits = 0;
        for (size_t i = 0; i < n; ++i)
            if (mask & (size_t(1) << i)) {
                ++bits;
                for (int v = 0; v < d; ++v)
                    lcm[v] = std::max(lcm[v], a.gens()[i].e[v]);
            }
        Int cells = 1;
        for (int v = 0; v < d; ++v)
            cells *= std::max(0, box[v] - lcm[v]);
        covered += (bits % 2 ? cells : -cells);
    }
    return vol - covered;
}

}  // namespace

TEST_CASE("ring context validation") {
    CHECK_THROWS_AS(make_ring({"x", "x"}), Error);
    CHECK_THROWS_AS(make_ring({"x", ""}), Error);
    CHECK_THROWS_AS(make_ring({"2x"}), Error);
    CHECK_THROWS_AS(make_ring(0, {}), Error);
    CHECK(make_ring({"x", "y"})->dim == 2);
}

TEST_CASE("monomial grammar") {
    auto ctx = R2();
    CHECK(parse_monomial(*ctx, "x^2*y").e == std::vector<int>{2, 1});
    CHECK(parse_monomial(*ctx, "x*x").e == std::vector<int>{2, 0});
    CHECK(parse_monomial(*ctx, " x ^ 3 * y ").e == std::vector<int>{3, 1});
    CHECK(parse_monomial(*ctx, "1").e == std::vector<int>{0, 0});
    CHECK_THROWS_AS(parse_monomial(*ctx, "z^2"), Error);
    CHECK_THROWS_AS(parse_monomial(*ctx, "x^-1"), Error);
    CHECK_THROWS_AS(parse_monomial(*ctx, "x^0"), Error);
    CHECK_THROWS_AS(parse_monomial(*ctx, "x y"), Error);
    CHECK_THROWS_AS(parse_monomial(*ctx, ""), Error);
    CHECK(monomial_string(*ctx, parse_monomial(*ctx, "y*x^2")) == "x^2*y");
    CHECK(monomial_string(*ctx, parse_monomial(*ctx, "1")) == "1");
    // round trip on a few
    for (const char* s : {"x", "y^4", "x^2*y^3"})
        CHECK(monomial_string(*ctx, parse_monomial(*ctx, s)) == s);
}

TEST_CASE("minimal generators") {
    CHECK(I2({"x^2", "x^2*y", "y"}) == I2({"x^2", "y"}));
    CHECK(I2({"x", "x", "x^3"}).gens().size() == 1);
    CHECK(I2({"1", "x"}).is_unit());
    CHECK(zero_ideal(R2()).is_zero());
    // canonical order is lex on exponent vectors
    auto g = I2({"x^2", "y"}).gens();
    CHECK(g[0].e == std::vector<int>{0, 1});
    CHECK(g[1].e == std::vector<int>{2, 0});
}

TEST_CASE("sum product power") {
    CHECK(sum(I2({"x^2", "x*y", "y^2"}), I2({"x"})) == I2({"x", "y^2"}));
    CHECK(product(I2({"x^2", "y"}), I2({"x", "y^3"})) == I2({"x^3", "x*y", "y^4"}));
    CHECK(power(I2({"x^2", "y^3"}), 2) == I2({"x^4", "x^2*y^3", "y^6"}));
    CHECK(power(I2({"x", "y"}), 0) == unit_ideal(R2()));
    CHECK(power(zero_ideal(R2()), 0) == unit_ideal(R2()));
    CHECK(product(I2({"x"}), zero_ideal(R2())).is_zero());
    CHECK_THROWS_AS(power(I2({"x"}), -1), Error);
    CHECK_THROWS_AS(sum(I2({"x"}), parse_ideal(R3(), {"x"})), Error);
}

TEST_CASE("colon by monomial") {
    auto ctx = R2();
    CHECK(colon_by_monomial(I2({"x^2", "y^3"}), parse_monomial(*ctx, "x*y")) ==
          I2({"x", "y^2"}));
    CHECK(colon_by_monomial(zero_ideal(ctx), parse_monomial(*ctx, "x")).is_zero());
    // colon by a member gives the unit ideal
    CHECK(colon_by_monomial(I2({"x^2", "y^3"}), parse_monomial(*ctx, "x^2*y")).is_unit());
}

TEST_CASE("containment") {
    auto ctx = R2();
    CHECK(contains(I2({"x^2", "y^3"}), parse_monomial(*ctx, "x^3*y")));
    CHECK_FALSE(contains(I2({"x^2", "y^3"}), parse_monomial(*ctx, "x*y^2")));
    CHECK(contains(I2({"x"}), I2({"x^2", "x*y^5"})));
    CHECK_FALSE(contains(I2({"x^2"}), I2({"x"})));
    CHECK(contains(I2({"x"}), zero_ideal(ctx)));
}

TEST_CASE("m-primary detection") {
    CHECK(is_m_primary(I2({"x^2", "y^3"})));
    CHECK(is_m_primary(max_ideal(R2())));
    CHECK_FALSE(is_m_primary(I2({"x"})));
    CHECK_FALSE(is_m_primary(I2({"x^2", "x*y"})));
    CHECK_FALSE(is_m_primary(unit_ideal(R2())));
    CHECK_FALSE(is_m_primary(zero_ideal(R2())));
    CHECK(is_m_primary(parse_ideal(R3(), {"x^2", "y^3", "z", "x*y"})));
}

TEST_CASE("colength") {
    CHECK(colength(I2({"x^2", "x*y", "y^3"})) == 4);
    CHECK(colength(I2({"x^2", "y^3"})) == 6);
    CHECK(colength(max_ideal(R2())) == 1);
    CHECK(colength(unit_ideal(R2())) == 0);
    CHECK_THROWS_AS(colength(I2({"x"})), Error);
    CHECK_THROWS_AS(colength(zero_ideal(R2())), Error);
    CHECK(colength(power(max_ideal(R2()), 3)) == 6);
    CHECK(colength(parse_ideal(R3(), {"x", "y^2", "z^3"})) == 6);
}

TEST_CASE("quotient length") {
    auto m = max_ideal(R2());
    CHECK(quotient_length(m, power(m, 2)) == 2);
    CHECK(quotient_length(I2({"x^2", "x*y"}), I2({"x^3", "x^2*y", "x*y^2"})) == 2);
    CHECK(quotient_length(m, m) == 0);
    CHECK(quotient_length(zero_ideal(R2()), zero_ideal(R2())) == 0);
    CHECK(quotient_length(unit_ideal(R2()), I2({"x^2", "y^3"})) == 6);
    CHECK_THROWS_AS(quotient_length(I2({"x^2"}), I2({"x"})), Error);
    // infinite quotient
    CHECK_THROWS_AS(quotient_length(I2({"x"}), I2({"x^2"})), Error);
    CHECK_THROWS_AS(quotient_length(I2({"x"}), zero_ideal(R2())), Error);
}

TEST_CASE("quotient length properties on random staircases") {
    std::mt19937 rng(20240817);
    auto rand_mprimary = [&](RingCtxPtr ctx, int maxexp) {
        int d = ctx->dim;
        std::vector<Monomial> gens;
        for (int v = 0; v < d; ++v) {
            Monomial g(std::vector<int>(d, 0));
            g.e[v] = 1 + static_cast<int>(rng() % maxexp);
            gens.push_back(g);
        }
        int extra = static_cast<int>(rng() % 3);
        for (int i = 0; i < extra; ++i) {
            Monomial g(std::vector<int>(d, 0));
            for (int v = 0; v < d; ++v) g.e[v] = static_cast<int>(rng() % maxexp);
            if (g.is_unit()) g.e[0] = 1;
            gens.push_back(g);
        }
        return MonomialIdeal(ctx, gens);
    };
    for (int iter = 0; iter < 40; ++iter) {
        RingCtxPtr ctx = (iter % 2) ? R3() : R2();
        auto a = rand_mprimary(ctx, 6);
        auto b0 = rand_mprimary(ctx, 6);
        auto b = product(a, b0);  // guarantees b inside a
        if (b.is_unit()) continue;

        // additivity against the two colengths
        CHECK(quotient_length(a, b) == colength(b) - colength(a));

        // generator order must not matter
        auto gens = a.gens();
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(detail::quotient_length_ordered(gens, b) == quotient_length(a, b));

        // independent counting oracle
        CHECK(colength(a) == colength_incl_excl(a));
        CHECK(colength(b) == colength_incl_excl(b));

        // colon of a member: (a : u) is unit iff u in a
        Monomial u(std::vector<int>(ctx->dim, 0));
        for (int v = 0; v < ctx->dim; ++v) u.e[v] = static_cast<int>(rng() % 7);
        CHECK(contains(a, u) == colon_by_monomial(a, u).is_unit());

        // powers shrink
        CHECK(contains(a, power(a, 2)));
        CHECK(contains(power(a, 2), power(a, 3)));
    }
}
