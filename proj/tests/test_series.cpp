#include <doctest.h>

#include <random>

#include "padic/norms.hpp"
#include "padic/pseries.hpp"

using namespace padic;

namespace {

MultiIndex mi(std::vector<uint32_t> e) { return MultiIndex(std::move(e)); }

PSeries random_poly(std::mt19937& rng, int d, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    std::uniform_int_distribution<int> terms(1, 6);
    PSeries f(d);
    int t = terms(rng);
    for (int k = 0; k < t; ++k) {
        std::vector<uint32_t> e(d);
        for (int i = 0; i < d; ++i) e[i] = static_cast<uint32_t>(deg(rng));
        Rat c(num(rng), den(rng));
        c.canonicalize();
        f.add_term(MultiIndex(std::move(e)), c);
    }
    return f;
}

}  // namespace

TEST_CASE("taylor_shift examples") {
    PSeries x2 = PSeries::monomial(mi({2}), Rat(1));
    PSeries s = x2.taylor_shift({Rat(1)});
    CHECK(s.coeff(mi({0})) == Rat(1));
    CHECK(s.coeff(mi({1})) == Rat(2));
    CHECK(s.coeff(mi({2})) == Rat(1));

    PSeries x = PSeries::variable(1, 0);
    CHECK(x.taylor_shift({Rat(0)}) == x);

    PSeries f = PSeries::monomial(mi({3}), Rat(1)) - x;
    PSeries g = f.taylor_shift({Rat(2)});
    CHECK(g.coeff(mi({0})) == Rat(6));
    CHECK(g.coeff(mi({1})) == Rat(11));
    CHECK(g.coeff(mi({2})) == Rat(6));
    CHECK(g.coeff(mi({3})) == Rat(1));
}

TEST_CASE("gauss_norm examples") {
    PSeries c = PSeries::constant(1, Rat(9));
    GenericPoint xi = GenericPoint::disk_boundary(Rat(0), Rat(-1));
    CHECK(gauss_norm(c, xi, 3).value.logp == XRat(-2));

    PSeries f = PSeries::constant(1, Rat(3)) + PSeries::variable(1, 0);
    GenericPoint t2 = GenericPoint::disk_boundary(Rat(0), Rat(-2));
    CHECK(gauss_norm(f, t2, 3).value.logp == XRat(-1));

    PSeries g = PSeries::variable(1, 0) - PSeries::constant(1, Rat(1));
    GenericPoint t0 = GenericPoint::disk_boundary(Rat(0), Rat(0));
    CHECK(gauss_norm(g, t0, 2).value.logp == XRat(0));
}

TEST_CASE("ratfunc_norm examples") {
    PSeries one = PSeries::constant(1, Rat(1));
    PSeries x = PSeries::variable(1, 0);
    GenericPoint t = GenericPoint::disk_boundary(Rat(0), Rat(-1));
    CHECK(ratfunc_norm(one, x, t, 2).logp == XRat(1));
    CHECK(ratfunc_norm(x, x, t, 2).logp == XRat(0));

    GenericPoint t0 = GenericPoint::disk_boundary(Rat(0), Rat(0));
    PSeries num = x - one;
    PSeries den = x + one;
    CHECK(ratfunc_norm(num, den, t0, 2).logp == XRat(0));

    PSeries zero(1);
    CHECK_THROWS(ratfunc_norm(one, zero, t, 2));
}

TEST_CASE("boundary_seminorm examples") {
    std::vector<Rat> r{Rat(-1)};
    CHECK(boundary_seminorm({{{0}, Rat(1)}}, r, 2).logp == XRat(0));
    CHECK(boundary_seminorm({{{1}, Rat(1, 2)}}, r, 2).logp == XRat(0));
    CHECK(boundary_seminorm({{{2}, Rat(1)}}, r, 2).logp == XRat(-2));
    // Negative exponents are Laurent tails.
    CHECK(boundary_seminorm({{{-1}, Rat(1)}}, r, 2).logp == XRat(1));
}

TEST_CASE("gauss_norm is multiplicative at generic points") {
    std::mt19937 rng(12345);
    for (int d : {1, 2}) {
        GenericPoint xi = d == 1 ? GenericPoint::disk_boundary(Rat(0), Rat(-1))
                                 : GenericPoint::at({Rat(0), Rat(2)}, {Rat(-1), Rat(-2)});
        for (int it = 0; it < 40; ++it) {
            PSeries f = random_poly(rng, d, 4);
            PSeries g = random_poly(rng, d, 4);
            NormBound nf = gauss_norm(f, xi, 2);
            NormBound ng = gauss_norm(g, xi, 2);
            NormBound nfg = gauss_norm(f * g, xi, 2);
            REQUIRE(nfg.value == nf.value * ng.value);
        }
    }
}

TEST_CASE("gauss_norm is ultrametric") {
    std::mt19937 rng(777);
    GenericPoint xi = GenericPoint::disk_boundary(Rat(1), Rat(-2));
    for (int it = 0; it < 60; ++it) {
        PSeries f = random_poly(rng, 1, 6);
        PSeries g = random_poly(rng, 1, 6);
        Radius nf = gauss_norm(f, xi, 3).value;
        Radius ng = gauss_norm(g, xi, 3).value;
        Radius ns = gauss_norm(f + g, xi, 3).value;
        REQUIRE(ns <= padic::max(nf, ng));
        if (nf != ng) REQUIRE(ns == padic::max(nf, ng));
    }
}

TEST_CASE("taylor_shift round trip is the identity") {
    std::mt19937 rng(999);
    for (int it = 0; it < 30; ++it) {
        PSeries f = random_poly(rng, 2, 5);
        PSeries back = f.taylor_shift({Rat(1, 3), Rat(-2)})
                           .taylor_shift({Rat(-1, 3), Rat(2)});
        REQUIRE(back == f);
    }
}

TEST_CASE("gauss_norm at radius zero is plain evaluation") {
    std::mt19937 rng(4242);
    for (int it = 0; it < 30; ++it) {
        PSeries f = random_poly(rng, 1, 6);
        Rat a(3, 5);
        GenericPoint xi = GenericPoint::rational({a});
        Rat val = f.eval({a});
        NormBound nb = gauss_norm(f, xi, 2);
        if (val == 0) {
            REQUIRE(nb.value.is_zero());
        } else {
            REQUIRE(nb.value.logp == -vp_rat(val, 2));
        }
    }
}

TEST_CASE("truncated series norms are flagged inexact") {
    PSeries f = (PSeries::constant(1, Rat(1)) + PSeries::variable(1, 0)).truncated(3);
    GenericPoint xi = GenericPoint::disk_boundary(Rat(0), Rat(0));
    CHECK_FALSE(gauss_norm(f, xi, 2).exact);
}
