#include <doctest.h>

#include <random>

#include "padic/norms.hpp"
#include "padic/polygon.hpp"

using namespace padic;

namespace {

MultiIndex mi(std::vector<uint32_t> e) { return MultiIndex(std::move(e)); }

PSeries random_poly(std::mt19937& rng, int d, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 12);
    std::uniform_int_distribution<int> terms(1, 7);
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

TEST_CASE("v_of examples") {
    PSeries f = PSeries::constant(1, Rat(2)) + PSeries::monomial(mi({2}), Rat(1));
    PolygonResult r1 = v_of(f, {Rat(1)}, 2);
    CHECK(r1.value == Rat(1));
    CHECK(r1.regular);
    CHECK(r1.minimizers == std::vector<MultiIndex>{mi({0})});

    PolygonResult r2 = v_of(f, {Rat(1, 2)}, 2);
    CHECK(r2.value == Rat(1));
    CHECK_FALSE(r2.regular);
    CHECK(r2.minimizers.size() == 2);

    PSeries c = PSeries::constant(1, Rat(12));
    PolygonResult r3 = v_of(c, {Rat(7)}, 2);
    CHECK(r3.value == Rat(2));
    CHECK(r3.regular);

    CHECK_THROWS(v_of(PSeries(1), {Rat(0)}, 2));
}

TEST_CASE("zero_detect examples") {
    PSeries f = PSeries::monomial(mi({2}), Rat(1)) - PSeries::constant(1, Rat(2));
    CHECK(zero_detect(f, {Rat(1, 2)}, 2));

    PSeries g = PSeries::variable(1, 0) - PSeries::constant(1, Rat(1));
    CHECK(zero_detect(g, {Rat(0)}, 2));

    PSeries h = PSeries::variable(1, 0) - PSeries::constant(1, Rat(2));
    CHECK_FALSE(zero_detect(h, {Rat(0)}, 2));
}

TEST_CASE("drop_implies_zero examples") {
    PSeries f = PSeries::constant(1, Rat(1)) - PSeries::variable(1, 0);
    auto c1 = drop_implies_zero(f, {Rat(1)}, 2);
    REQUIRE(c1.has_value());
    CHECK(c1->kind == ZeroCertificate::Kind::SameModulus);
    CHECK(c1->radii[0].logp == XRat(0));

    PSeries g = PSeries::constant(1, Rat(1)) + PSeries::variable(1, 0);
    CHECK_FALSE(drop_implies_zero(g, {Rat(2)}, 2).has_value());

    PSeries h = PSeries::constant(1, Rat(2)) + PSeries::variable(1, 0);
    auto c3 = drop_implies_zero(h, {Rat(1)}, 2);
    REQUIRE(c3.has_value());
    CHECK(c3->kind == ZeroCertificate::Kind::AtMost);
    CHECK(c3->radii[0].logp == XRat(0));
}

TEST_CASE("nearest_zero_radius examples") {
    PSeries x = PSeries::variable(1, 0);
    CHECK(nearest_zero_radius(x, Rat(2), 2).logp == XRat(-1));
    CHECK_THROWS(nearest_zero_radius(x, Rat(0), 2));

    PSeries f = PSeries::monomial(mi({2}), Rat(1)) - PSeries::constant(1, Rat(2));
    CHECK(nearest_zero_radius(f, Rat(0), 2).logp == XRat(Rat(-1, 2)));
}

TEST_CASE("valuation polygon is concave in mu") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> small(-4, 4);
    std::uniform_int_distribution<int> lam_num(0, 8);
    for (int d : {1, 2}) {
        for (int it = 0; it < 60; ++it) {
            PSeries f = random_poly(rng, d, 5);
            if (f.is_zero()) continue;
            std::vector<Rat> mu1(d), mu2(d), mid(d);
            Rat lam(lam_num(rng), 8);
            lam.canonicalize();
            for (int i = 0; i < d; ++i) {
                mu1[i] = Rat(small(rng), 2);
                mu2[i] = Rat(small(rng), 2);
                mid[i] = lam * mu1[i] + (Rat(1) - lam) * mu2[i];
                mu1[i].canonicalize();
                mu2[i].canonicalize();
                mid[i].canonicalize();
            }
            Rat lhs = v_of(f, mid, 3).value;
            Rat rhs = lam * v_of(f, mu1, 3).value +
                      (Rat(1) - lam) * v_of(f, mu2, 3).value;
            REQUIRE(lhs >= rhs);
        }
    }
}

TEST_CASE("polygon value matches Gauss norms") {
    std::mt19937 rng(55);
    std::uniform_int_distribution<int> qd(0, 3);
    for (int d : {1, 2}) {
        for (int it = 0; it < 50; ++it) {
            PSeries f = random_poly(rng, d, 5);
            if (f.is_zero()) continue;
            std::vector<Rat> q(d), mu(d), center(d, Rat(0));
            for (int i = 0; i < d; ++i) {
                q[i] = Rat(-qd(rng));
                mu[i] = -q[i];
            }
            GenericPoint xi = GenericPoint::at(center, q);
            Radius n = gauss_norm(f, xi, 2).value;
            REQUIRE(-n.logp == XRat(v_of(f, mu, 2).value));
        }
    }
}

TEST_CASE("nearest_zero_radius matches root enumeration on linear products") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> root_num(-6, 6);
    std::uniform_int_distribution<int> nfac(1, 5);
    for (int it = 0; it < 20; ++it) {
        int n = nfac(rng);
        std::vector<Rat> roots;
        PSeries g = PSeries::constant(1, Rat(1));
        for (int k = 0; k < n; ++k) {
            Rat c(root_num(rng));
            roots.push_back(c);
            g = g * (PSeries::variable(1, 0) - PSeries::constant(1, c));
        }
        Rat a(1, 3);
        bool hit = false;
        for (const Rat& c : roots)
            if (c == a) hit = true;
        if (hit) continue;
        XRat best = XRat(0);  // cap at radius 1
        for (const Rat& c : roots) best = padic::min(best, -vp_rat(Rat(a - c), 2));
        REQUIRE(nearest_zero_radius(g, a, 2).logp == best);
    }
}
