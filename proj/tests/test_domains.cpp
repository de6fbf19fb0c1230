#include <doctest.h>

#include <random>

#include "padic/domains.hpp"
#include "padic/errors.hpp"
#include "padic/polygon.hpp"

using namespace padic;

namespace {

MultiIndex mi(std::vector<uint32_t> e) { return MultiIndex(std::move(e)); }

PSeries x() { return PSeries::variable(1, 0); }

}  // namespace

TEST_CASE("member examples") {
    LaurentSpec cup = LaurentSpec::polydisk(1);
    cup.cups.push_back({x(), Radius::from_log(Rat(-1))});
    CHECK(member(cup, GenericPoint::disk_boundary(Rat(0), Rat(0)), 2));

    LaurentSpec cap = LaurentSpec::polydisk(1);
    cap.caps.push_back({x(), Radius::from_log(Rat(-1))});
    CHECK_FALSE(member(cap, GenericPoint::rational({Rat(1)}), 2));

    CHECK(member(LaurentSpec::polydisk(1),
                 GenericPoint::disk_boundary(Rat(0), Rat(-2)), 2));
}

TEST_CASE("diameter_cap examples") {
    GenericPoint zero = GenericPoint::rational({Rat(0)});
    DiameterReport r1 = diameter_cap(x(), Radius::from_log(Rat(-1)), zero, 2);
    CHECK(r1.delta.logp == XRat(-1));
    CHECK(r1.witness.alpha == mi({1}));

    DiameterReport r2 = diameter_cap(PSeries(1), Radius::from_log(Rat(-1)), zero, 2);
    CHECK(r2.delta.logp == XRat(0));

    PSeries x2 = PSeries::monomial(mi({2}), Rat(1));
    DiameterReport r3 = diameter_cap(x2, Radius::from_log(Rat(-1)), zero, 2);
    CHECK(r3.delta.logp == XRat(Rat(-1, 2)));
    CHECK(r3.witness.alpha == mi({2}));

    CHECK_THROWS_AS(diameter_cap(x(), Radius::from_log(Rat(-1)),
                                 GenericPoint::rational({Rat(1)}), 2),
                    MembershipError);
}

TEST_CASE("diameter_cup examples") {
    DiameterReport r1 = diameter_cup(x(), Radius::from_log(Rat(-1)),
                                     GenericPoint::rational({Rat(2)}), 2);
    CHECK(r1.delta.logp == XRat(-1));

    DiameterReport r2 = diameter_cup(x(), Radius::from_log(Rat(-2)),
                                     GenericPoint::disk_boundary(Rat(0), Rat(-1)), 2);
    CHECK(r2.delta.logp == XRat(-1));

    DiameterReport r3 = diameter_cup(PSeries::constant(1, Rat(1)),
                                     Radius::from_log(Rat(-1)),
                                     GenericPoint::rational({Rat(0)}), 2);
    CHECK(r3.delta.logp == XRat(0));
}

TEST_CASE("diameter over full specs") {
    LaurentSpec ann = LaurentSpec::annulus(Rat(-2), Rat(0));
    GenericPoint t = GenericPoint::disk_boundary(Rat(0), Rat(-1));
    CHECK(diameter(ann, t, 2).delta.logp == XRat(-1));

    CHECK(diameter(LaurentSpec::polydisk(1), t, 2).delta.logp == XRat(0));

    LaurentSpec both = LaurentSpec::polydisk(1);
    both.caps.push_back({x(), Radius::from_log(Rat(-1))});
    both.cups.push_back({x(), Radius::from_log(Rat(-1))});
    CHECK(diameter(both, GenericPoint::rational({Rat(2)}), 2).delta.logp == XRat(-1));

    CHECK_THROWS_AS(diameter(ann, GenericPoint::rational({Rat(8)}), 2),
                    MembershipError);
}

TEST_CASE("shilov points") {
    std::vector<GenericPoint> poly = shilov_points(LaurentSpec::polydisk(2), 2);
    REQUIRE(poly.size() == 1);
    CHECK(poly[0].radius_log == std::vector<XRat>{XRat(0), XRat(0)});

    std::vector<GenericPoint> ann = shilov_points(LaurentSpec::annulus(Rat(-2), Rat(0)), 2);
    REQUIRE(ann.size() == 2);
    CHECK(ann[0].radius_log[0] == XRat(0));
    CHECK(ann[1].radius_log[0] == XRat(-2));
}

namespace {

// Brute-force largest grid epsilon with sup_alpha |f^{[alpha]}(xi)| eps^s <= r.
XRat brute_cap_delta(const PSeries& f, const Radius& r, const GenericPoint& xi,
                     unsigned long p, const std::vector<Rat>& eps_grid) {
    XRat best = XRat::neg_inf();
    for (const Rat& eps : eps_grid) {
        bool ok = true;
        for (uint32_t a = 1; a <= static_cast<uint32_t>(f.degree()) && ok; ++a) {
            MultiIndex alpha({std::vector<uint32_t>{a}});
            PSeries fa = f.divided_derivative(alpha);
            if (fa.is_zero()) continue;
            NormBound nb = gauss_norm(fa, xi, p);
            if (nb.value.is_zero()) continue;
            XRat lhs = nb.value.logp + XRat(Rat(eps * a));
            if (lhs > r.logp) ok = false;
        }
        if (ok) best = padic::max(best, XRat(eps));
    }
    return padic::min(best, XRat(0));
}

}  // namespace

TEST_CASE("diameter_cap matches grid brute force") {
    std::mt19937 rng(606);
    std::uniform_int_distribution<int> coef(-8, 8);
    std::uniform_int_distribution<int> deg(1, 4);
    std::vector<Rat> grid;
    for (int k = 0; k <= 64; ++k) {
        Rat g = Rat(-4) + Rat(4 * k, 64);
        g.canonicalize();
        grid.push_back(g);
    }
    int done = 0;
    while (done < 20) {
        int dmax = deg(rng);
        PSeries f(1);
        for (int a = 0; a <= dmax; ++a) f.add_term(mi({(uint32_t)a}), Rat(coef(rng)));
        if (f.is_zero() || f.degree() < 1) continue;
        GenericPoint xi = GenericPoint::rational({Rat(0)});
        Radius r = Radius::from_log(Rat(-1));
        Rat at0 = f.eval({Rat(0)});
        if (!(Radius::from_valuation(vp_rat(at0, 2)) <= r)) continue;
        DiameterReport rep = diameter_cap(f, r, xi, 2);
        XRat brute = brute_cap_delta(f, r, xi, 2, grid);
        // within one grid step of 1/16
        REQUIRE(rep.delta.logp >= brute);
        REQUIRE(rep.delta.logp - brute <= XRat(Rat(1, 16)));
        ++done;
    }
}

TEST_CASE("diameter_cup agrees with nearest_zero_radius") {
    std::mt19937 rng(909);
    std::uniform_int_distribution<int> root(-6, 6);
    std::uniform_int_distribution<int> nfac(1, 4);
    int done = 0;
    while (done < 20) {
        int n = nfac(rng);
        PSeries g = PSeries::constant(1, Rat(1));
        for (int k = 0; k < n; ++k)
            g = g * (x() - PSeries::constant(1, Rat(root(rng))));
        Rat a(1, 3);
        Rat ga = g.eval({a});
        if (ga == 0) continue;
        GenericPoint xi = GenericPoint::rational({a});
        Radius s = Radius::from_valuation(vp_rat(ga, 2));  // tight cup bound
        DiameterReport rep = diameter_cup(g, s, xi, 2);
        REQUIRE(rep.delta == padic::min(nearest_zero_radius(g, a, 2), Radius::one()));
        ++done;
    }
}

TEST_CASE("diameter is upper semicontinuous along sampled centers") {
    // Annulus p^-2 <= |x| <= 1 at t_{0,p^-1}: rational centers c with
    // |c| = p^-1 must report delta <= delta(t_{0,p^-1}) = p^-1.
    LaurentSpec ann = LaurentSpec::annulus(Rat(-2), Rat(0));
    GenericPoint t = GenericPoint::disk_boundary(Rat(0), Rat(-1));
    Radius at_t = diameter(ann, t, 2).delta;
    for (long k : {1L, 3L, 5L}) {
        GenericPoint c = GenericPoint::rational({Rat(2 * k)});
        REQUIRE(diameter(ann, c, 2).delta <= at_t);
    }
}

TEST_CASE("diameter positivity at member points") {
    LaurentSpec ann = LaurentSpec::annulus(Rat(-3), Rat(-1));
    for (int q = -3; q <= -1; ++q) {
        GenericPoint t = GenericPoint::disk_boundary(Rat(0), Rat(q));
        REQUIRE_FALSE(diameter(ann, t, 2).delta.is_zero());
    }
}

TEST_CASE("spec validation") {
    LaurentSpec bad = LaurentSpec::polydisk(1);
    bad.caps.push_back({x(), Radius::from_log(Rat(1))});  // radius > 1
    CHECK_THROWS_AS(bad.validate(), SchemaError);
}
