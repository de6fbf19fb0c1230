#include "padic/domains.hpp"

#include <algorithm>

#include "padic/arith.hpp"
#include "padic/errors.hpp"

namespace padic {

namespace {

// All exponents beta with 1 <= |beta| and beta <= max support exponent of
// f componentwise, i.e. every beta with f^{[beta]} possibly nonzero.
std::vector<MultiIndex> derivative_exponents(const PSeries& f) {
    int d = f.dim();
    std::vector<uint32_t> maxe(d, 0);
    for (const auto& [a, c] : f.terms()) {
        for (int i = 0; i < d; ++i) maxe[i] = std::max(maxe[i], a[i]);
    }
    std::vector<MultiIndex> out;
    std::vector<uint32_t> cur(d, 0);
    while (true) {
        MultiIndex mi(cur);
        if (mi.total() >= 1) out.push_back(mi);
        int i = 0;
        for (; i < d; ++i) {
            if (cur[i] < maxe[i]) {
                ++cur[i];
                break;
            }
            cur[i] = 0;
        }
        if (i == d) break;
    }
    return out;
}

// Sup norm over the unit polydisk: max |coefficient|.
Radius unit_polydisk_norm(const PSeries& f, unsigned long p) {
    XRat best = XRat::neg_inf();
    for (const auto& [a, c] : f.terms()) best = padic::max(best, -vp_rat(c, p));
    return Radius(best);
}

// Smallest N >= 1 with ||f^{[beta]}||_unit < r for every |beta| >= N.
uint32_t cap_truncation_bound(const PSeries& f, const Radius& r, unsigned long p) {
    int deg = f.degree();
    if (deg < 1) return 1;
    std::vector<Radius> level(deg + 1, Radius::zero());
    for (const auto& beta : derivative_exponents(f)) {
        PSeries fb = f.divided_derivative(beta);
        if (fb.is_zero()) continue;
        uint32_t s = beta.total();
        if (s <= static_cast<uint32_t>(deg))
            level[s] = padic::max(level[s], unit_polydisk_norm(fb, p));
    }
    uint32_t n = static_cast<uint32_t>(deg) + 1;
    while (n > 1 && level[n - 1] < r) --n;
    return n;
}

DiameterReport diameter_ratio(const PSeries& h, const Radius& numerator,
                              const GenericPoint& xi, unsigned long p,
                              DiameterWitness::Kind kind, uint32_t trunc_bound) {
    DiameterReport rep;
    rep.truncation_bound = trunc_bound;
    rep.delta = Radius::one();
    rep.witness.kind = DiameterWitness::Kind::None;
    for (const auto& beta : derivative_exponents(h)) {
        PSeries hb = h.divided_derivative(beta);
        if (hb.is_zero()) continue;
        NormBound nb = gauss_norm(hb, xi, p);
        if (nb.value.is_zero()) continue;
        Radius cand = (numerator / nb.value).root(beta.total());
        if (cand < rep.delta) {
            rep.delta = cand;
            rep.witness.kind = kind;
            rep.witness.alpha = beta;
        }
    }
    return rep;
}

}  // namespace

LaurentSpec LaurentSpec::annulus(Rat q_lo, Rat q_hi) {
    LaurentSpec s;
    s.d = 1;
    PSeries x = PSeries::variable(1, 0);
    if (q_hi < 0) s.caps.push_back({x, Radius::from_log(std::move(q_hi))});
    s.cups.push_back({x, Radius::from_log(std::move(q_lo))});
    s.validate();
    return s;
}

void LaurentSpec::validate() const {
    auto check = [&](const LaurentConstraint& c) {
        if (c.poly.dim() != d) throw SchemaError("LaurentSpec: constraint dimension mismatch");
        if (!c.poly.exact()) throw SchemaError("LaurentSpec: constraint polynomials must be exact");
        if (c.bound.is_zero() || c.bound.is_infinite() || c.bound > Radius::one())
            throw SchemaError("LaurentSpec: bounds must lie in (0, 1]");
    };
    for (const auto& c : caps) check(c);
    for (const auto& c : cups) check(c);
}

bool member(const LaurentSpec& spec, const GenericPoint& xi, unsigned long p) {
    if (xi.dim() != spec.d) throw std::invalid_argument("member: dimension mismatch");
    for (const auto& c : spec.caps) {
        if (gauss_norm(c.poly, xi, p).value > c.bound) return false;
    }
    for (const auto& c : spec.cups) {
        if (gauss_norm(c.poly, xi, p).value < c.bound) return false;
    }
    return true;
}

DiameterReport diameter_cap(const PSeries& f, const Radius& r,
                            const GenericPoint& xi, unsigned long p) {
    if (f.is_zero()) return DiameterReport{};
    if (gauss_norm(f, xi, p).value > r)
        throw MembershipError("diameter_cap: point violates |f| <= r");
    return diameter_ratio(f, r, xi, p, DiameterWitness::Kind::Cap,
                          cap_truncation_bound(f, r, p));
}

DiameterReport diameter_cup(const PSeries& g, const Radius& s,
                            const GenericPoint& xi, unsigned long p) {
    NormBound gn = gauss_norm(g, xi, p);
    if (gn.value < s) throw MembershipError("diameter_cup: point violates |g| >= s");
    uint32_t bound = g.degree() < 1 ? 1 : static_cast<uint32_t>(g.degree()) + 1;
    return diameter_ratio(g, gn.value, xi, p, DiameterWitness::Kind::Cup, bound);
}

DiameterReport diameter(const LaurentSpec& spec, const GenericPoint& xi,
                        unsigned long p) {
    if (!member(spec, xi, p)) throw MembershipError("diameter: point outside the domain");
    DiameterReport best;
    uint32_t trunc = 1;
    for (size_t i = 0; i < spec.caps.size(); ++i) {
        DiameterReport r = diameter_cap(spec.caps[i].poly, spec.caps[i].bound, xi, p);
        trunc = std::max(trunc, r.truncation_bound);
        if (r.delta < best.delta) {
            best = r;
            best.witness.constraint = static_cast<int>(i);
        }
    }
    for (size_t j = 0; j < spec.cups.size(); ++j) {
        DiameterReport r = diameter_cup(spec.cups[j].poly, spec.cups[j].bound, xi, p);
        trunc = std::max(trunc, r.truncation_bound);
        if (r.delta < best.delta) {
            best = r;
            best.witness.constraint = static_cast<int>(j);
        }
    }
    best.truncation_bound = trunc;
    return best;
}

std::vector<GenericPoint> shilov_points(const LaurentSpec& spec, unsigned long p) {
    std::vector<GenericPoint> pts;
    auto push_if_member = [&](GenericPoint pt) {
        if (!member(spec, pt, p)) return;
        for (const auto& q : pts) {
            if (q.center == pt.center && q.radius_log == pt.radius_log) return;
        }
        pts.push_back(std::move(pt));
    };
    // Maximal point of the unit polydisk.
    push_if_member(GenericPoint::at(std::vector<Rat>(spec.d, Rat(0)),
                                    std::vector<Rat>(spec.d, Rat(0))));
    if (spec.caps.empty() && spec.cups.empty()) return pts;
    if (spec.d != 1)
        throw std::invalid_argument(
            "shilov_points: constrained specs supported in one dimension only");
    auto boundary_of = [&](const LaurentConstraint& c) {
        // Linear constraint |c1 x + c0| <=> b becomes |x - a| <=> b/|c1|.
        if (c.poly.degree() != 1)
            throw std::invalid_argument("shilov_points: constraints must be linear in x");
        Rat c1 = c.poly.coeff(MultiIndex({std::vector<uint32_t>{1}}));
        Rat c0 = c.poly.coeff(MultiIndex::zero(1));
        Rat a(-c0 / c1);
        XRat q = c.bound.logp + vp_rat(c1, p);
        return GenericPoint::at({std::move(a)}, {q.value()});
    };
    for (const auto& c : spec.caps) push_if_member(boundary_of(c));
    for (const auto& c : spec.cups) push_if_member(boundary_of(c));
    if (pts.empty()) throw std::invalid_argument("shilov_points: empty domain");
    return pts;
}

}  // namespace padic
