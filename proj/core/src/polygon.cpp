#include "padic/polygon.hpp"

#include <stdexcept>

#include "padic/arith.hpp"

namespace padic {

PolygonResult v_of(const PSeries& f, const std::vector<Rat>& mu, unsigned long p) {
    if (!f.exact()) throw std::invalid_argument("v_of: requires an exact polynomial");
    if (f.is_zero()) throw std::invalid_argument("v_of: zero polynomial");
    if (static_cast<int>(mu.size()) != f.dim())
        throw std::invalid_argument("v_of: mu dimension mismatch");
    PolygonResult res;
    bool first = true;
    for (const auto& [alpha, c] : f.terms()) {
        Rat val = vp_rat(c, p).value();
        for (int i = 0; i < f.dim(); ++i) val += mu[i] * alpha[i];
        if (first || val < res.value) {
            res.value = val;
            res.minimizers.clear();
            res.minimizers.push_back(alpha);
            first = false;
        } else if (val == res.value) {
            res.minimizers.push_back(alpha);
        }
    }
    res.regular = res.minimizers.size() == 1;
    return res;
}

bool zero_detect(const PSeries& f, const std::vector<Rat>& mu, unsigned long p) {
    return !v_of(f, mu, p).regular;
}

std::optional<ZeroCertificate> drop_implies_zero(const PSeries& f,
                                                 const std::vector<Rat>& xi,
                                                 unsigned long p) {
    if (!f.exact()) throw std::invalid_argument("drop_implies_zero: requires an exact polynomial");
    LogVal v_at_xi = vp_rat(f.eval(xi), p);
    LogVal v_at_0 = vp_rat(f.coeff(MultiIndex::zero(f.dim())), p);
    if (v_at_xi == v_at_0) return std::nullopt;
    ZeroCertificate cert;
    // |f(xi)| < |f(0)| means higher valuation at xi.
    cert.kind = v_at_xi > v_at_0 ? ZeroCertificate::Kind::SameModulus
                                 : ZeroCertificate::Kind::AtMost;
    for (const Rat& x : xi) cert.radii.push_back(Radius::from_valuation(vp_rat(x, p)));
    return cert;
}

Radius nearest_zero_radius(const PSeries& g, const Rat& a, unsigned long p) {
    if (g.dim() != 1) throw std::invalid_argument("nearest_zero_radius: one variable only");
    if (!g.exact()) throw std::invalid_argument("nearest_zero_radius: requires an exact polynomial");
    PSeries shifted = g.taylor_shift({a});
    Rat g0 = shifted.coeff(MultiIndex::zero(1));
    if (g0 == 0) throw std::invalid_argument("nearest_zero_radius: center is a zero");
    Rat v0 = vp_rat(g0, p).value();
    // min over alpha >= 1 of (|g(a)| / |g^{[alpha]}(a)|)^{1/alpha}, capped
    // at the unit disk.
    XRat best = XRat(0);
    for (const auto& [alpha, c] : shifted.terms()) {
        uint32_t s = alpha.total();
        if (s == 0) continue;
        Rat va = vp_rat(c, p).value();
        best = padic::min(best, XRat(Rat((va - v0) / s)));
    }
    return Radius(best);
}

}  // namespace padic
