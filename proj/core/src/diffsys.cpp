#include "padic/diffsys.hpp"

#include <algorithm>

#include "padic/arith.hpp"
#include "padic/polygon.hpp"

namespace padic {

namespace {

PolyMat mat_zero(int d, int mu) {
    return PolyMat(mu, std::vector<PSeries>(mu, PSeries(d)));
}

PolyMat mat_identity(int d, int mu) {
    PolyMat m = mat_zero(d, mu);
    for (int i = 0; i < mu; ++i) m[i][i] = PSeries::constant(d, Rat(1));
    return m;
}

PolyMat mat_add(const PolyMat& a, const PolyMat& b) {
    PolyMat r = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) r[i][j] = a[i][j] + b[i][j];
    return r;
}

PolyMat mat_mul(const PolyMat& a, const PolyMat& b) {
    size_t n = a.size(), m = b[0].size(), k = b.size();
    PolyMat r(n, std::vector<PSeries>(m, PSeries(a[0][0].dim())));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) {
            PSeries acc(a[0][0].dim());
            for (size_t l = 0; l < k; ++l) acc = acc + a[i][l] * b[l][j];
            r[i][j] = acc;
        }
    return r;
}

PolyMat mat_scale_poly(const PolyMat& a, const PSeries& f) {
    PolyMat r = a;
    for (auto& row : r)
        for (auto& e : row) e = e * f;
    return r;
}

PolyMat mat_scale(const PolyMat& a, const Rat& c) {
    PolyMat r = a;
    for (auto& row : r)
        for (auto& e : row) e = e.scaled(c);
    return r;
}

PolyMat mat_derivative(const PolyMat& a, int i) {
    PolyMat r = a;
    for (auto& row : r)
        for (auto& e : row) e = e.derivative(i);
    return r;
}

bool mat_equal(const PolyMat& a, const PolyMat& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    return true;
}

// Numerator matrices of the G_i over the shared denominator.
struct CommonDen {
    PSeries den;
    std::vector<PolyMat> num;  // one matrix per coordinate
};

CommonDen to_common_denominator(const DiffSystem& sys) {
    std::vector<PSeries> uniq;
    auto collect = [&](const RatFunc& rf) {
        if (rf.den.degree() <= 0) return;
        for (const auto& u : uniq)
            if (u == rf.den) return;
        uniq.push_back(rf.den);
    };
    for (const auto& mat : sys.G)
        for (const auto& row : mat)
            for (const auto& rf : row) collect(rf);

    PSeries den = PSeries::constant(sys.d, Rat(1));
    for (const auto& u : uniq) den = den * u;

    CommonDen cd{den, {}};
    for (const auto& mat : sys.G) {
        PolyMat m = mat_zero(sys.d, sys.mu);
        for (int i = 0; i < sys.mu; ++i) {
            for (int j = 0; j < sys.mu; ++j) {
                const RatFunc& rf = mat[i][j];
                PSeries scaled = rf.num;
                if (rf.den.degree() <= 0) {
                    Rat c = rf.den.coeff(MultiIndex::zero(sys.d));
                    scaled = scaled.scaled(Rat(1) / c);
                    for (const auto& u : uniq) scaled = scaled * u;
                } else {
                    bool skipped = false;
                    for (const auto& u : uniq) {
                        if (!skipped && u == rf.den) {
                            skipped = true;
                            continue;
                        }
                        scaled = scaled * u;
                    }
                }
                m[i][j] = scaled;
            }
        }
        cd.num.push_back(std::move(m));
    }
    return cd;
}

}  // namespace

void RatFunc::normalize() {
    if (den.is_zero()) throw SchemaError("RatFunc: zero denominator");
    if (den.degree() == 0) {
        Rat c = den.coeff(MultiIndex::zero(den.dim()));
        num = num.scaled(Rat(1) / c);
        den = PSeries::constant(den.dim(), Rat(1));
    }
}

void DiffSystem::validate() const {
    if (d < 1 || mu < 1) throw SchemaError("DiffSystem: d and mu must be positive");
    if (static_cast<int>(G.size()) != d) throw SchemaError("DiffSystem: expected d matrices");
    for (const auto& mat : G) {
        if (static_cast<int>(mat.size()) != mu)
            throw SchemaError("DiffSystem: matrix rank mismatch");
        for (const auto& row : mat) {
            if (static_cast<int>(row.size()) != mu)
                throw SchemaError("DiffSystem: matrix rank mismatch");
            for (const auto& rf : row) {
                if (rf.num.dim() != d || rf.den.dim() != d)
                    throw SchemaError("DiffSystem: entry dimension mismatch");
                if (rf.den.is_zero()) throw SchemaError("DiffSystem: zero denominator");
            }
        }
    }
    if (domain.d != d) throw SchemaError("DiffSystem: domain dimension mismatch");
    domain.validate();

    // Denominators must not vanish on the domain; checked on the Shilov
    // points, plus a polygon tie test on each Shilov circle for d = 1.
    std::vector<GenericPoint> shilov = shilov_points(domain, p);
    for (const auto& mat : G) {
        for (const auto& row : mat) {
            for (const auto& rf : row) {
                if (rf.den.degree() <= 0) continue;
                for (const auto& eta : shilov) {
                    if (gauss_norm(rf.den, eta, p).value.is_zero())
                        throw SchemaError("DiffSystem: denominator vanishes on the domain");
                    if (d == 1 && eta.radius_log[0].finite()) {
                        PSeries shifted = rf.den.taylor_shift(eta.center);
                        if (zero_detect(shifted, {Rat(-eta.radius_log[0].value())}, p))
                            throw SchemaError(
                                "DiffSystem: denominator has a zero on a Shilov circle");
                    }
                }
            }
        }
    }
}

std::optional<std::pair<int, int>> integrability_defect(const DiffSystem& sys) {
    if (sys.d < 2) return std::nullopt;
    CommonDen cd = to_common_denominator(sys);
    for (int i = 0; i < sys.d; ++i) {
        for (int j = i + 1; j < sys.d; ++j) {
            // d_j G_i + G_i G_j vs d_i G_j + G_j G_i over den^2.
            PolyMat lhs = mat_add(
                mat_add(mat_scale_poly(mat_derivative(cd.num[i], j), cd.den),
                        mat_scale_poly(cd.num[i], -cd.den.derivative(j))),
                mat_mul(cd.num[i], cd.num[j]));
            PolyMat rhs = mat_add(
                mat_add(mat_scale_poly(mat_derivative(cd.num[j], i), cd.den),
                        mat_scale_poly(cd.num[j], -cd.den.derivative(i))),
                mat_mul(cd.num[j], cd.num[i]));
            if (!mat_equal(lhs, rhs)) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

RatMat Strata::divided_at(const MultiIndex& alpha, const std::vector<Rat>& xi,
                          unsigned long p) const {
    (void)p;
    Rat dval = den_.eval(xi);
    if (dval == 0) throw MembershipError("Strata: denominator vanishes at the point");
    uint32_t s = alpha.total();
    Rat dpow(1);
    for (uint32_t k = 0; k < s; ++k) dpow *= dval;
    Rat fact(1);
    for (int i = 0; i < alpha.dim(); ++i) {
        Int f;
        mpz_fac_ui(f.get_mpz_t(), alpha[i]);
        fact *= f;
    }
    const PolyMat& m = numerator(alpha);
    RatMat out(mu_, std::vector<Rat>(mu_));
    for (int i = 0; i < mu_; ++i)
        for (int j = 0; j < mu_; ++j) out[i][j] = m[i][j].eval(xi) / (dpow * fact);
    return out;
}

XRat Strata::log_norm_at(const MultiIndex& alpha, const GenericPoint& xi,
                         unsigned long p) const {
    NormBound dn = gauss_norm(den_, xi, p);
    if (dn.value.is_zero()) throw MembershipError("Strata: denominator vanishes at the point");
    uint32_t s = alpha.total();
    XRat best = XRat::neg_inf();
    for (const auto& row : numerator(alpha)) {
        for (const auto& e : row) {
            NormBound en = gauss_norm(e, xi, p);
            if (en.value.is_zero()) continue;
            best = padic::max(best, en.value.logp);
        }
    }
    if (best.is_neg_inf() || s == 0) return best;
    return best - dn.value.logp.scaled(Rat(s));
}

std::vector<MultiIndex> Strata::level(uint32_t s) const {
    std::vector<MultiIndex> out;
    for (const auto& [a, m] : levels_) {
        if (a.total() == s) out.push_back(a);
    }
    return out;
}

Strata iterate(const DiffSystem& sys, uint32_t order) {
    if (auto defect = integrability_defect(sys))
        throw IntegrabilityError(defect->first, defect->second);
    CommonDen cd = to_common_denominator(sys);
    Strata st(cd.den, sys.d, sys.mu, order);
    st.insert(MultiIndex::zero(sys.d), mat_identity(sys.d, sys.mu));

    std::vector<PSeries> dden;
    for (int i = 0; i < sys.d; ++i) dden.push_back(cd.den.derivative(i));

    std::vector<MultiIndex> prev_level{MultiIndex::zero(sys.d)};
    for (uint32_t s = 1; s <= order; ++s) {
        std::vector<MultiIndex> cur_level;
        for (const auto& prev : prev_level) {
            for (int i = 0; i < sys.d; ++i) {
                MultiIndex alpha = prev.bumped(i);
                if (st.has(alpha)) continue;
                const PolyMat& m = st.numerator(prev);
                // G_alpha = (d_i M - (s-1) M den' + M N_i) / den^s
                PolyMat next = mat_add(
                    mat_add(mat_scale_poly(mat_derivative(m, i), cd.den),
                            mat_scale_poly(mat_scale(m, Rat(-(long)(s - 1))), dden[i])),
                    mat_mul(m, cd.num[i]));
                st.insert(alpha, std::move(next));
                cur_level.push_back(alpha);
            }
        }
        prev_level = std::move(cur_level);
    }
    return st;
}

PolyMat fundamental_solution(const DiffSystem& sys, const Strata& strata,
                             const std::vector<Rat>& xi, uint32_t order) {
    if (order > strata.order())
        throw std::invalid_argument("fundamental_solution: strata order too small");
    PolyMat y(sys.mu, std::vector<PSeries>(sys.mu, PSeries(sys.d, order)));
    for (uint32_t s = 0; s <= order; ++s) {
        for (const auto& alpha : strata.level(s)) {
            RatMat g = strata.divided_at(alpha, xi, sys.p);
            for (int i = 0; i < sys.mu; ++i)
                for (int j = 0; j < sys.mu; ++j) y[i][j].add_term(alpha, g[i][j]);
        }
    }
    return y;
}

namespace {

PSeries mat_det_truncated(const PolyMat& y, uint32_t order) {
    size_t n = y.size();
    if (n == 1) return y[0][0];
    if (n == 2) return (y[0][0] * y[1][1] - y[0][1] * y[1][0]).truncated(order);
    // Laplace expansion; ranks stay small in practice.
    PSeries det(y[0][0].dim(), order);
    for (size_t j = 0; j < n; ++j) {
        PolyMat minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<PSeries> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(y[i][k]);
            minor.push_back(std::move(row));
        }
        PSeries term = y[0][j] * mat_det_truncated(minor, order);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det.truncated(order);
}

}  // namespace

WronskianReport wronskian_check(const DiffSystem& sys, const PolyMat& solution,
                                uint32_t order) {
    WronskianReport rep;
    if (order == 0) return rep;
    CommonDen cd = to_common_denominator(sys);
    PSeries det = mat_det_truncated(solution, order);
    for (int i = 0; i < sys.d; ++i) {
        PSeries trace_num(sys.d);
        for (int k = 0; k < sys.mu; ++k) trace_num = trace_num + cd.num[i][k][k];
        // den * d_i(det) - trace_num * det should vanish to degree order-1.
        PSeries resid = cd.den.as_exact() * det.derivative(i).as_exact() -
                        trace_num * det.as_exact();
        for (const auto& [a, c] : resid.terms()) {
            if (a.total() <= order - 1 && c != 0) {
                rep.ok = false;
                rep.coordinate = i;
                rep.first_failure = a;
                return rep;
            }
        }
    }
    return rep;
}

Radius trivial_lower_bound(const DiffSystem& sys) {
    std::vector<GenericPoint> shilov = shilov_points(sys.domain, sys.p);
    XRat worst(0);  // log of max(|d/dx_i|, ||G_i||), at least 0
    for (int i = 0; i < sys.d; ++i) {
        // Operator norm of d/dx_i: max(1, 1/s_min) over cups touching x_i.
        XRat dlog(0);
        for (const auto& c : sys.domain.cups) {
            bool touches = false;
            for (const auto& [a, coef] : c.poly.terms())
                if (a[i] > 0) touches = true;
            if (touches) dlog = padic::max(dlog, -c.bound.logp);
        }
        worst = padic::max(worst, dlog);
        for (const auto& row : sys.G[i]) {
            for (const auto& rf : row) {
                for (const auto& eta : shilov) {
                    Radius n = ratfunc_norm(rf.num, rf.den, eta, sys.p);
                    if (!n.is_zero()) worst = padic::max(worst, n.logp);
                }
            }
        }
    }
    Rat base(-1, static_cast<long>(sys.p) - 1);
    base.canonicalize();
    return Radius(XRat(base) - worst);
}

RadiusEstimate radius_estimate(const DiffSystem& sys, const Strata& strata,
                               const GenericPoint& xi, uint32_t window_start) {
    if (window_start < 1)
        throw std::invalid_argument("radius_estimate: window_start must be >= 1");
    if (strata.order() < 2 * window_start)
        throw std::invalid_argument("radius_estimate: strata order below 2*window_start");
    if (!member(sys.domain, xi, sys.p))
        throw MembershipError("radius_estimate: point outside the domain");

    // Growth rate of the undivided strata over the window; the divided
    // tail then contributes exactly 1/(p-1) in the limit.
    XRat slope = XRat::neg_inf();
    XRat slope_first_half = XRat::neg_inf();
    uint32_t mid = window_start + (strata.order() - window_start) / 2;
    for (uint32_t s = window_start; s <= strata.order(); ++s) {
        for (const auto& alpha : strata.level(s)) {
            XRat n = strata.log_norm_at(alpha, xi, sys.p);
            if (n.is_neg_inf()) continue;
            XRat rate = n.scaled(Rat(1, s));
            slope = padic::max(slope, rate);
            if (s <= mid) slope_first_half = padic::max(slope_first_half, rate);
        }
    }

    RadiusEstimate est;
    if (slope.is_neg_inf()) {
        est.upper_window = Radius::infinite();
        est.stabilized = true;
    } else {
        Rat shift(-1, static_cast<long>(sys.p) - 1);
        shift.canonicalize();
        est.upper_window = Radius(XRat(shift) - slope);
        est.stabilized = (slope == slope_first_half);
    }
    est.trivial_lower = trivial_lower_bound(sys);
    est.delta = diameter(sys.domain, xi, sys.p).delta;
    est.radius = padic::min(est.upper_window, est.delta);
    return est;
}

GrowthReport dwork_robba_check(const DiffSystem& sys, const Strata& strata,
                               const GenericPoint& xi, const Radius& R,
                               uint32_t order) {
    if (order > strata.order())
        throw std::invalid_argument("dwork_robba_check: strata order too small");
    std::vector<GenericPoint> shilov = shilov_points(sys.domain, sys.p);

    // C = max over |beta| < mu of the sup norm of G_beta on the domain.
    XRat c_log = XRat::neg_inf();
    for (uint32_t s = 0; s < static_cast<uint32_t>(sys.mu); ++s) {
        for (const auto& beta : strata.level(s)) {
            for (const auto& eta : shilov) {
                XRat n = strata.log_norm_at(beta, eta, sys.p);
                c_log = padic::max(c_log, n);
            }
        }
    }

    GrowthReport rep;
    for (uint32_t s = 1; s <= order; ++s) {
        LogVal growth = max_subset_valuation(
            s, std::min<unsigned long>(s, sys.mu - 1), sys.p);
        for (const auto& alpha : strata.level(s)) {
            XRat lhs = strata.log_norm_at(alpha, xi, sys.p);
            if (lhs.is_neg_inf()) continue;
            lhs = lhs + XRat(vp_multifactorial(alpha.entries(), sys.p));
            XRat rhs = c_log + growth - R.logp.scaled(Rat(s));
            XRat slack = rhs - lhs;
            if (slack < rep.min_slack) {
                rep.min_slack = slack;
                rep.worst = alpha;
            }
            if (slack < XRat(0)) {
                rep.ok = false;
                rep.violations.push_back(alpha);
            }
        }
    }
    return rep;
}

TransferReport transfer_bound(const DiffSystem& sys, const Strata& strata,
                              const GenericPoint& xi,
                              const std::vector<GenericPoint>& shilov,
                              uint32_t window_start) {
    TransferReport rep;
    rep.window = radius_estimate(sys, strata, xi, window_start).upper_window;
    rep.min_shilov = Radius::infinite();
    for (const auto& eta : shilov) {
        RadiusEstimate est = radius_estimate(sys, strata, eta, window_start);
        rep.shilov_radii.push_back(est.radius);
        rep.min_shilov = padic::min(rep.min_shilov, est.radius);
    }
    rep.pass = rep.window >= rep.min_shilov;
    return rep;
}

ConcavityReport concavity_scan(const DiffSystem& sys, const Strata& strata,
                               const std::vector<Rat>& rho_grid,
                               uint32_t window_start) {
    if (sys.d != 1)
        throw std::invalid_argument("concavity_scan: one-dimensional systems only");
    if (rho_grid.size() < 3)
        throw std::invalid_argument("concavity_scan: grid needs at least 3 points");
    ConcavityReport rep;
    rep.grid = rho_grid;
    for (const Rat& rho : rho_grid) {
        GenericPoint xi = GenericPoint::disk_boundary(Rat(0), rho);
        RadiusEstimate est = radius_estimate(sys, strata, xi, window_start);
        rep.log_radius.push_back(est.upper_window.logp);
        rep.stabilized.push_back(est.stabilized);
    }
    rep.vacuous = std::all_of(rep.log_radius.begin(), rep.log_radius.end(),
                              [](const XRat& v) { return v.is_pos_inf(); });
    if (rep.vacuous) return rep;
    for (size_t i = 1; i + 1 < rep.log_radius.size(); ++i) {
        const XRat &v0 = rep.log_radius[i - 1], &v1 = rep.log_radius[i],
                   &v2 = rep.log_radius[i + 1];
        if (!v0.finite() || !v1.finite() || !v2.finite()) continue;
        Rat h_l = rho_grid[i] - rho_grid[i - 1];
        Rat h_r = rho_grid[i + 1] - rho_grid[i];
        // slope left >= slope right, cross-multiplied (h_l, h_r > 0)
        Rat lhs = (v1.value() - v0.value()) * h_r;
        Rat rhs = (v2.value() - v1.value()) * h_l;
        if (lhs < rhs) {
            rep.concave = false;
            rep.violations.push_back(static_cast<int>(i));
        }
    }
    return rep;
}

}  // namespace padic
