#ifndef PADIC_DIFFSYS_HPP
#define PADIC_DIFFSYS_HPP

#include <map>
#include <optional>
#include <vector>

#include "padic/domains.hpp"
#include "padic/errors.hpp"
#include "padic/norms.hpp"
#include "padic/point.hpp"
#include "padic/pseries.hpp"
#include "padic/xrat.hpp"

namespace padic {

/// Rational function num/den over exact polynomials; constant denominators
/// are folded into the numerator on normalization.
struct RatFunc {
    PSeries num;
    PSeries den;

    static RatFunc poly(PSeries n) {
        int d = n.dim();
        return RatFunc{std::move(n), PSeries::constant(d, Rat(1))};
    }
    void normalize();
};

using PolyMat = std::vector<std::vector<PSeries>>;
using RatMat = std::vector<std::vector<Rat>>;

/// The system dy/dx_i = G_i y on a Laurent domain of the unit polydisk.
struct DiffSystem {
    unsigned long p;
    int d;
    int mu;
    /// d matrices, each mu x mu.
    std::vector<std::vector<std::vector<RatFunc>>> G;
    LaurentSpec domain;

    void validate() const;
};

struct IntegrabilityError : std::runtime_error {
    IntegrabilityError(int i_, int j_)
        : std::runtime_error("integrability fails for coordinate pair (" +
                             std::to_string(i_) + "," + std::to_string(j_) + ")"),
          i(i_), j(j_) {}
    int i, j;
};

/// Iterated derivative matrices over a common denominator: the level-s
/// matrix M_alpha satisfies G_alpha = M_alpha / den^s, s = |alpha|.
class Strata {
  public:
    Strata(PSeries den, int d, int mu, uint32_t order)
        : den_(std::move(den)), dden_(), d_(d), mu_(mu), n_(order) {}

    const PSeries& den() const { return den_; }
    uint32_t order() const { return n_; }
    int dim() const { return d_; }
    int rank() const { return mu_; }

    bool has(const MultiIndex& alpha) const { return levels_.count(alpha) > 0; }
    const PolyMat& numerator(const MultiIndex& alpha) const { return levels_.at(alpha); }
    void insert(const MultiIndex& alpha, PolyMat m) { levels_[alpha] = std::move(m); }

    /// G_{[alpha]}(xi) at a rational point, as an exact rational matrix.
    RatMat divided_at(const MultiIndex& alpha, const std::vector<Rat>& xi,
                      unsigned long p) const;

    /// log_p of the matrix norm |G_alpha(xi)| at a generic point (max
    /// entry Gauss norm); -inf for the zero matrix.
    XRat log_norm_at(const MultiIndex& alpha, const GenericPoint& xi,
                     unsigned long p) const;

    /// Exponents of a given total degree present in the table.
    std::vector<MultiIndex> level(uint32_t s) const;

  private:
    PSeries den_;
    std::vector<PSeries> dden_;
    int d_;
    int mu_;
    uint32_t n_;
    std::map<MultiIndex, PolyMat> levels_;
};

/// Checks the mixed-derivative identity for every coordinate pair; returns
/// the first failing pair, if any.
std::optional<std::pair<int, int>> integrability_defect(const DiffSystem& sys);

/// Builds all G_alpha with |alpha| <= order. Throws IntegrabilityError
/// for d >= 2 systems that fail the mixed-derivative identity.
Strata iterate(const DiffSystem& sys, uint32_t order);

/// Truncated fundamental solution at a rational point, in the recentered
/// coordinate y = x - xi: Y(y) = sum G_{[alpha]}(xi) y^alpha, Y(0) = I.
PolyMat fundamental_solution(const DiffSystem& sys, const Strata& strata,
                             const std::vector<Rat>& xi, uint32_t order);

struct WronskianReport {
    bool ok = true;
    int coordinate = -1;
    MultiIndex first_failure;
};

/// Verifies d(det Y)/dx_i = Tr(G_i) det Y coefficientwise up to total
/// degree order-1.
WronskianReport wronskian_check(const DiffSystem& sys, const PolyMat& solution,
                                uint32_t order);

struct RadiusEstimate {
    Radius upper_window;   ///< tail-window estimate of the series radius
    Radius trivial_lower;  ///< uniform lower bound from the operator norms
    Radius delta;          ///< diameter of the domain at the point
    Radius radius;         ///< min(upper_window, delta)
    bool stabilized = false;
};

/// Tail-window radius estimate at a point. The window covers total degrees
/// [window_start, order]; the strata must extend to order >= 2*window_start.
RadiusEstimate radius_estimate(const DiffSystem& sys, const Strata& strata,
                               const GenericPoint& xi, uint32_t window_start);

/// p^{-1/(p-1)} / max_i(|d/dx_i|_U, ||G_i||_U), valid at every point of U.
Radius trivial_lower_bound(const DiffSystem& sys);

struct GrowthReport {
    bool ok = true;
    /// min over checked exponents of log RHS - log LHS; +inf if no
    /// exponent produced a finite comparison.
    XRat min_slack = XRat::pos_inf();
    MultiIndex worst;
    std::vector<MultiIndex> violations;
};

/// Checks |G_{[alpha]}(xi)| <= C {|alpha|,mu-1}_p R^{-|alpha|} for all
/// |alpha| <= order, with C the max strata norm below the rank over the
/// Shilov points of the domain.
GrowthReport dwork_robba_check(const DiffSystem& sys, const Strata& strata,
                               const GenericPoint& xi, const Radius& R,
                               uint32_t order);

struct TransferReport {
    Radius window;      ///< tail-window estimate at the queried point
    Radius min_shilov;  ///< min of the full radius over the Shilov points
    std::vector<Radius> shilov_radii;
    bool pass = false;
};

/// Checks the transfer inequality: the series radius at xi dominates the
/// min of the radii at the Shilov points.
TransferReport transfer_bound(const DiffSystem& sys, const Strata& strata,
                              const GenericPoint& xi,
                              const std::vector<GenericPoint>& shilov,
                              uint32_t window_start);

struct ConcavityReport {
    std::vector<Rat> grid;
    std::vector<XRat> log_radius;  ///< log of the window estimate per point
    std::vector<bool> stabilized;
    std::vector<int> violations;  ///< middle index of each failing triple
    bool vacuous = false;         ///< every grid value infinite
    bool concave = true;
};

/// Midpoint concavity of rho -> log window-radius at t_{0,p^rho} over a
/// one-dimensional grid; needs at least 3 points.
ConcavityReport concavity_scan(const DiffSystem& sys, const Strata& strata,
                               const std::vector<Rat>& rho_grid,
                               uint32_t window_start);

}  // namespace padic

#endif
