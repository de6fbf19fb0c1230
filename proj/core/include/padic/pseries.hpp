#ifndef PADIC_PSERIES_HPP
#define PADIC_PSERIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "padic/multi_index.hpp"
#include "padic/rational.hpp"

namespace padic {

/// Multivariate polynomial / truncated power series over exact rationals.
/// A disengaged trunc() means "exact polynomial"; otherwise all stored
/// terms have total degree <= trunc() and ring operations re-truncate.
/// Zero coefficients are never stored.
class PSeries {
  public:
    using Terms = std::map<MultiIndex, Rat>;

    explicit PSeries(int d) : d_(d) {}
    PSeries(int d, std::optional<uint32_t> trunc) : d_(d), trunc_(trunc) {}

    static PSeries constant(int d, Rat c);
    static PSeries variable(int d, int i);
    static PSeries monomial(MultiIndex alpha, Rat c);

    int dim() const { return d_; }
    const std::optional<uint32_t>& trunc() const { return trunc_; }
    bool exact() const { return !trunc_.has_value(); }
    const Terms& terms() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    /// Total degree of the stored support; -1 for the zero series.
    int degree() const;

    Rat coeff(const MultiIndex& alpha) const;
    /// Sets a coefficient (erases on zero); respects the truncation order.
    void set_coeff(const MultiIndex& alpha, Rat c);
    void add_term(const MultiIndex& alpha, const Rat& c);

    PSeries operator+(const PSeries& o) const;
    PSeries operator-(const PSeries& o) const;
    PSeries operator*(const PSeries& o) const;
    PSeries operator-() const;
    PSeries scaled(const Rat& c) const;

    bool operator==(const PSeries& o) const { return d_ == o.d_ && c_ == o.c_; }
    bool operator!=(const PSeries& o) const { return !(*this == o); }

    PSeries derivative(int i) const;
    /// Divided derivative f^{[alpha]} = (1/alpha!) d^alpha f.
    PSeries divided_derivative(const MultiIndex& alpha) const;

    /// Recenter at a: returns g with g(y) = f(y + a), i.e. the series of
    /// divided Taylor coefficients f^{[alpha]}(a). Exact on polynomials.
    PSeries taylor_shift(const std::vector<Rat>& a) const;

    Rat eval(const std::vector<Rat>& x) const;

    PSeries truncated(uint32_t n) const;
    /// Drop the truncation marker (treat the data as an exact polynomial).
    PSeries as_exact() const;

    std::string str() const;

  private:
    static std::optional<uint32_t> merge_trunc(const std::optional<uint32_t>& a,
                                               const std::optional<uint32_t>& b);
    int d_;
    std::optional<uint32_t> trunc_;
    Terms c_;
};

}  // namespace padic

#endif
