#ifndef PADIC_XRAT_HPP
#define PADIC_XRAT_HPP

#include <compare>
#include <stdexcept>
#include <string>

#include "padic/rational.hpp"

namespace padic {

/// Extended rational: a rational number or one of the two infinities.
/// Totally ordered, with -inf minimal and +inf maximal. Addition is the
/// usual one with absorbing infinities; adding infinities of opposite
/// sign is a logic error and throws.
class XRat {
  public:
    enum class Kind { NegInf, Finite, PosInf };

    XRat() : kind_(Kind::Finite), q_(0) {}
    XRat(Rat q) : kind_(Kind::Finite), q_(std::move(q)) {}
    XRat(long n) : kind_(Kind::Finite), q_(n) {}
    XRat(int n) : kind_(Kind::Finite), q_(n) {}

    static XRat neg_inf() { return XRat(Kind::NegInf); }
    static XRat pos_inf() { return XRat(Kind::PosInf); }

    Kind kind() const { return kind_; }
    bool finite() const { return kind_ == Kind::Finite; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }

    const Rat& value() const {
        if (!finite()) throw std::logic_error("XRat: value() on infinity");
        return q_;
    }

    XRat operator-() const {
        switch (kind_) {
            case Kind::NegInf: return pos_inf();
            case Kind::PosInf: return neg_inf();
            default: return XRat(Rat(-q_));
        }
    }

    XRat operator+(const XRat& o) const {
        if (finite() && o.finite()) return XRat(Rat(q_ + o.q_));
        if (is_pos_inf() && o.is_neg_inf()) throw std::logic_error("XRat: inf - inf");
        if (is_neg_inf() && o.is_pos_inf()) throw std::logic_error("XRat: inf - inf");
        return finite() ? o : *this;
    }
    XRat operator-(const XRat& o) const { return *this + (-o); }

    /// Scale by a positive rational (exponents scale, infinities persist).
    XRat scaled(const Rat& c) const {
        if (c <= 0) throw std::logic_error("XRat: nonpositive scale");
        if (!finite()) return *this;
        return XRat(Rat(q_ * c));
    }

    bool operator==(const XRat& o) const {
        if (kind_ != o.kind_) return false;
        return !finite() || q_ == o.q_;
    }
    bool operator<(const XRat& o) const {
        if (kind_ != o.kind_) {
            return static_cast<int>(kind_) < static_cast<int>(o.kind_);
        }
        return finite() && q_ < o.q_;
    }
    bool operator!=(const XRat& o) const { return !(*this == o); }
    bool operator>(const XRat& o) const { return o < *this; }
    bool operator<=(const XRat& o) const { return !(o < *this); }
    bool operator>=(const XRat& o) const { return !(*this < o); }

    std::string str() const {
        switch (kind_) {
            case Kind::NegInf: return "-inf";
            case Kind::PosInf: return "+inf";
            default: return rat_to_string(q_);
        }
    }

  private:
    explicit XRat(Kind k) : kind_(k), q_(0) {}
    Kind kind_;
    Rat q_;
};

inline const XRat& min(const XRat& a, const XRat& b) { return b < a ? b : a; }
inline const XRat& max(const XRat& a, const XRat& b) { return a < b ? b : a; }

/// A p-adic valuation: rational, or +inf for the valuation of zero.
using LogVal = XRat;

/// A radius, stored as log_p(radius). -inf encodes radius 0, +inf radius
/// infinity. Valuations and radii interconvert by negation: |x| = p^{-v(x)}.
struct Radius {
    XRat logp;

    Radius() : logp(XRat::neg_inf()) {}
    explicit Radius(XRat lp) : logp(std::move(lp)) {}

    static Radius zero() { return Radius(XRat::neg_inf()); }
    static Radius one() { return Radius(XRat(0)); }
    static Radius infinite() { return Radius(XRat::pos_inf()); }
    static Radius from_log(Rat q) { return Radius(XRat(std::move(q))); }
    static Radius from_valuation(const LogVal& v) { return Radius(-v); }

    bool is_zero() const { return logp.is_neg_inf(); }
    bool is_infinite() const { return logp.is_pos_inf(); }

    LogVal valuation() const { return -logp; }

    Radius operator*(const Radius& o) const { return Radius(logp + o.logp); }
    Radius operator/(const Radius& o) const { return Radius(logp - o.logp); }
    /// radius^(1/n), exact on exponents.
    Radius root(unsigned long n) const { return Radius(logp.scaled(Rat(1, n))); }

    bool operator==(const Radius& o) const { return logp == o.logp; }
    bool operator!=(const Radius& o) const { return logp != o.logp; }
    bool operator<(const Radius& o) const { return logp < o.logp; }
    bool operator<=(const Radius& o) const { return logp <= o.logp; }
    bool operator>(const Radius& o) const { return logp > o.logp; }
    bool operator>=(const Radius& o) const { return logp >= o.logp; }

    std::string str() const { return logp.str(); }
};

inline Radius min(const Radius& a, const Radius& b) { return b < a ? b : a; }
inline Radius max(const Radius& a, const Radius& b) { return a < b ? b : a; }

}  // namespace padic

#endif
