#include "padic/pseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace padic {

PSeries PSeries::constant(int d, Rat c) {
    PSeries f(d);
    f.set_coeff(MultiIndex::zero(d), std::move(c));
    return f;
}

PSeries PSeries::variable(int d, int i) {
    PSeries f(d);
    f.set_coeff(MultiIndex::unit(d, i), Rat(1));
    return f;
}

PSeries PSeries::monomial(MultiIndex alpha, Rat c) {
    PSeries f(alpha.dim());
    f.set_coeff(std::move(alpha), std::move(c));
    return f;
}

int PSeries::degree() const {
    if (c_.empty()) return -1;
    // Graded order: the last key has maximal total degree.
    return static_cast<int>(c_.rbegin()->first.total());
}

Rat PSeries::coeff(const MultiIndex& alpha) const {
    auto it = c_.find(alpha);
    return it == c_.end() ? Rat(0) : it->second;
}

void PSeries::set_coeff(const MultiIndex& alpha, Rat c) {
    if (alpha.dim() != d_) throw std::invalid_argument("PSeries: dimension mismatch");
    if (trunc_ && alpha.total() > *trunc_) return;
    if (c == 0) {
        c_.erase(alpha);
    } else {
        c_[alpha] = std::move(c);
    }
}

void PSeries::add_term(const MultiIndex& alpha, const Rat& c) {
    if (trunc_ && alpha.total() > *trunc_) return;
    if (c == 0) return;
    auto [it, inserted] = c_.emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

std::optional<uint32_t> PSeries::merge_trunc(const std::optional<uint32_t>& a,
                                             const std::optional<uint32_t>& b) {
    if (a && b) return std::min(*a, *b);
    return a ? a : b;
}

PSeries PSeries::operator+(const PSeries& o) const {
    if (d_ != o.d_) throw std::invalid_argument("PSeries: dimension mismatch");
    PSeries r(d_, merge_trunc(trunc_, o.trunc_));
    for (const auto& [a, c] : c_) r.add_term(a, c);
    for (const auto& [a, c] : o.c_) r.add_term(a, c);
    return r;
}

PSeries PSeries::operator-(const PSeries& o) const { return *this + (-o); }

PSeries PSeries::operator-() const {
    PSeries r(d_, trunc_);
    for (const auto& [a, c] : c_) r.c_.emplace(a, Rat(-c));
    return r;
}

PSeries PSeries::scaled(const Rat& s) const {
    PSeries r(d_, trunc_);
    if (s == 0) return r;
    for (const auto& [a, c] : c_) r.c_.emplace(a, Rat(c * s));
    return r;
}

PSeries PSeries::operator*(const PSeries& o) const {
    if (d_ != o.d_) throw std::invalid_argument("PSeries: dimension mismatch");
    PSeries r(d_, merge_trunc(trunc_, o.trunc_));
    for (const auto& [a, ca] : c_) {
        for (const auto& [b, cb] : o.c_) {
            r.add_term(a + b, ca * cb);
        }
    }
    return r;
}

PSeries PSeries::derivative(int i) const {
    PSeries r(d_, trunc_);
    for (const auto& [a, c] : c_) {
        if (a[i] == 0) continue;
        r.add_term(a.lowered(i), Rat(c * a[i]));
    }
    return r;
}

PSeries PSeries::divided_derivative(const MultiIndex& alpha) const {
    PSeries r(d_, trunc_);
    for (const auto& [a, c] : c_) {
        // Divided coefficient: c * prod_i binom(a_i, alpha_i), supported
        // only where a >= alpha componentwise.
        bool ok = true;
        Rat factor(1);
        std::vector<uint32_t> shifted(d_);
        for (int i = 0; i < d_; ++i) {
            if (a[i] < alpha[i]) {
                ok = false;
                break;
            }
            Int binom;
            mpz_bin_uiui(binom.get_mpz_t(), a[i], alpha[i]);
            factor *= binom;
            shifted[i] = a[i] - alpha[i];
        }
        if (!ok) continue;
        r.add_term(MultiIndex(shifted), Rat(c * factor));
    }
    return r;
}

PSeries PSeries::taylor_shift(const std::vector<Rat>& a) const {
    if (static_cast<int>(a.size()) != d_)
        throw std::invalid_argument("taylor_shift: center dimension mismatch");
    PSeries cur = *this;
    for (int i = 0; i < d_; ++i) {
        if (a[i] == 0) continue;
        PSeries next(d_, trunc_);
        // Per-term binomial expansion of (x_i + a_i)^{e}.
        for (const auto& [al, c] : cur.c_) {
            uint32_t e = al[i];
            Rat pw(1);  // a_i^(e-k), built from k = e downwards
            for (int32_t k = e; k >= 0; --k) {
                Int binom;
                mpz_bin_uiui(binom.get_mpz_t(), e, k);
                std::vector<uint32_t> ev = al.entries();
                ev[i] = static_cast<uint32_t>(k);
                next.add_term(MultiIndex(std::move(ev)), c * binom * pw);
                if (k > 0) pw *= a[i];
            }
        }
        cur = std::move(next);
    }
    return cur;
}

Rat PSeries::eval(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != d_)
        throw std::invalid_argument("eval: point dimension mismatch");
    // Cached powers per variable.
    std::vector<std::vector<Rat>> pows(d_, {Rat(1)});
    Rat acc(0);
    for (const auto& [a, c] : c_) {
        Rat term = c;
        for (int i = 0; i < d_; ++i) {
            auto& pv = pows[i];
            while (pv.size() <= a[i]) pv.push_back(pv.back() * x[i]);
            term *= pv[a[i]];
        }
        acc += term;
    }
    return acc;
}

PSeries PSeries::truncated(uint32_t n) const {
    PSeries r(d_, n);
    for (const auto& [a, c] : c_) {
        if (a.total() <= n) r.c_.emplace(a, c);
    }
    return r;
}

PSeries PSeries::as_exact() const {
    PSeries r(d_);
    r.c_ = c_;
    return r;
}

std::string PSeries::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [a, c] : c_) {
        if (!s.empty()) s += " + ";
        s += rat_to_string(c) + "*x^" + a.str();
    }
    return s;
}

}  // namespace padic
