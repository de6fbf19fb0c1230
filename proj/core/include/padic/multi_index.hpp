#ifndef PADIC_MULTI_INDEX_HPP
#define PADIC_MULTI_INDEX_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace padic {

/// Exponent vector of a monomial in d variables. total() is the sum of
/// entries (the paper-style |.|_inf degree used throughout is a sum).
class MultiIndex {
  public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<uint32_t> e) : e_(std::move(e)) {}
    static MultiIndex zero(int d) { return MultiIndex(std::vector<uint32_t>(d, 0)); }
    static MultiIndex unit(int d, int i) {
        std::vector<uint32_t> e(d, 0);
        e[i] = 1;
        return MultiIndex(std::move(e));
    }

    int dim() const { return static_cast<int>(e_.size()); }
    uint32_t operator[](int i) const { return e_[i]; }
    const std::vector<uint32_t>& entries() const { return e_; }

    uint32_t total() const {
        return std::accumulate(e_.begin(), e_.end(), uint32_t{0});
    }

    MultiIndex bumped(int i, int by = 1) const {
        auto e = e_;
        e[i] += by;
        return MultiIndex(std::move(e));
    }
    /// Decrement entry i; entry must be positive.
    MultiIndex lowered(int i) const {
        auto e = e_;
        --e[i];
        return MultiIndex(std::move(e));
    }

    MultiIndex operator+(const MultiIndex& o) const {
        auto e = e_;
        for (int i = 0; i < dim(); ++i) e[i] += o.e_[i];
        return MultiIndex(std::move(e));
    }

    bool operator==(const MultiIndex& o) const { return e_ == o.e_; }
    bool operator!=(const MultiIndex& o) const { return e_ != o.e_; }
    /// Graded-lex order; keeps map iteration sorted by total degree.
    bool operator<(const MultiIndex& o) const {
        uint32_t ta = total(), tb = o.total();
        if (ta != tb) return ta < tb;
        return e_ < o.e_;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < dim(); ++i) {
            if (i) s += ",";
            s += std::to_string(e_[i]);
        }
        return s + ")";
    }

  private:
    std::vector<uint32_t> e_;
};

}  // namespace padic

#endif
