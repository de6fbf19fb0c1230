#ifndef PADIC_POINT_HPP
#define PADIC_POINT_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "padic/arith.hpp"
#include "padic/rational.hpp"
#include "padic/xrat.hpp"

namespace padic {

/// A point t_{a,r} of the closed unit polydisk: rational center a plus a
/// per-coordinate radius r_i = p^{q_i}, q_i <= 0. A radius-0 coordinate
/// (q_i = -inf) makes the coordinate an honest rational evaluation;
/// all radii 0 is a plain rational point.
struct GenericPoint {
    std::vector<Rat> center;
    std::vector<XRat> radius_log;

    static GenericPoint rational(std::vector<Rat> a) {
        GenericPoint xi;
        xi.radius_log.assign(a.size(), XRat::neg_inf());
        xi.center = std::move(a);
        return xi;
    }
    static GenericPoint at(std::vector<Rat> a, std::vector<Rat> q) {
        GenericPoint xi;
        xi.center = std::move(a);
        for (auto& qi : q) xi.radius_log.emplace_back(std::move(qi));
        return xi;
    }
    /// One-dimensional t_{a, p^q}.
    static GenericPoint disk_boundary(Rat a, Rat q) {
        return at({std::move(a)}, {std::move(q)});
    }

    int dim() const { return static_cast<int>(center.size()); }
    bool is_rational() const {
        for (const auto& q : radius_log)
            if (!q.is_neg_inf()) return false;
        return true;
    }

    /// Enforces membership of the underlying disk in the unit polydisk.
    void validate(unsigned long p) const {
        if (center.size() != radius_log.size())
            throw std::invalid_argument("GenericPoint: size mismatch");
        for (int i = 0; i < dim(); ++i) {
            if (radius_log[i] > XRat(0))
                throw std::invalid_argument("GenericPoint: radius exceeds 1");
            if (vp_rat(center[i], p) < LogVal(0))
                throw std::invalid_argument("GenericPoint: center outside unit polydisk");
        }
    }

    std::string str() const {
        std::string s = "t(";
        for (int i = 0; i < dim(); ++i) {
            if (i) s += ",";
            s += rat_to_string(center[i]);
        }
        s += ";";
        for (size_t i = 0; i < radius_log.size(); ++i) {
            if (i) s += ",";
            s += radius_log[i].str();
        }
        return s + ")";
    }
};

}  // namespace padic

#endif
