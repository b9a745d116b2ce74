#pragma once

#include <utility>
#include <vector>

#include "etb/common/errors.hpp"

namespace etb {

// Piecewise-linear function of time with sorted knots. Queries before the
// first knot return the first value, past the last knot the last value.
class PiecewiseLinear {
public:
    PiecewiseLinear() = default;

    explicit PiecewiseLinear(std::vector<std::pair<double, double>> knots)
        : knots_(std::move(knots)) {
        if (knots_.empty()) throw ConfigError("schedule: needs at least one knot");
        for (std::size_t i = 1; i < knots_.size(); ++i) {
            if (knots_[i].first <= knots_[i - 1].first)
                throw ConfigError("schedule: knots must be strictly increasing in time");
        }
    }

    static PiecewiseLinear constant(double value) { return PiecewiseLinear({{0.0, value}}); }

    double operator()(double t) const {
        if (knots_.empty()) return 0.0;
        if (t <= knots_.front().first) return knots_.front().second;
        if (t >= knots_.back().first) return knots_.back().second;
        std::size_t i = 1;
        while (knots_[i].first < t) ++i;
        const auto& [t0, v0] = knots_[i - 1];
        const auto& [t1, v1] = knots_[i];
        const double a = (t - t0) / (t1 - t0);
        return v0 + a * (v1 - v0);
    }

    double final_value() const { return knots_.empty() ? 0.0 : knots_.back().second; }

    const std::vector<std::pair<double, double>>& knots() const { return knots_; }

private:
    std::vector<std::pair<double, double>> knots_;
};

}  // namespace etb
