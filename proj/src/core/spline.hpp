#pragma once
#include <vector>

namespace gaborlab {

/// Natural cubic spline through strictly increasing knots, evaluating to
/// zero outside the knot range. Uniform knot spacing takes an O(1) lookup
/// path; arbitrary knots fall back to binary search.
class CubicSpline {
public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> xs, std::vector<double> ys);

    double operator()(double x) const;

    bool valid() const { return xs_.size() >= 2; }

private:
    std::vector<double> xs_, ys_, m2_; // m2_: second derivatives at knots
    bool uniform_ = false;
    double x0_ = 0.0, h_ = 1.0;
};

} // namespace gaborlab
