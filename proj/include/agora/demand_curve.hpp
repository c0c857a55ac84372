#ifndef AGORA_DEMAND_CURVE_HPP
#define AGORA_DEMAND_CURVE_HPP

#include <cstddef>
#include <vector>

namespace agora {

// A bid: a monotone correspondence from price to net quantity demanded
// (supply is negative demand). Piecewise linear between knots, constant
// beyond the endpoints, so aggregation is closed under addition and the
// clearing price of a sum of curves can be solved exactly per segment.
class DemandCurve {
public:
    struct Point {
        double price;
        double quantity;
    };

    static constexpr std::size_t kMaxPoints = 64;

    // The empty curve: zero quantity at every price.
    DemandCurve() = default;

    // Knots must have strictly increasing nonnegative prices and
    // non-increasing quantities; throws config_error otherwise.
    explicit DemandCurve(std::vector<Point> points);

    // Flat curve: `quantity` at every price.
    static DemandCurve constant(double quantity);

    // Evaluate at any price in [0, inf). Total function.
    double operator()(double price) const;

    bool is_zero() const;
    const std::vector<Point>& points() const { return points_; }

    // Max |q_a(p) - q_b(p)| over the union of both knot sets (piecewise
    // linear curves agree everywhere iff they agree at all knots).
    static double max_gap(const DemandCurve& a, const DemandCurve& b);

private:
    std::vector<Point> points_;
};

} // namespace agora

#endif
