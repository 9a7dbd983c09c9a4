#include "opmetric/convexity.hpp"

#include <cmath>
#include <utility>

namespace opmetric {

namespace {

void require_shared_space(const char* what, const ClosedOperator& first,
                          const ClosedOperator& other) {
    if (first.dim_h() != other.dim_h() || first.dim_k() != other.dim_k()) {
        throw DimensionMismatch(std::string(what) +
                                ": entries live in different operator spaces");
    }
}

} // namespace

ClosedBall::ClosedBall(ClosedOperator c, double r) : center(std::move(c)), radius(r) {
    if (!(radius >= 0.0)) {
        throw InputError("ball radius must be nonnegative");
    }
}

AdmissibleSet::AdmissibleSet(std::vector<ClosedBall> balls) : balls_(std::move(balls)) {
    if (balls_.empty()) {
        throw InputError("admissible set needs at least one ball");
    }
    for (const ClosedBall& b : balls_) {
        require_shared_space("admissible set", balls_.front().center, b.center);
    }
}

FiniteConfiguration::FiniteConfiguration(std::vector<ClosedOperator> points)
    : points_(std::move(points)) {
    if (points_.empty()) {
        throw InputError("configuration needs at least one point");
    }
    for (const ClosedOperator& p : points_) {
        require_shared_space("configuration", points_.front(), p);
    }
}

bool contains(const AdmissibleSet& set, const ClosedOperator& x) {
    for (const ClosedBall& b : set.balls()) {
        if (distance(x, b.center) > b.radius + kContainsTol) {
            return false;
        }
    }
    return true;
}

double hat_ball_radius(double r) {
    if (!(r >= 0.0)) {
        throw InputError("ball radius must be nonnegative");
    }
    return std::tanh(r);
}

double radius_at(const ClosedOperator& a, const FiniteConfiguration& config) {
    require_shared_space("radius_at", config.points().front(), a);
    double worst = 0.0;
    for (const ClosedOperator& p : config.points()) {
        worst = std::max(worst, distance(a, p));
    }
    return worst;
}

double diameter(const FiniteConfiguration& config) {
    const std::vector<ClosedOperator>& pts = config.points();
    double worst = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            worst = std::max(worst, distance(pts[i], pts[j]));
        }
    }
    return worst;
}

ChebyshevResult chebyshev_center(const FiniteConfiguration& config, double tol,
                                 int max_iter) {
    if (!(tol > 0.0)) {
        throw InputError("chebyshev_center tolerance must be positive");
    }
    if (max_iter < 1) {
        throw InputError("chebyshev_center needs at least one iteration");
    }

    ClosedOperator current = barycenter(config.points());
    ClosedOperator best = current;
    double best_radius = radius_at(current, config);

    int iterations = 0;
    int stalled = 0;
    while (iterations < max_iter && stalled < 10) {
        std::size_t farthest = 0;
        double farthest_dist = -1.0;
        for (std::size_t i = 0; i < config.size(); ++i) {
            const double d = distance(current, config.points()[i]);
            if (d > farthest_dist) {
                farthest_dist = d;
                farthest = i;
            }
        }

        const double step = 1.0 / static_cast<double>(iterations + 2);
        current = geodesic_point(current, config.points()[farthest], step);
        const double radius = radius_at(current, config);
        if (radius < best_radius - tol) {
            best_radius = radius;
            best = current;
            stalled = 0;
        } else {
            if (radius < best_radius) {
                best_radius = radius;
                best = current;
            }
            ++stalled;
        }
        ++iterations;
    }

    return {std::move(best), best_radius, iterations, stalled >= 10};
}

NondiametralWitness find_nondiametral(const FiniteConfiguration& config) {
    const double diam = diameter(config);
    if (diam <= 1e-9) {
        throw DegenerateConfiguration(
            "configuration has (near-)zero diameter, no nondiametral point exists");
    }
    const ChebyshevResult cheb = chebyshev_center(config);
    return {cheb.center, diam - cheb.radius};
}

} // namespace opmetric
