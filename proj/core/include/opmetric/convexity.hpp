#pragma once

#include "opmetric/operator_space.hpp"

namespace opmetric {

// Slack used when testing membership in a closed metric ball.
inline constexpr double kContainsTol = 1e-9;

struct ClosedBall {
    ClosedOperator center;
    double radius; // nonnegative

    ClosedBall(ClosedOperator c, double r);
};

// A finite intersection of closed metric balls in a fixed operator space.
class AdmissibleSet {
public:
    explicit AdmissibleSet(std::vector<ClosedBall> balls);

    const std::vector<ClosedBall>& balls() const { return balls_; }

private:
    std::vector<ClosedBall> balls_;
};

// A finite list of points in a fixed operator space; order matters for the
// deterministic tie-breaks below.
class FiniteConfiguration {
public:
    explicit FiniteConfiguration(std::vector<ClosedOperator> points);

    const std::vector<ClosedOperator>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

private:
    std::vector<ClosedOperator> points_;
};

// d(x, c_i) <= r_i + kContainsTol for every ball of the set.
bool contains(const AdmissibleSet& set, const ClosedOperator& x);

// The metric ball of radius r about 0 maps to the norm ball of radius tanh(r)
// in hat coordinates: d(T, 0) <= r iff ||hat(T)|| <= tanh(r).
double hat_ball_radius(double r);

// max_i d(a, p_i).
double radius_at(const ClosedOperator& a, const FiniteConfiguration& config);

// max_{i<j} d(p_i, p_j); 0 for a single point.
double diameter(const FiniteConfiguration& config);

struct ChebyshevResult {
    ClosedOperator center;
    double radius;
    int iterations;
    bool converged;
};

// Farthest-point descent seeded at the barycenter: step toward the farthest
// configuration point (ties to the smallest index) by fraction 1/(k+2) at
// iteration k; stop once the best radius has not improved by tol for 10
// consecutive steps, returning the best center seen. The result never
// exceeds the seed radius.
ChebyshevResult chebyshev_center(const FiniteConfiguration& config, double tol = 1e-7,
                                 int max_iter = 500);

struct NondiametralWitness {
    ClosedOperator point;
    double margin; // diameter(config) - radius_at(point, config), positive
};

// A point strictly closer to every configuration point than the diameter;
// witnesses normal structure. DegenerateConfiguration if the diameter is
// below 1e-9.
NondiametralWitness find_nondiametral(const FiniteConfiguration& config);

} // namespace opmetric
