#pragma once

#include "opmetric/convexity.hpp"

namespace opmetric {

// Hard cap on orbit sample size.
inline constexpr std::size_t kOrbitCap = 5000;

// Orbit points closer than this in hat coordinates are merged.
inline constexpr double kOrbitDedupTol = 1e-8;

// A biholomorphic self-map of the operator space, acting through the ball:
// phi(T) = unhat(g(hat(T))). Every such map is a d-isometry.
class HBiholomorphicMap {
public:
    explicit HBiholomorphicMap(BallAutomorphism action);

    const BallAutomorphism& action() const { return action_; }
    Index dim_h() const { return action_.dim_h(); }
    Index dim_k() const { return action_.dim_k(); }

private:
    BallAutomorphism action_;
};

ClosedOperator apply_map(const HBiholomorphicMap& g, const ClosedOperator& t);
HBiholomorphicMap inverse(const HBiholomorphicMap& g);
HBiholomorphicMap compose(const HBiholomorphicMap& g1, const HBiholomorphicMap& g2);

// A finitely generated group of d-isometries. Keeps the generators exactly
// as given; their inverses are adjoined for the fixed-point search.
class IsometryGroup {
public:
    explicit IsometryGroup(std::vector<HBiholomorphicMap> generators);

    const std::vector<HBiholomorphicMap>& generators() const { return generators_; }
    // generators followed by their inverses, in order.
    const std::vector<HBiholomorphicMap>& symmetrized() const { return symmetrized_; }
    Index dim_h() const { return generators_.front().dim_h(); }
    Index dim_k() const { return generators_.front().dim_k(); }

private:
    std::vector<HBiholomorphicMap> generators_;
    std::vector<HBiholomorphicMap> symmetrized_;
};

struct OrbitSample {
    std::vector<ClosedOperator> points;       // deduplicated, discovery order
    std::vector<double> diameter_by_depth;    // [k] = diameter of words of length <= k
    bool truncated;                           // hit kOrbitCap
};

// Breadth-first enumeration of generator words applied to start, up to the
// given word length. Deduplicates in hat coordinates at kOrbitDedupTol.
OrbitSample orbit(const IsometryGroup& group, const ClosedOperator& start, int depth);

// True when diameter_by_depth plateaus: the increase over the last quarter of
// depths stays below growth_tol. A heuristic, not a proof. The overload
// without growth_tol uses 1e-3 * (1 + final diameter).
bool is_orbit_bounded(const IsometryGroup& group, const ClosedOperator& start, int depth,
                      double growth_tol);
bool is_orbit_bounded(const IsometryGroup& group, const ClosedOperator& start,
                      int depth = 6);

struct FixedPointResult {
    ClosedOperator point;
    double residual; // max_i d(g_i(point), point) over the generators
    int iterations;
    bool converged;     // residual <= tol reached
    bool orbit_bounded; // heuristic flag from the seeding orbit sample
};

// Successive approximation of a common fixed point: seed at the Chebyshev
// center of a shallow orbit sample, then repeatedly replace P by the
// Chebyshev center of {P} united with its images under the generators and
// their inverses. Returns the best iterate even when not converged.
FixedPointResult find_fixed_point(const IsometryGroup& group, const ClosedOperator& start,
                                  double tol = 1e-8, int max_iter = 200);

} // namespace opmetric
