#include "opmetric/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace opmetric {

namespace {

bool plateaus(const std::vector<double>& diam_by_depth, double growth_tol) {
    const std::size_t depth = diam_by_depth.size() - 1;
    const std::size_t quarter = std::max<std::size_t>(1, depth / 4);
    return diam_by_depth[depth] - diam_by_depth[depth - quarter] < growth_tol;
}

void require_acts_on(const IsometryGroup& group, const ClosedOperator& t) {
    if (group.dim_h() != t.dim_h() || group.dim_k() != t.dim_k()) {
        throw DimensionMismatch("group does not act on the operator's space");
    }
}

} // namespace

HBiholomorphicMap::HBiholomorphicMap(BallAutomorphism action) : action_(std::move(action)) {}

ClosedOperator apply_map(const HBiholomorphicMap& g, const ClosedOperator& t) {
    return unhat(apply(g.action(), hat(t)));
}

HBiholomorphicMap inverse(const HBiholomorphicMap& g) {
    return HBiholomorphicMap(inverse(g.action()));
}

HBiholomorphicMap compose(const HBiholomorphicMap& g1, const HBiholomorphicMap& g2) {
    return HBiholomorphicMap(compose(g1.action(), g2.action()));
}

IsometryGroup::IsometryGroup(std::vector<HBiholomorphicMap> generators)
    : generators_(std::move(generators)) {
    if (generators_.empty()) {
        throw InputError("isometry group needs at least one generator");
    }
    for (const HBiholomorphicMap& g : generators_) {
        if (g.dim_h() != generators_.front().dim_h() ||
            g.dim_k() != generators_.front().dim_k()) {
            throw DimensionMismatch("generators act on different spaces");
        }
    }
    symmetrized_ = generators_;
    for (const HBiholomorphicMap& g : generators_) {
        symmetrized_.push_back(inverse(g));
    }
}

OrbitSample orbit(const IsometryGroup& group, const ClosedOperator& start, int depth) {
    if (depth < 0) {
        throw InputError("orbit depth must be nonnegative");
    }
    require_acts_on(group, start);

    OrbitSample sample;
    sample.truncated = false;
    sample.points.push_back(start);
    std::vector<BallPoint> hats;
    hats.push_back(hat(start));
    sample.diameter_by_depth.push_back(0.0);

    double diam = 0.0;
    std::vector<std::size_t> frontier = {0};
    for (int level = 1; level <= depth; ++level) {
        std::vector<std::size_t> next;
        for (std::size_t idx : frontier) {
            for (const HBiholomorphicMap& gen : group.generators()) {
                const ClosedOperator image = apply_map(gen, sample.points[idx]);
                const BallPoint image_hat = hat(image);
                bool known = false;
                for (const BallPoint& h : hats) {
                    if (op_norm(image_hat.mat() - h.mat()) <= kOrbitDedupTol) {
                        known = true;
                        break;
                    }
                }
                if (known) {
                    continue;
                }
                if (sample.points.size() >= kOrbitCap) {
                    sample.truncated = true;
                    break;
                }
                for (const BallPoint& h : hats) {
                    diam = std::max(diam, kobayashi(h, image_hat));
                }
                sample.points.push_back(image);
                hats.push_back(image_hat);
                next.push_back(sample.points.size() - 1);
            }
            if (sample.truncated) {
                break;
            }
        }
        sample.diameter_by_depth.push_back(diam);
        if (sample.truncated) {
            break;
        }
        frontier = std::move(next);
        if (frontier.empty()) {
            // The orbit closed up; deeper words revisit known points.
            while (sample.diameter_by_depth.size() < static_cast<std::size_t>(depth) + 1) {
                sample.diameter_by_depth.push_back(diam);
            }
            break;
        }
    }
    return sample;
}

bool is_orbit_bounded(const IsometryGroup& group, const ClosedOperator& start, int depth,
                      double growth_tol) {
    if (depth < 4) {
        throw InputError("boundedness heuristic needs depth >= 4");
    }
    if (!(growth_tol > 0.0)) {
        throw InputError("growth tolerance must be positive");
    }
    const OrbitSample sample = orbit(group, start, depth);
    if (sample.truncated) {
        return false;
    }
    return plateaus(sample.diameter_by_depth, growth_tol);
}

bool is_orbit_bounded(const IsometryGroup& group, const ClosedOperator& start, int depth) {
    if (depth < 4) {
        throw InputError("boundedness heuristic needs depth >= 4");
    }
    const OrbitSample sample = orbit(group, start, depth);
    if (sample.truncated) {
        return false;
    }
    const double growth_tol = 1e-3 * (1.0 + sample.diameter_by_depth.back());
    return plateaus(sample.diameter_by_depth, growth_tol);
}

FixedPointResult find_fixed_point(const IsometryGroup& group, const ClosedOperator& start,
                                  double tol, int max_iter) {
    if (!(tol > 0.0)) {
        throw InputError("fixed-point tolerance must be positive");
    }
    if (max_iter < 1) {
        throw InputError("fixed-point search needs at least one iteration");
    }
    require_acts_on(group, start);

    const int seed_depth = 4;
    const OrbitSample sample = orbit(group, start, seed_depth);
    const bool bounded =
        !sample.truncated &&
        plateaus(sample.diameter_by_depth, 1e-3 * (1.0 + sample.diameter_by_depth.back()));

    ClosedOperator current =
        sample.points.size() == 1
            ? sample.points.front()
            : chebyshev_center(FiniteConfiguration(sample.points), 1e-9, 80).center;

    ClosedOperator best = current;
    double best_residual = std::numeric_limits<double>::infinity();
    int iterations = 0;
    for (; iterations < max_iter; ++iterations) {
        std::vector<ClosedOperator> cloud;
        cloud.reserve(1 + group.symmetrized().size());
        cloud.push_back(current);
        double residual = 0.0;
        for (const HBiholomorphicMap& g : group.generators()) {
            ClosedOperator image = apply_map(g, current);
            residual = std::max(residual, distance(image, current));
            cloud.push_back(std::move(image));
        }
        for (std::size_t i = group.generators().size(); i < group.symmetrized().size(); ++i) {
            cloud.push_back(apply_map(group.symmetrized()[i], current));
        }

        if (residual < best_residual) {
            best = current;
            best_residual = residual;
        }
        if (residual <= tol) {
            return {std::move(current), residual, iterations, true, bounded};
        }

        const double inner_tol = std::max(1e-13, residual * 1e-2);
        current = chebyshev_center(FiniteConfiguration(std::move(cloud)), inner_tol, 60).center;
    }
    return {std::move(best), best_residual, iterations, false, bounded};
}

} // namespace opmetric
