#include "opmetric/checks.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <numbers>

#include "opmetric/convexity.hpp"
#include "opmetric/dynamics.hpp"
#include "opmetric/oracles.hpp"

namespace opmetric {

namespace {

struct Shape {
    Index dim_h;
    Index dim_k;
};

Shape pick_shape(SeededRng& rng) {
    static constexpr std::array<Shape, 6> kShapes{
        {{1, 1}, {2, 2}, {3, 2}, {2, 3}, {4, 3}, {3, 1}}};
    return kShapes[rng.next_u64() % kShapes.size()];
}

// A unitary with eigenvalue phases bounded away from 0, conjugated by a Haar
// unitary. Rotation checks need a spectral gap to contract reliably.
ComplexMatrix strong_rotation(SeededRng& rng, Index dim) {
    const ComplexMatrix basis = random_unitary(rng, dim);
    ComplexMatrix phases = ComplexMatrix::Zero(dim, dim);
    for (Index i = 0; i < dim; ++i) {
        const double angle = 0.8 + 2.0 * rng.uniform();
        phases(i, i) = Complex(std::cos(angle), std::sin(angle));
    }
    return basis * phases * basis.adjoint();
}

struct Check {
    CheckSuite suite;
    std::string name;
    // Returns the worst defect observed; may flag a hard violation (e.g. a
    // boolean property failing) by reporting an arbitrarily large defect.
    std::function<double(SeededRng&, int)> run;
    double tolerance;
};

double check_symmetry_identity(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        const ClosedOperator t = random_operator(rng, sh.dim_h, sh.dim_k, 0.85);
        const ClosedOperator s = random_operator(rng, sh.dim_h, sh.dim_k, 0.85);
        worst = std::max(worst, std::abs(distance(t, s) - distance(s, t)));
        worst = std::max(worst, distance(t, t));
    }
    return worst;
}

double check_triangle(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        const ClosedOperator t = random_operator(rng, sh.dim_h, sh.dim_k, 0.85);
        const ClosedOperator s = random_operator(rng, sh.dim_h, sh.dim_k, 0.85);
        const ClosedOperator u = random_operator(rng, sh.dim_h, sh.dim_k, 0.85);
        worst = std::max(worst, distance(t, u) - distance(t, s) - distance(s, u));
    }
    return worst;
}

double check_formula_agreement(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        const ClosedOperator t = random_operator(rng, sh.dim_h, sh.dim_k, 0.85);
        const ClosedOperator s = random_operator(rng, sh.dim_h, sh.dim_k, 0.85);
        worst = std::max(worst,
                         std::abs(distance_via_factors(t, s) - distance_via_ball(t, s)));
    }
    return worst;
}

double check_scalar_oracle(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const ClosedOperator t = random_operator(rng, 1, 1, 0.9);
        const ClosedOperator s = random_operator(rng, 1, 1, 0.9);
        const double expected = scalar_distance(t.mat()(0, 0), s.mat()(0, 0));
        worst = std::max(worst, std::abs(distance(t, s) - expected));
    }
    return worst;
}

double check_diagonal_oracle(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Index dim = 1 + static_cast<Index>(rng.next_u64() % 3);
        std::vector<Complex> td(dim);
        std::vector<Complex> sd(dim);
        ComplexMatrix tm = ComplexMatrix::Zero(dim, dim);
        ComplexMatrix sm = ComplexMatrix::Zero(dim, dim);
        for (Index j = 0; j < dim; ++j) {
            td[j] = 2.0 * rng.complex_normal();
            sd[j] = 2.0 * rng.complex_normal();
            tm(j, j) = td[j];
            sm(j, j) = sd[j];
        }
        const double expected = diagonal_distance(td, sd);
        worst = std::max(worst,
                         std::abs(distance(ClosedOperator(tm), ClosedOperator(sm)) - expected));
    }
    return worst;
}

double check_hat_roundtrip(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        const BallPoint a = random_ball_point(rng, sh.dim_h, sh.dim_k, 0.9);
        worst = std::max(worst, op_norm(hat(unhat(a)).mat() - a.mat()));
        const ClosedOperator t = random_operator(rng, sh.dim_h, sh.dim_k, 0.9);
        worst = std::max(worst, op_norm(unhat(hat(t)).mat() - t.mat()));
    }
    return worst;
}

double check_transport_identities(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        const ClosedOperator t = random_operator(rng, sh.dim_h, sh.dim_k, 0.85);
        const BallPoint x = random_ball_point(rng, sh.dim_h, sh.dim_k, 0.85);
        worst = std::max(worst, op_norm(transport(t, hat(t)).mat()));
        worst = std::max(
            worst, op_norm(transport(t, BallPoint::zero(sh.dim_h, sh.dim_k)).mat() +
                           hat(t).mat()));
        worst = std::max(worst,
                         op_norm(transport(negated(t), transport(t, x)).mat() - x.mat()));
    }
    return worst;
}

double check_geodesic_parametrization(SeededRng& rng, int samples) {
    static constexpr std::array<double, 5> kGrid{0.0, 0.25, 0.5, 0.75, 1.0};
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        const ClosedOperator t = random_operator(rng, sh.dim_h, sh.dim_k, 0.8);
        const ClosedOperator s = random_operator(rng, sh.dim_h, sh.dim_k, 0.8);
        const double d = distance(t, s);
        std::vector<ClosedOperator> pts;
        pts.reserve(kGrid.size());
        for (double u : kGrid) {
            pts.push_back(geodesic_point(t, s, u));
        }
        for (std::size_t a = 0; a < kGrid.size(); ++a) {
            for (std::size_t b = a + 1; b < kGrid.size(); ++b) {
                const double expected = (kGrid[b] - kGrid[a]) * d;
                worst = std::max(worst, std::abs(distance(pts[a], pts[b]) - expected));
            }
        }
    }
    return worst;
}

double check_midpoint_betweenness(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        const ClosedOperator t = random_operator(rng, sh.dim_h, sh.dim_k, 0.85);
        const ClosedOperator s = random_operator(rng, sh.dim_h, sh.dim_k, 0.85);
        const ClosedOperator q = midpoint(t, s);
        const double d = distance(t, s);
        worst = std::max(worst, std::abs(distance(t, q) - d / 2.0));
        worst = std::max(worst, std::abs(distance(t, q) + distance(q, s) - d));
    }
    return worst;
}

double check_doubling(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        const ClosedOperator x = random_operator(rng, sh.dim_h, sh.dim_k, 0.85);
        const ClosedOperator zero = ClosedOperator::zero(sh.dim_h, sh.dim_k);
        worst = std::max(worst,
                         std::abs(distance(x, negated(x)) - 2.0 * distance(x, zero)));
    }
    return worst;
}

double check_barycenter_bound(SeededRng& rng, int samples) {
    static constexpr std::array<std::size_t, 3> kCounts{2, 4, 8};
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        const std::size_t count = kCounts[static_cast<std::size_t>(i) % kCounts.size()];
        std::vector<ClosedOperator> pts;
        pts.reserve(count);
        for (std::size_t j = 0; j < count; ++j) {
            pts.push_back(random_operator(rng, sh.dim_h, sh.dim_k, 0.8));
        }
        const ClosedOperator q = barycenter(pts);
        const ClosedOperator probe = random_operator(rng, sh.dim_h, sh.dim_k, 0.8);
        double mean = 0.0;
        for (const ClosedOperator& p : pts) {
            mean += distance(p, probe);
        }
        mean /= static_cast<double>(count);
        worst = std::max(worst, distance(q, probe) - mean);
    }
    return worst;
}

double check_poincare_matches_kobayashi(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const BallPoint a = random_ball_point(rng, 1, 1, 0.95);
        const BallPoint b = random_ball_point(rng, 1, 1, 0.95);
        const double expected = poincare(a.mat()(0, 0), b.mat()(0, 0));
        worst = std::max(worst, std::abs(kobayashi(a, b) - expected));
    }
    return worst;
}

double check_automorphism_isometry(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        const BallAutomorphism g = random_automorphism(rng, sh.dim_h, sh.dim_k);
        const BallPoint x = random_ball_point(rng, sh.dim_h, sh.dim_k, 0.85);
        const BallPoint y = random_ball_point(rng, sh.dim_h, sh.dim_k, 0.85);
        worst = std::max(worst,
                         std::abs(kobayashi(apply(g, x), apply(g, y)) - kobayashi(x, y)));
    }
    return worst;
}

double check_compose_matches_action(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        const BallAutomorphism g1 = random_automorphism(rng, sh.dim_h, sh.dim_k, 0.6);
        const BallAutomorphism g2 = random_automorphism(rng, sh.dim_h, sh.dim_k, 0.6);
        const BallAutomorphism g12 = compose(g1, g2);
        const BallPoint z = random_ball_point(rng, sh.dim_h, sh.dim_k, 0.8);
        worst = std::max(worst,
                         op_norm(apply(g12, z).mat() - apply(g1, apply(g2, z)).mat()));
    }
    return worst;
}

double check_inverse_roundtrip(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        const BallAutomorphism g = random_automorphism(rng, sh.dim_h, sh.dim_k);
        const BallPoint z = random_ball_point(rng, sh.dim_h, sh.dim_k, 0.85);
        worst = std::max(worst, op_norm(apply(inverse(g), apply(g, z)).mat() - z.mat()));
        worst = std::max(worst, op_norm(apply(g, apply(inverse(g), z)).mat() - z.mat()));
    }
    return worst;
}

double check_kobayashi_radial(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        const BallPoint x = random_ball_point(rng, sh.dim_h, sh.dim_k, 0.95);
        const BallPoint zero = BallPoint::zero(sh.dim_h, sh.dim_k);
        worst = std::max(worst,
                         std::abs(kobayashi(zero, x) - std::atanh(op_norm(x.mat()))));
    }
    return worst;
}

double check_ball_triangle(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        const BallPoint x = random_ball_point(rng, sh.dim_h, sh.dim_k, 0.9);
        const BallPoint y = random_ball_point(rng, sh.dim_h, sh.dim_k, 0.9);
        const BallPoint z = random_ball_point(rng, sh.dim_h, sh.dim_k, 0.9);
        worst = std::max(worst, kobayashi(x, z) - kobayashi(x, y) - kobayashi(y, z));
    }
    return worst;
}

double check_hat_ball_law(SeededRng& rng, int samples) {
    static constexpr std::array<double, 3> kRadii{0.25, 0.5, 1.0};
    static constexpr std::array<double, 6> kOffsets{-0.1, -1e-3, -1e-5, 1e-5, 1e-3, 0.1};
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        const double r = kRadii[static_cast<std::size_t>(i) % kRadii.size()];
        const ClosedOperator zero = ClosedOperator::zero(sh.dim_h, sh.dim_k);
        for (double offset : kOffsets) {
            const double target = std::tanh(r) * (1.0 + offset);
            ComplexMatrix g = random_gaussian_matrix(rng, sh.dim_h, sh.dim_k);
            g *= target / op_norm(g);
            const ClosedOperator t = unhat(BallPoint(g));
            const double hat_norm = op_norm(hat(t).mat());
            const double d = distance(t, zero);
            worst = std::max(worst, std::abs(std::atanh(hat_norm) - d));
            const bool inside_metric = d <= r;
            const bool inside_hat = hat_norm <= hat_ball_radius(r);
            if (inside_metric != inside_hat) {
                return 1.0; // equivalence broken outright
            }
        }
    }
    return worst;
}

double check_radius_diameter_consistency(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        const std::size_t count = 3 + rng.next_u64() % 3;
        std::vector<ClosedOperator> pts;
        for (std::size_t j = 0; j < count; ++j) {
            pts.push_back(random_operator(rng, sh.dim_h, sh.dim_k, 0.85));
        }
        const FiniteConfiguration config(pts);
        double from_radii = 0.0;
        for (const ClosedOperator& p : pts) {
            from_radii = std::max(from_radii, radius_at(p, config));
        }
        worst = std::max(worst, std::abs(from_radii - diameter(config)));
    }
    return worst;
}

double check_contains_membership(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        std::vector<ClosedOperator> pts;
        for (std::size_t j = 0; j < 3; ++j) {
            pts.push_back(random_operator(rng, sh.dim_h, sh.dim_k, 0.8));
        }
        const ClosedOperator center = barycenter(pts);
        std::vector<ClosedBall> exact;
        std::vector<ClosedBall> shrunk;
        double largest = 0.0;
        for (const ClosedOperator& p : pts) {
            const double d = distance(center, p);
            largest = std::max(largest, d);
            exact.emplace_back(p, d);
            shrunk.emplace_back(p, std::max(0.0, d - 1e-6));
        }
        if (!contains(AdmissibleSet(exact), center)) {
            return 1.0;
        }
        if (largest > 1e-5 && contains(AdmissibleSet(shrunk), center)) {
            return 1.0;
        }
    }
    return worst;
}

double check_chebyshev_two_point(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        const ClosedOperator t = random_operator(rng, sh.dim_h, sh.dim_k, 0.85);
        const ClosedOperator s = random_operator(rng, sh.dim_h, sh.dim_k, 0.85);
        const FiniteConfiguration config({t, s});
        const ChebyshevResult result = chebyshev_center(config);
        worst = std::max(worst, std::abs(result.radius - distance(t, s) / 2.0));
    }
    return worst;
}

double check_chebyshev_vs_seed(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        const std::size_t count = 2 + rng.next_u64() % 4;
        std::vector<ClosedOperator> pts;
        for (std::size_t j = 0; j < count; ++j) {
            pts.push_back(random_operator(rng, sh.dim_h, sh.dim_k, 0.85));
        }
        const FiniteConfiguration config(pts);
        const double seed_radius = radius_at(barycenter(pts), config);
        const ChebyshevResult result = chebyshev_center(config);
        worst = std::max(worst, result.radius - seed_radius);
    }
    return worst;
}

double check_nondiametral_margin(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        const std::size_t count = 2 + rng.next_u64() % 4;
        std::vector<ClosedOperator> pts;
        for (std::size_t j = 0; j < count; ++j) {
            pts.push_back(random_operator(rng, sh.dim_h, sh.dim_k, 0.85));
        }
        const FiniteConfiguration config(pts);
        const NondiametralWitness witness = find_nondiametral(config);
        if (!(witness.margin > 0.0)) {
            return 1.0;
        }
        const double diam = diameter(config);
        worst = std::max(worst, radius_at(witness.point, config) - 0.999 * diam);
    }
    return worst;
}

double check_apply_commutes_with_hat(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        const HBiholomorphicMap g(random_automorphism(rng, sh.dim_h, sh.dim_k));
        const ClosedOperator t = random_operator(rng, sh.dim_h, sh.dim_k, 0.85);
        worst = std::max(worst, op_norm(hat(apply_map(g, t)).mat() -
                                        apply(g.action(), hat(t)).mat()));
    }
    return worst;
}

double check_map_isometry(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        const HBiholomorphicMap g(random_automorphism(rng, sh.dim_h, sh.dim_k));
        const ClosedOperator t = random_operator(rng, sh.dim_h, sh.dim_k, 0.85);
        const ClosedOperator s = random_operator(rng, sh.dim_h, sh.dim_k, 0.85);
        worst = std::max(worst, std::abs(distance(apply_map(g, t), apply_map(g, s)) -
                                         distance(t, s)));
    }
    return worst;
}

double check_rotation_orbit_diameter(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        std::vector<HBiholomorphicMap> gens;
        gens.emplace_back(BallAutomorphism(BallPoint::zero(sh.dim_h, sh.dim_k),
                                           random_unitary(rng, sh.dim_h),
                                           random_unitary(rng, sh.dim_k)));
        const IsometryGroup group(gens);
        const ClosedOperator t0 = random_operator(rng, sh.dim_h, sh.dim_k, 0.8);
        const OrbitSample sample = orbit(group, t0, 6);
        const double bound =
            2.0 * distance(t0, ClosedOperator::zero(sh.dim_h, sh.dim_k));
        worst = std::max(worst, sample.diameter_by_depth.back() - bound);
    }
    return worst;
}

double check_finite_rotation_flagged_bounded(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        // Order-5 rotation: the orbit closes, so the diameter must plateau.
        const ComplexMatrix basis_u = random_unitary(rng, sh.dim_h);
        const ComplexMatrix basis_v = random_unitary(rng, sh.dim_k);
        ComplexMatrix pu = ComplexMatrix::Zero(sh.dim_h, sh.dim_h);
        ComplexMatrix pv = ComplexMatrix::Zero(sh.dim_k, sh.dim_k);
        for (Index j = 0; j < sh.dim_h; ++j) {
            const double angle = 2.0 * std::numbers::pi *
                                 static_cast<double>(1 + rng.next_u64() % 4) / 5.0;
            pu(j, j) = Complex(std::cos(angle), std::sin(angle));
        }
        for (Index j = 0; j < sh.dim_k; ++j) {
            const double angle = 2.0 * std::numbers::pi *
                                 static_cast<double>(1 + rng.next_u64() % 4) / 5.0;
            pv(j, j) = Complex(std::cos(angle), std::sin(angle));
        }
        std::vector<HBiholomorphicMap> gens;
        gens.emplace_back(BallAutomorphism(BallPoint::zero(sh.dim_h, sh.dim_k),
                                           basis_u * pu * basis_u.adjoint(),
                                           basis_v * pv * basis_v.adjoint()));
        const IsometryGroup group(gens);
        const ClosedOperator t0 = random_operator(rng, sh.dim_h, sh.dim_k, 0.8);
        if (!is_orbit_bounded(group, t0, 8)) {
            return 1.0;
        }
    }
    return worst;
}

double check_translation_growth(SeededRng& rng, int samples) {
    static constexpr std::array<double, 3> kShifts{0.3, 0.5, 0.7};
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double shift = kShifts[static_cast<std::size_t>(i) % kShifts.size()];
        (void)rng;
        ComplexMatrix a(1, 1);
        a(0, 0) = shift;
        std::vector<HBiholomorphicMap> gens;
        gens.emplace_back(BallAutomorphism::moebius(BallPoint(a)));
        const IsometryGroup group(gens);
        const ClosedOperator t0 = ClosedOperator::zero(1, 1);
        const OrbitSample sample = orbit(group, t0, 6);
        const double step = std::atanh(shift);
        for (std::size_t k = 1; k < sample.diameter_by_depth.size(); ++k) {
            worst = std::max(worst, std::abs(sample.diameter_by_depth[k] -
                                             sample.diameter_by_depth[k - 1] - step));
        }
        if (is_orbit_bounded(group, t0, 6)) {
            return 1.0; // linear growth must be flagged unbounded
        }
    }
    return worst;
}

double check_fixed_point_rotation(SeededRng& rng, int samples) {
    double worst = 0.0;
    const int instances = std::max(1, samples / 10);
    for (int i = 0; i < instances; ++i) {
        const Shape sh = pick_shape(rng);
        std::vector<HBiholomorphicMap> gens;
        const std::size_t count = 1 + rng.next_u64() % 2;
        for (std::size_t j = 0; j < count; ++j) {
            gens.emplace_back(BallAutomorphism(BallPoint::zero(sh.dim_h, sh.dim_k),
                                               strong_rotation(rng, sh.dim_h),
                                               strong_rotation(rng, sh.dim_k)));
        }
        const IsometryGroup group(gens);
        const ClosedOperator t0 = random_operator(rng, sh.dim_h, sh.dim_k, 0.7);
        const FixedPointResult result = find_fixed_point(group, t0, 1e-7, 300);
        worst = std::max(worst, result.residual);
        worst = std::max(worst, op_norm(hat(result.point).mat()));
    }
    return worst;
}

double check_fixed_point_conjugated(SeededRng& rng, int samples) {
    double worst = 0.0;
    const int instances = std::max(1, samples / 10);
    for (int i = 0; i < instances; ++i) {
        const Shape sh = pick_shape(rng);
        const BallPoint anchor = random_ball_point(rng, sh.dim_h, sh.dim_k, 0.5);
        const HBiholomorphicMap h(BallAutomorphism::moebius(anchor));
        std::vector<HBiholomorphicMap> gens;
        const std::size_t count = 1 + rng.next_u64() % 2;
        for (std::size_t j = 0; j < count; ++j) {
            const HBiholomorphicMap rotation(
                BallAutomorphism(BallPoint::zero(sh.dim_h, sh.dim_k),
                                 strong_rotation(rng, sh.dim_h),
                                 strong_rotation(rng, sh.dim_k)));
            gens.push_back(compose(h, compose(rotation, inverse(h))));
        }
        const IsometryGroup group(gens);
        const ClosedOperator planted = unhat(anchor);
        const ClosedOperator t0 = random_operator(rng, sh.dim_h, sh.dim_k, 0.7);
        const FixedPointResult result = find_fixed_point(group, t0, 1e-7, 300);
        worst = std::max(worst, distance(result.point, planted));
    }
    return worst;
}

double check_conjugation_residual_invariance(SeededRng& rng, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Shape sh = pick_shape(rng);
        const HBiholomorphicMap g(random_automorphism(rng, sh.dim_h, sh.dim_k, 0.5));
        const HBiholomorphicMap h(random_automorphism(rng, sh.dim_h, sh.dim_k, 0.5));
        const ClosedOperator p = random_operator(rng, sh.dim_h, sh.dim_k, 0.7);
        const HBiholomorphicMap conjugated = compose(h, compose(g, inverse(h)));
        const double residual = distance(apply_map(g, p), p);
        const ClosedOperator hp = apply_map(h, p);
        const double conjugated_residual = distance(apply_map(conjugated, hp), hp);
        worst = std::max(worst, std::abs(conjugated_residual - residual));
    }
    return worst;
}

const std::vector<Check>& registry() {
    static const std::vector<Check> checks = {
        {CheckSuite::Metric, "metric.symmetry_identity", check_symmetry_identity, 1e-9},
        {CheckSuite::Metric, "metric.triangle", check_triangle, 1e-9},
        {CheckSuite::Metric, "metric.formula_agreement", check_formula_agreement, 1e-9},
        {CheckSuite::Metric, "metric.scalar_oracle", check_scalar_oracle, 1e-10},
        {CheckSuite::Metric, "metric.diagonal_oracle", check_diagonal_oracle, 1e-9},
        {CheckSuite::Metric, "metric.hat_roundtrip", check_hat_roundtrip, 1e-9},
        {CheckSuite::Metric, "metric.transport_identities", check_transport_identities,
         1e-9},
        {CheckSuite::Metric, "metric.geodesic_parametrization",
         check_geodesic_parametrization, 1e-8},
        {CheckSuite::Metric, "metric.midpoint_betweenness", check_midpoint_betweenness,
         1e-8},
        {CheckSuite::Metric, "metric.doubling", check_doubling, 1e-9},
        {CheckSuite::Metric, "metric.barycenter_bound", check_barycenter_bound, 1e-8},
        {CheckSuite::Ball, "ball.poincare_matches_kobayashi",
         check_poincare_matches_kobayashi, 1e-10},
        {CheckSuite::Ball, "ball.automorphism_isometry", check_automorphism_isometry,
         1e-9},
        {CheckSuite::Ball, "ball.compose_matches_action", check_compose_matches_action,
         1e-8},
        {CheckSuite::Ball, "ball.inverse_roundtrip", check_inverse_roundtrip, 1e-9},
        {CheckSuite::Ball, "ball.kobayashi_radial", check_kobayashi_radial, 1e-10},
        {CheckSuite::Ball, "ball.triangle", check_ball_triangle, 1e-9},
        {CheckSuite::Convexity, "convexity.hat_ball_law", check_hat_ball_law, 1e-10},
        {CheckSuite::Convexity, "convexity.radius_diameter_consistency",
         check_radius_diameter_consistency, 1e-12},
        {CheckSuite::Convexity, "convexity.contains_membership", check_contains_membership,
         0.0},
        {CheckSuite::Convexity, "convexity.chebyshev_two_point", check_chebyshev_two_point,
         1e-6},
        {CheckSuite::Convexity, "convexity.chebyshev_vs_seed", check_chebyshev_vs_seed,
         1e-12},
        {CheckSuite::Convexity, "convexity.nondiametral_margin", check_nondiametral_margin,
         0.0},
        {CheckSuite::Dynamics, "dynamics.apply_commutes_with_hat",
         check_apply_commutes_with_hat, 1e-10},
        {CheckSuite::Dynamics, "dynamics.map_isometry", check_map_isometry, 1e-9},
        {CheckSuite::Dynamics, "dynamics.rotation_orbit_diameter",
         check_rotation_orbit_diameter, 1e-8},
        {CheckSuite::Dynamics, "dynamics.finite_rotation_flagged_bounded",
         check_finite_rotation_flagged_bounded, 0.0},
        {CheckSuite::Dynamics, "dynamics.translation_growth", check_translation_growth,
         1e-6},
        {CheckSuite::Dynamics, "dynamics.fixed_point_rotation", check_fixed_point_rotation,
         1e-6},
        {CheckSuite::Dynamics, "dynamics.fixed_point_conjugated",
         check_fixed_point_conjugated, 1e-5},
        {CheckSuite::Dynamics, "dynamics.conjugation_residual_invariance",
         check_conjugation_residual_invariance, 1e-8},
    };
    return checks;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

CheckSuite parse_suite(const std::string& name) {
    if (name == "metric") return CheckSuite::Metric;
    if (name == "ball") return CheckSuite::Ball;
    if (name == "convexity") return CheckSuite::Convexity;
    if (name == "dynamics") return CheckSuite::Dynamics;
    if (name == "all") return CheckSuite::All;
    throw InputError("unknown check suite \"" + name +
                     "\" (expected metric, ball, convexity, dynamics or all)");
}

const char* suite_name(CheckSuite suite) {
    switch (suite) {
    case CheckSuite::Metric: return "metric";
    case CheckSuite::Ball: return "ball";
    case CheckSuite::Convexity: return "convexity";
    case CheckSuite::Dynamics: return "dynamics";
    case CheckSuite::All: return "all";
    }
    return "all";
}

std::vector<CheckOutcome> run_checks(CheckSuite suite, int samples, std::uint64_t seed) {
    if (samples < 1) {
        throw InputError("check suite needs at least one sample");
    }
    std::vector<CheckOutcome> outcomes;
    const std::vector<Check>& checks = registry();
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const Check& check = checks[i];
        if (suite != CheckSuite::All && check.suite != suite) {
            continue;
        }
        SeededRng rng(mix_seed(seed, i));
        const double worst = check.run(rng, samples);
        outcomes.push_back(
            {check.name, worst <= check.tolerance, worst, check.tolerance, samples});
    }
    return outcomes;
}

} // namespace opmetric
