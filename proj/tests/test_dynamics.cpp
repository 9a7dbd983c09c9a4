#include "test_support.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "opmetric/dynamics.hpp"
#include "opmetric/oracles.hpp"

using namespace opmetric;
using test_support::m1;

namespace {

HBiholomorphicMap scalar_shift(double a) {
    return HBiholomorphicMap(BallAutomorphism::moebius(BallPoint(m1(a))));
}

HBiholomorphicMap scalar_rotation(double angle) {
    return HBiholomorphicMap(BallAutomorphism(BallPoint::zero(1, 1),
                                              m1(std::polar(1.0, angle)),
                                              m1(1.0)));
}

} // namespace

TEST_SUITE("dynamics") {

TEST_CASE("apply_map intertwines with hat") {
    SeededRng rng(51);
    for (int i = 0; i < 10; ++i) {
        const HBiholomorphicMap g(random_automorphism(rng, 2, 3));
        const ClosedOperator t = random_operator(rng, 2, 3, 0.8);
        CHECK_MATRIX_NEAR(hat(apply_map(g, t)).mat(), apply(g.action(), hat(t)).mat(),
                          1e-10);
    }
}

TEST_CASE("every map is a distance isometry") {
    SeededRng rng(52);
    for (int i = 0; i < 10; ++i) {
        const HBiholomorphicMap g(random_automorphism(rng, 2, 2));
        const ClosedOperator t = random_operator(rng, 2, 2, 0.8);
        const ClosedOperator s = random_operator(rng, 2, 2, 0.8);
        CHECK_NEAR(distance(apply_map(g, t), apply_map(g, s)), distance(t, s), 1e-9);
    }
}

TEST_CASE("inverse and compose act as expected") {
    SeededRng rng(53);
    const HBiholomorphicMap g1(random_automorphism(rng, 2, 2, 0.5));
    const HBiholomorphicMap g2(random_automorphism(rng, 2, 2, 0.5));
    for (int i = 0; i < 5; ++i) {
        const ClosedOperator t = random_operator(rng, 2, 2, 0.8);
        CHECK(distance(apply_map(inverse(g1), apply_map(g1, t)), t) <= 1e-9);
        CHECK(distance(apply_map(compose(g1, g2), t),
                       apply_map(g1, apply_map(g2, t))) <= 1e-8);
    }
}

TEST_CASE("group construction validates generators") {
    CHECK_THROWS_AS(IsometryGroup({}), InputError);
    std::vector<HBiholomorphicMap> mixed;
    mixed.emplace_back(BallAutomorphism::identity(2, 2));
    mixed.emplace_back(BallAutomorphism::identity(3, 2));
    CHECK_THROWS_AS(IsometryGroup{mixed}, DimensionMismatch);

    const IsometryGroup group({scalar_shift(0.3)});
    CHECK(group.generators().size() == 1);
    CHECK(group.symmetrized().size() == 2);
    // The adjoined half inverts the generator.
    const ClosedOperator t(m1(0.2));
    CHECK(distance(apply_map(group.symmetrized()[1], apply_map(group.generators()[0], t)),
                   t) <= 1e-10);
}

TEST_CASE("a shift generator walks a geodesic at constant speed") {
    const IsometryGroup group({scalar_shift(0.5)});
    const ClosedOperator start = ClosedOperator::zero(1, 1);
    const OrbitSample sample = orbit(group, start, 6);

    CHECK(sample.points.size() == 7);
    CHECK_FALSE(sample.truncated);
    REQUIRE(sample.diameter_by_depth.size() == 7);
    const double step = std::atanh(0.5);
    for (std::size_t k = 0; k < sample.diameter_by_depth.size(); ++k) {
        CHECK_NEAR(sample.diameter_by_depth[k], static_cast<double>(k) * step, 1e-9);
    }
    CHECK_FALSE(is_orbit_bounded(group, start, 6));
}

TEST_CASE("a finite rotation orbit closes and is flagged bounded") {
    const double angle = 2.0 * std::numbers::pi / 5.0;
    const IsometryGroup group({scalar_rotation(angle)});
    const ClosedOperator start(m1(0.5));
    const OrbitSample sample = orbit(group, start, 6);

    CHECK(sample.points.size() == 5);
    CHECK_FALSE(sample.truncated);
    REQUIRE(sample.diameter_by_depth.size() == 7);
    CHECK(sample.diameter_by_depth[5] == sample.diameter_by_depth[6]);
    const double bound = 2.0 * distance(start, ClosedOperator::zero(1, 1));
    CHECK(sample.diameter_by_depth.back() <= bound + 1e-8);
    CHECK(is_orbit_bounded(group, start, 6));
}

TEST_CASE("the identity generator gives a singleton orbit") {
    const IsometryGroup group({HBiholomorphicMap(BallAutomorphism::identity(2, 2))});
    const ClosedOperator start = ClosedOperator::zero(2, 2);
    const OrbitSample sample = orbit(group, start, 5);
    CHECK(sample.points.size() == 1);
    CHECK(sample.diameter_by_depth.back() == 0.0);
    CHECK(is_orbit_bounded(group, start, 5));
}

TEST_CASE("orbit and boundedness input validation") {
    const IsometryGroup group({scalar_shift(0.3)});
    const ClosedOperator start = ClosedOperator::zero(1, 1);
    CHECK_THROWS_AS(orbit(group, start, -1), InputError);
    CHECK_THROWS_AS(orbit(group, ClosedOperator::zero(2, 2), 3), DimensionMismatch);
    CHECK_THROWS_AS(is_orbit_bounded(group, start, 3), InputError);
    CHECK_THROWS_AS(is_orbit_bounded(group, start, 5, 0.0), InputError);
}

TEST_CASE("rotation groups contract to the zero operator") {
    const IsometryGroup group({scalar_rotation(0.9), scalar_rotation(2.1)});
    const ClosedOperator start(m1(0.7));
    const FixedPointResult result = find_fixed_point(group, start, 1e-7, 300);
    CHECK(result.converged);
    CHECK(result.residual <= 1e-7);
    CHECK(result.orbit_bounded);
    CHECK(op_norm(hat(result.point).mat()) <= 1e-6);
}

TEST_CASE("a conjugated rotation group recovers the planted fixed point") {
    SeededRng rng(54);
    const BallPoint anchor = random_ball_point(rng, 2, 2, 0.5);
    const HBiholomorphicMap h(BallAutomorphism::moebius(anchor));
    // Both phase pairs sum to angles at least 1 radian away from any multiple
    // of 2*pi, so the rotation has no slow direction and the averaging
    // iteration contracts briskly.
    ComplexMatrix phases_u = ComplexMatrix::Zero(2, 2);
    phases_u(0, 0) = std::polar(1.0, 1.1);
    phases_u(1, 1) = std::polar(1.0, 2.3);
    ComplexMatrix phases_v = ComplexMatrix::Zero(2, 2);
    phases_v(0, 0) = std::polar(1.0, 0.7);
    phases_v(1, 1) = std::polar(1.0, 2.9);
    const HBiholomorphicMap rotation(
        BallAutomorphism(BallPoint::zero(2, 2), phases_u, phases_v));
    const IsometryGroup group({compose(h, compose(rotation, inverse(h)))});

    const ClosedOperator planted = unhat(anchor);
    const ClosedOperator start = random_operator(rng, 2, 2, 0.7);
    const FixedPointResult result = find_fixed_point(group, start, 1e-7, 300);
    CHECK(result.converged);
    CHECK(distance(result.point, planted) <= 1e-5);
}

TEST_CASE("an unbounded group reports its best iterate without converging") {
    const IsometryGroup group({scalar_shift(0.5)});
    const ClosedOperator start = ClosedOperator::zero(1, 1);
    const FixedPointResult result = find_fixed_point(group, start, 1e-10, 3);
    CHECK_FALSE(result.converged);
    CHECK_FALSE(result.orbit_bounded);
    CHECK(result.iterations == 3);
    // Every point moves by exactly the shift's translation length.
    CHECK_NEAR(result.residual, std::atanh(0.5), 1e-6);
}

TEST_CASE("fixed-point residuals are conjugation covariant") {
    SeededRng rng(55);
    for (int i = 0; i < 5; ++i) {
        const HBiholomorphicMap g(random_automorphism(rng, 2, 2, 0.5));
        const HBiholomorphicMap h(random_automorphism(rng, 2, 2, 0.5));
        const ClosedOperator p = random_operator(rng, 2, 2, 0.7);
        const HBiholomorphicMap conjugated = compose(h, compose(g, inverse(h)));
        const ClosedOperator hp = apply_map(h, p);
        CHECK_NEAR(distance(apply_map(conjugated, hp), hp),
                   distance(apply_map(g, p), p), 1e-8);
    }
}

TEST_CASE("fixed-point search validates parameters") {
    const IsometryGroup group({scalar_shift(0.3)});
    const ClosedOperator start = ClosedOperator::zero(1, 1);
    CHECK_THROWS_AS(find_fixed_point(group, start, 0.0), InputError);
    CHECK_THROWS_AS(find_fixed_point(group, start, 1e-8, 0), InputError);
    CHECK_THROWS_AS(find_fixed_point(group, ClosedOperator::zero(2, 2)),
                    DimensionMismatch);
}

} // TEST_SUITE
