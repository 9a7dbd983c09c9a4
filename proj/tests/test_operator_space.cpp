#include "test_support.hpp"

#include <vector>

#include "opmetric/operator_space.hpp"
#include "opmetric/oracles.hpp"

using namespace opmetric;
using test_support::diag2;
using test_support::m1;
using test_support::unitary_a;
using test_support::unitary_b;

TEST_SUITE("operator_space") {

TEST_CASE("hat of simple operators") {
    CHECK_NEAR(hat(ClosedOperator(m1(1.0))).mat()(0, 0), 1.0 / std::sqrt(2.0), 1e-15);
    CHECK_NEAR(hat(ClosedOperator(m1(Complex(0.0, 1.0)))).mat()(0, 0),
               Complex(0.0, -1.0 / std::sqrt(2.0)), 1e-15);
    const BallPoint h = hat(ClosedOperator(diag2(1.0, 2.0)));
    CHECK_MATRIX_NEAR(h.mat(), diag2(1.0 / std::sqrt(2.0), 2.0 / std::sqrt(5.0)), 1e-14);
    CHECK(op_norm(hat(ClosedOperator::zero(3, 2)).mat()) == 0.0);
}

TEST_CASE("hat norm law and rectangular shapes") {
    SeededRng rng(31);
    for (int i = 0; i < 15; ++i) {
        const ComplexMatrix m = random_gaussian_matrix(rng, 3, 2); // 3 = dim K, 2 = dim H
        const ClosedOperator t(m);
        const BallPoint h = hat(t);
        CHECK(h.dim_h() == 2);
        CHECK(h.dim_k() == 3);
        const double g = op_norm(m * m.adjoint());
        const double hn = op_norm(h.mat());
        CHECK_NEAR(hn * hn, g / (1.0 + g), 1e-10);
        CHECK(hn < 1.0);
    }
}

TEST_CASE("hat and unhat are mutually inverse") {
    SeededRng rng(32);
    for (int i = 0; i < 15; ++i) {
        const ClosedOperator t = random_operator(rng, 2, 3, 0.9);
        CHECK_MATRIX_NEAR(unhat(hat(t)).mat(), t.mat(), 1e-9);
        const BallPoint a = random_ball_point(rng, 3, 2, 0.9);
        CHECK_MATRIX_NEAR(hat(unhat(a)).mat(), a.mat(), 1e-10);
    }
}

TEST_CASE("distance factors have their pinned special values") {
    SeededRng rng(33);
    for (int i = 0; i < 10; ++i) {
        const ClosedOperator t = random_operator(rng, 2, 2, 0.9);
        CHECK(op_norm(left_factor(t, t)) <= 1e-12);
        const ComplexMatrix tm = t.mat();
        const ComplexMatrix expect = hermitian_function(
            hermitized(ComplexMatrix::Identity(2, 2) + tm * tm.adjoint()),
            scalar_fn::sqrt());
        CHECK_MATRIX_NEAR(right_factor(t, ClosedOperator::zero(2, 2)), expect, 1e-12);
    }
}

TEST_CASE("frozen distances") {
    const ClosedOperator one(m1(1.0));
    const ClosedOperator two(m1(2.0));
    const ClosedOperator zero(m1(0.0));
    CHECK_NEAR(distance(one, zero), 0.8813735870195429, 1e-12);
    CHECK_NEAR(distance(one, two), 0.5622618881592673, 1e-12);
    CHECK_NEAR(distance(ClosedOperator(m1(Complex(0.0, 1.0))),
                        ClosedOperator(m1(0.5))),
               1.092321895802554, 1e-12);
    CHECK_NEAR(distance(two, zero), 1.4436354751788103, 1e-12);
    CHECK_NEAR(distance(one, negated(one)), 2.0 * 0.8813735870195429, 1e-12);
    CHECK_NEAR(distance(ClosedOperator(diag2(1.0, 2.0)),
                        ClosedOperator(diag2(0.5, -0.2))),
               1.642325585528052, 1e-12);
    CHECK(distance(one, one) <= 1e-12);
}

TEST_CASE("distance is invariant under unitary multiplications") {
    const ClosedOperator t(diag2(1.0, 2.0));
    const ClosedOperator s(diag2(0.5, -0.2));
    const ClosedOperator tc(unitary_a() * t.mat() * unitary_b());
    const ClosedOperator sc(unitary_a() * s.mat() * unitary_b());
    CHECK_NEAR(distance(tc, sc), 1.642325585528052, 1e-9);
}

TEST_CASE("the two distance formulas agree") {
    SeededRng rng(34);
    for (int i = 0; i < 20; ++i) {
        const ClosedOperator t = random_operator(rng, 2, 3, 0.85);
        const ClosedOperator s = random_operator(rng, 2, 3, 0.85);
        CHECK_NEAR(distance_via_factors(t, s), distance_via_ball(t, s), 1e-11);
        CHECK_NEAR(distance(t, s), distance(s, t), 1e-11);
    }
    CHECK_THROWS_AS(distance(ClosedOperator::zero(2, 2), ClosedOperator::zero(3, 2)),
                    DimensionMismatch);
}

TEST_CASE("transport sends its center to the origin") {
    SeededRng rng(35);
    for (int i = 0; i < 10; ++i) {
        const ClosedOperator t = random_operator(rng, 3, 2, 0.85);
        const BallPoint x = random_ball_point(rng, 3, 2, 0.85);
        CHECK(op_norm(transport(t, hat(t)).mat()) <= 1e-10);
        CHECK_MATRIX_NEAR(transport(t, BallPoint::zero(3, 2)).mat(), -hat(t).mat(),
                          1e-10);
        CHECK_MATRIX_NEAR(transport(negated(t), transport(t, x)).mat(), x.mat(), 1e-9);
    }
}

TEST_CASE("transport of a scalar matches the disc Moebius map") {
    // Frozen: (0.2 - 1/sqrt(2)) / (1 - 0.2/sqrt(2)).
    const BallPoint out = transport(ClosedOperator(m1(1.0)), BallPoint(m1(0.2)));
    CHECK_NEAR(out.mat()(0, 0), Complex(-0.5906352142235567, 0.0), 1e-14);
}

TEST_CASE("transport factors through the distance formula matrices") {
    SeededRng rng(36);
    for (int i = 0; i < 10; ++i) {
        const ClosedOperator t = random_operator(rng, 3, 2, 0.8);
        const ClosedOperator s = random_operator(rng, 3, 2, 0.8);
        const ComplexMatrix rf = right_factor(s, t);
        const ComplexMatrix factored =
            left_factor(t, s) * rf.fullPivLu().inverse();
        CHECK_MATRIX_NEAR(transport(t, hat(s)).mat(), factored, 1e-11);
    }
}

TEST_CASE("geodesic endpoints and pinned interior points") {
    const ClosedOperator zero(m1(0.0));
    const ClosedOperator one(m1(1.0));
    CHECK(distance(geodesic_point(zero, one, 0.0), zero) <= 1e-10);
    CHECK(distance(geodesic_point(zero, one, 1.0), one) <= 1e-9);
    CHECK_NEAR(geodesic_point(zero, one, 0.25).mat()(0, 0),
               Complex(0.22213071992388844, 0.0), 1e-13);
    CHECK_NEAR(geodesic_point(zero, one, 0.5).mat()(0, 0),
               Complex(0.4550898605622272, 0.0), 1e-13);
    CHECK_NEAR(geodesic_point(zero, one, 0.75).mat()(0, 0),
               Complex(0.7102337061109757, 0.0), 1e-13);
    CHECK_THROWS_AS(geodesic_point(zero, one, -0.1), InputError);
    CHECK_THROWS_AS(geodesic_point(zero, one, 1.1), InputError);
}

TEST_CASE("geodesic points split the distance proportionally") {
    SeededRng rng(37);
    const ClosedOperator t = random_operator(rng, 2, 3, 0.8);
    const ClosedOperator s = random_operator(rng, 2, 3, 0.8);
    const double d = distance(t, s);
    for (double frac : {0.25, 0.5, 0.75}) {
        const ClosedOperator g = geodesic_point(t, s, frac);
        CHECK_NEAR(distance(t, g), frac * d, 1e-8);
        CHECK_NEAR(distance(g, s), (1.0 - frac) * d, 1e-8);
    }
}

TEST_CASE("midpoint is symmetric in its arguments") {
    SeededRng rng(38);
    for (int i = 0; i < 5; ++i) {
        const ClosedOperator t = random_operator(rng, 2, 2, 0.8);
        const ClosedOperator s = random_operator(rng, 2, 2, 0.8);
        CHECK(distance(midpoint(t, s), midpoint(s, t)) <= 1e-8);
    }
}

TEST_CASE("symmetrize makes the pair antipodal and locates the midpoint") {
    SeededRng rng(39);
    for (int i = 0; i < 5; ++i) {
        const ClosedOperator t = random_operator(rng, 2, 3, 0.75);
        const ClosedOperator s = random_operator(rng, 2, 3, 0.75);
        const BallAutomorphism phi = symmetrize(t, s);
        CHECK_MATRIX_NEAR(apply(phi, hat(t)).mat(), -apply(phi, hat(s)).mat(), 1e-8);
        // The origin of the symmetric frame pulls back to the midpoint.
        const BallPoint q = apply(inverse(phi), BallPoint::zero(2, 3));
        CHECK(distance(unhat(q), midpoint(t, s)) <= 1e-8);
    }
}

TEST_CASE("symmetrize scalar trace") {
    const ClosedOperator zero(m1(0.0));
    const ClosedOperator one(m1(1.0));
    const BallAutomorphism phi = symmetrize(zero, one);
    // Frozen: tanh(atanh(1/sqrt(2))/2) = sqrt(2) - 1.
    CHECK_NEAR(std::abs(apply(phi, BallPoint::zero(1, 1)).mat()(0, 0)),
               std::sqrt(2.0) - 1.0, 1e-12);
    const BallPoint q = apply(inverse(phi), BallPoint::zero(1, 1));
    CHECK_NEAR(unhat(q).mat()(0, 0), Complex(0.4550898605622272, 0.0), 1e-10);
}

TEST_CASE("barycenter of small configurations") {
    const ClosedOperator a(m1(0.2));
    const ClosedOperator b(m1(0.6));
    const ClosedOperator c(m1(-0.3));

    const std::vector<ClosedOperator> single{a};
    CHECK_MATRIX_NEAR(barycenter(single).mat(), a.mat(), 1e-12);

    const std::vector<ClosedOperator> pair{a, b};
    CHECK_MATRIX_NEAR(barycenter(pair).mat(), midpoint(a, b).mat(), 1e-12);

    // Three points pad cyclically to (a, b, c, a) before pairing.
    const std::vector<ClosedOperator> triple{a, b, c};
    const ClosedOperator by_hand = midpoint(midpoint(a, b), midpoint(c, a));
    CHECK_MATRIX_NEAR(barycenter(triple).mat(), by_hand.mat(), 1e-12);
}

TEST_CASE("barycenter satisfies the averaged distance bound") {
    SeededRng rng(40);
    std::vector<ClosedOperator> pts;
    for (int i = 0; i < 5; ++i) {
        pts.push_back(random_operator(rng, 2, 2, 0.7));
    }
    const ClosedOperator q = barycenter(pts);
    for (int probe = 0; probe < 4; ++probe) {
        const ClosedOperator x = random_operator(rng, 2, 2, 0.7);
        double avg = 0.0;
        for (const ClosedOperator& p : pts) {
            avg += distance(p, x);
        }
        avg /= static_cast<double>(pts.size());
        CHECK(distance(q, x) <= avg + 1e-8);
    }
}

TEST_CASE("barycenter input validation") {
    CHECK_THROWS_AS(barycenter({}), InputError);
    const std::vector<ClosedOperator> mixed{ClosedOperator::zero(2, 2),
                                            ClosedOperator::zero(3, 2)};
    CHECK_THROWS_AS(barycenter(mixed), DimensionMismatch);
}

} // TEST_SUITE
