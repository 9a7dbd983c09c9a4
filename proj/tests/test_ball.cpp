#include "test_support.hpp"

#include <limits>

#include "opmetric/ball.hpp"
#include "opmetric/oracles.hpp"

using namespace opmetric;
using test_support::diag2;
using test_support::m1;

TEST_SUITE("ball") {

TEST_CASE("ball points enforce the boundary margin") {
    CHECK_NOTHROW(BallPoint(m1(0.5)));
    CHECK_NOTHROW(BallPoint(m1(Complex(0.0, 0.9))));
    CHECK_THROWS_AS(BallPoint(m1(1.0 - 1e-9)), NormTooCloseToOne);
    CHECK_THROWS_AS(BallPoint(m1(1.5)), NormTooCloseToOne);
    CHECK_THROWS_AS(BallPoint(m1(std::numeric_limits<double>::quiet_NaN())),
                    NonFiniteEntry);
}

TEST_CASE("poincare reproduces the scalar disc distance") {
    CHECK_NEAR(poincare(0.0, 0.5), std::atanh(0.5), 1e-15);
    CHECK_NEAR(poincare(0.5, 0.0), std::atanh(0.5), 1e-15);
    // Frozen: atanh(0.4 / 1.04) = ln(3/2).
    CHECK_NEAR(poincare(0.2, -0.2), 0.40546510810816438, 1e-15);
    CHECK_THROWS_AS(poincare(1.0, 0.0), OutsideDisc);
    CHECK_THROWS_AS(poincare(0.0, Complex(0.8, 0.7)), OutsideDisc);
}

TEST_CASE("kobayashi from the origin is atanh of the norm") {
    const BallPoint x(diag2(0.1, 0.2));
    CHECK_NEAR(kobayashi(BallPoint::zero(2, 2), x), std::atanh(0.2), 1e-14);
}

TEST_CASE("kobayashi on diagonal points is the largest entrywise disc distance") {
    const BallPoint x(diag2(0.1, 0.2));
    const BallPoint y(diag2(0.3, -0.2));
    // Frozen: max(atanh(0.2/0.97), atanh(0.4/1.04)) = ln(3/2).
    CHECK_NEAR(kobayashi(x, y), 0.40546510810816438, 1e-12);
    CHECK_NEAR(kobayashi(x, y),
               std::max(poincare(0.1, 0.3), poincare(0.2, -0.2)), 1e-13);

    SeededRng rng(21);
    for (int i = 0; i < 20; ++i) {
        const Complex a0 = 0.8 * rng.uniform() * std::polar(1.0, 6.28 * rng.uniform());
        const Complex a1 = 0.8 * rng.uniform() * std::polar(1.0, 6.28 * rng.uniform());
        const Complex b0 = 0.8 * rng.uniform() * std::polar(1.0, 6.28 * rng.uniform());
        const Complex b1 = 0.8 * rng.uniform() * std::polar(1.0, 6.28 * rng.uniform());
        const double expected = std::max(poincare(a0, b0), poincare(a1, b1));
        CHECK_NEAR(kobayashi(BallPoint(diag2(a0, a1)), BallPoint(diag2(b0, b1))),
                   expected, 1e-12);
    }
}

TEST_CASE("kobayashi is symmetric and vanishes only on the diagonal") {
    SeededRng rng(22);
    for (int i = 0; i < 20; ++i) {
        const BallPoint x = random_ball_point(rng, 2, 3, 0.9);
        const BallPoint y = random_ball_point(rng, 2, 3, 0.9);
        CHECK_NEAR(kobayashi(x, y), kobayashi(y, x), 1e-12);
        CHECK(kobayashi(x, x) <= 1e-12);
        CHECK(kobayashi(x, y) > 1e-6); // random pairs are far apart
    }
}

TEST_CASE("automorphisms validate their unitary parts") {
    const BallPoint a(m1(0.3));
    CHECK_THROWS_AS(BallAutomorphism(a, m1(1.5), m1(1.0)), InputError);
    CHECK_THROWS_AS(BallAutomorphism(a, m1(1.0), m1(0.5)), InputError);
    CHECK_NOTHROW(BallAutomorphism(a, m1(std::polar(1.0, 0.4)), m1(1.0)));
    CHECK_THROWS_AS(
        BallAutomorphism(BallPoint::zero(2, 2), ComplexMatrix::Identity(2, 2),
                         ComplexMatrix::Identity(3, 3)),
        DimensionMismatch);
}

TEST_CASE("the identity automorphism fixes every point") {
    SeededRng rng(23);
    const BallAutomorphism id = BallAutomorphism::identity(3, 2);
    for (int i = 0; i < 5; ++i) {
        const BallPoint z = random_ball_point(rng, 3, 2, 0.9);
        CHECK_MATRIX_NEAR(apply(id, z).mat(), z.mat(), 1e-13);
    }
}

TEST_CASE("a Moebius automorphism sends the origin to its parameter") {
    SeededRng rng(24);
    for (int i = 0; i < 10; ++i) {
        const BallPoint a = random_ball_point(rng, 2, 3, 0.8);
        const BallPoint image = apply(BallAutomorphism::moebius(a), BallPoint::zero(2, 3));
        CHECK_MATRIX_NEAR(image.mat(), a.mat(), 1e-12);
    }
}

TEST_CASE("compose recovers the scalar normal form") {
    const BallAutomorphism g1 = BallAutomorphism::moebius(BallPoint(m1(0.3)));
    const BallAutomorphism g2 = BallAutomorphism::moebius(BallPoint(m1(Complex(0.0, 0.4))));
    const BallAutomorphism g12 = compose(g1, g2);
    // Frozen: eta_{0.3}(0.4i) = (0.3 + 0.4i) / (1 + 0.12i).
    CHECK_NEAR(g12.param().mat()(0, 0).real(), 0.34305993690851735, 1e-12);
    CHECK_NEAR(g12.param().mat()(0, 0).imag(), 0.35883280757097796, 1e-12);

    // The residual linear part z -> u z v, frozen at z = 0.25. Only the
    // product u*v is gauge-free, so that is what gets pinned.
    const Complex uv = g12.u()(0, 0) * g12.v()(0, 0);
    const Complex expected(0.24290220820189265, -0.059148264984227206);
    CHECK_NEAR(std::abs(uv * 0.25 - expected), 0.0, 1e-12);

    const BallPoint z(m1(0.25));
    const BallPoint direct = apply(g1, apply(g2, z));
    CHECK_MATRIX_NEAR(apply(g12, z).mat(), direct.mat(), 1e-12);
}

TEST_CASE("compose matches pointwise composition on random automorphisms") {
    SeededRng rng(25);
    for (int i = 0; i < 10; ++i) {
        const BallAutomorphism g1 = random_automorphism(rng, 3, 2, 0.6);
        const BallAutomorphism g2 = random_automorphism(rng, 3, 2, 0.6);
        const BallAutomorphism g12 = compose(g1, g2);
        for (int j = 0; j < 3; ++j) {
            const BallPoint z = random_ball_point(rng, 3, 2, 0.8);
            CHECK_MATRIX_NEAR(apply(g12, z).mat(), apply(g1, apply(g2, z)).mat(), 1e-8);
        }
    }
}

TEST_CASE("composition is associative as an action") {
    SeededRng rng(26);
    const BallAutomorphism g1 = random_automorphism(rng, 2, 2, 0.5);
    const BallAutomorphism g2 = random_automorphism(rng, 2, 2, 0.5);
    const BallAutomorphism g3 = random_automorphism(rng, 2, 2, 0.5);
    const BallAutomorphism left = compose(compose(g1, g2), g3);
    const BallAutomorphism right = compose(g1, compose(g2, g3));
    for (int j = 0; j < 5; ++j) {
        const BallPoint z = random_ball_point(rng, 2, 2, 0.8);
        CHECK_MATRIX_NEAR(apply(left, z).mat(), apply(right, z).mat(), 1e-8);
    }
}

TEST_CASE("inverse has closed form and round-trips") {
    const BallPoint a(m1(0.4));
    const BallAutomorphism inv = inverse(BallAutomorphism::moebius(a));
    CHECK_MATRIX_NEAR(inv.param().mat(), m1(-0.4), 1e-15);

    SeededRng rng(27);
    for (int i = 0; i < 10; ++i) {
        const BallAutomorphism g = random_automorphism(rng, 2, 3);
        const BallPoint z = random_ball_point(rng, 2, 3, 0.85);
        CHECK_MATRIX_NEAR(apply(inverse(g), apply(g, z)).mat(), z.mat(), 1e-9);
        CHECK_MATRIX_NEAR(apply(g, apply(inverse(g), z)).mat(), z.mat(), 1e-9);
        const BallAutomorphism twice = inverse(inverse(g));
        CHECK_MATRIX_NEAR(twice.param().mat(), g.param().mat(), 1e-13);
        CHECK_MATRIX_NEAR(twice.u(), g.u(), 1e-13);
        CHECK_MATRIX_NEAR(twice.v(), g.v(), 1e-13);
    }
}

TEST_CASE("automorphisms leave the kobayashi distance invariant") {
    SeededRng rng(28);
    for (int i = 0; i < 25; ++i) {
        const BallAutomorphism g = random_automorphism(rng, 2, 2);
        const BallPoint x = random_ball_point(rng, 2, 2, 0.85);
        const BallPoint y = random_ball_point(rng, 2, 2, 0.85);
        CHECK_NEAR(kobayashi(apply(g, x), apply(g, y)), kobayashi(x, y), 1e-9);
    }
}

TEST_CASE("shape mismatches are rejected") {
    CHECK_THROWS_AS(kobayashi(BallPoint::zero(2, 2), BallPoint::zero(2, 3)),
                    DimensionMismatch);
    CHECK_THROWS_AS(apply(BallAutomorphism::identity(2, 2), BallPoint::zero(3, 2)),
                    DimensionMismatch);
}

} // TEST_SUITE
