#pragma once

#include "opmetric/linalg.hpp"

namespace opmetric {

// A point strictly inside the unit ball must keep this much distance from the
// boundary in operator norm.
inline constexpr double kBallMargin = 1e-8;

// atanh arguments in (1 - kAtanhClamp, 1) are clamped to 1 - kAtanhClamp;
// arguments >= 1 raise SingularResolvent.
inline constexpr double kAtanhClamp = 1e-15;

// Condition-number guard for Moebius resolvents I + A*W.
inline constexpr double kResolventCondLimit = 1e12;

// Guards atanh of an operator-norm argument; shared boundary policy for the
// hyperbolic distance formulas.
double atanh_norm(double x);

// An m x n matrix of operator norm at most 1 - kBallMargin. m indexes H, n
// indexes K: these are points of the unit ball of L(K, H).
class BallPoint {
public:
    // Validates finiteness and the norm margin (NonFiniteEntry /
    // NormTooCloseToOne).
    explicit BallPoint(ComplexMatrix mat);

    static BallPoint zero(Index dim_h, Index dim_k);

    const ComplexMatrix& mat() const { return mat_; }
    Index dim_h() const { return mat_.rows(); }
    Index dim_k() const { return mat_.cols(); }

private:
    ComplexMatrix mat_;
};

BallPoint negated(const BallPoint& p);

// Biholomorphic automorphism of the ball in normal form Z -> eta_A(U Z V)
// with U, V unitary and eta_A the Moebius map
//   eta_A(W) = (I - A A*)^(-1/2) (W + A) (I + A* W)^(-1) (I - A* A)^(1/2).
class BallAutomorphism {
public:
    // Validates U*U = I and V*V = I to kHermTol (InputError otherwise).
    BallAutomorphism(BallPoint param, ComplexMatrix u, ComplexMatrix v);

    static BallAutomorphism identity(Index dim_h, Index dim_k);
    // Pure Moebius part: (A, I, I).
    static BallAutomorphism moebius(BallPoint param);

    const BallPoint& param() const { return param_; }
    const ComplexMatrix& u() const { return u_; }
    const ComplexMatrix& v() const { return v_; }
    Index dim_h() const { return param_.dim_h(); }
    Index dim_k() const { return param_.dim_k(); }

private:
    BallPoint param_;
    ComplexMatrix u_;
    ComplexMatrix v_;
};

// Hyperbolic distance on the open unit disc: atanh(|a - b| / |1 - conj(a) b|).
// OutsideDisc if |a| >= 1 or |b| >= 1.
double poincare(Complex a, Complex b);

// g applied to z. SingularResolvent if the resolvent is numerically singular.
BallPoint apply(const BallAutomorphism& g, const BallPoint& z);

// Normal form of g1 after g2 ("first g2, then g1"). The Moebius parameter is
// g1(g2(0)); the unitary part is recovered by probing the origin-fixing
// remainder, which acts linearly. NormalFormFailure if the recovered form
// does not reproduce the composition to 1e-8 on probe points.
BallAutomorphism compose(const BallAutomorphism& g1, const BallAutomorphism& g2);

// Closed form: the inverse of (A, U, V) is (-U* A V*, U*, V*).
BallAutomorphism inverse(const BallAutomorphism& g);

// Kobayashi distance K(x, y) = atanh || M_x(y) || where M_x is the Moebius
// transport sending x to 0. Coincides with atanh||y|| at x = 0 and is
// invariant under every ball automorphism.
double kobayashi(const BallPoint& x, const BallPoint& y);

// The raw transport M_x(z) = eta_{-x}(z) as a matrix, without the ball-margin
// check on the result. Internal building block for kobayashi and the
// operator-space distance.
ComplexMatrix moebius_transport(const ComplexMatrix& x, const ComplexMatrix& z);

} // namespace opmetric
