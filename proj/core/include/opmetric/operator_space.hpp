#pragma once

#include <span>
#include <vector>

#include "opmetric/ball.hpp"

namespace opmetric {

// Above this condition number the factored distance formula hands off to the
// ball-coordinate formula.
inline constexpr double kFactorCondLimit = 1e10;

// An everywhere-defined operator H -> K at finite scale: an n x m matrix,
// n = dim K rows, m = dim H columns. No norm restriction.
class ClosedOperator {
public:
    explicit ClosedOperator(ComplexMatrix mat);

    static ClosedOperator zero(Index dim_h, Index dim_k);

    const ComplexMatrix& mat() const { return mat_; }
    Index dim_h() const { return mat_.cols(); }
    Index dim_k() const { return mat_.rows(); }

private:
    ComplexMatrix mat_;
};

ClosedOperator negated(const ClosedOperator& t);

// Bounded transform: hat(T) = (I + T*T)^(-1/2) T*, an m x n ball point with
// ||hat(T)||^2 = ||T T*|| / (1 + ||T T*||) < 1.
BallPoint hat(const ClosedOperator& t);

// Inverse of the bounded transform: unhat(A) = (I - A*A)^(-1/2) A*.
ClosedOperator unhat(const BallPoint& a);

// Left factor of the distance formula:
//   left_factor(T, X) = (I + T*T)^(1/2) X* - T* (I + XX*)^(1/2),  m x n.
// Vanishes at X = T.
ComplexMatrix left_factor(const ClosedOperator& t, const ClosedOperator& x);

// Right factor of the distance formula:
//   right_factor(T, X) = (I + XX*)^(1/2) (I + TT*)^(1/2) - X T*,  n x n.
// Equals (I + TT*)^(1/2) at X = 0.
ComplexMatrix right_factor(const ClosedOperator& t, const ClosedOperator& x);

// Hyperbolic distance via the factored formula
//   d(T, S) = atanh || left_factor(T, S) * right_factor(S, T)^(-1) ||.
// SingularResolvent if right_factor(S, T) is numerically singular.
double distance_via_factors(const ClosedOperator& t, const ClosedOperator& s);

// The same distance computed in ball coordinates: kobayashi(hat(T), hat(S)).
double distance_via_ball(const ClosedOperator& t, const ClosedOperator& s);

// Robust dispatcher: the factored formula, falling back to ball coordinates
// when cond(right_factor(S, T)) > kFactorCondLimit.
double distance(const ClosedOperator& t, const ClosedOperator& s);

// Moebius transport centered at T: sends hat(T) to 0 and 0 to -hat(T);
// transport(-T, .) inverts it. Realized by the automorphism (-hat(T), I, I).
BallPoint transport(const ClosedOperator& t, const BallPoint& x);
BallAutomorphism transport_automorphism(const ClosedOperator& t);

// Point at parameter frac in [0, 1] of the unique metric geodesic from T to
// S: d(T, gamma(frac)) = frac * d(T, S). Built by transporting hat(S) to the
// origin frame, scaling the radial part through tanh(frac * atanh(.)), and
// transporting back.
ClosedOperator geodesic_point(const ClosedOperator& t, const ClosedOperator& s, double frac);

// geodesic_point at frac = 1/2; the metric midpoint.
ClosedOperator midpoint(const ClosedOperator& t, const ClosedOperator& s);

// Automorphism phi with phi(hat(T)) = -phi(hat(S)): moves the pair into
// antipodal position. Its fixed point phi^(-1)(0) projects to the midpoint,
// which tests use as an independent cross-check of midpoint().
BallAutomorphism symmetrize(const ClosedOperator& t, const ClosedOperator& s);

// 2^k-fold midpoint recursion: pads the list cyclically to the next power of
// two, then halves by adjacent-pair midpoints. Order-dependent by design;
// satisfies d(Q, X) <= (1/n) sum_i d(T_i, X) for every X.
ClosedOperator barycenter(std::span<const ClosedOperator> points);

} // namespace opmetric
