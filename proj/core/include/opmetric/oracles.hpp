#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "opmetric/ball.hpp"
#include "opmetric/operator_space.hpp"

namespace opmetric {

// Deterministic stream of doubles and Gaussians. The exact recipe (pinned so
// seeds reproduce across platforms and releases):
//   - std::mt19937_64 seeded directly with the given value,
//   - uniforms take the top 53 bits of each output word,
//   - normals come from Box-Muller on (1 - u1, u2) with the second value of
//     each pair cached,
//   - complex Gaussians pair two consecutive normals (re, im).
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    double uniform(); // [0, 1)
    double normal();  // N(0, 1)
    Complex complex_normal();

private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

// Ground-truth distance for 1x1 operators, written in scalar arithmetic with
// no matrix code: atanh |that - shat| / |1 - conj(that) shat| on the scalar
// bounded transforms that = conj(t) / sqrt(1 + |t|^2).
double scalar_distance(Complex t, Complex s);

// Ground truth for diagonal operators with equal dimensions: the max of the
// scalar distances of corresponding diagonal entries.
double diagonal_distance(std::span<const Complex> t, std::span<const Complex> s);

// Gaussian matrix with independent complex N(0,1)+iN(0,1) entries, filled
// row by row.
ComplexMatrix random_gaussian_matrix(SeededRng& rng, Index rows, Index cols);

// Haar-distributed unitary: QR of a complex Gaussian with the R diagonal
// phases absorbed into Q.
ComplexMatrix random_unitary(SeededRng& rng, Index dim);

// A Gaussian direction rescaled to a hat norm drawn uniformly from
// (0, max_norm]; max_norm must lie in (0, 1).
BallPoint random_ball_point(SeededRng& rng, Index dim_h, Index dim_k, double max_norm);

// unhat of random_ball_point. max_hat_norm must lie in (0, 0.95]; the cap
// keeps unhat well conditioned.
ClosedOperator random_operator(std::uint64_t seed, Index dim_h, Index dim_k,
                               double max_hat_norm);
ClosedOperator random_operator(SeededRng& rng, Index dim_h, Index dim_k,
                               double max_hat_norm);

// Uniformly random ball automorphism with Moebius parameter norm up to
// param_norm and Haar unitary parts.
BallAutomorphism random_automorphism(SeededRng& rng, Index dim_h, Index dim_k,
                                     double param_norm = 0.7);

} // namespace opmetric
