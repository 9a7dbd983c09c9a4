#include "opmetric/oracles.hpp"

#include <cmath>
#include <numbers>

namespace opmetric {

double SeededRng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SeededRng::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = 1.0 - uniform(); // (0, 1], keeps the log finite
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
}

Complex SeededRng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

double scalar_distance(Complex t, Complex s) {
    const Complex t_hat = std::conj(t) / std::sqrt(1.0 + std::norm(t));
    const Complex s_hat = std::conj(s) / std::sqrt(1.0 + std::norm(s));
    const double num = std::abs(t_hat - s_hat);
    const double den = std::abs(1.0 - std::conj(t_hat) * s_hat);
    const double arg = num / den;
    if (arg >= 1.0) {
        throw SingularResolvent("scalar oracle argument reached 1");
    }
    return std::atanh(std::min(arg, 1.0 - kAtanhClamp));
}

double diagonal_distance(std::span<const Complex> t, std::span<const Complex> s) {
    if (t.size() != s.size()) {
        throw DimensionMismatch("diagonal oracle needs equal-length diagonals");
    }
    if (t.empty()) {
        throw InputError("diagonal oracle needs at least one entry");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        worst = std::max(worst, scalar_distance(t[i], s[i]));
    }
    return worst;
}

ComplexMatrix random_gaussian_matrix(SeededRng& rng, Index rows, Index cols) {
    if (rows < 1 || cols < 1) {
        throw DimensionMismatch("random matrix needs positive dimensions");
    }
    ComplexMatrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        for (Index c = 0; c < cols; ++c) {
            m(r, c) = rng.complex_normal();
        }
    }
    return m;
}

ComplexMatrix random_unitary(SeededRng& rng, Index dim) {
    const ComplexMatrix g = random_gaussian_matrix(rng, dim, dim);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index i = 0; i < dim; ++i) {
        const Complex d = r(i, i);
        const double mag = std::abs(d);
        q.col(i) *= mag > 0.0 ? d / mag : Complex(1.0, 0.0);
    }
    return q;
}

BallPoint random_ball_point(SeededRng& rng, Index dim_h, Index dim_k, double max_norm) {
    if (!(max_norm > 0.0 && max_norm < 1.0)) {
        throw InputError("ball point norm cap must lie in (0, 1)");
    }
    ComplexMatrix g = random_gaussian_matrix(rng, dim_h, dim_k);
    double nrm = op_norm(g);
    while (!(nrm > 0.0)) {
        g = random_gaussian_matrix(rng, dim_h, dim_k);
        nrm = op_norm(g);
    }
    const double target = max_norm * (1.0 - rng.uniform()); // (0, max_norm]
    return BallPoint(g * (target / nrm));
}

ClosedOperator random_operator(SeededRng& rng, Index dim_h, Index dim_k,
                               double max_hat_norm) {
    if (!(max_hat_norm > 0.0 && max_hat_norm <= 0.95)) {
        throw InputError("hat norm cap must lie in (0, 0.95]");
    }
    return unhat(random_ball_point(rng, dim_h, dim_k, max_hat_norm));
}

ClosedOperator random_operator(std::uint64_t seed, Index dim_h, Index dim_k,
                               double max_hat_norm) {
    SeededRng rng(seed);
    return random_operator(rng, dim_h, dim_k, max_hat_norm);
}

BallAutomorphism random_automorphism(SeededRng& rng, Index dim_h, Index dim_k,
                                     double param_norm) {
    BallPoint param = random_ball_point(rng, dim_h, dim_k, param_norm);
    ComplexMatrix u = random_unitary(rng, dim_h);
    ComplexMatrix v = random_unitary(rng, dim_k);
    return {std::move(param), std::move(u), std::move(v)};
}

} // namespace opmetric
