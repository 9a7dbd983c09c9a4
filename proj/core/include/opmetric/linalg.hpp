#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "opmetric/errors.hpp"

namespace opmetric {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

// Relative tolerance for accepting a matrix as Hermitian, and for clipping
// stray eigenvalues back onto a closed domain boundary.
inline constexpr double kHermTol = 1e-10;

bool is_finite(const ComplexMatrix& m);

// Throws NonFiniteEntry naming `what` if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, const std::string& what);

// Operator norm (largest singular value).
double op_norm(const ComplexMatrix& m);

// (M + M*)/2.
ComplexMatrix hermitized(const ComplexMatrix& m);

// A real scalar function together with its admissible eigenvalue domain.
// Eigenvalues at most kHermTol*(1+||P||) past an inclusive bound are clipped
// onto it; eigenvalues violating an exclusive bound (or further past an
// inclusive one) raise SpectrumOutOfDomain.
struct ScalarFunction {
    std::string name;
    std::function<double(double)> fn;
    double min = -std::numeric_limits<double>::infinity();
    double max = std::numeric_limits<double>::infinity();
    bool min_exclusive = false;
    bool max_exclusive = false;
};

namespace scalar_fn {

ScalarFunction identity();
ScalarFunction sqrt();      // domain [0, inf)
ScalarFunction inv_sqrt();  // x^(-1/2), domain (0, inf)
ScalarFunction atanh();     // domain (-1, 1)
ScalarFunction tanh();
// x -> tanh(scale * atanh(x)), domain (-1, 1). Parametrizes geodesics of the
// radius coordinate.
ScalarFunction tanh_of_scaled_atanh(double scale);

} // namespace scalar_fn

// f applied to a Hermitian matrix through its spectrum: f(P) = sum f(l_i) E_i.
// Rejects inputs with ||P - P*|| > kHermTol*(1+||P||) (NotHermitian), then
// works on the Hermitized matrix.
ComplexMatrix hermitian_function(const ComplexMatrix& p, const ScalarFunction& f);

struct PolarDecomposition {
    ComplexMatrix isometry; // V: m x n partial isometry, zero on ker|B|
    ComplexMatrix positive; // |B| = (B*B)^(1/2): n x n Hermitian PSD
};

// B = V |B| with V vanishing on the kernel of |B|. Singular values at most
// max(m, n) * eps * sigma_max are treated as zero rank.
PolarDecomposition polar(const ComplexMatrix& b);

} // namespace opmetric
