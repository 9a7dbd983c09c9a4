#include "opmetric/linalg.hpp"

#include <cmath>
#include <sstream>

namespace opmetric {

bool is_finite(const ComplexMatrix& m) {
    return m.allFinite();
}

void require_finite(const ComplexMatrix& m, const std::string& what) {
    if (!m.allFinite()) {
        throw NonFiniteEntry(what + " contains a NaN or infinite entry");
    }
}

double op_norm(const ComplexMatrix& m) {
    if (m.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
}

ComplexMatrix hermitized(const ComplexMatrix& m) {
    return (m + m.adjoint()) / 2.0;
}

namespace scalar_fn {

ScalarFunction identity() {
    return {"identity", [](double x) { return x; }};
}

ScalarFunction sqrt() {
    ScalarFunction f{"sqrt", [](double x) { return std::sqrt(x); }};
    f.min = 0.0;
    return f;
}

ScalarFunction inv_sqrt() {
    ScalarFunction f{"inv_sqrt", [](double x) { return 1.0 / std::sqrt(x); }};
    f.min = 0.0;
    f.min_exclusive = true;
    return f;
}

ScalarFunction atanh() {
    ScalarFunction f{"atanh", [](double x) { return std::atanh(x); }};
    f.min = -1.0;
    f.max = 1.0;
    f.min_exclusive = true;
    f.max_exclusive = true;
    return f;
}

ScalarFunction tanh() {
    return {"tanh", [](double x) { return std::tanh(x); }};
}

ScalarFunction tanh_of_scaled_atanh(double scale) {
    ScalarFunction f{"tanh_of_scaled_atanh",
                     [scale](double x) { return std::tanh(scale * std::atanh(x)); }};
    f.min = -1.0;
    f.max = 1.0;
    f.min_exclusive = true;
    f.max_exclusive = true;
    return f;
}

} // namespace scalar_fn

ComplexMatrix hermitian_function(const ComplexMatrix& p, const ScalarFunction& f) {
    if (p.rows() != p.cols()) {
        std::ostringstream msg;
        msg << "hermitian_function needs a square matrix, got " << p.rows() << "x" << p.cols();
        throw DimensionMismatch(msg.str());
    }
    require_finite(p, "hermitian_function input");

    const double scale = 1.0 + op_norm(p);
    if (op_norm(p - p.adjoint()) > kHermTol * scale) {
        throw NotHermitian("hermitian_function input is not Hermitian within tolerance");
    }

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hermitized(p));
    if (eig.info() != Eigen::Success) {
        throw NumericalError("eigendecomposition failed in hermitian_function");
    }

    const double clip = kHermTol * scale;
    Eigen::VectorXd values = eig.eigenvalues();
    for (Index i = 0; i < values.size(); ++i) {
        double& v = values(i);
        if (f.min_exclusive ? v <= f.min : v < f.min) {
            if (!f.min_exclusive && v >= f.min - clip) {
                v = f.min;
            } else {
                std::ostringstream msg;
                msg << "eigenvalue " << v << " outside the domain of " << f.name;
                throw SpectrumOutOfDomain(msg.str());
            }
        } else if (f.max_exclusive ? v >= f.max : v > f.max) {
            if (!f.max_exclusive && v <= f.max + clip) {
                v = f.max;
            } else {
                std::ostringstream msg;
                msg << "eigenvalue " << v << " outside the domain of " << f.name;
                throw SpectrumOutOfDomain(msg.str());
            }
        }
        v = f.fn(v);
    }

    return eig.eigenvectors() * values.cast<Complex>().asDiagonal() *
           eig.eigenvectors().adjoint();
}

PolarDecomposition polar(const ComplexMatrix& b) {
    require_finite(b, "polar input");

    Eigen::JacobiSVD<ComplexMatrix> svd(b, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const ComplexMatrix& u = svd.matrixU();
    const ComplexMatrix& w = svd.matrixV();

    PolarDecomposition result;
    result.positive = w * sv.cast<Complex>().asDiagonal() * w.adjoint();

    const double cutoff =
        sv.size() > 0
            ? static_cast<double>(std::max(b.rows(), b.cols())) *
                  std::numeric_limits<double>::epsilon() * sv(0)
            : 0.0;
    Index rank = 0;
    while (rank < sv.size() && sv(rank) > cutoff) {
        ++rank;
    }
    if (rank == 0) {
        result.isometry = ComplexMatrix::Zero(b.rows(), b.cols());
    } else {
        result.isometry = u.leftCols(rank) * w.leftCols(rank).adjoint();
    }
    return result;
}

} // namespace opmetric
