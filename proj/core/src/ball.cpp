#include "opmetric/ball.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <utility>

namespace opmetric {

namespace {

void require_same_shape(const char* op, Index mh, Index mk, Index zh, Index zk) {
    if (mh != zh || mk != zk) {
        std::ostringstream msg;
        msg << op << ": shape mismatch, " << mh << "x" << mk << " vs " << zh << "x" << zk;
        throw DimensionMismatch(msg.str());
    }
}

// Solves (I + a* w) X = rhs, guarding the resolvent's condition number.
ComplexMatrix resolvent_solve(const ComplexMatrix& a, const ComplexMatrix& w,
                              const ComplexMatrix& rhs) {
    const Index n = a.cols();
    const ComplexMatrix resolvent = ComplexMatrix::Identity(n, n) + a.adjoint() * w;
    Eigen::JacobiSVD<ComplexMatrix> svd(resolvent,
                                        Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    if (!(smin > 0.0) || sv(0) / smin > kResolventCondLimit) {
        throw SingularResolvent("Moebius resolvent I + A*W is numerically singular");
    }
    return svd.solve(rhs);
}

// eta_a(w) = (I - a a*)^(-1/2) (w + a) (I + a* w)^(-1) (I - a* a)^(1/2),
// without wrapping the result in a BallPoint.
ComplexMatrix eta_raw(const ComplexMatrix& a, const ComplexMatrix& w) {
    const Index m = a.rows();
    const Index n = a.cols();
    const ComplexMatrix left = hermitian_function(
        hermitized(ComplexMatrix::Identity(m, m) - a * a.adjoint()), scalar_fn::inv_sqrt());
    const ComplexMatrix right = hermitian_function(
        hermitized(ComplexMatrix::Identity(n, n) - a.adjoint() * a), scalar_fn::sqrt());
    return left * (w + a) * resolvent_solve(a, w, right);
}

ComplexMatrix nearest_unitary(const ComplexMatrix& m) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

// Deterministic probe points for verifying a recovered normal form.
ComplexMatrix probe_matrix(Index m, Index n, std::uint64_t seed) {
    std::uint64_t state = seed;
    auto next = [&state]() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    auto coord = [&next]() { return static_cast<double>(next() >> 11) * 0x1.0p-52 - 1.0; };
    ComplexMatrix z(m, n);
    for (Index r = 0; r < m; ++r) {
        for (Index c = 0; c < n; ++c) {
            z(r, c) = Complex(coord(), coord());
        }
    }
    const double nrm = op_norm(z);
    if (nrm > 0.0) {
        z *= 0.45 / nrm;
    }
    return z;
}

} // namespace

double atanh_norm(double x) {
    if (x >= 1.0) {
        throw SingularResolvent("atanh argument reached 1: point pair touches the boundary");
    }
    return std::atanh(std::min(x, 1.0 - kAtanhClamp));
}

BallPoint::BallPoint(ComplexMatrix mat) : mat_(std::move(mat)) {
    require_finite(mat_, "ball point");
    const double nrm = op_norm(mat_);
    if (nrm > 1.0 - kBallMargin) {
        std::ostringstream msg;
        msg << "ball point has operator norm " << nrm << " > 1 - 1e-8";
        throw NormTooCloseToOne(msg.str());
    }
}

BallPoint BallPoint::zero(Index dim_h, Index dim_k) {
    return BallPoint(ComplexMatrix::Zero(dim_h, dim_k));
}

BallPoint negated(const BallPoint& p) {
    return BallPoint(-p.mat());
}

BallAutomorphism::BallAutomorphism(BallPoint param, ComplexMatrix u, ComplexMatrix v)
    : param_(std::move(param)), u_(std::move(u)), v_(std::move(v)) {
    const Index m = param_.dim_h();
    const Index n = param_.dim_k();
    if (u_.rows() != m || u_.cols() != m || v_.rows() != n || v_.cols() != n) {
        throw DimensionMismatch("automorphism unitaries do not match the Moebius parameter");
    }
    require_finite(u_, "automorphism U part");
    require_finite(v_, "automorphism V part");
    if (op_norm(u_.adjoint() * u_ - ComplexMatrix::Identity(m, m)) > kHermTol) {
        throw InputError("automorphism U part is not unitary within 1e-10");
    }
    if (op_norm(v_.adjoint() * v_ - ComplexMatrix::Identity(n, n)) > kHermTol) {
        throw InputError("automorphism V part is not unitary within 1e-10");
    }
}

BallAutomorphism BallAutomorphism::identity(Index dim_h, Index dim_k) {
    return {BallPoint::zero(dim_h, dim_k), ComplexMatrix::Identity(dim_h, dim_h),
            ComplexMatrix::Identity(dim_k, dim_k)};
}

BallAutomorphism BallAutomorphism::moebius(BallPoint param) {
    const Index m = param.dim_h();
    const Index n = param.dim_k();
    return {std::move(param), ComplexMatrix::Identity(m, m), ComplexMatrix::Identity(n, n)};
}

double poincare(Complex a, Complex b) {
    if (!(std::abs(a) < 1.0) || !(std::abs(b) < 1.0)) {
        throw OutsideDisc("poincare arguments must lie strictly inside the unit disc");
    }
    return atanh_norm(std::abs(a - b) / std::abs(1.0 - std::conj(a) * b));
}

BallPoint apply(const BallAutomorphism& g, const BallPoint& z) {
    require_same_shape("apply", g.dim_h(), g.dim_k(), z.dim_h(), z.dim_k());
    const ComplexMatrix w = g.u() * z.mat() * g.v();
    return BallPoint(eta_raw(g.param().mat(), w));
}

ComplexMatrix moebius_transport(const ComplexMatrix& x, const ComplexMatrix& z) {
    return eta_raw(-x, z);
}

double kobayashi(const BallPoint& x, const BallPoint& y) {
    require_same_shape("kobayashi", x.dim_h(), x.dim_k(), y.dim_h(), y.dim_k());
    return atanh_norm(op_norm(moebius_transport(x.mat(), y.mat())));
}

BallAutomorphism compose(const BallAutomorphism& g1, const BallAutomorphism& g2) {
    require_same_shape("compose", g1.dim_h(), g1.dim_k(), g2.dim_h(), g2.dim_k());
    const Index m = g1.dim_h();
    const Index n = g1.dim_k();

    BallPoint param = BallPoint::zero(m, n);
    try {
        param = apply(g1, apply(g2, BallPoint::zero(m, n)));
    } catch (const NormTooCloseToOne&) {
        throw NormalFormFailure("composed Moebius parameter violates the ball margin");
    }

    // h = M_param o g1 o g2 fixes the origin, so h(Z) = U' Z V' for some
    // unitaries. Probing h on matrix units eps*E_{rc} fills the tensor
    // P[(i, r), (c, j)] = U'(i, r) V'(c, j), a rank-one matrix once the row
    // index pairs (i, r) and column index pairs (c, j) are flattened. Its top
    // singular triplet factors into U' and V' up to one complex phase that
    // cancels in U' Z V', and two unitary Procrustes fits remove the residual
    // scaling.
    auto remainder = [&](const ComplexMatrix& z) {
        const BallPoint composed = apply(g1, apply(g2, BallPoint(z)));
        return moebius_transport(param.mat(), composed.mat());
    };

    const double eps = 0.5;
    ComplexMatrix tensor(m * m, n * n);
    for (Index r = 0; r < m; ++r) {
        for (Index c = 0; c < n; ++c) {
            ComplexMatrix unit = ComplexMatrix::Zero(m, n);
            unit(r, c) = eps;
            const ComplexMatrix image = remainder(unit) / eps;
            for (Index i = 0; i < m; ++i) {
                for (Index j = 0; j < n; ++j) {
                    tensor(i * m + r, c * n + j) = image(i, j);
                }
            }
        }
    }

    Eigen::JacobiSVD<ComplexMatrix> svd(tensor, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double sigma = svd.singularValues()(0);
    const Eigen::VectorXcd u_vec = svd.matrixU().col(0) * std::sqrt(sigma);
    const Eigen::VectorXcd v_vec = svd.matrixV().col(0).conjugate() * std::sqrt(sigma);

    ComplexMatrix u_fit(m, m);
    for (Index i = 0; i < m; ++i) {
        for (Index r = 0; r < m; ++r) {
            u_fit(i, r) = u_vec(i * m + r);
        }
    }
    ComplexMatrix v_fit(n, n);
    for (Index c = 0; c < n; ++c) {
        for (Index j = 0; j < n; ++j) {
            v_fit(c, j) = v_vec(c * n + j);
        }
    }

    BallAutomorphism result(param, nearest_unitary(u_fit), nearest_unitary(v_fit));

    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        const BallPoint z(probe_matrix(m, n, seed));
        const double defect =
            op_norm(apply(result, z).mat() - apply(g1, apply(g2, z)).mat());
        if (!(defect <= 1e-8)) {
            std::ostringstream msg;
            msg << "normal form reproduces the composition only to " << defect;
            throw NormalFormFailure(msg.str());
        }
    }
    return result;
}

BallAutomorphism inverse(const BallAutomorphism& g) {
    return {BallPoint(-(g.u().adjoint() * g.param().mat() * g.v().adjoint())),
            g.u().adjoint(), g.v().adjoint()};
}

} // namespace opmetric
