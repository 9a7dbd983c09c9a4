#include "opmetric/operator_space.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <utility>

namespace opmetric {

namespace {

void require_same_space(const char* op, const ClosedOperator& t, const ClosedOperator& s) {
    if (t.dim_h() != s.dim_h() || t.dim_k() != s.dim_k()) {
        std::ostringstream msg;
        msg << op << ": operators act between different spaces, " << t.dim_k() << "x"
            << t.dim_h() << " vs " << s.dim_k() << "x" << s.dim_h();
        throw DimensionMismatch(msg.str());
    }
}

ComplexMatrix sqrt_one_plus_gram(const ComplexMatrix& product) {
    return hermitian_function(
        hermitized(ComplexMatrix::Identity(product.rows(), product.cols()) + product),
        scalar_fn::sqrt());
}

} // namespace

ClosedOperator::ClosedOperator(ComplexMatrix mat) : mat_(std::move(mat)) {
    if (mat_.rows() < 1 || mat_.cols() < 1) {
        throw DimensionMismatch("operator needs at least one row and one column");
    }
    require_finite(mat_, "operator");
}

ClosedOperator ClosedOperator::zero(Index dim_h, Index dim_k) {
    return ClosedOperator(ComplexMatrix::Zero(dim_k, dim_h));
}

ClosedOperator negated(const ClosedOperator& t) {
    return ClosedOperator(-t.mat());
}

BallPoint hat(const ClosedOperator& t) {
    const ComplexMatrix& m = t.mat();
    const ComplexMatrix gram = hermitized(
        ComplexMatrix::Identity(t.dim_h(), t.dim_h()) + m.adjoint() * m);
    return BallPoint(hermitian_function(gram, scalar_fn::inv_sqrt()) * m.adjoint());
}

ClosedOperator unhat(const BallPoint& a) {
    const ComplexMatrix& m = a.mat();
    const ComplexMatrix gram = hermitized(
        ComplexMatrix::Identity(a.dim_k(), a.dim_k()) - m.adjoint() * m);
    return ClosedOperator(hermitian_function(gram, scalar_fn::inv_sqrt()) * m.adjoint());
}

ComplexMatrix left_factor(const ClosedOperator& t, const ClosedOperator& x) {
    require_same_space("left_factor", t, x);
    const ComplexMatrix& tm = t.mat();
    const ComplexMatrix& xm = x.mat();
    return sqrt_one_plus_gram(tm.adjoint() * tm) * xm.adjoint() -
           tm.adjoint() * sqrt_one_plus_gram(xm * xm.adjoint());
}

ComplexMatrix right_factor(const ClosedOperator& t, const ClosedOperator& x) {
    require_same_space("right_factor", t, x);
    const ComplexMatrix& tm = t.mat();
    const ComplexMatrix& xm = x.mat();
    return sqrt_one_plus_gram(xm * xm.adjoint()) * sqrt_one_plus_gram(tm * tm.adjoint()) -
           xm * tm.adjoint();
}

double distance_via_factors(const ClosedOperator& t, const ClosedOperator& s) {
    require_same_space("distance", t, s);
    const ComplexMatrix lf = left_factor(t, s);
    const ComplexMatrix rf = right_factor(s, t);
    Eigen::JacobiSVD<ComplexMatrix> svd(rf, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    if (!(smin > 0.0) || sv(0) / smin > kResolventCondLimit) {
        throw SingularResolvent("right distance factor is numerically singular");
    }
    const ComplexMatrix inv = svd.matrixV() * sv.cwiseInverse().cast<Complex>().asDiagonal() *
                              svd.matrixU().adjoint();
    return atanh_norm(op_norm(lf * inv));
}

double distance_via_ball(const ClosedOperator& t, const ClosedOperator& s) {
    require_same_space("distance", t, s);
    return kobayashi(hat(t), hat(s));
}

double distance(const ClosedOperator& t, const ClosedOperator& s) {
    require_same_space("distance", t, s);
    const ComplexMatrix rf = right_factor(s, t);
    Eigen::JacobiSVD<ComplexMatrix> svd(rf, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    if (!(smin > 0.0) || sv(0) / smin > kFactorCondLimit) {
        return distance_via_ball(t, s);
    }
    const ComplexMatrix inv = svd.matrixV() * sv.cwiseInverse().cast<Complex>().asDiagonal() *
                              svd.matrixU().adjoint();
    return atanh_norm(op_norm(left_factor(t, s) * inv));
}

BallAutomorphism transport_automorphism(const ClosedOperator& t) {
    return BallAutomorphism::moebius(negated(hat(t)));
}

BallPoint transport(const ClosedOperator& t, const BallPoint& x) {
    return apply(transport_automorphism(t), x);
}

ClosedOperator geodesic_point(const ClosedOperator& t, const ClosedOperator& s, double frac) {
    require_same_space("geodesic_point", t, s);
    if (!(frac >= 0.0 && frac <= 1.0)) {
        throw InputError("geodesic parameter must lie in [0, 1]");
    }
    const BallPoint b = transport(t, hat(s));
    const PolarDecomposition pd = polar(b.mat());
    const ComplexMatrix scaled =
        hermitian_function(pd.positive, scalar_fn::tanh_of_scaled_atanh(frac));
    const BallPoint w(pd.isometry * scaled);
    return unhat(transport(negated(t), w));
}

ClosedOperator midpoint(const ClosedOperator& t, const ClosedOperator& s) {
    return geodesic_point(t, s, 0.5);
}

BallAutomorphism symmetrize(const ClosedOperator& t, const ClosedOperator& s) {
    require_same_space("symmetrize", t, s);
    // Transport the pair by X -> transport(-T, -X); it sends hat(T) to the
    // origin's mirror position and hat(S) to b. Pulling the origin halfway
    // toward b along the radial geodesic makes the pair antipodal.
    const ClosedOperator tneg = negated(t);
    const BallPoint b = transport(tneg, negated(hat(s)));
    const PolarDecomposition pd = polar(b.mat());
    const ComplexMatrix half =
        hermitian_function(pd.positive, scalar_fn::tanh_of_scaled_atanh(0.5));
    const BallPoint a(pd.isometry * half);
    const ClosedOperator anchor = unhat(a);

    const Index m = b.dim_h();
    const Index n = b.dim_k();
    const BallAutomorphism negation(BallPoint::zero(m, n),
                                    -ComplexMatrix::Identity(m, m),
                                    ComplexMatrix::Identity(n, n));
    return compose(transport_automorphism(anchor),
                   compose(transport_automorphism(tneg), negation));
}

ClosedOperator barycenter(std::span<const ClosedOperator> points) {
    if (points.empty()) {
        throw InputError("barycenter of an empty configuration");
    }
    for (const ClosedOperator& p : points) {
        require_same_space("barycenter", points[0], p);
    }

    const std::size_t padded = std::bit_ceil(points.size());
    std::vector<ClosedOperator> level;
    level.reserve(padded);
    for (std::size_t i = 0; i < padded; ++i) {
        level.push_back(points[i % points.size()]);
    }
    while (level.size() > 1) {
        std::vector<ClosedOperator> next;
        next.reserve(level.size() / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
            next.push_back(midpoint(level[i], level[i + 1]));
        }
        level = std::move(next);
    }
    return level.front();
}

} // namespace opmetric
