#include "ncclark/linalg.hpp"

#include "ncclark/error.hpp"

namespace ncclark {

namespace {

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hermitianEigen(const Eigen::MatrixXcd& G) {
    Eigen::MatrixXcd H = 0.5 * (G + G.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    require(es.info() == Eigen::Success, "eigendecomposition failed");
    return es;
}

} // namespace

GramQuotient gramQuotient(const Eigen::MatrixXcd& G, double floor) {
    auto es = hermitianEigen(G);
    const auto& vals = es.eigenvalues(); // ascending
    int M = static_cast<int>(G.rows());
    int r = 0;
    for (int i = 0; i < M; ++i)
        if (vals[i] > floor) ++r;
    GramQuotient q;
    q.rank = r;
    q.phi.resize(r, M);
    q.psi.resize(M, r);
    q.kept.resize(r);
    for (int k = 0; k < r; ++k) {
        int i = M - 1 - k; // descending order of retained eigenvalues
        double lam = vals[i];
        q.kept[k] = lam;
        q.phi.row(k) = std::sqrt(lam) * es.eigenvectors().col(i).adjoint();
        q.psi.col(k) = es.eigenvectors().col(i) / std::sqrt(lam);
    }
    return q;
}

Eigen::VectorXcd solveRegularized(const Eigen::MatrixXcd& G, const Eigen::VectorXcd& rhs,
                                  double eps) {
    Eigen::MatrixXcd A = 0.5 * (G + G.adjoint());
    A.diagonal().array() += eps;
    return A.ldlt().solve(rhs);
}

double maxAbsEigInMetric(const Eigen::MatrixXcd& D, const Eigen::MatrixXcd& G, double floor) {
    GramQuotient q = gramQuotient(G, floor);
    if (q.rank == 0) return 0.0;
    auto es = hermitianEigen(q.psi.adjoint() * D * q.psi);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

double minEigInMetric(const Eigen::MatrixXcd& D, const Eigen::MatrixXcd& G, double floor) {
    GramQuotient q = gramQuotient(G, floor);
    if (q.rank == 0) return 0.0;
    auto es = hermitianEigen(q.psi.adjoint() * D * q.psi);
    return es.eigenvalues().minCoeff();
}

double maxEigInMetric(const Eigen::MatrixXcd& D, const Eigen::MatrixXcd& G, double floor) {
    GramQuotient q = gramQuotient(G, floor);
    if (q.rank == 0) return 0.0;
    auto es = hermitianEigen(q.psi.adjoint() * D * q.psi);
    return es.eigenvalues().maxCoeff();
}

double minEigHermitian(const Eigen::MatrixXcd& A) {
    if (A.rows() == 0) return 0.0;
    return hermitianEigen(A).eigenvalues().minCoeff();
}

double maxAbsEigHermitian(const Eigen::MatrixXcd& A) {
    if (A.rows() == 0) return 0.0;
    return hermitianEigen(A).eigenvalues().cwiseAbs().maxCoeff();
}

} // namespace ncclark
