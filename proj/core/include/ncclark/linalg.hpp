#pragma once

#include <Eigen/Dense>

namespace ncclark {

// Orthonormal coordinates on the quotient of a degenerate Gram metric.
// From G = U diag(lambda) U* keep lambda > floor:
//   phi (r x M) maps coefficient vectors to orthonormal coordinates,
//   psi (M x r) is a right inverse, phi* phi recovers G on the kept range.
// Null directions are intrinsic here (classes of zero norm), never an error.
struct GramQuotient {
    Eigen::MatrixXcd phi;
    Eigen::MatrixXcd psi;
    Eigen::VectorXd kept; // retained eigenvalues, descending
    int rank = 0;

    // Lift of an operator given as a coefficient-space matrix, valid when the
    // operator maps null vectors to null vectors.
    Eigen::MatrixXcd lift(const Eigen::MatrixXcd& T) const { return phi * T * psi; }
    // Orthonormal coordinates of a coefficient vector.
    Eigen::VectorXcd coords(const Eigen::VectorXcd& x) const { return phi * x; }
    Eigen::VectorXcd back(const Eigen::VectorXcd& y) const { return psi * y; }
};

GramQuotient gramQuotient(const Eigen::MatrixXcd& G, double floor = 1e-10);

// (G + eps I) x = rhs by LDLT; the regularization keeps degenerate Grams solvable.
Eigen::VectorXcd solveRegularized(const Eigen::MatrixXcd& G, const Eigen::VectorXcd& rhs,
                                  double eps = 1e-10);

// Extremes of the Hermitian form D over the unit sphere of the (possibly
// degenerate) metric G: eigenvalues of psi* D psi in quotient coordinates.
double maxAbsEigInMetric(const Eigen::MatrixXcd& D, const Eigen::MatrixXcd& G,
                         double floor = 1e-10);
double minEigInMetric(const Eigen::MatrixXcd& D, const Eigen::MatrixXcd& G,
                      double floor = 1e-10);
double maxEigInMetric(const Eigen::MatrixXcd& D, const Eigen::MatrixXcd& G,
                      double floor = 1e-10);

double minEigHermitian(const Eigen::MatrixXcd& A);
double maxAbsEigHermitian(const Eigen::MatrixXcd& A);

} // namespace ncclark
