#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "ncclark/multiindex.hpp"
#include "ncclark/states.hpp"

namespace ncclark {

// GNS space of a moment state at working degree N: the monomial classes
// [L^(n)], |n| <= N, with Gram metric G[n,m] = mu(L^(n)* L^(m)). The Gram
// may be singular; null vectors are quotiented out downstream, never here.
// Building at degree N consumes moments to 2N.
struct GnsSpace {
    MomentState mu;
    int N = 0;
    std::shared_ptr<const MonomialBasis> basis;
    Eigen::MatrixXcd gram;

    std::size_t size() const { return basis ? basis->size() : 0; }
    std::size_t size0() const { return size() - 1; } // degree >= 1 block
};

GnsSpace buildGnsSpace(const MomentState& mu, int N); // requires mu.N >= 2N

// Squared Gram distance from [I] to span{[L^(n)] : 1 <= |n| <= N}, with the
// minimizing coefficient vector. Solved through regularized normal equations
// (G0 + eps I) c = g0 with eps pinned at 1e-10; the distance is clamped at 0.
struct QuasiExtremeResult {
    double distance2 = 0.0;
    Eigen::VectorXcd projection; // coefficients over the degree >= 1 basis
};

QuasiExtremeResult quasiExtremeProjection(const GnsSpace& space);
double quasiExtremeDistance(const GnsSpace& space);

// distance^2 at each degree 1..maxN; nonincreasing. Requires mu.N >= 2*maxN.
std::vector<double> quasiExtremeCurve(const MomentState& mu, int maxN);

// The backward-shift tuple on the degree >= 1 block: backward[j-1] is the
// matrix of S_j* in monomial coordinates,
//   [L^(m)] -> [L^(m - e_j)]   if m_j >= 1, |m| >= 2,
//   [L^(e_j)] -> P0[I] = c     (the quasi-extreme projection of [I]),
//   [L^(m)] -> 0               if m_j = 0.
// gram0 is the metric of that block and moments keeps the full moment vector
// for pairing against [I].
struct GnsTuple {
    int d = 0;
    int N = 0;
    std::shared_ptr<const MonomialBasis> basis; // degree <= N, position 0 = identity
    std::vector<Eigen::MatrixXcd> backward;
    Eigen::MatrixXcd gram0;
    Eigen::VectorXcd c;
    Eigen::VectorXcd moments;
    double distance2 = 0.0;
};

GnsTuple buildGnsTuple(const GnsSpace& space);

// Largest eigenvalue of sum_j S_j S_j* in the Gram metric; row contraction
// means <= 1 (+ tolerance).
double rowContractionNorm(const GnsTuple& tuple);

// Largest |eigenvalue| of I - sum_j S_j S_j* in the Gram metric, restricted
// to monomials of degree <= N-1. The top degree is excluded: its backward
// images lose shifted-out mass to the truncation.
double coisometryDefect(const GnsTuple& tuple);

// <S^(n)[I], [I]> with S^(n) the sum of S_w over words with letter count n,
// computed by running the backward tuple on the projection of [I]. For a
// quasi-extreme state this reproduces mu(L^(n)). Requires |n| <= N-1 and
// tuple.distance2 <= threshold (the representation of [I] by c is only
// faithful near quasi-extremality).
Complex gnsVectorState(const GnsTuple& tuple, const MultiIndex& n, double threshold = 1e-6);

// Word-level GNS data for an extended state: Gram over words of length
// <= maxLen, resolved by the cancellation rule
//   L_v* L_w = L_{w'} if w = v w',  L_{v'}* if v = w v',  0 otherwise,
// together with the left-concatenation matrices U_j (zero on the top length,
// where concatenation leaves the truncation).
struct ExtendedGns {
    WordState nu;
    Eigen::MatrixXcd gramWords;
    std::vector<Eigen::MatrixXcd> U;

    const FockTruncation& words() const { return nu.words; }
};

ExtendedGns buildExtendedGns(const WordState& nu);

// Max |<U_i x, U_j y> - delta_ij <x, y>| over basis words x, y of length
// <= maxLen-1: exact row-isometry check (zero by construction).
double rowIsometryMismatch(const ExtendedGns& ext);

// Largest |eigenvalue| of sum_j U_j U_j* - I compressed to the span of words
// of length <= maxLen-1, in the word Gram metric. Small defect is the
// truncated signature of Cuntz (row unitary) behavior.
double cuntzDefect(const ExtendedGns& ext);

} // namespace ncclark
