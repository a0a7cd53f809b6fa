#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ncclark/gns.hpp"
#include "ncclark/hbspace.hpp"
#include "ncclark/series.hpp"

namespace ncclark {

struct GleasonOptions {
    int gnsDegree = 8;          // truncation degree of the backing GNS tuple
    double qeThreshold = 1e-6;  // quasi-extremality gate on distance^2
    double radiusCap = 0.6;     // transform radius cap (lower it for d = 3)
    int sampleCount = 12;
    double sampleRadius = 0.5;
    std::uint64_t seed = 2026;
    int clarkDegree = 0;        // GNS degree of the intertwining check; 0 = by dimension
};

// The Gleason solution attached to a multiplier: the functions b_j with
// b(z) - b(0) = sum_j z_j b_j(z), realized on the mu-side as
// b_j = (1 - b(0)) V_mu(S_j*[I]) and tabulated on a kernel sample.
// Two construction paths:
//   computeBj          quasi-extreme b; full mu-side data (ctx, tuple, bjGram)
//   computeBjExplicit  caller-supplied b_j; series/sample data only
struct GleasonData {
    Multiplier b;
    Complex b0{};
    GleasonOptions options;
    bool quasiExtreme = false;
    bool hasMuSide = false;  // ctx/tuple/cj/bjGram populated
    double distance2 = -1.0; // -1 when not measured (explicit path)

    TransformContext ctx; // alpha = 1
    GnsTuple tuple;
    std::vector<Eigen::VectorXcd> cj; // A_j c, the mu-side preimages of b_j

    std::vector<TruncatedSeries> bj;
    Eigen::MatrixXcd bjGram; // (i, j) = <b_j, b_i> in H(b), pulled back to P^2(mu)
    double sumNormSq = 0.0;  // trace of bjGram; = 1 - |b(0)|^2 when extremal

    KernelSample sample;
    Eigen::MatrixXcd bjSampleValues; // (i, j) = b_j(w_i) over sample points
};

GleasonData computeBj(const Multiplier& b, const GleasonOptions& opts = {});
GleasonData computeBjExplicit(const Multiplier& b, std::vector<TruncatedSeries> bj,
                              const GleasonOptions& opts = {});

// max |b(z) - b(0) - sum_j z_j b_j(z)| over the sample points.
double gleasonResidual(const GleasonData& g);

// Values of X_j k^b_w at the sample points:
//   (X_j k^b_w)(z) = conj(w_j) k^b_w(z) - b_j(z) conj(b(w)).
Eigen::VectorXcd applyXOnKernel(const GleasonData& g, int j, const BallPoint& w);

// (X_j* f)(z) = z_j f(z) - <f, b_j> b(z) for f = sum_i gamma_i k^b_{w_i};
// the inner product uses the reproducing identity <k_w, b_j> = conj(b_j(w)).
Complex applyXStar(const GleasonData& g, int j, const Eigen::VectorXcd& gamma,
                   const BallPoint& z);

// Smallest eigenvalue, in the kernel Gram metric, of the sample-span form of
// I - k0 (x) k0 - sum_j X_j* X_j. Contractivity of the Gleason solution means
// this is >= 0 up to tolerance. Needs the mu-side bjGram.
double contractivityDefect(const GleasonData& g);

struct ClarkCheck {
    double intertwineResidual = 0.0;
    double isometryDefect = 0.0;
};

// Both sides of the Clark intertwining V_alpha S_j^{alpha*} G_w^alpha =
// (X_j + rank-one) k^b_w on the sample points, where the perturbed operator
// acts by T_j k^b_w = conj(w_j) k^b_w + lambda(w) b_j with
// lambda(w) = conj(alpha)(1 - conj(alpha) b(0))^{-1} (1 - alpha conj(b(w))).
// The left side runs through the alpha-rotated mu-side tuple; the right side
// through the kernel closed form. isometryDefect measures the column-isometry
// of the T_j tuple in the kernel Gram metric.
ClarkCheck clarkPerturbAndIntertwine(const GleasonData& g, Complex alpha);

struct ResolventCheck {
    double error = 0.0;
    int iterations = 0;
    int degree = 0; // GNS degree of the Neumann route (0 on the constant fast path)
};

// k^b_z = (I - X* z*)^{-1} k^b_0 checked against kbEval on the sample points.
// Constant b short-circuits to the scalar geometric series; otherwise the
// Neumann iteration runs in quotient coordinates of a dedicated GNS space
// (quasi-extreme b only).
ResolventCheck resolventKernelCheck(const GleasonData& g, const BallPoint& z);

struct AngularDerivative {
    std::vector<double> radii;
    std::vector<double> quotients;  // (1 - |b(r zeta)|^2) / (1 - r^2)
    std::vector<double> tailBounds; // series-truncation bound at each radius
    double L = 0.0;                 // last included quotient
    bool converged = false;         // last three quotients within 1% relative
    bool inconclusive = false;      // tail bound crowded out the schedule
};

// Radial angular-derivative estimate along r = 1 - 2^{-k}, k = 1..maxK.
// Radii where the truncation tail exceeds 10% of the quotient are dropped.
AngularDerivative angularDerivative(const Multiplier& b, const BallPoint& zeta, int maxK = 20);

struct EigenCheck {
    bool predicted = false;
    std::string verdict;
    double residual = 0.0; // eigen-equation residual over sample points
    double normSq = 0.0;   // Re (1 - conj(alpha) b(r zeta)) / (1 - r) at the last radius
    double L = 0.0;        // angular-derivative estimate
    AngularDerivative angular;
};

// Boundary eigenvalue check at a sphere point: when the angular derivative
// converges and the radial limit of b matches alpha (within 1e-3), the kernel
// k^b_zeta(z) = (1 - conj(alpha) b(z)) / (1 - <z, zeta>) should satisfy
// sum_j conj(zeta_j) T_j k^b_zeta = k^b_zeta with squared norm L. Otherwise
// the verdict is "no eigenvalue predicted".
EigenCheck eigenCheck(const GleasonData& g, Complex alpha, const BallPoint& zeta);

} // namespace ncclark
