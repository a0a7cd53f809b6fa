#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ncclark/freealg.hpp"
#include "ncclark/series.hpp"
#include "ncclark/states.hpp"

namespace ncclark {

// k^b(z, w) = (1 - b(z) conj(b(w))) / (1 - <z, w>). Requires |z|, |w| < 1.
Complex kbEval(const Multiplier& b, std::span<const Complex> z, std::span<const Complex> w);

using BallPoint = std::vector<Complex>;

// Deterministic sample of ball points with the kernel Gram at those points.
// minEig is the operational contractivity diagnostic: a genuine contractive
// multiplier keeps it >= -1e-8.
struct KernelSample {
    std::vector<BallPoint> points;
    Eigen::MatrixXcd gram; // gram(i, j) = k^b(w_i, w_j)
    double minEig = 0.0;
};

KernelSample makeKernelSample(const Multiplier& b, int count, double radius,
                              std::uint64_t seed = 2026);

// Kernel Gram at caller-chosen points.
KernelSample kernelSampleAt(const Multiplier& b, std::vector<BallPoint> points);

// Smallest K with radius^(K+1) / (1 - radius) <= 1e-10: past degree K the
// geometric resolvent tail is below reporting tolerance on |z| <= radius.
int tailDegreeFor(double radius);

// Shared data for the Cauchy and Fantappie transforms of the state mu_alpha:
// moments to degree 2K with K the tail degree of the radius cap, so every
// pairing of two degree <= K elements stays inside the moment range.
struct TransformContext {
    Multiplier b;
    Complex alpha{1.0, 0.0};
    double radiusCap = 0.6;
    int tailDegree = 0;
    MomentState mu;
};

TransformContext makeTransformContext(const Multiplier& b, Complex alpha,
                                      double radiusCap = 0.6);

// Truncation of (I - L w*)^{-1} = sum_n conj(w^n) L^(n) at degree K.
SymElement resolventElement(std::span<const Complex> w, int K);

// G_w^alpha = (1 - alpha conj(b(w))) (I - L w*)^{-1}: the element the
// Fantappie transform carries to the kernel k^b(., w).
SymElement resolventKernelElement(const TransformContext& ctx, std::span<const Complex> w);

// Coefficients mu(L^(n)* p(L)) over |n| <= tailDegree: the Cauchy transform
// mu((I - zL*)^{-1} p(L)) as a truncated series in z.
TruncatedSeries cauchyTransformSeries(const TransformContext& ctx, const SymElement& p);

// The series above evaluated at z. Requires |z| <= radiusCap.
Complex cauchyTransform(const TransformContext& ctx, const SymElement& p,
                        std::span<const Complex> z);

// (1 - conj(alpha) b(z)) * cauchyTransform: the normalized Fantappie
// transform of the alpha-rotated state.
Complex fantappieTransform(const TransformContext& ctx, const SymElement& p,
                           std::span<const Complex> z);

// Gram comparison behind the unitarity of the Fantappie transform: the
// P^2(mu_alpha) Gram of the truncated G_w elements against the k^b kernel
// Gram at the same points (the two kernels agree since k^{conj(alpha) b} = k^b).
struct UnitarityReport {
    Eigen::MatrixXcd momentGram;
    Eigen::MatrixXcd kernelGram;
    double maxAbsError = 0.0;
};

UnitarityReport unitarityCheck(const TransformContext& ctx,
                               const std::vector<BallPoint>& points);

} // namespace ncclark
