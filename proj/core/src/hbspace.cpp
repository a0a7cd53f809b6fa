#include "ncclark/hbspace.hpp"

#include <cmath>
#include <random>
#include <string>

#include "ncclark/error.hpp"
#include "ncclark/gns.hpp"
#include "ncclark/linalg.hpp"

namespace ncclark {

static double ballNorm(std::span<const Complex> z) {
    double s = 0.0;
    for (Complex c : z) s += std::norm(c);
    return std::sqrt(s);
}

Complex kbEval(const Multiplier& b, std::span<const Complex> z, std::span<const Complex> w) {
    require(ballNorm(z) < 1.0 && ballNorm(w) < 1.0, "kernel arguments must lie in the open ball");
    Complex inner{};
    for (std::size_t j = 0; j < z.size(); ++j) inner += z[j] * std::conj(w[j]);
    return (1.0 - tsEvaluate(b.series, z) * std::conj(tsEvaluate(b.series, w))) / (1.0 - inner);
}

KernelSample kernelSampleAt(const Multiplier& b, std::vector<BallPoint> points) {
    KernelSample sample;
    sample.points = std::move(points);
    auto M = static_cast<Eigen::Index>(sample.points.size());
    sample.gram.resize(M, M);
    for (Eigen::Index i = 0; i < M; ++i)
        for (Eigen::Index j = 0; j < M; ++j)
            sample.gram(i, j) = kbEval(b, sample.points[static_cast<std::size_t>(i)],
                                       sample.points[static_cast<std::size_t>(j)]);
    sample.minEig = M > 0 ? minEigHermitian(sample.gram) : 0.0;
    return sample;
}

KernelSample makeKernelSample(const Multiplier& b, int count, double radius, std::uint64_t seed) {
    require(count >= 1, "need at least one sample point");
    require(radius > 0.0 && radius < 1.0, "sample radius must lie in (0, 1)");
    std::mt19937_64 rng(seed);
    // Explicit bit mapping keeps the stream identical across standard libraries.
    auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<BallPoint> points;
    points.reserve(static_cast<std::size_t>(count));
    int d = b.d();
    while (static_cast<int>(points.size()) < count) {
        BallPoint v(static_cast<std::size_t>(d));
        double norm2 = 0.0;
        for (auto& c : v) {
            c = Complex{2.0 * unit() - 1.0, 2.0 * unit() - 1.0};
            norm2 += std::norm(c);
        }
        if (norm2 > 1.0) continue;
        for (auto& c : v) c *= radius;
        points.push_back(std::move(v));
    }
    return kernelSampleAt(b, std::move(points));
}

int tailDegreeFor(double radius) {
    require(radius > 0.0 && radius < 1.0, "radius must lie in (0, 1)");
    double tail = radius / (1.0 - radius); // sum_{k > K} radius^k at K = 0
    int K = 0;
    while (tail > 1e-10) {
        tail *= radius;
        ++K;
        require(K <= 100000, "tail degree diverged");
    }
    return K;
}

TransformContext makeTransformContext(const Multiplier& b, Complex alpha, double radiusCap) {
    require(std::abs(std::abs(alpha) - 1.0) <= 1e-12, "alpha must be unimodular");
    TransformContext ctx;
    ctx.b = b;
    ctx.alpha = alpha;
    ctx.radiusCap = radiusCap;
    ctx.tailDegree = tailDegreeFor(radiusCap);
    if (b.series.N < 2 * ctx.tailDegree)
        throwDomain("transform context at cap " + std::to_string(radiusCap) +
                    " needs the multiplier series to degree " +
                    std::to_string(2 * ctx.tailDegree) + ", got " + std::to_string(b.series.N));
    ctx.mu = acState(b, alpha, 2 * ctx.tailDegree);
    return ctx;
}

// w^n for every basis index, via per-coordinate power tables.
static std::vector<Complex> monomialValues(const MonomialBasis& basis,
                                           std::span<const Complex> w) {
    int d = basis.dimension();
    int N = basis.maxDegree();
    std::vector<std::vector<Complex>> pow(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        auto& col = pow[static_cast<std::size_t>(j)];
        col.assign(static_cast<std::size_t>(N) + 1, 1.0);
        for (int k = 1; k <= N; ++k)
            col[static_cast<std::size_t>(k)] = col[static_cast<std::size_t>(k - 1)] *
                                               w[static_cast<std::size_t>(j)];
    }
    std::vector<Complex> vals(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const MultiIndex& n = basis.at(i);
        Complex v = 1.0;
        for (int j = 0; j < d; ++j) v *= pow[static_cast<std::size_t>(j)][static_cast<std::size_t>(n[static_cast<std::size_t>(j)])];
        vals[i] = v;
    }
    return vals;
}

SymElement resolventElement(std::span<const Complex> w, int K) {
    int d = static_cast<int>(w.size());
    SymElement p(d);
    std::vector<Complex> wbar(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) wbar[j] = std::conj(w[j]);
    auto basis = basisFor(d, K);
    std::vector<Complex> vals = monomialValues(*basis, wbar);
    for (std::size_t i = 0; i < basis->size(); ++i)
        if (vals[i] != Complex{}) p.addPlus(basis->at(i), vals[i]);
    return p;
}

SymElement resolventKernelElement(const TransformContext& ctx, std::span<const Complex> w) {
    Complex factor = 1.0 - ctx.alpha * std::conj(tsEvaluate(ctx.b.series, w));
    SymElement p = resolventElement(w, ctx.tailDegree);
    for (auto& [n, c] : p.plus) c *= factor;
    return p;
}

TruncatedSeries cauchyTransformSeries(const TransformContext& ctx, const SymElement& p) {
    require(p.minus.empty(), "Cauchy transform takes analytic-part elements");
    require(p.d == ctx.b.d(), "dimension mismatch");
    require(p.maxAnalyticDegree() <= ctx.mu.N,
            "element degree exceeds the context moment range");
    TruncatedSeries out(ctx.b.d(), ctx.tailDegree);
    for (std::size_t i = 0; i < out.basis->size(); ++i) {
        const MultiIndex& n = out.basis->at(i);
        Complex s{};
        for (const auto& [m, pm] : p.plus) s += pm * momentOfPair(ctx.mu, n, m);
        out.coeffs[i] = s;
    }
    return out;
}

Complex cauchyTransform(const TransformContext& ctx, const SymElement& p,
                        std::span<const Complex> z) {
    require(ballNorm(z) <= ctx.radiusCap + 1e-12, "evaluation point exceeds the radius cap");
    return tsEvaluate(cauchyTransformSeries(ctx, p), z);
}

Complex fantappieTransform(const TransformContext& ctx, const SymElement& p,
                           std::span<const Complex> z) {
    return (1.0 - std::conj(ctx.alpha) * tsEvaluate(ctx.b.series, z)) *
           cauchyTransform(ctx, p, z);
}

UnitarityReport unitarityCheck(const TransformContext& ctx,
                               const std::vector<BallPoint>& points) {
    for (const auto& w : points)
        require(ballNorm(w) <= ctx.radiusCap + 1e-12, "sample point exceeds the radius cap");
    int K = ctx.tailDegree;
    GnsSpace space = buildGnsSpace(ctx.mu, K);
    auto M = static_cast<Eigen::Index>(space.size());
    auto P = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXcd C(M, P);
    for (Eigen::Index j = 0; j < P; ++j) {
        const BallPoint& w = points[static_cast<std::size_t>(j)];
        Complex factor = 1.0 - ctx.alpha * std::conj(tsEvaluate(ctx.b.series, w));
        BallPoint wbar(w.size());
        for (std::size_t t = 0; t < w.size(); ++t) wbar[t] = std::conj(w[t]);
        std::vector<Complex> vals = monomialValues(*space.basis, wbar);
        for (Eigen::Index i = 0; i < M; ++i)
            C(i, j) = factor * vals[static_cast<std::size_t>(i)];
    }
    UnitarityReport rep;
    rep.momentGram = C.adjoint() * space.gram * C;
    rep.kernelGram.resize(P, P);
    for (Eigen::Index i = 0; i < P; ++i)
        for (Eigen::Index j = 0; j < P; ++j)
            rep.kernelGram(i, j) = kbEval(ctx.b, points[static_cast<std::size_t>(i)],
                                          points[static_cast<std::size_t>(j)]);
    rep.maxAbsError = P > 0 ? (rep.momentGram - rep.kernelGram).cwiseAbs().maxCoeff() : 0.0;
    return rep;
}

} // namespace ncclark
