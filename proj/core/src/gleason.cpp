#include "ncclark/gleason.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ncclark/error.hpp"
#include "ncclark/linalg.hpp"

namespace ncclark {

// Coordinate vector over the degree >= 1 monomials -> operator-system element.
static SymElement elementFromS0(const MonomialBasis& basis, const Eigen::VectorXcd& v) {
    SymElement p(basis.dimension());
    for (Eigen::Index k = 0; k < v.size(); ++k)
        if (v[k] != Complex{}) p.addPlus(basis.at(static_cast<std::size_t>(k) + 1), v[k]);
    return p;
}

static Eigen::MatrixXcd tabulateOnSample(const std::vector<TruncatedSeries>& bj,
                                         const KernelSample& sample) {
    Eigen::MatrixXcd vals(static_cast<Eigen::Index>(sample.points.size()),
                          static_cast<Eigen::Index>(bj.size()));
    for (Eigen::Index i = 0; i < vals.rows(); ++i)
        for (Eigen::Index j = 0; j < vals.cols(); ++j)
            vals(i, j) = tsEvaluate(bj[static_cast<std::size_t>(j)],
                                    sample.points[static_cast<std::size_t>(i)]);
    return vals;
}

GleasonData computeBj(const Multiplier& b, const GleasonOptions& opts) {
    GleasonData g;
    g.b = b;
    g.b0 = b.atOrigin();
    g.options = opts;
    g.ctx = makeTransformContext(b, 1.0, opts.radiusCap);
    g.tuple = buildGnsTuple(buildGnsSpace(g.ctx.mu, opts.gnsDegree));
    g.distance2 = g.tuple.distance2;
    if (g.distance2 > opts.qeThreshold)
        throwDomain("Gleason formula needs a quasi-extreme multiplier (distance^2 = " +
                    std::to_string(g.distance2) + " at degree " +
                    std::to_string(opts.gnsDegree) + "); supply b_j through computeBjExplicit");
    g.quasiExtreme = true;
    g.hasMuSide = true;
    int d = b.d();
    g.cj.reserve(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
        g.cj.push_back(g.tuple.backward[static_cast<std::size_t>(j)] * g.tuple.c);
    TruncatedSeries oneMinusB = tsAdd(tsConstant(d, g.ctx.tailDegree, 1.0),
                                      tsResize(b.series, g.ctx.tailDegree), 1.0, -1.0);
    g.bj.reserve(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        SymElement p = elementFromS0(*g.tuple.basis, g.cj[static_cast<std::size_t>(j)]);
        g.bj.push_back(
            tsScale(tsMul(oneMinusB, cauchyTransformSeries(g.ctx, p)), 1.0 - g.b0));
    }
    g.bjGram.resize(d, d);
    double scale = std::norm(1.0 - g.b0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            g.bjGram(i, j) = scale * (g.cj[static_cast<std::size_t>(i)].adjoint() *
                                      g.tuple.gram0 * g.cj[static_cast<std::size_t>(j)])(0);
    g.sumNormSq = g.bjGram.trace().real();
    g.sample = makeKernelSample(b, opts.sampleCount, opts.sampleRadius, opts.seed);
    g.bjSampleValues = tabulateOnSample(g.bj, g.sample);
    return g;
}

GleasonData computeBjExplicit(const Multiplier& b, std::vector<TruncatedSeries> bj,
                              const GleasonOptions& opts) {
    require(static_cast<int>(bj.size()) == b.d(), "need one b_j per coordinate");
    for (const auto& s : bj) require(s.d == b.d(), "b_j dimension mismatch");
    GleasonData g;
    g.b = b;
    g.b0 = b.atOrigin();
    g.options = opts;
    g.bj = std::move(bj);
    g.sample = makeKernelSample(b, opts.sampleCount, opts.sampleRadius, opts.seed);
    g.bjSampleValues = tabulateOnSample(g.bj, g.sample);
    return g;
}

double gleasonResidual(const GleasonData& g) {
    double worst = 0.0;
    for (std::size_t i = 0; i < g.sample.points.size(); ++i) {
        const BallPoint& z = g.sample.points[i];
        Complex s = tsEvaluate(g.b.series, z) - g.b0;
        for (int j = 0; j < g.b.d(); ++j)
            s -= z[static_cast<std::size_t>(j)] *
                 g.bjSampleValues(static_cast<Eigen::Index>(i), j);
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

Eigen::VectorXcd applyXOnKernel(const GleasonData& g, int j, const BallPoint& w) {
    require(j >= 1 && j <= g.b.d(), "coordinate out of range");
    Complex bw = std::conj(tsEvaluate(g.b.series, w));
    Complex wj = std::conj(w[static_cast<std::size_t>(j - 1)]);
    Eigen::VectorXcd vals(static_cast<Eigen::Index>(g.sample.points.size()));
    for (Eigen::Index i = 0; i < vals.size(); ++i)
        vals(i) = wj * kbEval(g.b, g.sample.points[static_cast<std::size_t>(i)], w) -
                  g.bjSampleValues(i, j - 1) * bw;
    return vals;
}

Complex applyXStar(const GleasonData& g, int j, const Eigen::VectorXcd& gamma,
                   const BallPoint& z) {
    require(j >= 1 && j <= g.b.d(), "coordinate out of range");
    require(gamma.size() == static_cast<Eigen::Index>(g.sample.points.size()),
            "coefficient count must match the sample");
    Complex fz{};
    Complex fb{};
    for (Eigen::Index i = 0; i < gamma.size(); ++i) {
        fz += gamma(i) * kbEval(g.b, z, g.sample.points[static_cast<std::size_t>(i)]);
        fb += gamma(i) * std::conj(g.bjSampleValues(i, j - 1));
    }
    return z[static_cast<std::size_t>(j - 1)] * fz - fb * tsEvaluate(g.b.series, z);
}

double contractivityDefect(const GleasonData& g) {
    require(g.hasMuSide, "contractivity form needs the mu-side b_j Gram");
    auto P = static_cast<Eigen::Index>(g.sample.points.size());
    int d = g.b.d();
    const Eigen::MatrixXcd& K = g.sample.gram;
    BallPoint origin(static_cast<std::size_t>(d), Complex{});
    Eigen::VectorXcd k0(P);  // k0(i) = k^b_{w_i}(0)
    Eigen::VectorXcd bw(P);  // b(w_i)
    for (Eigen::Index i = 0; i < P; ++i) {
        k0(i) = kbEval(g.b, origin, g.sample.points[static_cast<std::size_t>(i)]);
        bw(i) = tsEvaluate(g.b.series, g.sample.points[static_cast<std::size_t>(i)]);
    }
    Eigen::MatrixXcd D = K;
    for (Eigen::Index i = 0; i < P; ++i)
        for (Eigen::Index ip = 0; ip < P; ++ip) {
            D(i, ip) -= k0(ip) * std::conj(k0(i));
            const BallPoint& wi = g.sample.points[static_cast<std::size_t>(i)];
            const BallPoint& wip = g.sample.points[static_cast<std::size_t>(ip)];
            for (int j = 0; j < d; ++j) {
                Complex wj = wi[static_cast<std::size_t>(j)];
                Complex wjp = std::conj(wip[static_cast<std::size_t>(j)]);
                D(i, ip) -= wjp * wj * K(i, ip) -
                            wjp * bw(i) * std::conj(g.bjSampleValues(ip, j)) -
                            std::conj(bw(ip)) * wj * g.bjSampleValues(i, j) +
                            std::conj(bw(ip)) * bw(i) * g.bjGram(j, j);
            }
        }
    return minEigInMetric(D, K);
}

ClarkCheck clarkPerturbAndIntertwine(const GleasonData& g, Complex alpha) {
    require(std::abs(std::abs(alpha) - 1.0) <= 1e-12, "alpha must be unimodular");
    require(g.quasiExtreme && g.hasMuSide,
            "Clark perturbation needs the quasi-extreme mu-side data");
    int d = g.b.d();
    int NG = g.options.clarkDegree > 0 ? g.options.clarkDegree : (d <= 2 ? 34 : 14);
    TransformContext ctxA =
        alpha == Complex{1.0, 0.0} ? g.ctx : makeTransformContext(g.b, alpha, g.options.radiusCap);
    GnsTuple tupleA = buildGnsTuple(buildGnsSpace(ctxA.mu, NG));
    const MonomialBasis& nb = *tupleA.basis;
    auto interior = static_cast<Eigen::Index>(nb.degreeEnd(NG - 1) - 1);
    Complex lamScale = std::conj(alpha) / (1.0 - std::conj(alpha) * g.b0);

    ClarkCheck check;
    auto P = static_cast<Eigen::Index>(g.sample.points.size());
    Eigen::VectorXcd lam(P);
    for (Eigen::Index iw = 0; iw < P; ++iw) {
        const BallPoint& w = g.sample.points[static_cast<std::size_t>(iw)];
        Complex bw = tsEvaluate(g.b.series, w);
        Complex factor = 1.0 - alpha * std::conj(bw);
        lam(iw) = lamScale * factor;
        BallPoint wbar(w.size());
        for (std::size_t t = 0; t < w.size(); ++t) wbar[t] = std::conj(w[t]);
        // conj(w^m) over the tuple basis, for the geometric part of G_w.
        TruncatedSeries geomVals(d, NG);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            const MultiIndex& m = nb.at(k);
            Complex v = 1.0;
            for (int t = 0; t < d; ++t)
                for (int rep = 0; rep < m[static_cast<std::size_t>(t)]; ++rep)
                    v *= wbar[static_cast<std::size_t>(t)];
            geomVals.coeffs[k] = v;
        }
        for (int j = 1; j <= d; ++j) {
            // S_j^{alpha*}[G_w^alpha] in S0 coordinates: the backward image of
            // [I] plus conj(w_j) times ([I] itself and the shifted geometric tail).
            Eigen::VectorXcd v = tupleA.backward[static_cast<std::size_t>(j - 1)] * tupleA.c;
            Eigen::VectorXcd geom = tupleA.c;
            for (Eigen::Index k = 0; k < interior; ++k)
                geom(k) += geomVals.coeffs[static_cast<std::size_t>(k) + 1];
            v += std::conj(w[static_cast<std::size_t>(j - 1)]) * geom;
            v *= factor;
            TruncatedSeries lhs = cauchyTransformSeries(ctxA, elementFromS0(nb, v));
            for (std::size_t iz = 0; iz < g.sample.points.size(); ++iz) {
                const BallPoint& z = g.sample.points[iz];
                Complex lhsVal = (1.0 - std::conj(alpha) * tsEvaluate(g.b.series, z)) *
                                 tsEvaluate(lhs, z);
                Complex rhsVal = std::conj(w[static_cast<std::size_t>(j - 1)]) *
                                     kbEval(g.b, z, w) +
                                 lam(iw) * tsEvaluate(g.bj[static_cast<std::size_t>(j - 1)], z);
                check.intertwineResidual =
                    std::max(check.intertwineResidual, std::abs(lhsVal - rhsVal));
            }
        }
    }

    // Column isometry of T_j k_w = conj(w_j) k_w + lambda(w) b_j on the span.
    const Eigen::MatrixXcd& K = g.sample.gram;
    Eigen::MatrixXcd F = Eigen::MatrixXcd::Zero(P, P);
    double normSqSum = 0.0;
    for (int j = 0; j < d; ++j) normSqSum += g.bjGram(j, j).real();
    for (Eigen::Index i = 0; i < P; ++i)
        for (Eigen::Index ip = 0; ip < P; ++ip) {
            const BallPoint& wi = g.sample.points[static_cast<std::size_t>(i)];
            const BallPoint& wip = g.sample.points[static_cast<std::size_t>(ip)];
            for (int j = 0; j < d; ++j) {
                Complex wj = wi[static_cast<std::size_t>(j)];
                Complex wjp = std::conj(wip[static_cast<std::size_t>(j)]);
                F(i, ip) += wjp * wj * K(i, ip) +
                            wjp * std::conj(lam(i)) * std::conj(g.bjSampleValues(ip, j)) +
                            lam(ip) * wj * g.bjSampleValues(i, j);
            }
            F(i, ip) += lam(ip) * std::conj(lam(i)) * normSqSum;
        }
    check.isometryDefect = maxAbsEigInMetric(F - K, K);
    return check;
}

static int neumannIterations(double znorm) {
    double base = std::max(znorm, 0.1);
    return std::max(40, static_cast<int>(std::ceil(std::log(1e-9) / std::log(base))));
}

ResolventCheck resolventKernelCheck(const GleasonData& g, const BallPoint& z) {
    double znorm = 0.0;
    for (Complex c : z) znorm += std::norm(c);
    znorm = std::sqrt(znorm);
    require(znorm <= g.options.radiusCap + 1e-12, "point exceeds the radius cap");
    ResolventCheck out;
    out.iterations = neumannIterations(znorm);
    int d = g.b.d();
    if (g.b.series.maxNonzeroDegree() <= 0) {
        // Constant b: the X*-tuple is plain multiplication by z_j, so the
        // Neumann sum collapses to a scalar geometric series.
        double c0 = 1.0 - std::norm(g.b0);
        for (const BallPoint& w : g.sample.points) {
            Complex inner{};
            for (int j = 0; j < d; ++j)
                inner += w[static_cast<std::size_t>(j)] * std::conj(z[static_cast<std::size_t>(j)]);
            Complex geo{};
            Complex pw = 1.0;
            for (int k = 0; k <= out.iterations; ++k) {
                geo += pw;
                pw *= inner;
            }
            out.error = std::max(out.error, std::abs(c0 * geo - kbEval(g.b, w, z)));
        }
        return out;
    }
    require(g.quasiExtreme && g.hasMuSide,
            "resolvent route needs a quasi-extreme multiplier (or constant b)");
    out.degree = d == 1 ? 40 : 32;
    GnsTuple tuple = buildGnsTuple(buildGnsSpace(g.ctx.mu, out.degree));
    GramQuotient q = gramQuotient(tuple.gram0);
    std::vector<Eigen::MatrixXcd> shat;
    std::vector<Eigen::VectorXcd> beta;
    shat.reserve(static_cast<std::size_t>(d));
    beta.reserve(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        const Eigen::MatrixXcd& A = tuple.backward[static_cast<std::size_t>(j)];
        shat.push_back(q.lift(A).adjoint());
        beta.push_back(q.coords((1.0 - g.b0) * (A * tuple.c)));
    }
    Eigen::VectorXcd cq = q.coords(tuple.c);
    Eigen::VectorXcd x = (1.0 - std::conj(g.b0)) * cq;
    Eigen::VectorXcd acc = x;
    for (int m = 0; m < out.iterations; ++m) {
        Eigen::VectorXcd next = Eigen::VectorXcd::Zero(x.size());
        for (int j = 0; j < d; ++j) {
            Complex zj = std::conj(z[static_cast<std::size_t>(j)]);
            if (zj == Complex{}) continue;
            next += zj * (shat[static_cast<std::size_t>(j)] * x -
                          (beta[static_cast<std::size_t>(j)].adjoint() * x)(0) * cq);
        }
        x = std::move(next);
        acc += x;
    }
    TruncatedSeries series =
        cauchyTransformSeries(g.ctx, elementFromS0(*tuple.basis, q.back(acc)));
    for (const BallPoint& w : g.sample.points) {
        Complex value = (1.0 - tsEvaluate(g.b.series, w)) * tsEvaluate(series, w);
        out.error = std::max(out.error, std::abs(value - kbEval(g.b, w, z)));
    }
    return out;
}

AngularDerivative angularDerivative(const Multiplier& b, const BallPoint& zeta, int maxK) {
    double norm2 = 0.0;
    for (Complex c : zeta) norm2 += std::norm(c);
    require(std::abs(std::sqrt(norm2) - 1.0) <= 1e-12, "zeta must lie on the unit sphere");
    const TruncatedSeries& s = b.series;
    // l1 mass per degree block drives the truncation-tail model.
    std::vector<double> mass(static_cast<std::size_t>(s.N) + 1, 0.0);
    for (std::size_t i = 0; i < s.coeffs.size(); ++i)
        mass[static_cast<std::size_t>(totalDegree(s.basis->at(i)))] += std::abs(s.coeffs[i]);
    bool terminated = s.N == 0 || mass[static_cast<std::size_t>(s.N)] == 0.0;
    double topMass = mass[static_cast<std::size_t>(s.N)];
    double prevMass = s.N >= 1 ? mass[static_cast<std::size_t>(s.N) - 1] : 0.0;
    double rho = (!terminated && prevMass > 0.0) ? topMass / prevMass : 0.0;

    AngularDerivative ad;
    BallPoint rz(zeta.size());
    for (int k = 1; k <= maxK; ++k) {
        double r = 1.0 - std::ldexp(1.0, -k);
        double tail = 0.0;
        if (!terminated) {
            double rr = rho * r;
            if (rr >= 1.0) break; // no geometric control left at this radius
            tail = topMass * std::pow(r, s.N) * rr / (1.0 - rr);
        }
        for (std::size_t t = 0; t < zeta.size(); ++t) rz[t] = r * zeta[t];
        double numer = 1.0 - std::norm(tsEvaluate(s, rz));
        if (!terminated && tail > 0.1 * std::abs(numer)) break;
        ad.radii.push_back(r);
        ad.tailBounds.push_back(tail);
        ad.quotients.push_back(numer / (1.0 - r * r));
    }
    ad.inconclusive = ad.quotients.size() < 3;
    if (!ad.quotients.empty()) ad.L = ad.quotients.back();
    if (!ad.inconclusive) {
        std::size_t n = ad.quotients.size();
        double last = ad.quotients[n - 1];
        ad.converged = std::abs(ad.quotients[n - 2] - last) <= 0.01 * std::abs(last) &&
                       std::abs(ad.quotients[n - 3] - last) <= 0.01 * std::abs(last);
    }
    return ad;
}

EigenCheck eigenCheck(const GleasonData& g, Complex alpha, const BallPoint& zeta) {
    require(std::abs(std::abs(alpha) - 1.0) <= 1e-12, "alpha must be unimodular");
    EigenCheck ec;
    ec.angular = angularDerivative(g.b, zeta, 20);
    ec.L = ec.angular.L;
    if (!ec.angular.converged || ec.angular.inconclusive) {
        ec.verdict = "no eigenvalue predicted";
        return ec;
    }
    double rmax = ec.angular.radii.back();
    BallPoint rz(zeta.size());
    for (std::size_t t = 0; t < zeta.size(); ++t) rz[t] = rmax * zeta[t];
    Complex bRadial = tsEvaluate(g.b.series, rz);
    if (std::abs(bRadial - alpha) > 1e-3) {
        ec.verdict = "no eigenvalue predicted";
        return ec;
    }
    ec.predicted = true;
    ec.verdict = "eigenvalue predicted";
    ec.normSq = ((1.0 - std::conj(alpha) * bRadial) / (1.0 - rmax)).real();
    int d = g.b.d();
    Complex rankScale = alpha / (1.0 - alpha * std::conj(g.b0));
    std::vector<Complex> bjAtZeta(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
        bjAtZeta[static_cast<std::size_t>(j)] =
            tsEvaluate(g.bj[static_cast<std::size_t>(j)], zeta);
    for (const BallPoint& z : g.sample.points) {
        Complex bz = tsEvaluate(g.b.series, z);
        Complex inner{};
        for (int j = 0; j < d; ++j)
            inner += z[static_cast<std::size_t>(j)] * std::conj(zeta[static_cast<std::size_t>(j)]);
        Complex kz = (1.0 - std::conj(alpha) * bz) / (1.0 - inner);
        Complex k0 = 1.0 - bz * std::conj(g.b0);
        Complex s{};
        for (int j = 0; j < d; ++j)
            s += std::conj(zeta[static_cast<std::size_t>(j)]) *
                 (z[static_cast<std::size_t>(j)] * kz -
                  std::conj(bjAtZeta[static_cast<std::size_t>(j)]) * (bz - rankScale * k0));
        ec.residual = std::max(ec.residual, std::abs(s - kz));
    }
    return ec;
}

} // namespace ncclark
