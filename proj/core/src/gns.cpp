#include "ncclark/gns.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ncclark/error.hpp"
#include "ncclark/linalg.hpp"

namespace ncclark {

GnsSpace buildGnsSpace(const MomentState& mu, int N) {
    require(N >= 1, "GNS degree must be >= 1");
    if (mu.N < 2 * N)
        throwDomain("Gram at degree " + std::to_string(N) + " needs moments to degree " +
                    std::to_string(2 * N) + ", got " + std::to_string(mu.N));
    GnsSpace space;
    space.mu = mu;
    space.N = N;
    space.basis = basisFor(mu.d, N);
    auto M = static_cast<Eigen::Index>(space.basis->size());
    space.gram.resize(M, M);
    for (Eigen::Index i = 0; i < M; ++i) {
        const MultiIndex& n = space.basis->at(static_cast<std::size_t>(i));
        for (Eigen::Index j = i; j < M; ++j) {
            Complex g = momentOfPair(mu, n, space.basis->at(static_cast<std::size_t>(j)));
            space.gram(i, j) = g;
            space.gram(j, i) = std::conj(g);
        }
    }
    return space;
}

QuasiExtremeResult quasiExtremeProjection(const GnsSpace& space) {
    auto M0 = static_cast<Eigen::Index>(space.size0());
    Eigen::MatrixXcd G0 = space.gram.bottomRightCorner(M0, M0);
    Eigen::VectorXcd g0 = space.gram.col(0).tail(M0);
    QuasiExtremeResult res;
    res.projection = solveRegularized(G0, g0);
    Complex quad = res.projection.adjoint() * G0 * res.projection;
    double dist2 = space.mu.total().real() - 2.0 * (g0.adjoint() * res.projection)(0).real() +
                   quad.real();
    res.distance2 = std::max(dist2, 0.0);
    return res;
}

double quasiExtremeDistance(const GnsSpace& space) {
    return quasiExtremeProjection(space).distance2;
}

std::vector<double> quasiExtremeCurve(const MomentState& mu, int maxN) {
    std::vector<double> curve;
    curve.reserve(static_cast<std::size_t>(maxN));
    for (int N = 1; N <= maxN; ++N) curve.push_back(quasiExtremeDistance(buildGnsSpace(mu, N)));
    return curve;
}

GnsTuple buildGnsTuple(const GnsSpace& space) {
    GnsTuple tuple;
    tuple.d = space.mu.d;
    tuple.N = space.N;
    tuple.basis = space.basis;
    auto M0 = static_cast<Eigen::Index>(space.size0());
    tuple.gram0 = space.gram.bottomRightCorner(M0, M0);
    QuasiExtremeResult qe = quasiExtremeProjection(space);
    tuple.c = std::move(qe.projection);
    tuple.distance2 = qe.distance2;
    tuple.moments.resize(static_cast<Eigen::Index>(space.basis->size()));
    for (Eigen::Index i = 0; i < tuple.moments.size(); ++i)
        tuple.moments[i] = space.mu.moments[static_cast<std::size_t>(i)];
    tuple.backward.assign(static_cast<std::size_t>(tuple.d),
                          Eigen::MatrixXcd::Zero(M0, M0));
    const MonomialBasis& basis = *space.basis;
    for (std::size_t col = 1; col < basis.size(); ++col) {
        const MultiIndex& m = basis.at(col);
        int deg = totalDegree(m);
        for (int j = 0; j < tuple.d; ++j) {
            if (m[static_cast<std::size_t>(j)] == 0) continue;
            Eigen::MatrixXcd& A = tuple.backward[static_cast<std::size_t>(j)];
            if (deg == 1) {
                A.col(static_cast<Eigen::Index>(col - 1)) = tuple.c;
            } else {
                MultiIndex shifted = m;
                --shifted[static_cast<std::size_t>(j)];
                A(static_cast<Eigen::Index>(basis.indexOf(shifted) - 1),
                  static_cast<Eigen::Index>(col - 1)) = 1.0;
            }
        }
    }
    return tuple;
}

// Inclusion of the degree 1..N-1 monomials into the degree 1..N block.
static Eigen::MatrixXcd interiorInclusion(const GnsTuple& tuple) {
    const MonomialBasis& basis = *tuple.basis;
    auto M0 = static_cast<Eigen::Index>(basis.size() - 1);
    auto W = static_cast<Eigen::Index>(basis.degreeEnd(tuple.N - 1) - 1);
    Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(M0, W);
    for (Eigen::Index k = 0; k < W; ++k) E(k, k) = 1.0;
    return E;
}

double rowContractionNorm(const GnsTuple& tuple) {
    auto M0 = tuple.gram0.rows();
    Eigen::MatrixXcd F = Eigen::MatrixXcd::Zero(M0, M0);
    for (const auto& A : tuple.backward) F += A.adjoint() * tuple.gram0 * A;
    return maxEigInMetric(F, tuple.gram0);
}

double coisometryDefect(const GnsTuple& tuple) {
    require(tuple.N >= 2, "coisometry defect needs degree >= 2 (interior block nonempty)");
    Eigen::MatrixXcd E = interiorInclusion(tuple);
    Eigen::MatrixXcd GW = E.adjoint() * tuple.gram0 * E;
    Eigen::MatrixXcd D = GW;
    for (const auto& A : tuple.backward) {
        Eigen::MatrixXcd AE = A * E;
        D -= AE.adjoint() * tuple.gram0 * AE;
    }
    return maxAbsEigInMetric(D, GW);
}

Complex gnsVectorState(const GnsTuple& tuple, const MultiIndex& n, double threshold) {
    require(totalDegree(n) <= tuple.N - 1, "index degree must be <= N-1");
    if (tuple.distance2 > threshold)
        throwDomain("vector state needs a quasi-extreme state: distance^2 = " +
                    std::to_string(tuple.distance2));
    if (totalDegree(n) == 0) return tuple.moments[0];
    auto M0 = tuple.gram0.rows();
    Eigen::VectorXcd y = Eigen::VectorXcd::Zero(M0);
    for (const Word& w : wordsWithLetterCount(n)) {
        Eigen::VectorXcd v = tuple.c;
        for (int letter : w) v = tuple.backward[static_cast<std::size_t>(letter - 1)] * v;
        y += v;
    }
    // <[I], S_w*[I]> pairs the coordinates of S_w*[I] against the moments.
    Complex s{};
    for (Eigen::Index k = 0; k < M0; ++k) s += y[k] * tuple.moments[k + 1];
    return std::conj(s);
}

ExtendedGns buildExtendedGns(const WordState& nu) {
    ExtendedGns ext;
    ext.nu = nu;
    const FockTruncation& words = ext.nu.words;
    auto M = static_cast<Eigen::Index>(words.size());
    ext.gramWords.resize(M, M);
    auto valueOf = [&](const Word& v, const Word& w) -> Complex {
        // nu(L_v* L_w) by cancellation of the common prefix.
        if (v.size() <= w.size()) {
            if (std::equal(v.begin(), v.end(), w.begin()))
                return ext.nu.values[words.rank(Word(w.begin() + static_cast<std::ptrdiff_t>(v.size()), w.end()))];
            return Complex{};
        }
        if (std::equal(w.begin(), w.end(), v.begin()))
            return std::conj(
                ext.nu.values[words.rank(Word(v.begin() + static_cast<std::ptrdiff_t>(w.size()), v.end()))]);
        return Complex{};
    };
    for (Eigen::Index i = 0; i < M; ++i)
        for (Eigen::Index j = 0; j < M; ++j)
            ext.gramWords(i, j) = valueOf(words.basis[static_cast<std::size_t>(i)],
                                          words.basis[static_cast<std::size_t>(j)]);
    ext.U.assign(static_cast<std::size_t>(words.d), Eigen::MatrixXcd::Zero(M, M));
    for (std::size_t col = 0; col < words.size(); ++col) {
        const Word& w = words.basis[col];
        if (static_cast<int>(w.size()) >= words.maxLen) continue;
        for (int j = 1; j <= words.d; ++j) {
            Word jw;
            jw.reserve(w.size() + 1);
            jw.push_back(j);
            jw.insert(jw.end(), w.begin(), w.end());
            ext.U[static_cast<std::size_t>(j - 1)](static_cast<Eigen::Index>(words.rank(jw)),
                                                   static_cast<Eigen::Index>(col)) = 1.0;
        }
    }
    return ext;
}

double rowIsometryMismatch(const ExtendedGns& ext) {
    const FockTruncation& words = ext.words();
    auto W = static_cast<Eigen::Index>(
        words.maxLen >= 1 ? fockBuild(words.d, words.maxLen - 1).size() : words.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < ext.U.size(); ++i) {
        for (std::size_t j = 0; j < ext.U.size(); ++j) {
            Eigen::MatrixXcd P =
                (ext.U[i].adjoint() * ext.gramWords * ext.U[j]).topLeftCorner(W, W);
            if (i == j) P -= ext.gramWords.topLeftCorner(W, W);
            worst = std::max(worst, P.cwiseAbs().maxCoeff());
        }
    }
    return worst;
}

double cuntzDefect(const ExtendedGns& ext) {
    const FockTruncation& words = ext.words();
    require(words.maxLen >= 1, "cuntz defect needs words of positive length");
    auto W = static_cast<Eigen::Index>(fockBuild(words.d, words.maxLen - 1).size());
    GramQuotient q = gramQuotient(ext.gramWords);
    // Orthonormal-coordinate images of U_j xi_w over words of length
    // <= maxLen-1, where concatenation is exact and isometric.
    Eigen::MatrixXcd Phi(q.rank, static_cast<Eigen::Index>(ext.U.size()) * W);
    for (std::size_t j = 0; j < ext.U.size(); ++j)
        Phi.middleCols(static_cast<Eigen::Index>(j) * W, W) = q.phi * ext.U[j].leftCols(W);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(Phi);
    auto rank = static_cast<Eigen::Index>(qr.rank());
    Eigen::MatrixXcd Q = qr.householderQ() * Eigen::MatrixXcd::Identity(Phi.rows(), rank);
    // Row unitarity at truncation: every class of length <= maxLen-1 lies in
    // the joint range of the U_j. The defect is the largest squared distance
    // to that range over the unit sphere of the length <= maxLen-1 span.
    Eigen::MatrixXcd B = q.phi.leftCols(W);
    Eigen::MatrixXcd T = Q.adjoint() * B;
    Eigen::MatrixXcd D = B.adjoint() * B - T.adjoint() * T;
    return maxAbsEigInMetric(D, ext.gramWords.topLeftCorner(W, W));
}

} // namespace ncclark
