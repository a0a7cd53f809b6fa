#include "ncclark/states.hpp"

#include <cmath>
#include <numbers>

#include "ncclark/error.hpp"
#include "ncclark/gns.hpp"

namespace ncclark {

MomentState::MomentState(int dim, int maxDegree, std::string prov)
    : d(dim), N(maxDegree), basis(basisFor(dim, maxDegree)), moments(basis->size(), Complex{}),
      provenance(std::move(prov)) {}

Complex MomentState::at(const MultiIndex& n) const {
    return moments[basis->indexOf(n)];
}

MomentState vacuumState(int d, int N) {
    MomentState mu(d, N, "vacuum");
    mu.moments[0] = 1.0;
    return mu;
}

MomentState acState(const Multiplier& b, Complex alpha, int N) {
    require(std::abs(std::abs(alpha) - 1.0) <= 1e-12, "alpha must be unimodular");
    require(b.series.N >= N, "multiplier series degree below requested moment degree");
    TruncatedSeries f = cayleyHerglotz(tsResize(b.series, N), alpha);
    MomentState mu(b.d(), N, "ac-state");
    mu.moments[0] = f.coeffs[0].real();
    for (std::size_t i = 1; i < mu.moments.size(); ++i) mu.moments[i] = std::conj(f.coeffs[i]) * 0.5;
    return mu;
}

AtomicData stateFromAtoms(const std::vector<Atom>& atoms, int N) {
    require(!atoms.empty(), "need at least one atom");
    int d = static_cast<int>(atoms.front().zeta.size());
    TruncatedSeries f = tsZero(d, N);
    for (const auto& atom : atoms) {
        require(static_cast<int>(atom.zeta.size()) == d, "atom dimension mismatch");
        require(atom.weight > 0.0, "atom weights must be positive");
        double norm2 = 0.0;
        for (Complex c : atom.zeta) norm2 += std::norm(c);
        require(std::abs(std::sqrt(norm2) - 1.0) <= 1e-12, "atom must lie on the unit sphere");
        TruncatedSeries c(d, N); // <z, zeta>
        for (int j = 0; j < d; ++j) {
            MultiIndex n(d, 0);
            n[j] = 1;
            c.set(n, std::conj(atom.zeta[static_cast<std::size_t>(j)]));
        }
        TruncatedSeries one = tsConstant(d, N, 1.0);
        f = tsAdd(f, tsMul(tsAdd(one, c), tsReciprocal(tsAdd(one, c, 1.0, -1.0))), 1.0,
                  Complex{atom.weight, 0.0});
    }
    AtomicData out{Multiplier("atoms", inverseCayley(f)), MomentState{}, atoms};
    out.state = acState(out.b, 1.0, N);
    out.state.provenance = "atomic-measure";
    return out;
}

Complex atomIntegralMoment(const std::vector<Atom>& atoms, const MultiIndex& n) {
    Complex s{};
    for (const auto& atom : atoms) {
        Complex t{atom.weight, 0.0};
        for (std::size_t j = 0; j < n.size(); ++j)
            for (int k = 0; k < n[j]; ++k) t *= atom.zeta[j];
        s += t;
    }
    return s;
}

// Inline form of momentApply(mu, symProduct(n, m)); Gram assembly calls this
// in a tight loop and the map allocations of the SymElement route dominate.
Complex momentOfPair(const MomentState& mu, const MultiIndex& n, const MultiIndex& m) {
    if (n == m) return static_cast<double>(orbitSize(n)) * mu.total();
    if (componentwiseLEQ(n, m)) return static_cast<double>(orbitSize(n)) * mu.at(indexDiff(m, n));
    if (componentwiseLEQ(m, n))
        return static_cast<double>(orbitSize(m)) * std::conj(mu.at(indexDiff(n, m)));
    return Complex{};
}

Complex momentPairing(const MomentState& mu, const SymElement& p, const SymElement& q) {
    require(p.minus.empty() && q.minus.empty(), "momentPairing takes analytic-part elements");
    require(p.d == mu.d && q.d == mu.d, "dimension mismatch");
    // <p, q> = sum over comparable index pairs; organized over the sparse
    // support of mu so dense elements against sparse states stay cheap.
    Complex s{};
    Complex mu0 = mu.total();
    for (const auto& [n, qn] : q.plus) {
        auto it = p.plus.find(n);
        if (it != p.plus.end())
            s += std::conj(qn) * it->second * static_cast<double>(orbitSize(n)) * mu0;
    }
    for (std::size_t i = 1; i < mu.moments.size(); ++i) {
        Complex mt = mu.moments[i];
        if (mt == Complex{}) continue;
        const MultiIndex& t = mu.basis->at(i);
        MultiIndex sum(t.size());
        for (const auto& [n, qn] : q.plus) { // m = n + t, n < m
            for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = n[k] + t[k];
            auto it = p.plus.find(sum);
            if (it != p.plus.end())
                s += std::conj(qn) * it->second * static_cast<double>(orbitSize(n)) * mt;
        }
        for (const auto& [m, pm] : p.plus) { // n = m + t, m < n
            for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = m[k] + t[k];
            auto it = q.plus.find(sum);
            if (it != q.plus.end())
                s += std::conj(it->second) * pm * static_cast<double>(orbitSize(m)) * std::conj(mt);
        }
    }
    return s;
}

Complex momentApply(const MomentState& mu, const SymElement& p) {
    require(p.d == mu.d, "dimension mismatch");
    Complex s{};
    for (const auto& [n, c] : p.plus) s += c * mu.at(n);
    for (const auto& [n, c] : p.minus) s += c * std::conj(mu.at(n));
    return s;
}

WordState extendToWords(const MomentState& mu, int maxLen, double qeThreshold) {
    require(maxLen >= 1, "maxLen must be >= 1");
    GnsSpace space = buildGnsSpace(mu, maxLen);
    GnsTuple tuple = buildGnsTuple(space);
    if (tuple.distance2 > qeThreshold)
        throwDomain("extension requires a quasi-extreme state: distance^2 = " +
                    std::to_string(tuple.distance2) + " at degree " + std::to_string(maxLen));
    WordState nu;
    nu.words = fockBuild(mu.d, maxLen);
    nu.values.assign(nu.words.size(), Complex{});
    nu.provenance = "tight-extension";
    nu.values[0] = mu.total();
    const MonomialBasis& basis = *tuple.basis;
    auto s0Index = [&](const MultiIndex& n) { return basis.indexOf(n) - 1; };
    for (const Word& w : nu.words.basis) {
        if (w.empty()) continue;
        int last = w.back();
        // wbar: last letter rotated to the front
        Word wbar;
        wbar.reserve(w.size());
        wbar.push_back(last);
        wbar.insert(wbar.end(), w.begin(), w.end() - 1);
        MultiIndex ei(static_cast<std::size_t>(mu.d), 0);
        ei[static_cast<std::size_t>(last - 1)] = 1;
        Eigen::VectorXcd y = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(space.size0()));
        y[static_cast<Eigen::Index>(s0Index(ei))] = 1.0;
        for (int letter : wbar) y = tuple.backward[static_cast<std::size_t>(letter - 1)] * y;
        // nu(L_w) = <[L_i], S_wbar* [L_i]> = y^H G0 e_{[L_i]}
        nu.values[nu.words.rank(w)] =
            y.adjoint() * tuple.gram0.col(static_cast<Eigen::Index>(s0Index(ei)));
    }
    return nu;
}

DisintegrationReport disintegrationCheck(const Multiplier& b, std::span<const Complex> z,
                                         int quadratureNodes) {
    require(quadratureNodes >= 1, "need at least one quadrature node");
    double r2 = 0.0;
    for (Complex c : z) r2 += std::norm(c);
    require(r2 < 1.0, "evaluation point must lie in the open ball");
    Complex B = tsEvaluate(b.series, z);
    Complex b0 = b.atOrigin();
    DisintegrationReport rep;
    rep.nodes = quadratureNodes;
    Complex acc{};
    for (int k = 0; k < quadratureNodes; ++k) {
        double theta = 2.0 * std::numbers::pi * static_cast<double>(k) /
                       static_cast<double>(quadratureNodes);
        Complex alpha{std::cos(theta), std::sin(theta)};
        acc += (1.0 - B * std::conj(b0)) /
               ((1.0 - std::conj(alpha) * B) * (1.0 - alpha * std::conj(b0)));
    }
    rep.quadrature = acc / static_cast<double>(quadratureNodes);
    rep.error = std::abs(rep.quadrature - Complex{1.0, 0.0});
    return rep;
}

std::vector<Atom> parseAtoms(const std::string& args) {
    require(!args.empty(), "atoms builtin needs entries: atoms:<c>,..@<w>;...");
    std::vector<Atom> atoms;
    std::size_t start = 0;
    while (start <= args.size()) {
        std::size_t semi = args.find(';', start);
        std::string entry =
            args.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
        std::size_t at = entry.find('@');
        require(at != std::string::npos, "atom entry must be <components>@<weight>");
        Atom atom;
        atom.zeta = parseComplexList(entry.substr(0, at));
        Complex w = parseComplexLiteral(entry.substr(at + 1));
        require(std::abs(w.imag()) == 0.0 && w.real() > 0.0, "atom weight must be a positive real");
        atom.weight = w.real();
        atoms.push_back(std::move(atom));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return atoms;
}

BuiltinState builtinState(const std::string& spec, int d, int N, Complex alpha, int seriesDegree) {
    int degree = std::max(N, seriesDegree);
    if (spec.rfind("atoms:", 0) == 0) {
        auto atoms = parseAtoms(spec.substr(6));
        require(d == 0 || d == static_cast<int>(atoms.front().zeta.size()),
                "atom dimension disagrees with requested dimension");
        AtomicData data = stateFromAtoms(atoms, degree);
        BuiltinState out{std::move(data.b), std::move(data.state)};
        if (std::abs(alpha - Complex{1.0, 0.0}) > 0.0 || degree != N)
            out.state = acState(out.b, alpha, N);
        return out;
    }
    Multiplier b = makeBuiltin(spec, d, degree);
    MomentState mu = acState(b, alpha, N);
    return BuiltinState{std::move(b), std::move(mu)};
}

} // namespace ncclark
