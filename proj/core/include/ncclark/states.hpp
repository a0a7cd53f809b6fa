#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ncclark/freealg.hpp"
#include "ncclark/multiindex.hpp"
#include "ncclark/series.hpp"

namespace ncclark {

// Positive functional on the operator system, stored through its values on
// the symmetrized monomials: moments[i] = mu(L^(n_i)) over the graded basis.
// Values on adjoints follow by conjugation, products by the reduction rule.
struct MomentState {
    int d = 0;
    int N = 0;
    std::shared_ptr<const MonomialBasis> basis;
    std::vector<Complex> moments;
    std::string provenance;

    MomentState() = default;
    MomentState(int dim, int maxDegree, std::string prov);

    Complex at(const MultiIndex& n) const; // throws if |n| > N
    Complex total() const { return moments.empty() ? Complex{} : moments[0]; } // mu(I)
};

MomentState vacuumState(int d, int N);

// Moment extraction from the Herglotz-class series of the alpha-rotated
// multiplier: with f = (1 + conj(alpha) b)/(1 - conj(alpha) b) = sum a_n z^n,
//   mu(I) = Re a_0,   mu(L^(n)) = conj(a_n)/2  for |n| >= 1.
// Requires b.series.N >= N.
MomentState acState(const Multiplier& b, Complex alpha, int N);

struct Atom {
    std::vector<Complex> zeta; // |zeta| = 1
    double weight = 0.0;       // > 0
};

struct AtomicData {
    Multiplier b;
    MomentState state;
    std::vector<Atom> atoms;
};

// Herglotz sum over point masses: f = sum w_k (1 + <z, zeta_k>)/(1 - <z, zeta_k>),
// b = inverseCayley(f), state = acState(b, 1, N).
AtomicData stateFromAtoms(const std::vector<Atom>& atoms, int N);

// The classical monomial integral sum_k w_k zeta_k^n. For a state built from
// atoms the extracted moment satisfies
//   state.at(n) = orbitSize(n) * atomIntegralMoment(atoms, n):
// the symmetrized monomial is a sum of orbitSize(n) words and a point
// evaluation weighs each word identically. The two scales are both exposed
// and never silently interchanged.
Complex atomIntegralMoment(const std::vector<Atom>& atoms, const MultiIndex& n);

// mu(L^(n)* L^(m)) through the reduction rule. Needs |n|+|m| <= ... the
// reduced index within mu's degree range; callers keep mu.N >= 2 * working N.
Complex momentOfPair(const MomentState& mu, const MultiIndex& n, const MultiIndex& m);

// mu(q(L)* p(L)) for analytic-part elements p, q: the P^2(mu) pairing <p, q>.
Complex momentPairing(const MomentState& mu, const SymElement& p, const SymElement& q);

// mu applied to a general element of the operator system.
Complex momentApply(const MomentState& mu, const SymElement& p);

// State on words of the free semigroup, indexed by the Fock word basis.
struct WordState {
    FockTruncation words;
    std::vector<Complex> values; // values[words.rank(w)] = nu(L_w)
    std::string provenance;

    Complex at(const Word& w) const { return values[words.rank(w)]; }
};

// Tight extension of a quasi-extreme state to word moments, computed from the
// GNS tuple: nu(L_w) = <[L_i], S_{wbar}* [L_i]> with i the last letter of w
// and wbar the rotation of w carrying that letter to the front.
// Throws Error(Domain) with the measured distance when mu fails the
// quasi-extremality threshold at the working degree (= maxLen, so mu.N must
// be at least 2*maxLen).
WordState extendToWords(const MomentState& mu, int maxLen, double qeThreshold = 1e-6);

struct DisintegrationReport {
    Complex quadrature; // trapezoid value of the alpha-integral
    double error = 0.0; // |quadrature - 1|
    int nodes = 0;
};

// Average over unimodular alpha of mu_alpha((I - z L*)^{-1}) in closed form:
// the integrand (1 - b(z) conj(b(0))) / ((1 - conj(alpha) b(z)) (1 - alpha conj(b(0))))
// is analytic in alpha, so the trapezoid rule converges geometrically to the
// vacuum value 1.
DisintegrationReport disintegrationCheck(const Multiplier& b, std::span<const Complex> z,
                                         int quadratureNodes);

// Builtin loader covering the state-level grammar, including
// "atoms:<c>,..,<c>@<weight>;...". Constructs the multiplier at a series
// degree of at least max(N, seriesDegree) and the state at degree N.
struct BuiltinState {
    Multiplier b;
    MomentState state;
};
BuiltinState builtinState(const std::string& spec, int d, int N, Complex alpha = 1.0,
                          int seriesDegree = 0);

std::vector<Atom> parseAtoms(const std::string& args);

} // namespace ncclark
