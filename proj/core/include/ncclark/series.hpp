#pragma once

#include <complex>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ncclark/multiindex.hpp"

namespace ncclark {

using Complex = std::complex<double>;

// Power series in z_1..z_d truncated by total degree: coefficients are dense
// over the graded monomial basis shared through basisFor(d, N).
struct TruncatedSeries {
    int d = 0;
    int N = 0;
    std::shared_ptr<const MonomialBasis> basis;
    std::vector<Complex> coeffs;

    TruncatedSeries() = default;
    TruncatedSeries(int dim, int maxDegree);

    Complex at(const MultiIndex& n) const;      // 0 if |n| > N
    void set(const MultiIndex& n, Complex c);   // requires |n| <= N
    Complex constantTerm() const { return coeffs.empty() ? Complex{} : coeffs[0]; }
    int maxNonzeroDegree(double drop = 0.0) const;
};

TruncatedSeries tsZero(int d, int N);
TruncatedSeries tsConstant(int d, int N, Complex c);
TruncatedSeries tsCoordinate(int d, int N, int j); // z_j, 1-based
TruncatedSeries tsScale(const TruncatedSeries& a, Complex c);
// wa*a + wb*b; dimensions must agree, result truncated at min(a.N, b.N).
TruncatedSeries tsAdd(const TruncatedSeries& a, const TruncatedSeries& b,
                      Complex wa = 1.0, Complex wb = 1.0);
TruncatedSeries tsMul(const TruncatedSeries& a, const TruncatedSeries& b);
// 1/a as a formal series; requires |a(0)| > 1e-14.
TruncatedSeries tsReciprocal(const TruncatedSeries& a);
// Retruncate (down) or zero-pad (up) to degree N.
TruncatedSeries tsResize(const TruncatedSeries& a, int N);
Complex tsEvaluate(const TruncatedSeries& a, std::span<const Complex> z);
// Sum of |c_n| over |n| >= fromDegree: crude tail majorant on |z| <= 1 scale.
double tsTailL1(const TruncatedSeries& a, int fromDegree);

// f = (1 + conj(alpha) b) / (1 - conj(alpha) b); the Herglotz-class series
// whose coefficients carry the moment data of the alpha-rotated state.
TruncatedSeries cayleyHerglotz(const TruncatedSeries& b, Complex alpha);
// Inverse map at alpha = 1: (f - 1) / (f + 1).
TruncatedSeries inverseCayley(const TruncatedSeries& f);

// Multiplier datum for the de Branges-Rovnyak constructions. Validity checking
// is intentionally light: only |b(0)| < 1 is enforced here; kernel-sample
// positivity diagnostics live with the kernel code.
struct Multiplier {
    std::string label;
    TruncatedSeries series;

    Multiplier() = default;
    Multiplier(std::string lbl, TruncatedSeries s); // enforces |b(0)| < 1

    int d() const noexcept { return series.d; }
    Complex atOrigin() const { return series.constantTerm(); }
};

// Direct constructors for the named multipliers.
Multiplier makeZeroMultiplier(int d, int N);
Multiplier makeCoordinateMultiplier(int d, int N);               // b = z_1
Multiplier makeCuntzMultiplier(std::span<const Complex> zeta, int N); // b = <z, zeta>, |zeta| = 1
Multiplier makeTwoPointMultiplier(int N);                        // d = 2; see note in impl
Multiplier makeOneVarMultiplier(std::span<const Complex> coeffs, int N);
Multiplier makeProductMultiplier(const std::vector<std::vector<Complex>>& factors, int N);

// Registry parser for builtin strings:
//   zero | coordinate | cuntz:<c>,<c>,... | two-point | one-var:<c>,<c>,...
//   | product-nonextreme[:<c>,..;<c>,..]
// where <c> is a complex literal like 1, -0.3, 0.5i, 0.3-0.4i. `d` = 0 takes
// each builtin's default dimension. "atoms:..." is handled a layer up (it
// produces a state first); this parser rejects it.
Multiplier makeBuiltin(const std::string& spec, int d, int N);

Complex parseComplexLiteral(const std::string& text);
std::vector<Complex> parseComplexList(const std::string& text); // comma-separated

} // namespace ncclark
