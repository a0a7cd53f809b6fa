#include "ncclark/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "ncclark/error.hpp"

namespace ncclark {

TruncatedSeries::TruncatedSeries(int dim, int maxDegree)
    : d(dim), N(maxDegree), basis(basisFor(dim, maxDegree)), coeffs(basis->size(), Complex{}) {}

Complex TruncatedSeries::at(const MultiIndex& n) const {
    auto i = basis->find(n);
    return i < 0 ? Complex{} : coeffs[static_cast<std::size_t>(i)];
}

void TruncatedSeries::set(const MultiIndex& n, Complex c) {
    coeffs[basis->indexOf(n)] = c;
}

int TruncatedSeries::maxNonzeroDegree(double drop) const {
    for (int k = N; k >= 0; --k)
        for (std::size_t i = basis->degreeBegin(k); i < basis->degreeEnd(k); ++i)
            if (std::abs(coeffs[i]) > drop) return k;
    return -1;
}

TruncatedSeries tsZero(int d, int N) { return TruncatedSeries(d, N); }

TruncatedSeries tsConstant(int d, int N, Complex c) {
    TruncatedSeries r(d, N);
    r.coeffs[0] = c;
    return r;
}

TruncatedSeries tsCoordinate(int d, int N, int j) {
    require(j >= 1 && j <= d, "coordinate index outside 1..d");
    require(N >= 1, "need N >= 1 for a coordinate series");
    TruncatedSeries r(d, N);
    MultiIndex n(d, 0);
    n[j - 1] = 1;
    r.set(n, 1.0);
    return r;
}

TruncatedSeries tsScale(const TruncatedSeries& a, Complex c) {
    TruncatedSeries r = a;
    for (auto& v : r.coeffs) v *= c;
    return r;
}

TruncatedSeries tsAdd(const TruncatedSeries& a, const TruncatedSeries& b, Complex wa, Complex wb) {
    require(a.d == b.d, "dimension mismatch");
    const TruncatedSeries& lo = a.N <= b.N ? a : b;
    const TruncatedSeries& hi = a.N <= b.N ? b : a;
    TruncatedSeries r(lo.d, lo.N);
    Complex wlo = (&lo == &a) ? wa : wb;
    Complex whi = (&lo == &a) ? wb : wa;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        r.coeffs[i] = wlo * lo.coeffs[i] + whi * hi.coeffs[i];
    return r;
}

TruncatedSeries tsMul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require(a.d == b.d, "dimension mismatch");
    int N = std::min(a.N, b.N);
    TruncatedSeries r(a.d, N);
    const MonomialBasis& ra = *a.basis;
    const MonomialBasis& rb = *b.basis;
    const MonomialBasis& rr = *r.basis;
    MultiIndex sum(static_cast<std::size_t>(a.d));
    for (int ka = 0; ka <= N; ++ka) {
        for (std::size_t i = ra.degreeBegin(ka); i < ra.degreeEnd(ka); ++i) {
            Complex ca = a.coeffs[i];
            if (ca == Complex{}) continue;
            const MultiIndex& na = ra.at(i);
            for (int kb = 0; kb + ka <= N; ++kb) {
                for (std::size_t j = rb.degreeBegin(kb); j < rb.degreeEnd(kb); ++j) {
                    Complex cb = b.coeffs[j];
                    if (cb == Complex{}) continue;
                    const MultiIndex& nb = rb.at(j);
                    for (int t = 0; t < a.d; ++t) sum[t] = na[t] + nb[t];
                    r.coeffs[rr.indexOf(sum)] += ca * cb;
                }
            }
        }
    }
    return r;
}

TruncatedSeries tsReciprocal(const TruncatedSeries& a) {
    Complex a0 = a.constantTerm();
    if (std::abs(a0) <= 1e-14) throwNumeric("series reciprocal: constant term too small");
    // Degree-block recursion: r_0 = 1/a_0, r_k = -(1/a_0) sum_{j=1..k} a_j * r_{k-j}.
    TruncatedSeries r(a.d, a.N);
    const MonomialBasis& basis = *r.basis;
    r.coeffs[0] = 1.0 / a0;
    MultiIndex sum(static_cast<std::size_t>(a.d));
    for (int k = 1; k <= a.N; ++k) {
        for (int j = 1; j <= k; ++j) {
            for (std::size_t ia = basis.degreeBegin(j); ia < basis.degreeEnd(j); ++ia) {
                Complex ca = a.coeffs[ia];
                if (ca == Complex{}) continue;
                const MultiIndex& na = basis.at(ia);
                for (std::size_t ir = basis.degreeBegin(k - j); ir < basis.degreeEnd(k - j); ++ir) {
                    Complex cr = r.coeffs[ir];
                    if (cr == Complex{}) continue;
                    const MultiIndex& nr = basis.at(ir);
                    for (int t = 0; t < a.d; ++t) sum[t] = na[t] + nr[t];
                    r.coeffs[basis.indexOf(sum)] -= ca * cr / a0;
                }
            }
        }
    }
    return r;
}

TruncatedSeries tsResize(const TruncatedSeries& a, int N) {
    TruncatedSeries r(a.d, N);
    std::size_t copy = std::min(r.coeffs.size(), a.coeffs.size());
    std::copy_n(a.coeffs.begin(), copy, r.coeffs.begin());
    return r;
}

Complex tsEvaluate(const TruncatedSeries& a, std::span<const Complex> z) {
    require(static_cast<int>(z.size()) == a.d, "evaluation point dimension mismatch");
    // Power table z_j^k, then one product per basis index.
    std::vector<std::vector<Complex>> pow(a.d);
    for (int j = 0; j < a.d; ++j) {
        pow[j].resize(static_cast<std::size_t>(a.N) + 1);
        pow[j][0] = 1.0;
        for (int k = 1; k <= a.N; ++k) pow[j][k] = pow[j][k - 1] * z[j];
    }
    Complex s{};
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        Complex c = a.coeffs[i];
        if (c == Complex{}) continue;
        const MultiIndex& n = a.basis->at(i);
        for (int j = 0; j < a.d; ++j) c *= pow[j][n[j]];
        s += c;
    }
    return s;
}

double tsTailL1(const TruncatedSeries& a, int fromDegree) {
    double s = 0.0;
    for (int k = std::max(fromDegree, 0); k <= a.N; ++k)
        for (std::size_t i = a.basis->degreeBegin(k); i < a.basis->degreeEnd(k); ++i)
            s += std::abs(a.coeffs[i]);
    return s;
}

TruncatedSeries cayleyHerglotz(const TruncatedSeries& b, Complex alpha) {
    require(std::abs(std::abs(alpha) - 1.0) <= 1e-12, "alpha must be unimodular");
    TruncatedSeries c = tsScale(b, std::conj(alpha));
    TruncatedSeries one = tsConstant(b.d, b.N, 1.0);
    return tsMul(tsAdd(one, c), tsReciprocal(tsAdd(one, c, 1.0, -1.0)));
}

TruncatedSeries inverseCayley(const TruncatedSeries& f) {
    TruncatedSeries one = tsConstant(f.d, f.N, 1.0);
    return tsMul(tsAdd(f, one, 1.0, -1.0), tsReciprocal(tsAdd(f, one)));
}

Multiplier::Multiplier(std::string lbl, TruncatedSeries s) : label(std::move(lbl)), series(std::move(s)) {
    require(std::abs(series.constantTerm()) < 1.0, "multiplier requires |b(0)| < 1");
}

Multiplier makeZeroMultiplier(int d, int N) { return Multiplier("zero", tsZero(d, N)); }

Multiplier makeCoordinateMultiplier(int d, int N) {
    return Multiplier("coordinate", tsCoordinate(d, N, 1));
}

Multiplier makeCuntzMultiplier(std::span<const Complex> zeta, int N) {
    int d = static_cast<int>(zeta.size());
    require(d >= 1, "cuntz multiplier needs at least one component");
    double norm2 = 0.0;
    for (Complex c : zeta) norm2 += std::norm(c);
    require(std::abs(norm2 - 1.0) <= 1e-12, "cuntz point must lie on the unit sphere");
    // b(z) = <z, zeta> = sum_j conj(zeta_j) z_j
    TruncatedSeries s(d, N);
    for (int j = 1; j <= d; ++j) {
        MultiIndex n(d, 0);
        n[j - 1] = 1;
        s.set(n, std::conj(zeta[static_cast<std::size_t>(j - 1)]));
    }
    return Multiplier("cuntz", std::move(s));
}

Multiplier makeTwoPointMultiplier(int N) {
    // Multiplier of the state (omega_{e1} + omega_{e2})/2, derived from its
    // Herglotz series f = 1 + sum_k (z1^k + z2^k):
    //   b = (z1 + z2 - 2 z1 z2) / (2 - z1 - z2).
    // (The frequently quoted variant without the factor 2 on z1 z2 is
    // unbounded on the ball and does not represent this state.)
    int d = 2;
    TruncatedSeries num(d, N), den(d, N);
    num.set({1, 0}, 1.0);
    num.set({0, 1}, 1.0);
    if (N >= 2) num.set({1, 1}, -2.0);
    den.set({0, 0}, 2.0);
    den.set({1, 0}, -1.0);
    den.set({0, 1}, -1.0);
    return Multiplier("two-point", tsMul(num, tsReciprocal(den)));
}

Multiplier makeOneVarMultiplier(std::span<const Complex> coeffs, int N) {
    require(!coeffs.empty(), "one-var multiplier needs coefficients");
    TruncatedSeries s(1, N);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (static_cast<int>(k) > N) break;
        s.set({static_cast<int>(k)}, coeffs[k]);
    }
    return Multiplier("one-var", std::move(s));
}

Multiplier makeProductMultiplier(const std::vector<std::vector<Complex>>& factors, int N) {
    int d = static_cast<int>(factors.size());
    require(d >= 1, "product multiplier needs at least one factor");
    TruncatedSeries s = tsConstant(d, N, 1.0);
    for (int j = 0; j < d; ++j) {
        TruncatedSeries f(d, N);
        MultiIndex n(d, 0);
        for (std::size_t k = 0; k < factors[static_cast<std::size_t>(j)].size(); ++k) {
            if (static_cast<int>(k) > N) break;
            n[j] = static_cast<int>(k);
            f.set(n, factors[static_cast<std::size_t>(j)][k]);
        }
        s = tsMul(s, f);
    }
    return Multiplier("product-nonextreme", std::move(s));
}

Complex parseComplexLiteral(const std::string& text) {
    std::string t = text;
    require(!t.empty(), "empty complex literal");
    // forms: a | bi | a+bi | a-bi, with i alone meaning 1i
    bool imagOnly = t.back() == 'i' || t.back() == 'I';
    // find the split between real and imaginary parts, skipping exponent signs
    std::size_t split = std::string::npos;
    for (std::size_t k = 1; k < t.size(); ++k) {
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') split = k;
    }
    auto parseReal = [](const std::string& s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        char* end = nullptr;
        double v = std::strtod(s.c_str(), &end);
        require(end == s.c_str() + s.size(), "bad numeric literal '" + s + "'");
        return v;
    };
    if (split == std::string::npos) {
        if (imagOnly) return Complex(0.0, parseReal(t.substr(0, t.size() - 1)));
        return Complex(parseReal(t), 0.0);
    }
    require(imagOnly, "complex literal must end in i when it has two parts");
    double re = parseReal(t.substr(0, split));
    double im = parseReal(t.substr(split, t.size() - split - 1));
    return Complex(re, im);
}

std::vector<Complex> parseComplexList(const std::string& text) {
    std::vector<Complex> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                         : comma - start);
        require(!item.empty(), "empty entry in complex list '" + text + "'");
        out.push_back(parseComplexLiteral(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

Multiplier makeBuiltin(const std::string& spec, int d, int N) {
    require(N >= 0, "builtin truncation degree must be >= 0");
    std::string name = spec, args;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        name = spec.substr(0, colon);
        args = spec.substr(colon + 1);
    }
    auto defaulted = [&](int def) { return d == 0 ? def : d; };
    if (name == "zero") return makeZeroMultiplier(defaulted(2), N);
    if (name == "coordinate") return makeCoordinateMultiplier(defaulted(2), N);
    if (name == "cuntz") {
        require(!args.empty(), "cuntz builtin needs components: cuntz:<c>,...,<c>");
        auto zeta = parseComplexList(args);
        require(d == 0 || d == static_cast<int>(zeta.size()),
                "cuntz component count disagrees with requested dimension");
        return makeCuntzMultiplier(zeta, N);
    }
    if (name == "two-point") {
        require(d == 0 || d == 2, "two-point builtin is two-dimensional");
        return makeTwoPointMultiplier(N);
    }
    if (name == "one-var") {
        require(!args.empty(), "one-var builtin needs coefficients: one-var:<c0>,<c1>,...");
        require(d == 0 || d == 1, "one-var builtin is one-dimensional");
        return makeOneVarMultiplier(parseComplexList(args), N);
    }
    if (name == "product-nonextreme") {
        std::vector<std::vector<Complex>> factors;
        if (args.empty()) {
            factors = {{0.0, 0.5}, {0.0, 0.5}};
        } else {
            std::size_t start = 0;
            while (start <= args.size()) {
                std::size_t semi = args.find(';', start);
                factors.push_back(parseComplexList(
                    args.substr(start, semi == std::string::npos ? std::string::npos : semi - start)));
                if (semi == std::string::npos) break;
                start = semi + 1;
            }
        }
        require(d == 0 || d == static_cast<int>(factors.size()),
                "product factor count disagrees with requested dimension");
        return makeProductMultiplier(factors, N);
    }
    if (name == "atoms")
        throwDomain("atoms builtin produces a state; use the state-level builtin loader");
    throwDomain("unknown builtin multiplier '" + name + "'");
}

} // namespace ncclark
