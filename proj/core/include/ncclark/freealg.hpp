#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "ncclark/multiindex.hpp"

namespace ncclark {

using Complex = std::complex<double>;

// Word in the free semigroup on letters 1..d; the empty word is the identity.
using Word = std::vector<int>;

// Letter-count map: word -> multi-index. Validates letters lie in 1..d.
MultiIndex letterCount(const Word& w, int d);

// All words with letter count n, in lexicographic order. Size orbitSize(n).
std::vector<Word> wordsWithLetterCount(const MultiIndex& n);

// Element of the operator system span{L^(n)} + span{L^(m)*}, where
// L^(n) = sum of L_w over words w with letter count n (so L^(0) = I).
// `plus` holds coefficients of L^(n) (n = 0 allowed), `minus` of L^(n)*
// with |n| >= 1. Zero coefficients are dropped by normalize().
struct SymElement {
    int d = 0;
    std::map<MultiIndex, Complex> plus;
    std::map<MultiIndex, Complex> minus;

    SymElement() = default;
    explicit SymElement(int dim) : d(dim) {}

    SymElement& addPlus(const MultiIndex& n, Complex c);
    SymElement& addMinus(const MultiIndex& n, Complex c); // requires |n| >= 1
    SymElement& normalize(double drop = 0.0);             // erase |coeff| <= drop
    SymElement adjoint() const;
    int maxAnalyticDegree() const; // largest |n| in plus, -1 if empty
};

SymElement symIdentity(int d);

// L^(n)* L^(m) reduced by the L_i* L_j = delta_ij relations:
//   n == m                : (|n|!/n!) I
//   n <= m componentwise  : (|n|!/n!) L^(m-n)
//   m <= n componentwise  : (|m|!/m!) L^(n-m)*
//   otherwise             : 0
SymElement symProduct(const MultiIndex& n, const MultiIndex& m);

// p(L)* q(L) for p, q in the analytic part (both `minus` maps empty;
// throws Error(Domain) otherwise, since S* S* leaves the operator system).
// Conjugate-linear in p, linear in q.
SymElement symElementProduct(const SymElement& p, const SymElement& q);

// Truncated full Fock space: words of length <= maxLen, length-major and
// lexicographic within a length. Rank arithmetic avoids storing a map.
struct FockTruncation {
    int d = 0;
    int maxLen = 0;
    std::vector<Word> basis;

    std::size_t size() const noexcept { return basis.size(); }
    std::size_t rank(const Word& w) const; // position of w, requires |w| <= maxLen
};

FockTruncation fockBuild(int d, int maxLen); // size guarded by NCCLARK_MAX_BASIS

// Matrix of the element on the truncated Fock space. A creation L^(n) maps
// xi_v -> sum over words u with count n of xi_{u v}, cut off past maxLen, so
// the truncation is exact on columns of length <= maxLen - |n|.
Eigen::MatrixXcd fockEvaluate(const SymElement& p, const FockTruncation& fock);
Eigen::SparseMatrix<Complex> fockEvaluateSparse(const SymElement& p, const FockTruncation& fock);

// <p Omega, Omega>: the coefficient of the identity in the analytic part.
Complex vacuumMoment(const SymElement& p);

} // namespace ncclark
