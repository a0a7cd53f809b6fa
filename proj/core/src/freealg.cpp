#include "ncclark/freealg.hpp"

#include <algorithm>
#include <string>

#include "ncclark/error.hpp"

namespace ncclark {

MultiIndex letterCount(const Word& w, int d) {
    require(d >= 1, "dimension must be >= 1");
    MultiIndex n(d, 0);
    for (int letter : w) {
        require(letter >= 1 && letter <= d, "word letter outside 1..d");
        ++n[letter - 1];
    }
    return n;
}

namespace {

void buildWords(MultiIndex& rem, Word& cur, int target, std::vector<Word>& out) {
    if (static_cast<int>(cur.size()) == target) {
        out.push_back(cur);
        return;
    }
    for (std::size_t j = 0; j < rem.size(); ++j) {
        if (rem[j] == 0) continue;
        --rem[j];
        cur.push_back(static_cast<int>(j) + 1);
        buildWords(rem, cur, target, out);
        cur.pop_back();
        ++rem[j];
    }
}

} // namespace

std::vector<Word> wordsWithLetterCount(const MultiIndex& n) {
    int len = totalDegree(n);
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(orbitSize(n)));
    MultiIndex rem = n;
    Word cur;
    cur.reserve(len);
    buildWords(rem, cur, len, out);
    return out;
}

SymElement& SymElement::addPlus(const MultiIndex& n, Complex c) {
    require(static_cast<int>(n.size()) == d, "multi-index dimension mismatch");
    plus[n] += c;
    return *this;
}

SymElement& SymElement::addMinus(const MultiIndex& n, Complex c) {
    require(static_cast<int>(n.size()) == d, "multi-index dimension mismatch");
    require(totalDegree(n) >= 1, "adjoint part requires |n| >= 1");
    minus[n] += c;
    return *this;
}

SymElement& SymElement::normalize(double drop) {
    auto prune = [drop](std::map<MultiIndex, Complex>& m) {
        for (auto it = m.begin(); it != m.end();)
            it = (std::abs(it->second) <= drop) ? m.erase(it) : std::next(it);
    };
    prune(plus);
    prune(minus);
    return *this;
}

SymElement SymElement::adjoint() const {
    SymElement r(d);
    for (const auto& [n, c] : plus) {
        if (totalDegree(n) == 0)
            r.plus[n] += std::conj(c);
        else
            r.minus[n] += std::conj(c);
    }
    for (const auto& [n, c] : minus) r.plus[n] += std::conj(c);
    return r;
}

int SymElement::maxAnalyticDegree() const {
    int m = -1;
    for (const auto& [n, c] : plus) m = std::max(m, totalDegree(n));
    return m;
}

SymElement symIdentity(int d) {
    SymElement e(d);
    e.plus[MultiIndex(d, 0)] = 1.0;
    return e;
}

SymElement symProduct(const MultiIndex& n, const MultiIndex& m) {
    require(n.size() == m.size() && !n.empty(), "index dimensions must agree");
    int d = static_cast<int>(n.size());
    SymElement r(d);
    if (n == m) {
        r.plus[MultiIndex(d, 0)] = static_cast<double>(orbitSize(n));
    } else if (componentwiseLEQ(n, m)) {
        r.plus[indexDiff(m, n)] = static_cast<double>(orbitSize(n));
    } else if (componentwiseLEQ(m, n)) {
        r.minus[indexDiff(n, m)] = static_cast<double>(orbitSize(m));
    }
    // incomparable: zero element
    return r;
}

SymElement symElementProduct(const SymElement& p, const SymElement& q) {
    require(p.d == q.d, "dimension mismatch");
    require(p.minus.empty() && q.minus.empty(),
            "symElementProduct takes analytic-part elements only");
    SymElement r(p.d);
    for (const auto& [n, pn] : p.plus) {
        Complex cp = std::conj(pn);
        for (const auto& [m, qm] : q.plus) {
            SymElement t = symProduct(n, m);
            Complex s = cp * qm;
            for (const auto& [k, c] : t.plus) r.plus[k] += s * c;
            for (const auto& [k, c] : t.minus) r.minus[k] += s * c;
        }
    }
    return r.normalize();
}

std::size_t FockTruncation::rank(const Word& w) const {
    int len = static_cast<int>(w.size());
    require(len <= maxLen, "word longer than truncation");
    // offset(len) = 1 + d + ... + d^{len-1}
    std::size_t off = 0, pow = 1;
    for (int k = 0; k < len; ++k) {
        off += pow;
        pow *= static_cast<std::size_t>(d);
    }
    std::size_t r = 0;
    for (int letter : w) {
        require(letter >= 1 && letter <= d, "word letter outside 1..d");
        r = r * static_cast<std::size_t>(d) + static_cast<std::size_t>(letter - 1);
    }
    return off + r;
}

FockTruncation fockBuild(int d, int maxLen) {
    require(d >= 1 && maxLen >= 0, "fockBuild requires d >= 1, maxLen >= 0");
    std::size_t total = 1, pow = 1;
    for (int k = 1; k <= maxLen; ++k) {
        pow *= static_cast<std::size_t>(d);
        total += pow;
        if (total > maxBasisSize())
            throwResource("Fock basis size exceeds NCCLARK_MAX_BASIS at length " +
                          std::to_string(k));
    }
    FockTruncation fock;
    fock.d = d;
    fock.maxLen = maxLen;
    fock.basis.reserve(total);
    fock.basis.push_back({});
    std::size_t prevBegin = 0;
    for (int len = 1; len <= maxLen; ++len) {
        std::size_t prevEnd = fock.basis.size();
        for (std::size_t i = prevBegin; i < prevEnd; ++i) {
            Word w = fock.basis[i];
            w.push_back(0);
            for (int letter = 1; letter <= d; ++letter) {
                w.back() = letter;
                fock.basis.push_back(w);
            }
        }
        prevBegin = prevEnd;
    }
    return fock;
}

namespace {

template <typename Emit>
void forEachEntry(const SymElement& p, const FockTruncation& fock, Emit&& emit) {
    for (const auto& [n, c] : p.plus) {
        require(static_cast<int>(n.size()) == fock.d, "element dimension mismatch");
        int deg = totalDegree(n);
        if (deg > fock.maxLen) continue;
        for (const Word& u : wordsWithLetterCount(n)) {
            for (const Word& v : fock.basis) {
                if (static_cast<int>(v.size()) + deg > fock.maxLen) continue;
                Word uv = u;
                uv.insert(uv.end(), v.begin(), v.end());
                emit(fock.rank(uv), fock.rank(v), c);
            }
        }
    }
    for (const auto& [n, c] : p.minus) {
        require(static_cast<int>(n.size()) == fock.d, "element dimension mismatch");
        int deg = totalDegree(n);
        if (deg > fock.maxLen) continue;
        for (const Word& u : wordsWithLetterCount(n)) {
            for (const Word& v : fock.basis) {
                if (static_cast<int>(v.size()) + deg > fock.maxLen) continue;
                Word uv = u;
                uv.insert(uv.end(), v.begin(), v.end());
                emit(fock.rank(v), fock.rank(uv), c);
            }
        }
    }
}

} // namespace

Eigen::MatrixXcd fockEvaluate(const SymElement& p, const FockTruncation& fock) {
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(fock.size(), fock.size());
    forEachEntry(p, fock, [&](std::size_t r, std::size_t c, Complex v) { M(r, c) += v; });
    return M;
}

Eigen::SparseMatrix<Complex> fockEvaluateSparse(const SymElement& p, const FockTruncation& fock) {
    std::vector<Eigen::Triplet<Complex>> trips;
    forEachEntry(p, fock, [&](std::size_t r, std::size_t c, Complex v) {
        trips.emplace_back(static_cast<int>(r), static_cast<int>(c), v);
    });
    Eigen::SparseMatrix<Complex> M(static_cast<int>(fock.size()), static_cast<int>(fock.size()));
    M.setFromTriplets(trips.begin(), trips.end());
    return M;
}

Complex vacuumMoment(const SymElement& p) {
    MultiIndex zero(p.d, 0);
    auto it = p.plus.find(zero);
    return it == p.plus.end() ? Complex{0.0, 0.0} : it->second;
}

} // namespace ncclark
