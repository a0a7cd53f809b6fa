#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

namespace ncclark {

// Multi-index n = (n_1,...,n_d), entries >= 0. The dimension is the vector size.
using MultiIndex = std::vector<int>;

int totalDegree(const MultiIndex& n);

// |n|! / (n_1! ... n_d!) = number of words with letter-count n.
// Exact in 64 bits; throws Error(Resource) on overflow.
std::uint64_t orbitSize(const MultiIndex& n);

bool componentwiseLEQ(const MultiIndex& a, const MultiIndex& b);
MultiIndex indexDiff(const MultiIndex& a, const MultiIndex& b); // a - b, requires b <= a

// Graded enumeration of all multi-indices with |n| <= N: degree-major,
// lexicographic within a degree. Index 0 is always the zero index.
// Lookup is O(1) amortized via a hash map.
class MonomialBasis {
public:
    MonomialBasis(int d, int maxDegree);

    int dimension() const noexcept { return d_; }
    int maxDegree() const noexcept { return maxDegree_; }
    std::size_t size() const noexcept { return list_.size(); }
    const MultiIndex& at(std::size_t i) const { return list_[i]; }

    // -1 if the index is absent (wrong dimension or degree > maxDegree).
    std::ptrdiff_t find(const MultiIndex& n) const;
    std::size_t indexOf(const MultiIndex& n) const; // throws Error(Domain) if absent

    // Half-open range [degreeBegin(k), degreeEnd(k)) of positions with |n| == k.
    std::size_t degreeBegin(int k) const;
    std::size_t degreeEnd(int k) const;

private:
    int d_;
    int maxDegree_;
    std::vector<MultiIndex> list_;
    std::vector<std::size_t> degreeOffset_; // size maxDegree_+2
    struct Hash {
        std::size_t operator()(const MultiIndex& n) const noexcept;
    };
    std::unordered_map<MultiIndex, std::size_t, Hash> pos_;
};

// Shared, memoized bases: most objects at the same (d, N) reuse one instance.
std::shared_ptr<const MonomialBasis> basisFor(int d, int maxDegree);

// Number of multi-indices with |n| <= N in dimension d, i.e. C(N+d, d).
std::size_t monomialCount(int d, int maxDegree);

// Basis/word-count guard, configurable through NCCLARK_MAX_BASIS (default 200000).
std::size_t maxBasisSize();

} // namespace ncclark
