#include "ncclark/multiindex.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "ncclark/error.hpp"

namespace ncclark {

int totalDegree(const MultiIndex& n) {
    int s = 0;
    for (int v : n) {
        require(v >= 0, "multi-index entries must be nonnegative");
        s += v;
    }
    return s;
}

std::uint64_t orbitSize(const MultiIndex& n) {
    // Product of binomials C(s_k, n_k) with s_k the running degree: stays
    // integral at every step, so the only failure mode is genuine overflow.
    std::uint64_t result = 1;
    std::uint64_t s = 0;
    for (int v : n) {
        require(v >= 0, "multi-index entries must be nonnegative");
        for (int i = 1; i <= v; ++i) {
            ++s;
            // result *= s; result /= i;  -- keep integral: multiply then divide by gcd order
            std::uint64_t t;
            if (__builtin_mul_overflow(result, s, &t))
                throwResource("orbitSize overflows 64 bits for |n| = " + std::to_string(s));
            result = t / i; // C(s, i)-style running binomial is exactly divisible
        }
    }
    return result;
}

bool componentwiseLEQ(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

MultiIndex indexDiff(const MultiIndex& a, const MultiIndex& b) {
    require(componentwiseLEQ(b, a), "indexDiff requires b <= a componentwise");
    MultiIndex r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

std::size_t MonomialBasis::Hash::operator()(const MultiIndex& n) const noexcept {
    std::size_t h = n.size();
    for (int v : n) h = h * 1000003u + static_cast<std::size_t>(v) + 0x9e3779b9u;
    return h;
}

namespace {

void enumerateDegree(int d, int k, MultiIndex& cur, int pos, std::vector<MultiIndex>& out) {
    if (pos == d - 1) {
        cur[pos] = k;
        out.push_back(cur);
        return;
    }
    // Monomial lex order with z1 > z2 > ... : within a degree the exponent of
    // the first variable decreases, so d=2 degree 2 lists (2,0), (1,1), (0,2).
    for (int v = k; v >= 0; --v) {
        cur[pos] = v;
        enumerateDegree(d, k - v, cur, pos + 1, out);
    }
}

} // namespace

MonomialBasis::MonomialBasis(int d, int maxDegree) : d_(d), maxDegree_(maxDegree) {
    require(d >= 1, "dimension must be >= 1");
    require(maxDegree >= 0, "maxDegree must be >= 0");
    std::size_t total = monomialCount(d, maxDegree);
    if (total > maxBasisSize())
        throwResource("monomial basis size " + std::to_string(total) +
                      " exceeds NCCLARK_MAX_BASIS");
    list_.reserve(total);
    degreeOffset_.assign(static_cast<std::size_t>(maxDegree) + 2, 0);
    MultiIndex cur(d, 0);
    for (int k = 0; k <= maxDegree; ++k) {
        degreeOffset_[k] = list_.size();
        enumerateDegree(d, k, cur, 0, list_);
    }
    degreeOffset_[maxDegree + 1] = list_.size();
    pos_.reserve(list_.size() * 2);
    for (std::size_t i = 0; i < list_.size(); ++i) pos_.emplace(list_[i], i);
}

std::ptrdiff_t MonomialBasis::find(const MultiIndex& n) const {
    if (static_cast<int>(n.size()) != d_) return -1;
    // Closed-form ranks for d <= 3 keep series products off the hash map.
    if (d_ <= 3) {
        int deg = 0;
        for (int v : n) {
            if (v < 0) return -1;
            deg += v;
        }
        if (deg > maxDegree_) return -1;
        std::size_t off = degreeOffset_[deg];
        if (d_ == 1) return static_cast<std::ptrdiff_t>(off);
        if (d_ == 2) return static_cast<std::ptrdiff_t>(off + static_cast<std::size_t>(n[1]));
        std::size_t m = static_cast<std::size_t>(deg - n[0]);
        return static_cast<std::ptrdiff_t>(off + m * (m + 1) / 2 +
                                           static_cast<std::size_t>(deg - n[0] - n[1]));
    }
    auto it = pos_.find(n);
    return it == pos_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

std::size_t MonomialBasis::indexOf(const MultiIndex& n) const {
    auto r = find(n);
    require(r >= 0, "multi-index outside basis");
    return static_cast<std::size_t>(r);
}

std::size_t MonomialBasis::degreeBegin(int k) const {
    require(k >= 0 && k <= maxDegree_, "degree out of range");
    return degreeOffset_[k];
}

std::size_t MonomialBasis::degreeEnd(int k) const {
    require(k >= 0 && k <= maxDegree_, "degree out of range");
    return degreeOffset_[k + 1];
}

std::size_t monomialCount(int d, int maxDegree) {
    // C(maxDegree + d, d) with overflow guard; sizes here are small.
    std::uint64_t r = 1;
    for (int i = 1; i <= d; ++i) {
        std::uint64_t t;
        if (__builtin_mul_overflow(r, static_cast<std::uint64_t>(maxDegree + i), &t))
            throwResource("monomial count overflow");
        r = t / i;
    }
    return static_cast<std::size_t>(r);
}

std::size_t maxBasisSize() {
    static const std::size_t cap = [] {
        if (const char* env = std::getenv("NCCLARK_MAX_BASIS")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(200000);
    }();
    return cap;
}

std::shared_ptr<const MonomialBasis> basisFor(int d, int maxDegree) {
    struct Key {
        int d, N;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            return static_cast<std::size_t>(k.d) * 1315423911u ^ static_cast<std::size_t>(k.N);
        }
    };
    static std::unordered_map<Key, std::weak_ptr<const MonomialBasis>, KeyHash> cache;
    Key key{d, maxDegree};
    if (auto it = cache.find(key); it != cache.end())
        if (auto sp = it->second.lock()) return sp;
    auto sp = std::make_shared<const MonomialBasis>(d, maxDegree);
    cache[key] = sp;
    return sp;
}

} // namespace ncclark
