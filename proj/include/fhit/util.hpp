#ifndef FHIT_UTIL_HPP
#define FHIT_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fhit {

// Vertex sets are sorted, duplicate-free vectors of dense ids.
using VSet = std::vector<int>;

struct input_error : std::runtime_error {
    explicit input_error(const std::string& m) : std::runtime_error(m) {}
};
struct capability_error : std::runtime_error {
    explicit capability_error(const std::string& m) : std::runtime_error(m) {}
};
struct contract_error : std::runtime_error {
    explicit contract_error(const std::string& m) : std::runtime_error(m) {}
};

inline VSet normalized(VSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline bool set_contains(const VSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

// a subset-of b, both sorted
inline bool is_subset(const VSet& a, const VSet& b) {
    if (a.size() > b.size()) return false;
    std::size_t j = 0;
    for (int x : a) {
        while (j < b.size() && b[j] < x) ++j;
        if (j == b.size() || b[j] != x) return false;
        ++j;
    }
    return true;
}

inline bool is_proper_subset(const VSet& a, const VSet& b) {
    return a.size() < b.size() && is_subset(a, b);
}

inline bool sets_intersect(const VSet& a, const VSet& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return false;
}

inline VSet set_union(const VSet& a, const VSet& b) {
    VSet r;
    r.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline VSet set_intersection(const VSet& a, const VSet& b) {
    VSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline VSet set_minus(const VSet& a, const VSet& b) {
    VSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

// Saturating arithmetic for the combinatorial budget formulas, which overflow
// 64 bits already at small gamma.
constexpr long long kSatCap = 4'000'000'000'000'000'000LL;

inline long long sat_mul(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSatCap / b) return kSatCap;
    return a * b;
}

inline long long sat_add(long long a, long long b) {
    if (a > kSatCap - b) return kSatCap;
    return a + b;
}

inline long long sat_pow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r = sat_mul(r, base);
    return r;
}

inline long long sat_factorial(int x) {
    long long r = 1;
    for (int i = 2; i <= x; ++i) r = sat_mul(r, i);
    return r;
}

// Deterministic xorshift-based generator; std:: distributions are
// implementation-defined, so uniform draws are hand-rolled.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed = 1) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        std::uint64_t x = state;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        state = x;
        return x;
    }
    // uniform in [0, bound)
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do { x = next(); } while (x >= limit);
        return x % bound;
    }
    int uniform_int(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    double uniform01() {
        return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
    }
};

}  // namespace fhit

#endif
