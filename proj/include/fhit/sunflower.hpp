#ifndef FHIT_SUNFLOWER_HPP
#define FHIT_SUNFLOWER_HPP

#include <optional>
#include <vector>

#include "fhit/util.hpp"

namespace fhit {

// Collection of small vertex sets over a common universe; repeats allowed.
struct SetSystem {
    int universe = 0;
    std::vector<VSet> sets;

    int max_set_size() const {
        std::size_t p = 0;
        for (const auto& s : sets) p = std::max(p, s.size());
        return static_cast<int>(p);
    }
};

struct Sunflower {
    VSet core;
    std::vector<int> members;  // indices into the system
};

// Pairwise intersections of the chosen sets all equal core.
bool sunflower_is_valid(const SetSystem& sys, const Sunflower& sf);

// Standard recursive construction: a maximal disjoint subfamily of size >= r
// is a sunflower with empty core; otherwise recurse on the sets containing
// the most frequent element. Guaranteed to succeed when
// |sys| > (r-1)^p * p! with p the maximum set size.
std::optional<Sunflower> find_sunflower(const SetSystem& sys, int r);

// Greedily selects sets containing core whose petals (set minus core) are
// pairwise disjoint, scanning smallest sets first (stable in input order),
// until no further set qualifies.
std::vector<int> maximal_sunflower_with_core(const SetSystem& sys, const VSet& core);

long long sunflower_threshold(int r, int p);  // (r-1)^p * p!, saturating

}  // namespace fhit

#endif
