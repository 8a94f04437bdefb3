#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagcones/abelian.hpp"
#include "flagcones/flags.hpp"

namespace flagcones::search {

using abelian::GroupPtr;
using abelian::GroupSpec;
using arith::TowerType;
using flags::Flag;
using flags::FlagType;

/// One GroupSpec per isomorphism class, in invariant-factor form
/// (ascending divisibility chain).
std::vector<GroupSpec> abelian_groups_of_order(std::int64_t n);

struct EnumOptions {
    /// Elements (indices) pinned right after the identity.
    std::vector<int> prefix;
    /// Max complete orderings to visit; negative = unlimited.
    std::int64_t budget = -1;
    /// Refuse factorial blowups beyond this group order.
    int max_degree = 12;
    /// Called after each placement; return false to cut the subtree.
    /// Arguments: the sequence so far and the position just filled.
    std::function<bool(const std::vector<int>&, int)> prune;
};

struct EnumStats {
    std::int64_t visited = 0;
    std::int64_t pruned = 0;
};

/// Visits every ordering of the group with v_0 = identity (and the given
/// prefix) exactly once, in lexicographic index order.
EnumStats enumerate_flags(const GroupPtr& g, const std::function<void(const std::vector<int>&)>& visit,
                          const EnumOptions& opts = {});

/// Deduplicated set of realizable flag types with one witnessing flag per
/// realizing group.
struct Catalog {
    struct Entry {
        FlagType type;
        std::map<int, std::vector<int>> witnesses;  // group index -> ordering
    };
    int degree = 0;
    std::vector<GroupSpec> groups;
    std::vector<Entry> entries;  // sorted by type table

    const Entry* find(const FlagType& t) const;
    bool contains(const FlagType& t) const { return find(t) != nullptr; }
    bool realizable_for(const FlagType& t, int group_index) const;
};

struct SearchOptions {
    int threads = 0;           // 0 = hardware concurrency
    bool long_run = false;     // required for n = 12
    bool aut_pruning = true;   // quotient the first two positions by Aut(G)
    std::string checkpoint;    // long-run resume files (ids + partial catalog)
    /// Restrict the search to these groups; empty = every isomorphism class
    /// of order n.
    std::vector<GroupSpec> groups;
};

/// Union over all groups of order n of all flag types of all flags.
Catalog realizable_types(int n, const SearchOptions& opts = {});

/// Minimal elements of the catalog under the pointwise order.
std::vector<FlagType> minimal_types(const Catalog& catalog);

/// Necessary realizability condition: every sub-additive entry overflows
/// modulo some proper divisor of n.
bool kneser_filter(const FlagType& T);

struct Report {
    std::string name;
    bool passed = true;
    std::vector<std::string> lines;

    void note(std::string s) { lines.push_back(std::move(s)); }
    void fail(std::string s) {
        passed = false;
        lines.push_back("VIOLATION: " + std::move(s));
    }
};

/// minimal_types(n) == {T(tower) : tower prime of degree n}, exactly.
Report verify_classification(int n, const SearchOptions& opts = {});

/// T(i,j) >= i+j at every corner of every catalog entry of degree n; with
/// field_samples > 0 also over random subspace flags of F_{2^6}/F_2.
Report verify_corner_bound(int n, int field_samples = 0, std::uint64_t seed = 0);

/// Flag-search realizability of T(tower) vs the independent subgroup-chain
/// oracle, for every group of order n and every tower type of degree n.
Report verify_realizability(int n);

/// Every flag of the given tower type has flag type >= T(tower), attained.
Report verify_tower_minimality(const TowerType& tower);

/// Brute-force re-derivation of the three degree-12 triple lists.
Report verify_prop12_lists();

/// Random sumset audits over abelian groups of order <= max_order.
Report verify_kneser(std::int64_t samples, std::uint64_t seed, int max_order = 36);

/// Random subspace audits in F_{2^6}/F_2 and F_{3^4}/F_3.
Report verify_bsz(std::int64_t samples_per_field, std::uint64_t seed);

/// All automorphisms of the group as index permutations.
std::vector<std::vector<int>> automorphisms(const GroupPtr& g);

/// All subgroups (as sorted index vectors).
std::vector<std::vector<int>> all_subgroups(const GroupPtr& g);

/// Independent oracle: does G have a filtration with cyclic quotients of
/// orders n_1, ..., n_t? (Subgroup-chain enumeration, no flags involved.)
bool has_cyclic_filtration(const GroupPtr& g, const TowerType& tower);

}  // namespace flagcones::search
