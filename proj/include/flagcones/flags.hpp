#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "flagcones/abelian.hpp"
#include "flagcones/arith.hpp"

namespace flagcones::flags {

using abelian::GroupElement;
using abelian::GroupPtr;
using arith::TowerType;

/// The symmetric monotone table T of a flag. Only the upper triangle
/// 1 <= i <= j < n is stored; T(i,0) = i and T(0,j) = j are synthesized.
class FlagType {
public:
    FlagType(int n, std::vector<std::int16_t> upper_triangle);

    /// Builds from a full n x n table, validating symmetry, T(i,0) = i and
    /// row monotonicity. Throws if the table is not a flag type.
    static FlagType from_table(const std::vector<std::vector<int>>& table);

    int degree() const { return n_; }
    int at(int i, int j) const;
    const std::vector<std::int16_t>& upper_triangle() const { return tri_; }

    bool operator==(const FlagType& o) const { return n_ == o.n_ && tri_ == o.tri_; }
    bool operator!=(const FlagType& o) const { return !(*this == o); }
    /// Table order, used only for canonical sorting of catalogs.
    bool operator<(const FlagType& o) const;

private:
    int n_;
    std::vector<std::int16_t> tri_;
};

/// True iff the square table satisfies the three flag-type conditions.
bool validate_flag_type(const std::vector<std::vector<int>>& table);

/// Index pairs where T strictly increases in both arguments. Both
/// orientations (i,j) and (j,i) are reported, sorted.
using CornerSet = std::vector<std::pair<int, int>>;
CornerSet corners(const FlagType& T);

/// Pointwise partial order: T(i,j) <= T2(i,j) everywhere.
bool le(const FlagType& T, const FlagType& T2);

/// An ordering v_0..v_{n-1} of a whole group with v_0 the identity.
class Flag {
public:
    Flag(GroupPtr group, std::vector<int> sequence);
    static Flag of_elements(const std::vector<GroupElement>& seq);

    const GroupPtr& group() const { return group_; }
    const std::vector<int>& sequence() const { return seq_; }
    int degree() const { return static_cast<int>(seq_.size()); }
    GroupElement at(int i) const { return GroupElement(group_, seq_[i]); }

private:
    GroupPtr group_;
    std::vector<int> seq_;
};

/// T_F(i,j) = largest position reached by F_i F_j (= the min-k form, since
/// the F_k are prefixes).
FlagType flag_type_of(const Flag& F);

/// The essentially lexicographic flag of C_{n_1} x ... x C_{n_t}:
/// v_i = e_1^{i_1} ... e_t^{i_t} for the mixed-radix digits of i.
Flag lex_flag(const TowerType& tower);

/// T(tower), computed by pure digit arithmetic (no group machinery);
/// equals flag_type_of(lex_flag(tower)).
FlagType tower_flag_type(const TowerType& tower);

/// The tower type of a flag: quotient sizes of the chain of distinct
/// subgroups generated by the prefixes.
TowerType tower_type_of(const Flag& F);

/// Fills positions after an explicit prefix by scanning candidate indices i'
/// in increasing order and emitting the first unused element
/// prod_s e_{role_order[s]}^{digit_s(i')}. role_order is 1-based over the
/// group's cyclic factors; radix degree must equal |G|.
Flag greedy_flag(const GroupPtr& group, const TowerType& radix, const std::vector<int>& role_order,
                 const std::vector<GroupElement>& explicit_prefix);

/// The flag of G x C_p with v'_i = v_{i_2} e^{i_1} for i = i_1 + i_2 p.
Flag lift_flag(const Flag& F, int p);

namespace detail {

/// Allocation-free core of flag_type_of for enumeration loops: fills `tri`
/// (row-major upper triangle) for the ordering `seq`; the other vectors are
/// caller-owned scratch of size n.
void type_triangle(const abelian::Group& g, const std::vector<int>& seq, std::vector<int>& pos,
                   std::vector<int>& prev_row, std::vector<int>& cur_row,
                   std::vector<std::int16_t>& tri);

}  // namespace detail

}  // namespace flagcones::flags
