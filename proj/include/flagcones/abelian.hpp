#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace flagcones::abelian {

/// A finite abelian group presented as a product of cyclic factors.
/// The empty list is the trivial group.
struct GroupSpec {
    std::vector<int> cyclic_orders;

    std::int64_t order() const {
        std::int64_t n = 1;
        for (int d : cyclic_orders) n *= d;
        return n;
    }
    bool operator==(const GroupSpec& o) const { return cyclic_orders == o.cyclic_orders; }
    std::string to_string() const;
};

/// Shared runtime form of a group: multiplication table, element orders,
/// index <-> coordinate conversion. Elements are indexed by the mixed-radix
/// value of their coordinate vector, so index 0 is the identity.
class Group {
public:
    static std::shared_ptr<const Group> make(GroupSpec spec);

    const GroupSpec& spec() const { return spec_; }
    int order() const { return n_; }
    int mult(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int element_order(int a) const { return elem_order_[a]; }
    std::vector<int> coords(int a) const;
    int index_of(const std::vector<int>& coords) const;

private:
    explicit Group(GroupSpec spec);
    GroupSpec spec_;
    int n_ = 1;
    std::vector<int> table_;
    std::vector<int> elem_order_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// One element of a shared group; coordinates are reduced residues.
class GroupElement {
public:
    GroupElement(GroupPtr group, int index);
    GroupElement(GroupPtr group, const std::vector<int>& coords);

    const GroupPtr& group() const { return group_; }
    int index() const { return index_; }
    std::vector<int> coords() const { return group_->coords(index_); }
    bool is_identity() const { return index_ == 0; }

    bool operator==(const GroupElement& o) const;

private:
    GroupPtr group_;
    int index_;
};

GroupElement multiply(const GroupElement& a, const GroupElement& b);
int element_order(const GroupElement& a);
GroupElement identity(const GroupPtr& g);

/// A finite subset of one group, kept as a canonical sorted index vector
/// (sets become dedup keys downstream).
class ElementSet {
public:
    ElementSet(GroupPtr group, std::vector<int> indices);
    static ElementSet of(const std::vector<GroupElement>& elems);

    const GroupPtr& group() const { return group_; }
    const std::vector<int>& indices() const { return indices_; }
    int size() const { return static_cast<int>(indices_.size()); }
    bool contains(int index) const;

    bool operator==(const ElementSet& o) const;

private:
    GroupPtr group_;
    std::vector<int> indices_;  // sorted, unique
};

/// {ab | a in A, b in B}. Both sets nonempty and in the same group.
ElementSet sumset(const ElementSet& A, const ElementSet& B);

/// The subgroup {g | gS = S}.
ElementSet stabilizer(const ElementSet& S);

/// Smallest subgroup containing S.
ElementSet generated_subgroup(const ElementSet& S);

/// Outcome of one Kneser bound audit. In the sub-additive case
/// (|AB| <= |A| + |B| - 2) the full coset structure is asserted.
struct KneserReport {
    std::int64_t size_a = 0;
    std::int64_t size_b = 0;
    std::int64_t size_ab = 0;
    std::int64_t stabilizer_order = 0;       // m
    std::int64_t cosets_stab_a = 0;          // |Stab(AB) A| / m
    std::int64_t cosets_stab_b = 0;
    std::int64_t cosets_ab = 0;
    bool sub_additive = false;
    bool overflow = false;                    // (|A|-1) + (|B|-1) overflows mod m
};

/// Checks |AB| >= |A| + |B| - |Stab(AB)| and, when AB is sub-additive, the
/// overflow and the three coset-count identities. A failed identity throws:
/// it would mean a bug here, not new mathematics.
KneserReport kneser_audit(const ElementSet& A, const ElementSet& B);

}  // namespace flagcones::abelian
