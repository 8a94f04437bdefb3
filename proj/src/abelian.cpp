#include "flagcones/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "flagcones/arith.hpp"

namespace flagcones::abelian {

std::string GroupSpec::to_string() const {
    if (cyclic_orders.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < cyclic_orders.size(); ++i) {
        if (i) s += "x";
        s += "C" + std::to_string(cyclic_orders[i]);
    }
    return s;
}

Group::Group(GroupSpec spec) : spec_(std::move(spec)) {
    std::int64_t n = spec_.order();
    if (n < 1 || n > 1024) throw std::out_of_range("Group: order must be in [1, 1024]");
    for (int d : spec_.cyclic_orders)
        if (d < 2) throw std::invalid_argument("Group: cyclic factors must be >= 2");
    n_ = static_cast<int>(n);
    table_.assign(static_cast<std::size_t>(n_) * n_, 0);
    const auto& orders = spec_.cyclic_orders;
    const int t = static_cast<int>(orders.size());
    std::vector<int> ca(t), cb(t);
    for (int a = 0; a < n_; ++a) {
        {
            int x = a;
            for (int s = 0; s < t; ++s) {
                ca[s] = x % orders[s];
                x /= orders[s];
            }
        }
        for (int b = a; b < n_; ++b) {
            int x = b;
            for (int s = 0; s < t; ++s) {
                cb[s] = x % orders[s];
                x /= orders[s];
            }
            int prod = 0;
            int scale = 1;
            for (int s = 0; s < t; ++s) {
                prod += scale * ((ca[s] + cb[s]) % orders[s]);
                scale *= orders[s];
            }
            table_[static_cast<std::size_t>(a) * n_ + b] = prod;
            table_[static_cast<std::size_t>(b) * n_ + a] = prod;
        }
    }
    elem_order_.assign(n_, 1);
    for (int a = 1; a < n_; ++a) {
        int cur = a;
        int k = 1;
        while (cur != 0) {
            cur = mult(cur, a);
            ++k;
        }
        elem_order_[a] = k;
    }
}

GroupPtr Group::make(GroupSpec spec) { return std::shared_ptr<const Group>(new Group(std::move(spec))); }

std::vector<int> Group::coords(int a) const {
    if (a < 0 || a >= n_) throw std::out_of_range("Group::coords: bad index");
    std::vector<int> c(spec_.cyclic_orders.size());
    for (std::size_t s = 0; s < c.size(); ++s) {
        c[s] = a % spec_.cyclic_orders[s];
        a /= spec_.cyclic_orders[s];
    }
    return c;
}

int Group::index_of(const std::vector<int>& coords) const {
    if (coords.size() != spec_.cyclic_orders.size())
        throw std::invalid_argument("Group::index_of: coordinate arity mismatch");
    int idx = 0;
    int scale = 1;
    for (std::size_t s = 0; s < coords.size(); ++s) {
        int d = spec_.cyclic_orders[s];
        int c = coords[s] % d;
        if (c < 0) c += d;
        idx += scale * c;
        scale *= d;
    }
    return idx;
}

namespace {

void require_same_group(const GroupPtr& a, const GroupPtr& b, const char* what) {
    if (a == b) return;
    if (!a || !b || !(a->spec() == b->spec()))
        throw std::invalid_argument(std::string(what) + ": elements from incompatible groups");
}

}  // namespace

GroupElement::GroupElement(GroupPtr group, int index) : group_(std::move(group)), index_(index) {
    if (!group_) throw std::invalid_argument("GroupElement: null group");
    if (index_ < 0 || index_ >= group_->order()) throw std::out_of_range("GroupElement: bad index");
}

GroupElement::GroupElement(GroupPtr group, const std::vector<int>& coords)
    : group_(std::move(group)), index_(0) {
    if (!group_) throw std::invalid_argument("GroupElement: null group");
    index_ = group_->index_of(coords);
}

bool GroupElement::operator==(const GroupElement& o) const {
    return index_ == o.index_ && group_->spec() == o.group_->spec();
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
    require_same_group(a.group(), b.group(), "multiply");
    return GroupElement(a.group(), a.group()->mult(a.index(), b.index()));
}

int element_order(const GroupElement& a) { return a.group()->element_order(a.index()); }

GroupElement identity(const GroupPtr& g) { return GroupElement(g, 0); }

ElementSet::ElementSet(GroupPtr group, std::vector<int> indices)
    : group_(std::move(group)), indices_(std::move(indices)) {
    if (!group_) throw std::invalid_argument("ElementSet: null group");
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    for (int i : indices_)
        if (i < 0 || i >= group_->order()) throw std::out_of_range("ElementSet: bad element index");
}

ElementSet ElementSet::of(const std::vector<GroupElement>& elems) {
    if (elems.empty()) throw std::invalid_argument("ElementSet::of: empty element list");
    std::vector<int> idx;
    idx.reserve(elems.size());
    for (const auto& e : elems) {
        require_same_group(elems.front().group(), e.group(), "ElementSet::of");
        idx.push_back(e.index());
    }
    return ElementSet(elems.front().group(), std::move(idx));
}

bool ElementSet::contains(int index) const {
    return std::binary_search(indices_.begin(), indices_.end(), index);
}

bool ElementSet::operator==(const ElementSet& o) const {
    return indices_ == o.indices_ && group_->spec() == o.group_->spec();
}

ElementSet sumset(const ElementSet& A, const ElementSet& B) {
    require_same_group(A.group(), B.group(), "sumset");
    if (A.size() == 0 || B.size() == 0) throw std::invalid_argument("sumset: empty operand");
    const Group& g = *A.group();
    std::vector<char> hit(g.order(), 0);
    for (int a : A.indices())
        for (int b : B.indices()) hit[g.mult(a, b)] = 1;
    std::vector<int> out;
    for (int i = 0; i < g.order(); ++i)
        if (hit[i]) out.push_back(i);
    return ElementSet(A.group(), std::move(out));
}

ElementSet stabilizer(const ElementSet& S) {
    if (S.size() == 0) throw std::invalid_argument("stabilizer: empty set");
    const Group& g = *S.group();
    std::vector<char> in_s(g.order(), 0);
    for (int s : S.indices()) in_s[s] = 1;
    std::vector<int> out;
    for (int cand = 0; cand < g.order(); ++cand) {
        bool ok = true;
        for (int s : S.indices()) {
            if (!in_s[g.mult(cand, s)]) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(cand);
    }
    return ElementSet(S.group(), std::move(out));
}

namespace {

// closure of a subgroup (given as membership mask) and one new generator;
// abelian, so <H, g> is the union of cosets H g^k
void extend_subgroup(const Group& g, std::vector<char>& in_h, std::vector<int>& members, int gen) {
    if (in_h[gen]) return;
    std::vector<int> base = members;
    int power = gen;
    while (!in_h[power]) {
        for (int h : base) {
            int x = g.mult(h, power);
            if (!in_h[x]) {
                in_h[x] = 1;
                members.push_back(x);
            }
        }
        power = g.mult(power, gen);
    }
}

}  // namespace

ElementSet generated_subgroup(const ElementSet& S) {
    if (S.size() == 0) throw std::invalid_argument("generated_subgroup: empty set");
    const Group& g = *S.group();
    std::vector<char> in_h(g.order(), 0);
    std::vector<int> members{0};
    in_h[0] = 1;
    for (int gen : S.indices()) extend_subgroup(g, in_h, members, gen);
    return ElementSet(S.group(), std::move(members));
}

KneserReport kneser_audit(const ElementSet& A, const ElementSet& B) {
    require_same_group(A.group(), B.group(), "kneser_audit");
    if (A.size() == 0 || B.size() == 0) throw std::invalid_argument("kneser_audit: empty operand");
    KneserReport rep;
    rep.size_a = A.size();
    rep.size_b = B.size();
    ElementSet ab = sumset(A, B);
    rep.size_ab = ab.size();
    ElementSet stab = stabilizer(ab);
    rep.stabilizer_order = stab.size();
    const std::int64_t m = rep.stabilizer_order;
    if (rep.size_ab < rep.size_a + rep.size_b - m)
        throw std::runtime_error("kneser_audit: Kneser inequality violated (internal bug)");
    rep.cosets_stab_a = sumset(stab, A).size() / m;
    rep.cosets_stab_b = sumset(stab, B).size() / m;
    rep.cosets_ab = rep.size_ab / m;
    rep.sub_additive = rep.size_ab <= rep.size_a + rep.size_b - 2;
    const std::int64_t i = rep.size_a - 1, j = rep.size_b - 1;
    rep.overflow = m > 1 && arith::remainder_overflow(i, j, m);
    if (rep.sub_additive) {
        if (m <= 1) throw std::runtime_error("kneser_audit: sub-additive with trivial stabilizer");
        if (!rep.overflow)
            throw std::runtime_error("kneser_audit: sub-additive without overflow mod m");
        if (static_cast<std::int64_t>(sumset(stab, A).size()) != (i / m + 1) * m)
            throw std::runtime_error("kneser_audit: |Stab(AB) A| identity failed");
        if (static_cast<std::int64_t>(sumset(stab, B).size()) != (j / m + 1) * m)
            throw std::runtime_error("kneser_audit: |Stab(AB) B| identity failed");
        if (rep.size_ab != (i / m + j / m + 1) * m)
            throw std::runtime_error("kneser_audit: |AB| identity failed");
    }
    return rep;
}

}  // namespace flagcones::abelian
