#include "flagcones/flags.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagcones::flags {

namespace {

inline std::size_t tri_size(int n) {
    return static_cast<std::size_t>(n - 1) * n / 2;
}

// index of (i,j) with 1 <= i <= j <= n-1 in the row-major upper triangle
inline std::size_t tri_index(int n, int i, int j) {
    return static_cast<std::size_t>(i - 1) * n - static_cast<std::size_t>(i - 1) * i / 2 + (j - i);
}

}  // namespace

FlagType::FlagType(int n, std::vector<std::int16_t> upper_triangle)
    : n_(n), tri_(std::move(upper_triangle)) {
    if (n_ < 1) throw std::invalid_argument("FlagType: degree must be >= 1");
    if (tri_.size() != tri_size(n_))
        throw std::invalid_argument("FlagType: upper triangle has wrong size");
}

int FlagType::at(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("FlagType::at");
    if (i == 0) return j;
    if (j == 0) return i;
    if (i > j) std::swap(i, j);
    return tri_[tri_index(n_, i, j)];
}

bool FlagType::operator<(const FlagType& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return tri_ < o.tri_;
}

bool validate_flag_type(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) return false;
    for (const auto& row : table)
        if (static_cast<int>(row.size()) != n) return false;
    for (int i = 0; i < n; ++i) {
        if (table[i][0] != i) return false;
        for (int j = 0; j < n; ++j) {
            if (table[i][j] < 0 || table[i][j] >= n) return false;
            if (table[i][j] != table[j][i]) return false;
            if (i + 1 < n && table[i][j] > table[i + 1][j]) return false;
        }
    }
    return true;
}

FlagType FlagType::from_table(const std::vector<std::vector<int>>& table) {
    if (!validate_flag_type(table)) throw std::invalid_argument("FlagType: table is not a flag type");
    const int n = static_cast<int>(table.size());
    std::vector<std::int16_t> tri(tri_size(n));
    for (int i = 1; i < n; ++i)
        for (int j = i; j < n; ++j) tri[tri_index(n, i, j)] = static_cast<std::int16_t>(table[i][j]);
    return FlagType(n, std::move(tri));
}

CornerSet corners(const FlagType& T) {
    CornerSet out;
    const int n = T.degree();
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            if (T.at(i - 1, j) < T.at(i, j) && T.at(i, j - 1) < T.at(i, j)) out.emplace_back(i, j);
    return out;
}

bool le(const FlagType& T, const FlagType& T2) {
    if (T.degree() != T2.degree()) throw std::invalid_argument("le: degree mismatch");
    const int n = T.degree();
    for (int i = 1; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (T.at(i, j) > T2.at(i, j)) return false;
    return true;
}

Flag::Flag(GroupPtr group, std::vector<int> sequence)
    : group_(std::move(group)), seq_(std::move(sequence)) {
    if (!group_) throw std::invalid_argument("Flag: null group");
    const int n = group_->order();
    if (static_cast<int>(seq_.size()) != n)
        throw std::invalid_argument("Flag: sequence must list the whole group");
    if (n > 0 && seq_[0] != 0) throw std::invalid_argument("Flag: v_0 must be the identity");
    std::vector<char> seen(n, 0);
    for (int v : seq_) {
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("Flag: sequence is not a permutation");
        seen[v] = 1;
    }
}

Flag Flag::of_elements(const std::vector<GroupElement>& seq) {
    if (seq.empty()) throw std::invalid_argument("Flag: empty sequence");
    std::vector<int> idx;
    idx.reserve(seq.size());
    for (const auto& e : seq) idx.push_back(e.index());
    return Flag(seq.front().group(), std::move(idx));
}

namespace detail {

void type_triangle(const abelian::Group& g, const std::vector<int>& seq, std::vector<int>& pos,
                   std::vector<int>& prev_row, std::vector<int>& cur_row,
                   std::vector<std::int16_t>& tri) {
    const int n = static_cast<int>(seq.size());
    for (int i = 0; i < n; ++i) pos[seq[i]] = i;
    // T(i,j) = max(T(i-1,j), T(i,j-1), pos(v_i v_j)) with T(0,j) = j
    for (int j = 0; j < n; ++j) prev_row[j] = j;
    for (int i = 1; i < n; ++i) {
        int left = prev_row[i];  // T(i, i-1) = T(i-1, i) by symmetry
        for (int j = i; j < n; ++j) {
            int m = pos[g.mult(seq[i], seq[j])];
            int v = std::max({prev_row[j], left, m});
            tri[tri_index(n, i, j)] = static_cast<std::int16_t>(v);
            left = v;
        }
        // roll the row, reading the mirror entries below the diagonal
        for (int j = 0; j < i; ++j) cur_row[j] = j == 0 ? i : tri[tri_index(n, j, i)];
        for (int j = i; j < n; ++j) cur_row[j] = tri[tri_index(n, i, j)];
        std::swap(prev_row, cur_row);
    }
}

}  // namespace detail

FlagType flag_type_of(const Flag& F) {
    const int n = F.degree();
    std::vector<int> pos(n), prev_row(n), cur_row(n);
    std::vector<std::int16_t> tri(tri_size(n));
    detail::type_triangle(*F.group(), F.sequence(), pos, prev_row, cur_row, tri);
    return FlagType(n, std::move(tri));
}

Flag lex_flag(const TowerType& tower) {
    GroupPtr g = abelian::Group::make(abelian::GroupSpec{tower.parts()});
    // element index i has coordinates digits(i), so the identity ordering is
    // exactly the lexicographic sequence e_1^{i_1} ... e_t^{i_t}
    std::vector<int> seq(g->order());
    for (int i = 0; i < g->order(); ++i) seq[i] = i;
    return Flag(std::move(g), std::move(seq));
}

FlagType tower_flag_type(const TowerType& tower) {
    const std::int64_t n64 = tower.degree();
    if (n64 > 4096) throw std::out_of_range("tower_flag_type: degree above configured bound 4096");
    const int n = static_cast<int>(n64);
    const auto& parts = tower.parts();
    const int t = static_cast<int>(parts.size());
    // value of the componentwise digit sum (mod each part) of a and b
    std::vector<std::vector<int>> digit(n, std::vector<int>(t));
    for (int a = 0; a < n; ++a) {
        int x = a;
        for (int s = 0; s < t; ++s) {
            digit[a][s] = x % parts[s];
            x /= parts[s];
        }
    }
    auto wrap_sum = [&](int a, int b) {
        int v = 0, scale = 1;
        for (int s = 0; s < t; ++s) {
            v += scale * ((digit[a][s] + digit[b][s]) % parts[s]);
            scale *= parts[s];
        }
        return v;
    };
    std::vector<std::int16_t> tri(tri_size(n));
    std::vector<int> prev_row(n), cur_row(n);
    for (int j = 0; j < n; ++j) prev_row[j] = j;
    for (int i = 1; i < n; ++i) {
        int left = prev_row[i];  // T(i, i-1) = T(i-1, i)
        for (int j = i; j < n; ++j) {
            int v = std::max({prev_row[j], left, wrap_sum(i, j)});
            tri[tri_index(n, i, j)] = static_cast<std::int16_t>(v);
            left = v;
        }
        for (int j = 0; j < i; ++j) cur_row[j] = j == 0 ? i : tri[tri_index(n, j, i)];
        for (int j = i; j < n; ++j) cur_row[j] = tri[tri_index(n, i, j)];
        std::swap(prev_row, cur_row);
    }
    return FlagType(n, std::move(tri));
}

TowerType tower_type_of(const Flag& F) {
    const abelian::Group& g = *F.group();
    const int n = F.degree();
    if (n == 1) throw std::invalid_argument("tower_type_of: trivial group has no tower type");
    std::vector<char> in_h(n, 0);
    std::vector<int> members{0};
    in_h[0] = 1;
    std::vector<int> parts;
    int last_size = 1;
    for (int i = 1; i < n; ++i) {
        int v = F.sequence()[i];
        if (in_h[v]) continue;
        // <H, v> = union of cosets H v^k (abelian)
        std::vector<int> base = members;
        int power = v;
        while (!in_h[power]) {
            for (int h : base) {
                int x = g.mult(h, power);
                if (!in_h[x]) {
                    in_h[x] = 1;
                    members.push_back(x);
                }
            }
            power = g.mult(power, v);
        }
        parts.push_back(static_cast<int>(members.size()) / last_size);
        last_size = static_cast<int>(members.size());
    }
    return TowerType(std::move(parts));
}

Flag greedy_flag(const GroupPtr& group, const TowerType& radix, const std::vector<int>& role_order,
                 const std::vector<GroupElement>& explicit_prefix) {
    const abelian::Group& g = *group;
    const int n = g.order();
    if (radix.degree() != n) throw std::invalid_argument("greedy_flag: radix degree must equal |G|");
    const int t = radix.length();
    if (static_cast<int>(role_order.size()) != t ||
        static_cast<int>(g.spec().cyclic_orders.size()) != t)
        throw std::invalid_argument("greedy_flag: role_order must permute the group's factors");
    {
        std::vector<char> seen(t + 1, 0);
        for (int r : role_order) {
            if (r < 1 || r > t || seen[r]) throw std::invalid_argument("greedy_flag: bad role_order");
            seen[r] = 1;
        }
    }
    // candidate element for scan index i': prod_s e_{role_order[s]}^{digit_s}
    auto candidate = [&](int iprime) {
        std::vector<int> coords(t, 0);
        int x = iprime;
        for (int s = 0; s < t; ++s) {
            coords[role_order[s] - 1] = x % radix.parts()[s];
            x /= radix.parts()[s];
        }
        // role r maps digit s onto generator e_r; exponent must fit its order
        for (int s = 0; s < t; ++s) {
            if (coords[s] >= g.spec().cyclic_orders[s])
                throw std::invalid_argument("greedy_flag: digit exceeds generator order");
        }
        return g.index_of(coords);
    };
    std::vector<int> seq;
    std::vector<char> used(n, 0);
    if (explicit_prefix.empty() || !explicit_prefix.front().is_identity())
        throw std::invalid_argument("greedy_flag: prefix must start with the identity");
    for (const auto& e : explicit_prefix) {
        if (!(e.group() == group) && !(e.group()->spec() == g.spec()))
            throw std::invalid_argument("greedy_flag: prefix element from another group");
        if (used[e.index()]) throw std::invalid_argument("greedy_flag: prefix repeats an element");
        used[e.index()] = 1;
        seq.push_back(e.index());
    }
    int scan = 1;  // the element of scan index 0 is the identity, always used
    while (static_cast<int>(seq.size()) < n) {
        while (scan < n && used[candidate(scan)]) ++scan;
        if (scan >= n) throw std::logic_error("greedy_flag: ran out of candidates");
        int e = candidate(scan);
        used[e] = 1;
        seq.push_back(e);
    }
    return Flag(group, std::move(seq));
}

Flag lift_flag(const Flag& F, int p) {
    if (p < 2) throw std::invalid_argument("lift_flag: p must be >= 2");
    const int m = F.degree();
    abelian::GroupSpec lifted = F.group()->spec();
    lifted.cyclic_orders.push_back(p);
    GroupPtr g2 = abelian::Group::make(lifted);
    std::vector<int> seq(static_cast<std::size_t>(m) * p);
    for (int i = 0; i < m * p; ++i) {
        int i1 = i % p, i2 = i / p;
        std::vector<int> coords = F.group()->coords(F.sequence()[i2]);
        coords.push_back(i1);
        seq[i] = g2->index_of(coords);
    }
    return Flag(std::move(g2), std::move(seq));
}

}  // namespace flagcones::flags
