#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "flagcones/flags.hpp"
#include "flagcones/rng.hpp"
#include "flagcones/search.hpp"

using namespace flagcones;
using namespace flagcones::flags;
using abelian::ElementSet;
using abelian::Group;
using abelian::GroupElement;
using abelian::GroupSpec;
using arith::TowerType;

namespace {

// independent oracle: T(i,j) = min{k : F_i F_j subset of F_k} via explicit
// sumset enumeration over the prefix sets
int type_oracle(const Flag& F, int i, int j) {
    const auto& g = *F.group();
    std::set<int> prod;
    for (int a = 0; a <= i; ++a)
        for (int b = 0; b <= j; ++b) prod.insert(g.mult(F.sequence()[a], F.sequence()[b]));
    std::vector<int> pos(F.degree());
    for (int k = 0; k < F.degree(); ++k) pos[F.sequence()[k]] = k;
    int mx = 0;
    for (int x : prod) mx = std::max(mx, pos[x]);
    return mx;
}

std::vector<std::vector<int>> full_table(const FlagType& t) {
    const int n = t.degree();
    std::vector<std::vector<int>> out(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = t.at(i, j);
    return out;
}

}  // namespace

TEST_CASE("flag type of the lexicographic flags, against the sumset oracle") {
    Flag f22 = lex_flag(TowerType({2, 2}));
    FlagType t22 = flag_type_of(f22);
    CHECK(type_oracle(f22, 1, 1) == 1);
    CHECK(t22.at(1, 1) == 1);
    CHECK(t22.at(1, 2) == 3);
    CHECK(t22.at(2, 2) == 3);
    Flag f23 = lex_flag(TowerType({2, 3}));
    FlagType t23 = flag_type_of(f23);
    CHECK(type_oracle(f23, 2, 2) == 4);
    CHECK(t23.at(2, 2) == 4);
    CHECK(t23.at(2, 3) == 5);
    for (int i = 0; i < 6; ++i) CHECK(t23.at(i, 0) == i);
}

TEST_CASE("flag type equals the oracle on every pair, random flags") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng.below(9));
        auto specs = search::abelian_groups_of_order(n);
        auto g = Group::make(specs[rng.below(specs.size())]);
        std::vector<int> seq(n);
        for (int i = 0; i < n; ++i) seq[i] = i;
        for (int i = 1; i < n; ++i) std::swap(seq[i], seq[1 + rng.below(n - 1)]);
        Flag f(g, seq);
        FlagType t = flag_type_of(f);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(t.at(i, j) == type_oracle(f, i, j));
    }
}

TEST_CASE("validate_flag_type") {
    CHECK(validate_flag_type(full_table(flag_type_of(lex_flag(TowerType({2, 3}))))));
    // T(1,0) must equal 1
    auto bad = full_table(flag_type_of(lex_flag(TowerType({4}))));
    bad[1][0] = 2;
    CHECK_FALSE(validate_flag_type(bad));
    // a monotone symmetric degree-6 table with T(1,1)=1 and T(2,2)=2 is a
    // valid type even though no flag realizes it
    std::vector<std::vector<int>> t(6, std::vector<int>(6, 5));
    for (int i = 0; i < 6; ++i) t[i][0] = t[0][i] = i;
    t[1][1] = 1;
    t[1][2] = t[2][1] = 2;
    t[2][2] = 2;
    CHECK(validate_flag_type(t));
    CHECK(t[1][1] == 1);
    CHECK(t[2][2] == 2);
}

TEST_CASE("lex flag layout") {
    Flag f = lex_flag(TowerType({2, 3}));
    CHECK(f.at(0).coords() == std::vector<int>{0, 0});
    CHECK(f.at(1).coords() == std::vector<int>{1, 0});
    CHECK(f.at(2).coords() == std::vector<int>{0, 1});
    CHECK(f.at(3).coords() == std::vector<int>{1, 1});
    CHECK(f.at(4).coords() == std::vector<int>{0, 2});
    CHECK(f.at(5).coords() == std::vector<int>{1, 2});
    Flag c4 = lex_flag(TowerType({4}));
    for (int i = 0; i < 4; ++i) CHECK(c4.at(i).coords() == std::vector<int>{i});
}

TEST_CASE("tower flag type matches flag_type_of(lex_flag) for every tower of degree <= 24") {
    for (int n = 2; n <= 24; ++n) {
        for (const auto& t : arith::tower_types_of_degree(n)) {
            CHECK(tower_flag_type(t) == flag_type_of(lex_flag(t)));
        }
    }
}

TEST_CASE("tower flag type values") {
    FlagType t4 = tower_flag_type(TowerType({4}));
    CHECK(t4.at(2, 2) == 3);
    FlagType t23 = tower_flag_type(TowerType({2, 3}));
    CHECK(t23.at(1, 2) == 3);  // no overflow: equals i + j
    for (int i = 0; i < 4; ++i) CHECK(t4.at(i, 0) == i);
}

TEST_CASE("corners") {
    FlagType t23 = tower_flag_type(TowerType({2, 3}));
    std::set<std::pair<int, int>> expect{{1, 2}, {2, 1}, {2, 2}, {1, 4}, {4, 1}, {2, 3}, {3, 2}};
    // derived oracle: non-overflow additions wrt (2,3)
    std::set<std::pair<int, int>> oracle;
    for (int i = 1; i < 6; ++i)
        for (int j = 1; i + j < 6; ++j)
            if (!arith::overflows(i, j, TowerType({2, 3}))) oracle.insert({i, j});
    CHECK(oracle == expect);
    auto cs = corners(t23);
    CHECK(std::set<std::pair<int, int>>(cs.begin(), cs.end()) == expect);

    FlagType t4 = tower_flag_type(TowerType({4}));
    auto c4 = corners(t4);
    CHECK(std::set<std::pair<int, int>>(c4.begin(), c4.end()) ==
          std::set<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}});
    CHECK(t23.at(1, 1) == 1);  // boundary gives T(0,1) = 1, so (1,1) is no corner
}

TEST_CASE("corner three-way equivalence for tower types, degree <= 24") {
    for (int n = 2; n <= 24; ++n) {
        for (const auto& tow : arith::tower_types_of_degree(n)) {
            FlagType t = tower_flag_type(tow);
            auto cs = corners(t);
            std::set<std::pair<int, int>> corner_set(cs.begin(), cs.end());
            for (int i = 1; i < n; ++i)
                for (int j = 1; i + j < n; ++j) {
                    const bool no_ovf = !arith::overflows(i, j, tow);
                    CHECK(no_ovf == (corner_set.count({i, j}) > 0));
                    CHECK(no_ovf == (t.at(i, j) == i + j));
                }
        }
    }
}

TEST_CASE("partial order le") {
    FlagType t23 = tower_flag_type(TowerType({2, 3}));
    FlagType t32 = tower_flag_type(TowerType({3, 2}));
    CHECK(le(t23, t23));
    CHECK_FALSE(le(t23, t32));
    CHECK_FALSE(le(t32, t23));
    CHECK(t23.at(1, 1) == 1);
    CHECK(t32.at(1, 1) == 2);
    CHECK(t32.at(2, 2) == 2);
    CHECK(t23.at(2, 2) == 4);
    // a prime refinement sits below its coarsening
    CHECK(le(tower_flag_type(TowerType({2, 2, 3})), tower_flag_type(TowerType({12}))));
    CHECK(le(tower_flag_type(TowerType({2, 3, 2})), tower_flag_type(TowerType({2, 6}))));
    CHECK_THROWS(le(t23, tower_flag_type(TowerType({4}))));
}

TEST_CASE("tower type of a flag") {
    CHECK(tower_type_of(lex_flag(TowerType({2, 3}))) == TowerType({2, 3}));
    CHECK(tower_type_of(lex_flag(TowerType({4}))) == TowerType({4}));
    // flag of C4 starting with g^2
    auto c4 = Group::make(GroupSpec{{4}});
    Flag f(c4, {0, 2, 1, 3});
    CHECK(tower_type_of(f) == TowerType({2, 2}));
}

TEST_CASE("corner reading: v_i v_j = v_{T(i,j)} at corners") {
    // all flags of all groups of order <= 8
    for (int n = 2; n <= 8; ++n) {
        for (const auto& spec : search::abelian_groups_of_order(n)) {
            auto g = Group::make(spec);
            search::enumerate_flags(g, [&](const std::vector<int>& seq) {
                Flag f(g, seq);
                FlagType t = flag_type_of(f);
                std::vector<int> pos(n);
                for (int i = 0; i < n; ++i) pos[seq[i]] = i;
                for (auto [i, j] : corners(t))
                    CHECK(pos[g->mult(seq[i], seq[j])] == t.at(i, j));
            });
        }
    }
    // and random flags of order <= 12
    Rng rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 2 + static_cast<int>(rng.below(11));
        auto specs = search::abelian_groups_of_order(n);
        auto g = Group::make(specs[rng.below(specs.size())]);
        std::vector<int> seq(n);
        for (int i = 0; i < n; ++i) seq[i] = i;
        for (int i = 1; i < n; ++i) std::swap(seq[i], seq[1 + rng.below(n - 1)]);
        Flag f(g, seq);
        FlagType t = flag_type_of(f);
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[seq[i]] = i;
        for (auto [i, j] : corners(t)) CHECK(pos[g->mult(seq[i], seq[j])] == t.at(i, j));
    }
}

TEST_CASE("flag_type_of output always validates") {
    Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng.below(9));
        auto specs = search::abelian_groups_of_order(n);
        auto g = Group::make(specs[rng.below(specs.size())]);
        std::vector<int> seq(n);
        for (int i = 0; i < n; ++i) seq[i] = i;
        for (int i = 1; i < n; ++i) std::swap(seq[i], seq[1 + rng.below(n - 1)]);
        CHECK(validate_flag_type(full_table(flag_type_of(Flag(g, seq)))));
    }
}

TEST_CASE("greedy flag: the 4p prefix continues with e1^4") {
    const int p = 5;
    auto g = Group::make(GroupSpec{{p, 2, 2}});
    auto el = [&](int a, int b, int c) { return GroupElement(g, std::vector<int>{a, b, c}); };
    std::vector<GroupElement> prefix{el(0, 0, 0), el(1, 0, 0), el(0, 1, 0), el(1, 1, 0),
                                     el(2, 0, 0), el(2, 1, 0), el(3, 0, 0), el(3, 1, 0)};
    Flag f = greedy_flag(g, TowerType({p, 2, 2}), {1, 2, 3}, prefix);
    CHECK(f.at(8).coords() == std::vector<int>{4, 0, 0});
    CHECK(f.at(9).coords() == std::vector<int>{4, 1, 0});
    // from position 2p on, the scan index equals the position
    for (int i = 2 * p; i < 4 * p; ++i) {
        int i1 = i % p, i2 = (i / p) % 2, i3 = i / (2 * p);
        CHECK(f.at(i).coords() == std::vector<int>{i1, i2, i3});
    }
}

TEST_CASE("greedy flag: p2q and pqr prefixes are e1 powers") {
    auto g1 = Group::make(GroupSpec{{5, 3, 3}});  // p2q with (p,q)=(3,5)
    std::vector<GroupElement> pre1;
    for (int i = 0; i < 5; ++i) pre1.emplace_back(g1, std::vector<int>{i, 0, 0});
    Flag f1 = greedy_flag(g1, TowerType({3, 5, 3}), {2, 1, 3}, pre1);
    for (int i = 0; i < 5; ++i) CHECK(f1.at(i).coords() == std::vector<int>{i, 0, 0});
    // for (p,q)=(3,5): F_14 = <e1,e2> and F_16 adds e3, e2e3
    CHECK(f1.at(15).coords() == std::vector<int>{0, 0, 1});
    CHECK(f1.at(16).coords() == std::vector<int>{0, 1, 1});
    // greedy scan index equals position from pq on
    for (int i = 15; i < 45; ++i) {
        int i1 = i % 3, i2 = (i / 3) % 5, i3 = i / 15;
        CHECK(f1.at(i).coords() == std::vector<int>{i2, i1, i3});
    }

    auto g2 = Group::make(GroupSpec{{3, 5, 5}});  // pqr with (3,5,5)
    std::vector<GroupElement> pre2;
    for (int i = 0; i < 3; ++i) pre2.emplace_back(g2, std::vector<int>{i, 0, 0});
    Flag f2 = greedy_flag(g2, TowerType({5, 3, 5}), {2, 1, 3}, pre2);
    for (int i = 0; i < 3; ++i) CHECK(f2.at(i).coords() == std::vector<int>{i, 0, 0});
    for (int i = 15; i < 75; ++i) {
        int i1 = i % 5, i2 = (i / 5) % 3, i3 = i / 15;
        CHECK(f2.at(i).coords() == std::vector<int>{i2, i1, i3});
    }
    CHECK_THROWS(greedy_flag(g2, TowerType({5, 3, 5}), {2, 1, 3},
                             {pre2[0], pre2[1], pre2[1]}));  // repeated prefix element
}

TEST_CASE("last-index identity: i + j = n-1 forces T(i,j) = n-1 on realizable types") {
    for (int n = 2; n <= 7; ++n) {
        auto catalog = search::realizable_types(n);
        for (const auto& e : catalog.entries)
            for (int i = 1; i < n; ++i) {
                int j = n - 1 - i;
                if (j < 1) continue;
                CHECK(e.type.at(i, j) == n - 1);
            }
    }
}

TEST_CASE("lift flag doubles the group") {
    Flag f = lex_flag(TowerType({2, 3}));
    Flag lifted = lift_flag(f, 2);
    CHECK(lifted.degree() == 12);
    CHECK(lifted.group()->spec().cyclic_orders == std::vector<int>{2, 3, 2});
    // v'_{i} = v_{i/2} e^{i%2}
    for (int i = 0; i < 12; ++i) {
        auto c = lifted.at(i).coords();
        auto base = f.at(i / 2).coords();
        CHECK(c[0] == base[0]);
        CHECK(c[1] == base[1]);
        CHECK(c[2] == i % 2);
    }
}
