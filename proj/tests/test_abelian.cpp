#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "flagcones/abelian.hpp"
#include "flagcones/rng.hpp"
#include "flagcones/search.hpp"

using namespace flagcones;
using namespace flagcones::abelian;

namespace {

GroupPtr C(std::initializer_list<int> orders) { return Group::make(GroupSpec{orders}); }

// direct pairwise-product oracle, independent of sumset's bitmask path
std::set<int> sumset_oracle(const ElementSet& A, const ElementSet& B) {
    std::set<int> out;
    for (int a : A.indices())
        for (int b : B.indices()) out.insert(A.group()->mult(a, b));
    return out;
}

// brute-force powering oracle
int order_oracle(const GroupPtr& g, int a) {
    int cur = a, k = 1;
    while (cur != 0) {
        cur = g->mult(cur, a);
        ++k;
    }
    return k;
}

// closure-iteration oracle: repeatedly multiply until stable
std::set<int> closure_oracle(const ElementSet& S) {
    std::set<int> h{0};
    for (int s : S.indices()) h.insert(s);
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<int> next = h;
        for (int a : h)
            for (int b : h) next.insert(S.group()->mult(a, b));
        if (next != h) {
            h = next;
            grew = true;
        }
    }
    return h;
}

}  // namespace

TEST_CASE("multiply componentwise with reduction") {
    auto g = C({2, 3});
    GroupElement a(g, std::vector<int>{1, 0});
    GroupElement b(g, std::vector<int>{0, 2});
    CHECK(multiply(a, a).coords() == std::vector<int>{0, 0});
    CHECK(multiply(b, b).coords() == std::vector<int>{0, 1});
    CHECK(multiply(identity(g), b) == b);
    auto h = C({4});
    CHECK_THROWS(multiply(a, GroupElement(h, 1)));
}

TEST_CASE("element orders") {
    auto g = C({2, 3});
    CHECK(element_order(identity(g)) == 1);
    CHECK(element_order(GroupElement(g, std::vector<int>{1, 0})) == 2);
    GroupElement mixed(g, std::vector<int>{1, 1});
    CHECK(order_oracle(g, mixed.index()) == 6);
    CHECK(element_order(mixed) == 6);
}

TEST_CASE("sumset examples") {
    auto c4 = C({4});
    ElementSet a4(c4, {0, 1});
    auto ab = sumset(a4, a4);
    CHECK(ab.indices() == std::vector<int>{0, 1, 2});
    // subgroup closure
    auto c6 = C({6});
    ElementSet h(c6, {0, 2, 4});
    CHECK(sumset(h, h) == h);
    ElementSet A(c6, {0, 1}), B(c6, {0, 2, 3});
    std::set<int> oracle = sumset_oracle(A, B);
    CHECK(oracle == std::set<int>{0, 1, 2, 3, 4});
    CHECK(sumset(A, B).indices() == std::vector<int>(oracle.begin(), oracle.end()));
}

TEST_CASE("stabilizer examples") {
    auto c6 = C({6});
    ElementSet whole(c6, {0, 1, 2, 3, 4, 5});
    CHECK(stabilizer(whole).size() == 6);
    ElementSet s(c6, {0, 1, 3, 4});
    CHECK(stabilizer(s).indices() == std::vector<int>{0, 3});
    ElementSet five(c6, {0, 1, 2, 3, 4});
    CHECK(stabilizer(five).indices() == std::vector<int>{0});
}

TEST_CASE("generated subgroup examples") {
    auto c4 = C({4});
    CHECK(generated_subgroup(ElementSet(c4, {0})).indices() == std::vector<int>{0});
    CHECK(generated_subgroup(ElementSet(c4, {2})).indices() == std::vector<int>{0, 2});
    auto g = C({2, 3});
    ElementSet gens = ElementSet::of({GroupElement(g, std::vector<int>{1, 0}),
                                      GroupElement(g, std::vector<int>{0, 1})});
    auto oracle = closure_oracle(gens);
    CHECK(static_cast<int>(oracle.size()) == 6);
    CHECK(generated_subgroup(gens).size() == 6);
}

TEST_CASE("generated subgroup idempotent and monotone") {
    Rng rng(3);
    auto g = C({2, 2, 3});
    for (int t = 0; t < 50; ++t) {
        std::vector<int> idx;
        while (idx.empty())
            for (int e = 0; e < g->order(); ++e)
                if (rng.below(3) == 0) idx.push_back(e);
        ElementSet s(g, idx);
        auto h = generated_subgroup(s);
        CHECK(generated_subgroup(h) == h);
        std::vector<int> bigger = idx;
        bigger.push_back(static_cast<int>(rng.below(g->order())));
        auto h2 = generated_subgroup(ElementSet(g, bigger));
        for (int x : h.indices()) CHECK(h2.contains(x));
    }
}

TEST_CASE("kneser audit examples") {
    auto c6 = C({6});
    // A = B = the order-3 subgroup
    ElementSet h(c6, {0, 2, 4});
    auto rep = kneser_audit(h, h);
    CHECK(rep.stabilizer_order == 3);
    CHECK(rep.size_ab == 3);
    CHECK(rep.sub_additive);
    CHECK(rep.overflow);
    CHECK(rep.cosets_ab == 1);
    ElementSet A(c6, {0, 1}), B(c6, {0, 2, 3});
    auto rep2 = kneser_audit(A, B);
    CHECK(rep2.size_ab == 5);
    CHECK(rep2.stabilizer_order == 1);
    CHECK_FALSE(rep2.sub_additive);
    ElementSet one(c6, {0});
    auto rep3 = kneser_audit(one, one);
    CHECK(rep3.size_ab == 1);
    CHECK(rep3.stabilizer_order == 1);
}

TEST_CASE("kneser bound and stabilizer invariants over random pairs") {
    // the smaller companion of the acceptance-scale audit
    auto report = search::verify_kneser(1500, 42, 24);
    CHECK(report.passed);
}

TEST_CASE("stabilizer fixes the set and absorbs into sumsets") {
    Rng rng(9);
    for (int t = 0; t < 200; ++t) {
        int n = 2 + static_cast<int>(rng.below(14));
        auto specs = search::abelian_groups_of_order(n);
        auto g = Group::make(specs[rng.below(specs.size())]);
        auto rand_set = [&]() {
            std::vector<int> idx;
            while (idx.empty())
                for (int e = 0; e < n; ++e)
                    if (rng.below(2)) idx.push_back(e);
            return ElementSet(g, idx);
        };
        ElementSet A = rand_set(), B = rand_set();
        ElementSet AB = sumset(A, B);
        ElementSet st = stabilizer(AB);
        CHECK(sumset(st, AB) == AB);
        // sumset(A, Stab(AB) B) = AB
        CHECK(sumset(A, sumset(st, B)) == AB);
    }
}
