#include <doctest.h>

#include <random>

#include "lclwb/errors.hpp"
#include "lclwb/group.hpp"
#include "lclwb/site_space.hpp"
#include "oracles.hpp"

using namespace lclwb;

TEST_CASE("make_gen_set symmetrizes and adds the identity") {
    const auto z = GroupOracle::free_abelian(1);
    const GenSet s = make_gen_set(z, {z.from_coords({1})});
    REQUIRE(s.size() == 3);
    CHECK(s.contains(z.from_coords({-1})));
    CHECK(s.contains(z.from_coords({0})));
    CHECK(s.contains(z.from_coords({1})));

    const auto f2 = GroupOracle::free_group(2);
    const GenSet sf = make_gen_set(f2, {f2.from_word({1}), f2.from_word({2})});
    CHECK(sf.size() == 5);
    CHECK(sf.contains(f2.identity()));
    CHECK(sf.contains(f2.from_word({-1})));
    CHECK(sf.contains(f2.from_word({-2})));
}

TEST_CASE("make_gen_set is idempotent") {
    const auto z = GroupOracle::free_abelian(1);
    const GenSet s = make_gen_set(z, {z.from_coords({-1}), z.from_coords({0}), z.from_coords({1})});
    CHECK(s.size() == 3);
    const GenSet again = make_gen_set(z, s.elements().elements());
    CHECK(again == s);
}

TEST_CASE("set_power on Z and F2") {
    const auto z = GroupOracle::free_abelian(1);
    const GenSet s = make_gen_set(z, {z.from_coords({1})});
    const ElementSet cube = set_power(z, s, 3);
    REQUIRE(cube.size() == 7);
    CHECK(cube.contains(z.from_coords({-3})));
    CHECK(cube.contains(z.from_coords({3})));

    const auto f2 = GroupOracle::free_group(2);
    const GenSet sf = make_gen_set(f2, {f2.from_word({1}), f2.from_word({2})});
    CHECK(set_power(f2, sf, 2).size() == 17);  // 1 + 4 + 12 reduced words
}

TEST_CASE("set_power stabilizes at the generated subgroup for finite groups") {
    const auto z6 = GroupOracle::cyclic(6);
    const GenSet s = make_gen_set(z6, {z6.from_index(2)});
    const ElementSet closure = testing::closure_fixpoint(z6, s);
    REQUIRE(closure.size() == 3);  // {0, 2, 4}
    CHECK(set_power(z6, s, 6) == closure);
    CHECK(set_power(z6, s, 17) == closure);

    const auto s3 = GroupOracle::finite_group(testing::s3_table());
    const GenSet gens = make_gen_set(s3, s3.standard_generators());
    CHECK(set_power(s3, gens, static_cast<int>(s3.finite_order())) ==
          testing::closure_fixpoint(s3, gens));
}

TEST_CASE("set_power nesting and product structure") {
    std::mt19937_64 rng(7);
    const auto z2 = GroupOracle::free_abelian(2);
    const GenSet s = make_gen_set(z2, {z2.from_coords({1, 0}), z2.from_coords({0, 1})});
    for (int j = 0; j <= 3; ++j)
        for (int k = j; k <= 3; ++k) {
            CHECK(set_power(z2, s, j).is_subset_of(set_power(z2, s, k)));
            // S^j · S^k = S^{j+k}
            const ElementSet a = set_power(z2, s, j);
            const ElementSet b = set_power(z2, s, k);
            std::vector<GroupElement> prod;
            for (const auto& x : a)
                for (const auto& y : b) prod.push_back(z2.multiply(x, y));
            CHECK(ElementSet::of(std::move(prod)) == set_power(z2, s, j + k));
        }
}

TEST_CASE("group axioms hold on random triples per family") {
    const auto z2xz = GroupOracle::direct_product(GroupOracle::free_abelian(2),
                                                  GroupOracle::cyclic(4));
    const std::vector<GroupOracle> families{
        GroupOracle::free_abelian(3), GroupOracle::free_group(2),
        GroupOracle::finite_group(testing::s3_table()), z2xz};
    std::mt19937_64 rng(42);
    for (const auto& oracle : families) {
        const GroupElement id = oracle.identity();
        for (int i = 0; i < 1000; ++i) {
            const GroupElement x = testing::random_element(oracle, rng);
            const GroupElement y = testing::random_element(oracle, rng);
            const GroupElement z = testing::random_element(oracle, rng);
            CHECK(oracle.multiply(oracle.multiply(x, y), z) ==
                  oracle.multiply(x, oracle.multiply(y, z)));
            CHECK(oracle.multiply(x, oracle.inverse(x)) == id);
            CHECK(oracle.multiply(id, x) == x);
            CHECK(oracle.inverse(oracle.inverse(x)) == x);
        }
    }
}

TEST_CASE("free group arithmetic cancels") {
    const auto f2 = GroupOracle::free_group(2);
    CHECK(f2.multiply(f2.from_word({1}), f2.from_word({-1})) == f2.identity());
    CHECK(f2.multiply(f2.from_word({1, 2}), f2.from_word({-2, -1})) == f2.identity());
    CHECK(f2.from_word({1, -1, 2}) == f2.from_word({2}));
    CHECK(f2.multiply(f2.from_word({1, 2}), f2.from_word({-2, 1})) == f2.from_word({1, 1}));
}

TEST_CASE("Z^2 componentwise arithmetic") {
    const auto z2 = GroupOracle::free_abelian(2);
    CHECK(z2.multiply(z2.from_coords({1, 0}), z2.from_coords({0, 1})) == z2.from_coords({1, 1}));
}

TEST_CASE("finite table lookups agree with the table") {
    const auto table = testing::s3_table();
    const auto s3 = GroupOracle::finite_group(table);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            CHECK(s3.multiply(s3.from_index(a), s3.from_index(b)) == s3.from_index(table[a][b]));
}

TEST_CASE("invalid multiplication tables are rejected") {
    // Not associative: constant rows conflict with identity requirements.
    CHECK_THROWS_AS(GroupOracle::finite_group({{0, 1}, {1, 1}}), std::invalid_argument);
    // No identity.
    CHECK_THROWS_AS(GroupOracle::finite_group({{1, 0}, {1, 0}}), std::invalid_argument);
    // Out of range entries.
    CHECK_THROWS_AS(GroupOracle::finite_group({{0, 1}, {1, 2}}), std::invalid_argument);
    // Non-square.
    CHECK_THROWS_AS(GroupOracle::finite_group({{0, 1}}), std::invalid_argument);
}

TEST_CASE("subgroup generating sets") {
    const auto z2 = GroupOracle::free_abelian(2);
    const GenSet sub = subgroup_gen_set(z2, {z2.from_coords({1, 0})});
    REQUIRE(sub.size() == 3);
    CHECK(sub.contains(z2.from_coords({-1, 0})));
    CHECK(sub.contains(z2.from_coords({0, 0})));

    const auto f2 = GroupOracle::free_group(2);
    const GenSet fs = subgroup_gen_set(f2, {f2.from_word({1, 1})});
    CHECK(fs.size() == 3);
    CHECK(fs.contains(f2.from_word({-1, -1})));

    const GenSet trivial = subgroup_gen_set(z2, {});
    CHECK(trivial.size() == 1);
    CHECK(trivial.contains(z2.identity()));
}

TEST_CASE("set_power size guard") {
    const auto f2 = GroupOracle::free_group(2);
    const GenSet s = make_gen_set(f2, f2.standard_generators());
    CHECK_THROWS_AS(set_power(f2, s, 20, 10'000), limit_error);
}

TEST_CASE("canonical order is deterministic and family-appropriate") {
    const auto z2 = GroupOracle::free_abelian(2);
    const ElementSet box = box_window(z2, {0, 0}, {1, 1});
    REQUIRE(box.size() == 4);
    CHECK(box[0] == z2.from_coords({0, 0}));  // row-major
    CHECK(box[1] == z2.from_coords({0, 1}));
    CHECK(box[2] == z2.from_coords({1, 0}));
    CHECK(box[3] == z2.from_coords({1, 1}));

    const auto f2 = GroupOracle::free_group(2);
    const ElementSet b1 = ball_window(f2, 1);
    REQUIRE(b1.size() == 5);
    CHECK(b1[0] == f2.identity());  // shortlex: identity first, then length 1
    for (std::size_t i = 1; i < b1.size(); ++i) CHECK(b1[i].data()[0] == 1);
}

TEST_CASE("elements of the wrong family are rejected") {
    const auto z = GroupOracle::free_abelian(1);
    const auto z2 = GroupOracle::free_abelian(2);
    CHECK_THROWS_AS(z.check_element(z2.from_coords({1, 2})), std::invalid_argument);
    const auto f2 = GroupOracle::free_group(2);
    CHECK_THROWS_AS(f2.from_word({3}), std::invalid_argument);
    CHECK_THROWS_AS((void)make_gen_set(z, {z2.from_coords({1, 2})}), std::invalid_argument);
}

TEST_CASE("finite actions act through generator decompositions") {
    // S3 acting on itself by left multiplication.
    const auto s3 = GroupOracle::finite_group(testing::s3_table());
    const int id = s3.finite_identity();
    std::vector<std::vector<int>> images;
    for (int g = 0; g < s3.finite_order(); ++g) {
        if (g == id) continue;
        std::vector<int> perm(s3.finite_order());
        for (int x = 0; x < s3.finite_order(); ++x)
            perm[x] = static_cast<int>(s3.multiply(s3.from_index(g), s3.from_index(x)).data()[0]);
        images.push_back(std::move(perm));
    }
    const FiniteAction action(s3, static_cast<std::size_t>(s3.finite_order()), images);
    for (int g = 0; g < s3.finite_order(); ++g)
        for (int x = 0; x < s3.finite_order(); ++x)
            CHECK(action.act(s3.from_index(g), x) ==
                  static_cast<int>(s3.multiply(s3.from_index(g), s3.from_index(x)).data()[0]));

    // Breaking one image breaks the table relations.
    auto bad = images;
    std::swap(bad[0][0], bad[0][1]);
    CHECK_THROWS_AS(FiniteAction(s3, static_cast<std::size_t>(s3.finite_order()), bad),
                    std::invalid_argument);
}

TEST_CASE("product actions compose factor images") {
    // Z x Z/2 acting on Z/4: (1,0) rotates by 1, (0,1) rotates by 2.
    const auto g = GroupOracle::direct_product(GroupOracle::free_abelian(1), GroupOracle::cyclic(2));
    const FiniteAction action(g, 4, {{1, 2, 3, 0}, {2, 3, 0, 1}});
    const GroupElement e = g.pair(g.left_factor().from_coords({2}), g.right_factor().from_index(1));
    for (int x = 0; x < 4; ++x) CHECK(action.act(e, x) == x);  // 2 + 2 = 0 mod 4
    const GroupElement f = g.pair(g.left_factor().from_coords({-1}), g.right_factor().from_index(0));
    CHECK(action.act(f, 0) == 3);

    // Non-commuting factor images are rejected.
    CHECK_THROWS_AS(FiniteAction(g, 3, {{1, 0, 2}, {0, 2, 1}}), std::invalid_argument);
}

TEST_CASE("abelian actions require commuting images") {
    const auto z2 = GroupOracle::free_abelian(2);
    CHECK_THROWS_AS(FiniteAction(z2, 3, {{1, 0, 2}, {0, 2, 1}}), std::invalid_argument);
    const FiniteAction ok(z2, 4, {{1, 2, 3, 0}, {2, 3, 0, 1}});
    CHECK(ok.act(z2.from_coords({1, 1}), 0) == 3);
    CHECK(ok.act(z2.from_coords({-2, 1}), 0) == 0);
}
