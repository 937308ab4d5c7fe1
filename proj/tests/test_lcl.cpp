#include <doctest.h>

#include <random>

#include "lclwb/errors.hpp"
#include "lclwb/lcl.hpp"
#include "lclwb/serialize.hpp"
#include "oracles.hpp"

using namespace lclwb;

namespace {

// Independent Π_{S,n} fragment: enumerate every nonempty domain containing
// the identity and every value map, filter by the raw conditions.
std::vector<Pattern> naive_pi_sn(const GroupOracle& oracle, const GenSet& s, int n,
                                 const ElementSet& window) {
    std::vector<Pattern> out;
    const std::size_t w = window.size();
    REQUIRE(w <= 16);
    for (std::uint32_t mask = 1; mask < (1u << w); ++mask) {
        std::vector<GroupElement> dom;
        for (std::size_t i = 0; i < w; ++i)
            if (mask >> i & 1) dom.push_back(window[i]);
        bool has_id = false;
        for (const auto& e : dom) has_id = has_id || e == oracle.identity();
        if (!has_id) continue;

        std::vector<Color> values(dom.size(), 0);
        while (true) {
            std::vector<std::pair<GroupElement, Color>> entries;
            for (std::size_t i = 0; i < dom.size(); ++i) entries.emplace_back(dom[i], values[i]);
            Pattern p(std::move(entries));
            std::string why;
            if (satisfies_pi_sn_conditions(oracle, p, s, n, &why)) out.push_back(std::move(p));
            std::size_t i = dom.size();
            while (i > 0 && values[i - 1] == n - 1) values[--i] = 0;
            if (i == 0) break;
            ++values[i - 1];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

WindowPtr z_box(const GroupOracle& z, std::int64_t lo, std::int64_t hi) {
    return share(box_window(z, {lo}, {hi}));
}

std::vector<Color> parity_colors(const ElementSet& window) {
    std::vector<Color> colors;
    for (const auto& e : window)
        colors.push_back(static_cast<Color>(((e.data()[0] % 2) + 2) % 2));
    return colors;
}

LCLInstance alternating_instance(const GroupOracle& z) {
    // The two parity patterns on {-1, 0, 1}.
    std::vector<Pattern> ps;
    for (Color p = 0; p < 2; ++p)
        ps.push_back(Pattern({{z.from_coords({-1}), 1 - p},
                              {z.from_coords({0}), p},
                              {z.from_coords({1}), 1 - p}}));
    return LCLInstance(std::move(ps), 2);
}

}  // namespace

TEST_CASE("pattern_translate implements the shift convention") {
    const auto z = GroupOracle::free_abelian(1);
    const Pattern p({{z.from_coords({0}), 0}, {z.from_coords({1}), 1}});

    CHECK(pattern_translate(z, z.identity(), p) == p);

    // γ = 1: dom moves to {-1, 0} with (γP)(δ) = P(δ+1).
    const Pattern shifted = pattern_translate(z, z.from_coords({1}), p);
    REQUIRE(shifted.size() == 2);
    CHECK(shifted.color_of(z.from_coords({-1})) == 0);
    CHECK(shifted.color_of(z.from_coords({0})) == 1);

    const Pattern back = pattern_translate(z, z.from_coords({-1}), shifted);
    CHECK(back == p);
}

TEST_CASE("pattern_translate respects composition on random triples") {
    const auto f2 = GroupOracle::free_group(2);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const GroupElement g = testing::random_element(f2, rng);
        const GroupElement d = testing::random_element(f2, rng);
        std::vector<std::pair<GroupElement, Color>> entries;
        entries.emplace_back(f2.identity(), 0);
        entries.emplace_back(testing::random_element(f2, rng), 1);
        if (entries[1].first == entries[0].first) continue;
        const Pattern p(std::move(entries));
        const Pattern lhs = pattern_translate(f2, f2.multiply(g, d), p);
        const Pattern rhs = pattern_translate(f2, g, pattern_translate(f2, d, p));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("matches_at distinguishes match, mismatch and out-of-window") {
    const auto z = GroupOracle::free_abelian(1);
    const WindowPtr w = z_box(z, -5, 5);
    const WindowConfiguration c = make_configuration(w, parity_colors(*w));

    const Pattern constant0({{z.identity(), 0}});
    // Window point -4 has parity color 0.
    CHECK(matches_at(z, c, z.from_coords({-4}), constant0) == MatchResult::match);
    CHECK(matches_at(z, c, z.from_coords({-5}), constant0) == MatchResult::mismatch);

    const Pattern alt({{z.from_coords({-1}), 1}, {z.from_coords({0}), 0}, {z.from_coords({1}), 1}});
    CHECK(matches_at(z, c, z.from_coords({0}), alt) == MatchResult::match);
    CHECK(matches_at(z, c, z.from_coords({5}), alt) == MatchResult::out_of_window);
}

TEST_CASE("verify_pi_coloring on the alternating instance") {
    const auto z = GroupOracle::free_abelian(1);
    const WindowPtr w = z_box(z, -5, 5);
    const LCLInstance inst = alternating_instance(z);

    const VerifyResult good = verify_pi_coloring(z, make_configuration(w, parity_colors(*w)), inst);
    CHECK(good.ok);
    CHECK(good.matched_count == 9);   // [-4, 4]
    CHECK(good.boundary_count == 2);  // the endpoints
    for (std::size_t i = 0; i < w->size(); ++i) {
        const bool interior = i > 0 && i + 1 < w->size();
        CHECK((good.status[i] == PointStatus::matched) == interior);
    }

    const VerifyResult bad =
        verify_pi_coloring(z, make_configuration(w, std::vector<Color>(w->size(), 0)), inst);
    CHECK(!bad.ok);
    CHECK(bad.first_failure == 1);  // first interior point in canonical order

    const VerifyResult empty =
        verify_pi_coloring(z, make_configuration(w, parity_colors(*w)), LCLInstance{});
    CHECK(!empty.ok);
    CHECK(empty.first_failure == 0);
}

TEST_CASE("first_match_map picks the earliest pattern deterministically") {
    const auto z = GroupOracle::free_abelian(1);
    const WindowPtr w = z_box(z, 0, 4);
    const Pattern constant0({{z.identity(), 0}});

    // Duplicate pattern: the earlier copy wins.
    const LCLInstance dup({constant0, constant0}, 1);
    WindowSites sites(z, w);
    const std::vector<Color> zeros(w->size(), 0);
    const auto assignment = first_match_map(sites, zeros, dup);
    for (const auto a : assignment) CHECK(a == 0);

    const LCLInstance single({constant0}, 1);
    const auto constant_assignment = first_match_map(sites, zeros, single);
    for (const auto a : constant_assignment) CHECK(a == 0);

    // Alternating instance: assignment alternates between the two indices.
    const LCLInstance alt = alternating_instance(z);
    const WindowPtr w2 = z_box(z, -3, 3);
    WindowSites sites2(z, w2);
    const auto alt_assignment = first_match_map(sites2, parity_colors(*w2), alt);
    for (std::size_t i = 1; i + 1 < w2->size(); ++i) {
        CHECK(alt_assignment[i] >= 0);
        if (i + 2 < w2->size()) CHECK(alt_assignment[i] != alt_assignment[i + 1]);
    }

    const LCLInstance empty{};
    CHECK_THROWS_AS((void)first_match_map(sites, zeros, empty), std::invalid_argument);
}

TEST_CASE("pi_sn_generate matches the naive filter") {
    const auto z = GroupOracle::free_abelian(1);
    const GenSet s = make_gen_set(z, {z.from_coords({1})});

    SUBCASE("n = 1 on any finite window is empty") {
        CHECK(pi_sn_generate(z, s, 1, box_window(z, {-3}, {3})).empty());
        CHECK(pi_sn_generate(z, s, 1, box_window(z, {-1}, {1})).empty());
    }

    SUBCASE("n = 2 on {-1,0,1} gives the two alternating patterns") {
        const LCLInstance inst = pi_sn_generate(z, s, 2, box_window(z, {-1}, {1}));
        REQUIRE(inst.size() == 2);
        for (const auto& p : inst.patterns()) {
            REQUIRE(p.size() == 3);
            const Color mid = *p.color_of(z.from_coords({0}));
            CHECK(p.color_of(z.from_coords({-1})) == 1 - mid);
            CHECK(p.color_of(z.from_coords({1})) == 1 - mid);
        }
    }

    SUBCASE("window {identity} admits patterns only when S = {identity}") {
        CHECK(pi_sn_generate(z, s, 3, ElementSet::of({z.identity()})).empty());
        const GenSet trivial = make_gen_set(z, {});
        CHECK(pi_sn_generate(z, trivial, 2, ElementSet::of({z.identity()})).size() == 2);
    }

    SUBCASE("agreement with full enumeration") {
        for (int n = 1; n <= 3; ++n) {
            const auto fast = pi_sn_generate(z, s, n, box_window(z, {-2}, {2}));
            const auto naive = naive_pi_sn(z, s, n, box_window(z, {-2}, {2}));
            REQUIRE(fast.size() == naive.size());
            CHECK(fast.patterns() == naive);
        }
        const auto z2 = GroupOracle::free_abelian(2);
        const GenSet axis = make_gen_set(z2, {z2.from_coords({1, 0}), z2.from_coords({0, 1})});
        const auto fast = pi_sn_generate(z2, axis, 2, box_window(z2, {-1, -1}, {1, 1}));
        const auto naive = naive_pi_sn(z2, axis, 2, box_window(z2, {-1, -1}, {1, 1}));
        REQUIRE(fast.size() == naive.size());
        CHECK(fast.patterns() == naive);
    }
}

TEST_CASE("pi_sn_generate output re-verifies and is monotone") {
    const auto z = GroupOracle::free_abelian(1);
    const GenSet s = make_gen_set(z, {z.from_coords({1})});
    const auto small = pi_sn_generate(z, s, 2, box_window(z, {-2}, {2}));
    const auto large = pi_sn_generate(z, s, 2, box_window(z, {-3}, {3}));
    const auto more_colors = pi_sn_generate(z, s, 3, box_window(z, {-2}, {2}));

    for (const auto& p : small.patterns()) {
        CHECK(satisfies_pi_sn_conditions(z, p, s, 2));
        // Monotone in the window.
        CHECK(std::find(large.patterns().begin(), large.patterns().end(), p) !=
              large.patterns().end());
        // Monotone in n.
        CHECK(std::find(more_colors.patterns().begin(), more_colors.patterns().end(), p) !=
              more_colors.patterns().end());
    }
    CHECK(small.size() <= large.size());
    CHECK(small.size() <= more_colors.size());
}

TEST_CASE("pi_sn_generate enumeration limit") {
    const auto z = GroupOracle::free_abelian(1);
    const GenSet s = make_gen_set(z, {z.from_coords({1})});
    CHECK_THROWS_AS((void)pi_sn_generate(z, s, 3, box_window(z, {-5}, {5}), 100), limit_error);
}

TEST_CASE("freeness_lcl") {
    const auto z = GroupOracle::free_abelian(1);
    const LCLInstance inst = freeness_lcl(z, z.from_coords({1}));
    REQUIRE(inst.size() == 6);
    CHECK(inst.alphabet_size() == 3);
    for (const auto& p : inst.patterns()) {
        REQUIRE(p.size() == 2);
        CHECK(*p.color_of(z.identity()) != *p.color_of(z.from_coords({1})));
    }
    CHECK_THROWS_AS((void)freeness_lcl(z, z.identity()), std::invalid_argument);

    // Z with γ = 1 admits the parity coloring.
    const WindowPtr w = z_box(z, -6, 6);
    CHECK(verify_pi_coloring(z, make_configuration(w, parity_colors(*w)), inst).ok);
}

TEST_CASE("freeness fails on fixed points") {
    // The trivial action of Z on one site: γ = 1 fixes it.
    const auto z = GroupOracle::free_abelian(1);
    const FiniteAction trivial(z, 1, {{0}});
    ActionSites sites(trivial);
    const LCLInstance inst = freeness_lcl(z, z.from_coords({1}));
    const std::vector<Color> colors{0};
    const VerifyResult r = verify_pi_coloring(sites, colors, inst);
    CHECK(!r.ok);
}
