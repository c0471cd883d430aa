#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sperner/lattice.hpp"

using namespace sperner;

namespace {

Index idx(int bound, std::vector<int> coords) { return Index(bound, std::move(coords)); }

std::vector<std::vector<int>> as_coords(const std::vector<Index>& points) {
    std::vector<std::vector<int>> out;
    for (const Index& p : points) out.push_back(p.coords());
    return out;
}

Index random_index(std::mt19937_64& rng, int dim, int bound) {
    std::uniform_int_distribution<int> pick(0, bound);
    std::vector<int> coords(static_cast<std::size_t>(dim));
    for (int& c : coords) c = pick(rng);
    return Index(bound, std::move(coords));
}

}  // namespace

TEST_CASE("truncated_add clamps per coordinate") {
    CHECK(truncated_add(idx(3, {2}), idx(3, {2})) == idx(3, {3}));
    CHECK(truncated_add(idx(2, {1, 2, 0}), idx(2, {1, 1, 1})) == idx(2, {2, 2, 1}));

    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const Index a = random_index(rng, 3, 3);
        const Index b = random_index(rng, 3, 3);
        const Index c = random_index(rng, 3, 3);
        const Index zero(3, 3);
        CHECK(truncated_add(a, zero) == a);
        CHECK(truncated_add(a, b) == truncated_add(b, a));
        CHECK(truncated_add(truncated_add(a, b), c) == truncated_add(a, truncated_add(b, c)));
    }
    CHECK_THROWS_AS(truncated_add(idx(2, {1}), idx(3, {1})), std::invalid_argument);
    CHECK_THROWS_AS(truncated_add(idx(2, {1}), idx(2, {1, 1})), std::invalid_argument);
}

TEST_CASE("positive_cube enumerates clamped vertex sets") {
    CHECK(as_coords(positive_cube(idx(2, {0, 0}))) ==
          std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(as_coords(positive_cube(idx(2, {2, 2}))) == std::vector<std::vector<int>>{{2, 2}});
    CHECK(as_coords(positive_cube(idx(2, {1, 2}))) ==
          std::vector<std::vector<int>>{{1, 2}, {2, 2}});

    for (int bound : {1, 3}) {
        for (const std::vector<int>& coords : oracles::enumerate_grid(3, bound)) {
            const Index sigma(bound, coords);
            int unclamped = 0;
            for (int i = 0; i < sigma.dim(); ++i) unclamped += sigma[i] < bound;
            CHECK(positive_cube(sigma).size() == (std::size_t{1} << unclamped));
        }
    }
    // The cardinality law holds at dimension 12 as well.
    Index high(1, std::vector<int>(12, 0));
    CHECK(positive_cube(high).size() == 4096);
}

TEST_CASE("sup_distance is the max-coordinate metric") {
    CHECK(sup_distance(idx(3, {0, 3}), idx(3, {0, 3})) == 0);
    CHECK(sup_distance(idx(3, {0, 3}), idx(3, {3, 3})) == 3);
    CHECK(sup_distance(idx(4, {1, 2, 4}), idx(4, {3, 2, 0})) == 4);

    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
        const Index a = random_index(rng, 4, 3);
        const Index b = random_index(rng, 4, 3);
        const Index c = random_index(rng, 4, 3);
        CHECK(sup_distance(a, b) == oracles::naive_sup_distance(a.coords(), b.coords()));
        CHECK(sup_distance(a, b) >= 0);
        CHECK(sup_distance(a, b) == sup_distance(b, a));
        CHECK(sup_distance(a, c) <= sup_distance(a, b) + sup_distance(b, c));
        CHECK((sup_distance(a, b) == 0) == (a == b));
    }
}

TEST_CASE("ball moves only the chosen coordinates, clipped to the grid") {
    CHECK(as_coords(ball(idx(2, {1, 0}), CoordSet::empty(2), 1)) ==
          std::vector<std::vector<int>>{{1, 0}});
    CHECK(as_coords(ball(idx(2, {1, 0}), CoordSet(2, {0}), 1)) ==
          std::vector<std::vector<int>>{{0, 0}, {1, 0}, {2, 0}});
    CHECK(ball(idx(2, {0, 0}), CoordSet::full(2), 2).size() == 9);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        const Index sigma = random_index(rng, 3, 2);
        std::uniform_int_distribution<int> pick_mask(0, 7);
        std::uniform_int_distribution<int> pick_k(0, 2);
        const int mask = pick_mask(rng);
        const int k = pick_k(rng);
        std::vector<int> moving;
        CoordSet a(3);
        for (int i = 0; i < 3; ++i) {
            if ((mask >> i) & 1) {
                moving.push_back(i);
                a.add(i);
            }
        }
        CHECK(as_coords(ball(sigma, a, k)) ==
              oracles::naive_ball(sigma.coords(), 2, moving, k));
        if (k < 2) {
            const auto smaller = ball(sigma, a, k);
            const auto larger = ball(sigma, a, k + 1);
            for (const Index& p : smaller) {
                CHECK(std::find(larger.begin(), larger.end(), p) != larger.end());
            }
        }
    }
    CHECK_THROWS_AS(ball(idx(2, {1}), CoordSet(1, {0}), 3), std::invalid_argument);
}

TEST_CASE("hat_ball freezes A and frees the rest") {
    CHECK(as_coords(hat_ball(idx(2, {1, 1}), CoordSet::full(2), 2)) ==
          std::vector<std::vector<int>>{{1, 1}});
    CHECK(hat_ball(idx(2, {1, 1}), CoordSet::empty(2), 2).size() == 9);
    CHECK(as_coords(hat_ball(idx(2, {1, 1}), CoordSet(2, {0}), 1)) ==
          std::vector<std::vector<int>>{{1, 0}, {1, 1}, {1, 2}});

    // hat_ball(sigma, A, k) is exactly ball over the complement of A.
    std::mt19937_64 rng(13);
    for (int t = 0; t < 60; ++t) {
        const Index sigma = random_index(rng, 3, 2);
        std::uniform_int_distribution<int> pick_mask(0, 7);
        const int mask = pick_mask(rng);
        CoordSet a(3);
        std::vector<int> fixed;
        for (int i = 0; i < 3; ++i) {
            if ((mask >> i) & 1) {
                a.add(i);
                fixed.push_back(i);
            }
        }
        CHECK(as_coords(hat_ball(sigma, a, 1)) ==
              oracles::naive_hat_ball(sigma.coords(), 2, fixed, 1));
        CHECK(hat_ball(sigma, a, 1) == ball(sigma, a.complement(), 1));
    }
}

TEST_CASE("local_lebesgue finds the largest fitting radius") {
    const GridShape line(1, 2);
    const GridSet lo(line, {idx(2, {0}), idx(2, {1})});
    const GridSet hi(line, {idx(2, {1}), idx(2, {2})});
    const GridSet full(line, {idx(2, {0}), idx(2, {1}), idx(2, {2})});
    const GridSet just_one(line, {idx(2, {1})});

    CHECK(local_lebesgue(idx(2, {1}), CoordSet::empty(1), {full}) == 2);
    CHECK(local_lebesgue(idx(2, {1}), CoordSet::empty(1), {just_one}) == 0);
    // The radius-1 ball around the midpoint is {0,1,2}, which fits neither
    // half, so only k = 0 works.
    CHECK(local_lebesgue(idx(2, {1}), CoordSet::empty(1), {lo, hi}) == 0);
    CHECK(local_lebesgue(idx(2, {1}), CoordSet::empty(1), {lo, hi}) ==
          oracles::naive_local_lebesgue({1}, 2, {}, {lo, hi}));
    // Uncovered point.
    CHECK_FALSE(local_lebesgue(idx(2, {0}), CoordSet::empty(1), {just_one}).has_value());
    CHECK_THROWS_AS(local_lebesgue(idx(2, {1}), CoordSet::empty(1), {}), std::invalid_argument);
}

TEST_CASE("local_lebesgue is monotone in the frozen set") {
    std::mt19937_64 rng(17);
    const GridShape shape(2, 2);
    for (int t = 0; t < 40; ++t) {
        // Random two-member cover of the 3x3 grid.
        std::uniform_int_distribution<int> bit(0, 1);
        GridSet m1(shape), m2(shape);
        for (std::uint64_t r = 0; r < shape.point_count(); ++r) {
            const int where = bit(rng) + 2 * bit(rng);
            if (where & 1) m1.insert_rank(r);
            if (where & 2) m2.insert_rank(r);
            if (where == 0) m1.insert_rank(r);
        }
        const std::vector<GridSet> cover{m1, m2};
        const Index sigma = random_index(rng, 2, 2);
        std::uniform_int_distribution<int> pick_mask(0, 3);
        const int mask = pick_mask(rng);
        CoordSet a1(2), a2(2);
        for (int i = 0; i < 2; ++i) {
            if ((mask >> i) & 1) a1.add(i);
            a2.add(i);
        }
        const auto small = local_lebesgue(sigma, a1, cover);
        const auto large = local_lebesgue(sigma, a2, cover);
        REQUIRE(small.has_value());
        REQUIRE(large.has_value());
        CHECK(*small <= *large);
        CHECK(local_lebesgue(sigma, a1, cover) ==
              oracles::naive_local_lebesgue(sigma.coords(), 2, a1.members(), cover));
    }
}

TEST_CASE("property_m matches exhaustive quantifier evaluation") {
    const GridShape shape(2, 2);
    const GridSet full(shape, [](const Index&) { return true; });
    const GridSet empty(shape);
    const Index origin(2, std::vector<int>{0, 0});

    SUBCASE("ceiling case is vacuous and flagged") {
        const auto result = property_m(origin, CoordSet::empty(2), 2, full, {full});
        CHECK(result.holds);
        CHECK(result.second_clause_vacuous);
    }
    SUBCASE("empty member fails the containment clause") {
        const auto result = property_m(origin, CoordSet::empty(2), 1, empty, {full, empty});
        CHECK_FALSE(result.holds);
    }
    SUBCASE("agrees with the brute-force oracle on overlapping half-grids") {
        // Two overlapping half-grids: columns {0,1} and columns {1,2}.
        const GridSet left(shape, [](const Index& p) { return p[0] <= 1; });
        const GridSet right(shape, [](const Index& p) { return p[0] >= 1; });
        const std::vector<GridSet> cover{left, right};
        for (const std::vector<int>& coords : oracles::enumerate_grid(2, 2)) {
            const Index sigma(2, coords);
            for (int mask = 0; mask < 4; ++mask) {
                CoordSet a(2);
                std::vector<int> fixed;
                for (int i = 0; i < 2; ++i) {
                    if ((mask >> i) & 1) {
                        a.add(i);
                        fixed.push_back(i);
                    }
                }
                for (int k = 0; k <= 2; ++k) {
                    for (const GridSet& g : cover) {
                        CHECK(property_m(sigma, a, k, g, cover).holds ==
                              oracles::naive_property_m(coords, 2, fixed, k, g, cover));
                    }
                }
            }
        }
    }
}
