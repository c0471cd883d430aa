#include <doctest.h>

#include "oracles.hpp"
#include "sperner/experiment.hpp"
#include "sperner/reduction.hpp"

using namespace sperner;

TEST_CASE("grid_point_box follows the interval construction") {
    const Index sigma(3, std::vector<int>{0, 1, 3});
    const RationalBox box = grid_point_box(sigma);
    // sigma = 0: [0, 1/n[.
    CHECK(box.axis(0).lo == rat(0));
    CHECK(box.axis(0).hi == rat(1, 3));
    CHECK_FALSE(box.axis(0).lo_open);
    CHECK(box.axis(0).hi_open);
    // Interior: ](j - 2/3)/n, (j + 2/3)/n[.
    CHECK(box.axis(1).lo == rat(1, 9));
    CHECK(box.axis(1).hi == rat(5, 9));
    CHECK(box.axis(1).lo_open);
    CHECK(box.axis(1).hi_open);
    // sigma = n: ]1 - 1/n, 1].
    CHECK(box.axis(2).lo == rat(2, 3));
    CHECK(box.axis(2).hi == rat(1));
    CHECK(box.axis(2).lo_open);
    CHECK_FALSE(box.axis(2).hi_open);
}

TEST_CASE("colouring_to_cover produces small-diameter members per colour") {
    SUBCASE("injective line colouring: three members, known diameters") {
        GridShape shape(1, 2);
        Colouring phi(shape);
        for (std::uint64_t r = 0; r < 3; ++r) phi.set_colour_rank(r, r);
        const BoxCover cover = colouring_to_cover(phi);
        REQUIRE(cover.member_count() == 3);
        CHECK(box_diameter(cover.member(0).region) == rat(1, 2));
        CHECK(box_diameter(cover.member(1).region) == rat(2, 3));
        CHECK(box_diameter(cover.member(2).region) == rat(1, 2));
        CHECK(cover.covers_unit_cube());
    }
    SUBCASE("grid centres lie in their own box") {
        const Colouring phi = random_sperner_colouring(2, 3, 3);
        const BoxCover cover = colouring_to_cover(phi);
        CHECK(cover.covers_unit_cube());
        for (const std::vector<int>& coords : oracles::enumerate_grid(2, 3)) {
            const Index sigma(3, coords);
            std::vector<Rat> centre{rat(coords[0], 3), rat(coords[1], 3)};
            CHECK(grid_point_box(sigma).contains(centre));
        }
    }
    SUBCASE("invalid colourings are refused") {
        GridShape shape(1, 2);
        Colouring constant(shape, 9);
        CHECK_THROWS_AS(colouring_to_cover(constant), std::invalid_argument);
    }
    SUBCASE("members have diameter below one exactly when the colouring is valid") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const Colouring phi = random_sperner_colouring(2, 2, seed);
            const BoxCover cover = colouring_to_cover(phi);
            for (const CoverMember& m : cover.members()) {
                CHECK(box_diameter(m.region) < rat(1));
            }
        }
    }
}

TEST_CASE("cover_to_colouring picks the least containing label") {
    SUBCASE("tiny disjoint boxes force an injective colouring") {
        // One closed box around each grid point of [2]^1 at n = 2.
        std::vector<CoverMember> members;
        for (int j = 0; j <= 2; ++j) {
            const Rat centre = rat(j, 2);
            members.push_back(
                {"p" + std::to_string(j),
                 Region({RationalBox({AxisInterval{rat_max(rat(0), Rat(centre - rat(1, 8))),
                                                   rat_min(rat(1), Rat(centre + rat(1, 8))), false,
                                                   false}})})});
        }
        const GridColouring result = cover_to_colouring(BoxCover(1, std::move(members)), 2);
        CHECK(result.colouring.palette().size() == 3);
        CHECK(result.palette_labels == std::vector<std::string>{"p0", "p1", "p2"});
    }
    SUBCASE("an axis-spanning member breaks the Sperner condition") {
        std::vector<CoverMember> members;
        members.push_back({"all", Region({RationalBox::closed_cube(1, rat(0), rat(1))})});
        const GridColouring result = cover_to_colouring(BoxCover(1, std::move(members)), 2);
        CHECK(check_cubical_sperner(result.colouring).has_value());
    }
    SUBCASE("uncovered grid points are named") {
        std::vector<CoverMember> members;
        members.push_back({"lo", Region({RationalBox::closed_cube(1, rat(0), rat(1, 3))})});
        const BoxCover partial(1, std::move(members));
        bool threw = false;
        try {
            cover_to_colouring(partial, 2);
        } catch (const std::invalid_argument& e) {
            threw = true;
            CHECK(std::string(e.what()).find("n=2 N=1 : 1") != std::string::npos);
        }
        CHECK(threw);
    }
    SUBCASE("round-trip reproduces the palette partition on grid points") {
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            for (int n : {2, 3, 4}) {
                const Colouring phi = random_sperner_colouring(2, n, seed);
                const GridColouring round = cover_to_colouring(colouring_to_cover(phi), n);
                CHECK_FALSE(check_cubical_sperner(round.colouring).has_value());
                const GridShape& shape = phi.shape();
                for (std::uint64_t r = 0; r < shape.point_count(); ++r) {
                    for (std::uint64_t s = r + 1; s < shape.point_count(); ++s) {
                        CHECK((phi.colour_of_rank(r) == phi.colour_of_rank(s)) ==
                              (round.colouring.colour_of_rank(r) ==
                               round.colouring.colour_of_rank(s)));
                    }
                }
            }
        }
    }
}

TEST_CASE("cover_to_colouring is Sperner-valid whenever diameters stay small") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const BoxCover cover = random_box_cover(2, seed, false);
        for (const CoverMember& m : cover.members()) CHECK(box_diameter(m.region) < rat(1));
        const GridColouring result = cover_to_colouring(cover, 4);
        CHECK_FALSE(check_cubical_sperner(result.colouring).has_value());
    }
}

TEST_CASE("max_multiplicity_point is exact on the arrangement") {
    SUBCASE("single member") {
        std::vector<CoverMember> members;
        members.push_back({"all", Region({RationalBox::closed_cube(2, rat(0), rat(1))})});
        const MultiplicityWitness w = max_multiplicity_point(BoxCover(2, std::move(members)));
        CHECK(w.multiplicity == 1);
        CHECK(w.labels == std::vector<std::string>{"all"});
    }
    SUBCASE("two overlapping intervals meet at the least witness") {
        std::vector<CoverMember> members;
        members.push_back({"lo", Region({RationalBox::closed_cube(1, rat(0), rat(2, 3))})});
        members.push_back({"hi", Region({RationalBox::closed_cube(1, rat(1, 3), rat(1))})});
        const MultiplicityWitness w = max_multiplicity_point(BoxCover(1, std::move(members)));
        CHECK(w.multiplicity == 2);
        CHECK(w.point == std::vector<Rat>{rat(1, 3)});
        CHECK(w.labels.size() == 2);
    }
    SUBCASE("agrees with the brute-force arrangement oracle") {
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            for (int dim : {1, 2}) {
                const BoxCover cover = random_box_cover(dim, seed, false);
                const MultiplicityWitness mine = max_multiplicity_point(cover);
                const oracles::NaiveWitness oracle = oracles::naive_max_multiplicity(cover);
                CHECK(mine.multiplicity == oracle.multiplicity);
                CHECK(mine.point == oracle.point);
                CHECK(mine.multiplicity >= dim + 1);
            }
        }
    }
    SUBCASE("a non-cover is rejected with the missing point") {
        std::vector<CoverMember> members;
        members.push_back({"lo", Region({RationalBox::closed_cube(1, rat(0), rat(1, 3))})});
        CHECK_THROWS_AS(max_multiplicity_point(BoxCover(1, std::move(members))),
                        std::invalid_argument);
    }
}

TEST_CASE("infimum_cube_recovery rebuilds the anchoring cube") {
    const std::vector<Index> pair{Index(3, std::vector<int>{2, 1}), Index(3, std::vector<int>{1, 2})};
    const Index anchor = infimum_cube_recovery(pair);
    CHECK(anchor.coords() == std::vector<int>{1, 1});
    const std::vector<Index> cube = positive_cube(anchor);
    for (const Index& s : pair) {
        CHECK(std::find(cube.begin(), cube.end(), s) != cube.end());
    }

    const Index solo(3, std::vector<int>{0, 2});
    CHECK(infimum_cube_recovery({solo}) == solo);

    CHECK_THROWS_AS(infimum_cube_recovery(
                        {Index(2, std::vector<int>{0, 0}), Index(2, std::vector<int>{2, 0})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(infimum_cube_recovery({}), std::invalid_argument);
}

TEST_CASE("rich_cube_via_cover recovers a cube with the Kuhn bound") {
    SUBCASE("injective line colouring yields a two-colour cube") {
        GridShape shape(1, 2);
        Colouring phi(shape);
        for (std::uint64_t r = 0; r < 3; ++r) phi.set_colour_rank(r, r);
        const RichCubeWitness rich = rich_cube_via_cover(phi);
        CHECK(rich.colours.size() == 2);
        CHECK(max_colours_per_cube(phi).colour_count == 2);
    }
    SUBCASE("witnessed colours sit inside the cube palette and under the optimum") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            for (int dim : {1, 2}) {
                const Colouring phi = random_sperner_colouring(dim, 3, seed);
                const RichCubeWitness rich = rich_cube_via_cover(phi);
                CHECK(static_cast<int>(rich.colours.size()) >= dim + 1);
                const std::vector<ColourId> palette = cube_palette(phi, rich.anchor);
                for (ColourId c : rich.colours) {
                    CHECK(std::binary_search(palette.begin(), palette.end(), c));
                }
                CHECK(static_cast<int>(rich.colours.size()) <=
                      max_colours_per_cube(phi).colour_count);
            }
        }
    }
}

TEST_CASE("grid_image matches pointwise membership") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const BoxCover cover = random_box_cover(2, seed, false);
        const GridCover grid = grid_image(cover, 6);
        REQUIRE(grid.members.size() == static_cast<std::size_t>(cover.member_count()));
        for (int m = 0; m < cover.member_count(); ++m) {
            for (const std::vector<int>& coords : oracles::enumerate_grid(2, 6)) {
                const std::vector<Rat> point{rat(coords[0], 6), rat(coords[1], 6)};
                CHECK(grid.members[static_cast<std::size_t>(m)].contains(Index(6, coords)) ==
                      oracles::naive_region_contains(cover.member(m).region, point));
            }
        }
    }
}
