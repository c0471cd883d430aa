#include <doctest.h>

#include "sperner/experiment.hpp"
#include "sperner/subdivision.hpp"

using namespace sperner;

namespace {

BoxCover line_cover(std::vector<std::pair<AxisInterval, std::string>> pieces) {
    std::vector<CoverMember> members;
    for (auto& [axis, label] : pieces) {
        members.push_back({label, Region({RationalBox({axis})})});
    }
    return BoxCover(1, std::move(members));
}

/// Independent recursive reference subdivider for one-dimensional covers.
void reference_subdivide(const BoxCover& cover, const Rat& lo, const Rat& hi, int level,
                         int max_level, std::vector<std::pair<Rat, Rat>>& accepted,
                         std::vector<std::pair<Rat, Rat>>& refused) {
    const RationalBox cube({AxisInterval{lo, hi, false, false}});
    for (const CoverMember& m : cover.members()) {
        if (m.region.contains_box(cube)) {
            accepted.push_back({lo, hi});
            return;
        }
    }
    if (level >= max_level) {
        refused.push_back({lo, hi});
        return;
    }
    const Rat mid = (lo + hi) / 2;
    reference_subdivide(cover, lo, mid, level + 1, max_level, accepted, refused);
    reference_subdivide(cover, mid, hi, level + 1, max_level, accepted, refused);
}

}  // namespace

TEST_CASE("a member containing the root accepts at level zero") {
    std::vector<CoverMember> members;
    members.push_back({"all", Region({RationalBox::closed_cube(2, rat(0), rat(1))})});
    const SubdivisionTree tree = adaptive_subdivide(BoxCover(2, std::move(members)), 5);
    REQUIRE(tree.leaves.size() == 1);
    CHECK(tree.leaves[0].cube.level == 0);
    CHECK(tree.leaves[0].status == LeafStatus::kAccepted);
    CHECK(well_founded_check(tree).max_depth == 0);
}

TEST_CASE("two overlapping intervals split once") {
    const BoxCover cover = line_cover({{AxisInterval{rat(0), rat(3, 5), false, true}, "lo"},
                                       {AxisInterval{rat(2, 5), rat(1), true, false}, "hi"}});
    const SubdivisionTree tree = adaptive_subdivide(cover, 6);
    REQUIRE(tree.leaves.size() == 2);
    CHECK(tree.leaves[0].cube.level == 1);
    CHECK(tree.leaves[0].cube.corner == std::vector<std::int64_t>{0});
    CHECK(tree.leaves[0].fitted_label == "lo");
    CHECK(tree.leaves[1].cube.corner == std::vector<std::int64_t>{1});
    CHECK(tree.leaves[1].fitted_label == "hi");
    CHECK(well_founded_check(tree).is_finite);
    CHECK(well_founded_check(tree).max_depth == 1);
}

TEST_CASE("the adaptive tree matches a reference recursive subdivider") {
    const std::vector<BoxCover> cases{
        line_cover({{AxisInterval{rat(0), rat(1, 2), false, true}, "a"},
                    {AxisInterval{rat(1, 4), rat(1), true, false}, "b"}}),
        line_cover({{AxisInterval{rat(0), rat(1, 3), false, true}, "a"},
                    {AxisInterval{rat(1, 3) - rat(1, 48), rat(1), true, false}, "b"}}),
    };
    for (const BoxCover& cover : cases) {
        for (int max_level : {2, 4, 8}) {
            std::vector<std::pair<Rat, Rat>> accepted, refused;
            reference_subdivide(cover, rat(0), rat(1), 0, max_level, accepted, refused);
            const SubdivisionTree tree = adaptive_subdivide(cover, max_level);
            std::vector<std::pair<Rat, Rat>> got_accepted, got_refused;
            for (const SubdivisionLeaf& leaf : tree.leaves) {
                const AxisInterval& e = leaf.cube.extent().axis(0);
                (leaf.status == LeafStatus::kAccepted ? got_accepted : got_refused)
                    .push_back({e.lo, e.hi});
            }
            CHECK(got_accepted == accepted);
            CHECK(got_refused == refused);
        }
    }
}

TEST_CASE("narrow overlap drives the depth to the resolution scale") {
    // Members meet only on an interval of width 1/48 around 1/3; leaves near
    // the boundary must shrink to fit, but the tree stays finite.
    const BoxCover cover =
        line_cover({{AxisInterval{rat(0), rat(1, 3), false, true}, "a"},
                    {AxisInterval{rat(1, 3) - rat(1, 48), rat(1), true, false}, "b"}});
    const SubdivisionTree tree = adaptive_subdivide(cover, 12);
    const WellFoundedReport report = well_founded_check(tree);
    CHECK(report.is_finite);
    CHECK(report.max_depth >= 6);
    CHECK(report.max_depth <= 12);

    // Too small a level budget leaves refused cubes, flagged not thrown.
    const SubdivisionTree shallow = adaptive_subdivide(cover, 3);
    CHECK(shallow.has_refused());
    CHECK_FALSE(well_founded_check(shallow).is_finite);
}

TEST_CASE("accepted leaves partition the cube exactly and stay inside members") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        for (int dim : {1, 2}) {
            const BoxCover cover = random_box_cover(dim, seed, true);
            const SubdivisionTree tree = adaptive_subdivide(cover, 8);
            CHECK_FALSE(tree.has_refused());
            Rat volume = 0;
            for (const SubdivisionLeaf& leaf : tree.leaves) {
                volume += leaf.cube.volume();
                bool inside = false;
                for (const CoverMember& m : cover.members()) {
                    if (m.label == leaf.fitted_label) {
                        inside = m.region.contains_box(leaf.cube.extent());
                    }
                }
                CHECK(inside);
            }
            CHECK(volume == rat(1));
            // Margins are at least 1/24, so level 5 cubes always fit.
            CHECK(well_founded_check(tree).max_depth <= 6);
        }
    }
}

TEST_CASE("freezing accepted cubes makes refinement monotone") {
    const BoxCover cover =
        line_cover({{AxisInterval{rat(0), rat(1, 3), false, true}, "a"},
                    {AxisInterval{rat(1, 3) - rat(1, 48), rat(1), true, false}, "b"}});
    const SubdivisionTree coarse = adaptive_subdivide(cover, 4);
    const SubdivisionTree fine = adaptive_subdivide(cover, 5);
    for (const SubdivisionLeaf& leaf : coarse.leaves) {
        if (leaf.status != LeafStatus::kAccepted) continue;
        bool found = false;
        for (const SubdivisionLeaf& other : fine.leaves) {
            found |= other.status == LeafStatus::kAccepted && other.cube == leaf.cube;
        }
        CHECK(found);
    }
}

TEST_CASE("complex_colour_stats counts member colours per leaf") {
    SUBCASE("one member colours everything alike") {
        std::vector<CoverMember> members;
        members.push_back({"all", Region({RationalBox::closed_cube(1, rat(0), rat(1))})});
        const BoxCover cover(1, std::move(members));
        const SubdivisionTree tree = adaptive_subdivide(cover, 4);
        const ComplexColourStats stats = complex_colour_stats(tree, cover);
        CHECK(stats.max_count == 1);
        for (int c : stats.per_leaf_counts) CHECK(c == 1);
    }
    SUBCASE("a two-member line cover has a two-colour edge") {
        const BoxCover cover = line_cover({{AxisInterval{rat(0), rat(3, 5), false, true}, "lo"},
                                           {AxisInterval{rat(2, 5), rat(1), true, false}, "hi"}});
        const SubdivisionTree tree = adaptive_subdivide(cover, 6);
        const ComplexColourStats stats = complex_colour_stats(tree, cover);
        CHECK(stats.max_count == 2);
    }
    SUBCASE("planar covers force a three-colour cube somewhere") {
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            const BoxCover cover = random_box_cover(2, seed, true);
            const SubdivisionTree tree = adaptive_subdivide(cover, 8);
            const ComplexColourStats stats = complex_colour_stats(tree, cover);
            CHECK(stats.max_count >= 3);
        }
    }
}
