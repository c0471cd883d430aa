#include <doctest.h>

#include "sperner/emulation.hpp"
#include "sperner/experiment.hpp"
#include "sperner/reduction.hpp"

using namespace sperner;

namespace {

/// Four quadrant-style members over [6]^2, each of sup-diameter 4 < 6.
std::vector<GridSet> quadrant_cover() {
    const GridShape shape(2, 6);
    std::vector<GridSet> cover;
    cover.push_back(GridSet(shape, [](const Index& p) { return p[0] <= 4 && p[1] <= 4; }));
    cover.push_back(GridSet(shape, [](const Index& p) { return p[0] >= 2 && p[1] >= 2; }));
    cover.push_back(GridSet(shape, [](const Index& p) { return p[0] <= 4 && p[1] >= 2; }));
    cover.push_back(GridSet(shape, [](const Index& p) { return p[0] >= 2 && p[1] <= 4; }));
    return cover;
}

}  // namespace

TEST_CASE("whole-grid members violate the scaled-diameter precondition") {
    const GridShape shape(2, 3);
    const GridSet everything(shape, [](const Index&) { return true; });
    CHECK_THROWS_AS(emulate_inductive_search({everything}), std::invalid_argument);
}

TEST_CASE("the quadrant cover runs one fully audited step") {
    EmulationConfig config;
    config.min_growth = 1;  // two coordinates leave no room for pairs
    const EmulationTrace trace = emulate_inductive_search(quadrant_cover(), config);
    CHECK(trace.status == EmulationStatus::kExhaustedCoordinates);
    CHECK(trace.success);
    REQUIRE(trace.steps.size() == 1);
    const EmulationStep& step = trace.steps.front();
    // The maximizer freezes one coordinate of the origin at zero and rides
    // the first quadrant member out to radius 4.
    CHECK(step.sigma.coords() == std::vector<int>{0, 0});
    CHECK(step.a.members() == std::vector<int>{0});
    CHECK(step.level == 4);
    CHECK(step.member == 0);
    REQUIRE(trace.sigma_hat.has_value());
    CHECK(trace.sigma_hat->coords() == std::vector<int>{0, 0});
    CHECK(trace.sigma_hat_multiplicity == 1);
    CHECK(trace.stabilization_index == 1);
    CHECK(audit_trace(trace, quadrant_cover()).passed);
}

TEST_CASE("grid images of seeded covers drive multi-step traces") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const BoxCover boxes = random_box_cover(4, seed, false);
        const GridCover grid = grid_image(boxes, 6);
        EmulationConfig config;
        config.seed = seed;
        const EmulationTrace trace = emulate_inductive_search(grid.members, config);
        if (trace.status == EmulationStatus::kExhaustedCoordinates) {
            CHECK(trace.success);
            CHECK(trace.audit_failures.empty());
            CHECK(audit_trace(trace, grid.members).passed);
            for (std::size_t k = 1; k < trace.steps.size(); ++k) {
                CHECK(trace.steps[k].level <= trace.steps[k - 1].level);
                CHECK(trace.steps[k - 1].a.subset_of(trace.steps[k].a));
            }
            // Final membership: sigma_hat sits inside every stabilized member.
            for (std::size_t k = static_cast<std::size_t>(trace.stabilization_index) - 1;
                 k < trace.steps.size(); ++k) {
                CHECK(grid.members[static_cast<std::size_t>(trace.steps[k].member)].contains(
                    *trace.sigma_hat));
            }
        } else {
            CHECK_FALSE(trace.success);
        }
    }
}

TEST_CASE("fine grids keep every level at least one") {
    // A coarse planar cover imaged at a grid fine enough that radius-1
    // balls respect the Lebesgue number.
    const BoxCover boxes = random_box_cover(2, 5, false);
    const GridCover grid = grid_image(boxes, 48);
    EmulationConfig config;
    config.min_growth = 1;
    const EmulationTrace trace = emulate_inductive_search(grid.members, config);
    REQUIRE_FALSE(trace.steps.empty());
    for (const EmulationStep& step : trace.steps) {
        CHECK(step.level >= 1);
    }
    if (trace.status == EmulationStatus::kExhaustedCoordinates) CHECK(trace.success);
}

TEST_CASE("emulation is deterministic per configuration") {
    const BoxCover boxes = random_box_cover(4, 9, false);
    const GridCover grid = grid_image(boxes, 6);
    EmulationConfig config;
    config.seed = 9;
    const EmulationTrace a = emulate_inductive_search(grid.members, config);
    const EmulationTrace b = emulate_inductive_search(grid.members, config);
    REQUIRE(a.steps.size() == b.steps.size());
    for (std::size_t k = 0; k < a.steps.size(); ++k) {
        CHECK(a.steps[k].sigma == b.steps[k].sigma);
        CHECK(a.steps[k].a.mask() == b.steps[k].a.mask());
        CHECK(a.steps[k].level == b.steps[k].level);
        CHECK(a.steps[k].member == b.steps[k].member);
    }
    CHECK(a.status == b.status);
}

TEST_CASE("audit_trace flags tampered traces") {
    EmulationConfig config;
    config.min_growth = 1;
    EmulationTrace trace = emulate_inductive_search(quadrant_cover(), config);
    REQUIRE(trace.success);
    trace.steps.front().level += 1;  // claim a larger ball than was fitted
    const TraceAudit audit = audit_trace(trace, quadrant_cover());
    CHECK_FALSE(audit.passed);
    CHECK_FALSE(audit.failures.empty());
}
