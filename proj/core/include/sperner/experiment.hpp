#pragma once

#include <cstdint>
#include <string>

#include "sperner/boxes.hpp"
#include "sperner/chains.hpp"
#include "sperner/colouring.hpp"

namespace sperner {

/// One experiment invocation. Everything that influences the result lives
/// here and is echoed into the report, so a report is reproducible from its
/// own config block.
struct ExperimentConfig {
    std::string experiment;  // kuhn-verify, reduction-roundtrip, lebesgue-witness,
                             // subdivide, nerve-chains, c0-chains, brouwer, emulate-5.1
    int dim = 2;             // N (simplex dimension d for simplicial runs)
    int bound = 2;           // n, or the scale m for brouwer
    std::uint64_t seed = 0;
    int seeds = 1;  // seeded repetitions for suite experiments
    int max_level = 20;
    int max_size = 6;
    int depth = 3;
    WindowSchedule window;
    int threads = 1;
    std::string input_path;  // optional colouring / cover file
    std::string map_name = "identity";
    std::string format = "json";  // json | csv
    PaletteMode palette_mode = PaletteMode::kFree;
    std::string tree_out;  // optional JSONL leaf dump for subdivide
    // Inductive-replay knobs (emulate-5.1).
    int min_zeros = 1;
    int min_growth = 2;
    int reserve = 1;
};

/// Exit codes follow the CLI contract: 0 success, 1 parse error (raised as
/// ParseError by the caller), 2 property violation, 3 budget exhaustion
/// with a partial report.
struct ExperimentResult {
    int exit_code = 0;
    std::string report;         // file payload; deterministic, no timings
    std::string human_summary;  // one-line stdout summary, may carry timings
};

ExperimentResult run_experiment(const ExperimentConfig& config);

/// Seeded cover of [0, 1]^N used by the suite experiments: a brick
/// partition with randomly jittered cuts, each brick expanded by a random
/// margin of at least 1/24 per side, total span capped at 23/24. Closed
/// members by default; open interior endpoints when `open_members` is set
/// (boundary ends stay closed at 0 and 1). Diameters stay below 1 and the
/// Lebesgue number stays at least 1/24 by construction.
BoxCover random_box_cover(int dim, std::uint64_t seed, bool open_members);

}  // namespace sperner
