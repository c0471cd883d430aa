#include "sperner/experiment.hpp"

#include <fstream>
#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sperner/emulation.hpp"
#include "sperner/fixedpoint.hpp"
#include "sperner/io.hpp"
#include "sperner/lattice.hpp"
#include "sperner/parallel.hpp"
#include "sperner/reduction.hpp"
#include "sperner/subdivision.hpp"

namespace sperner {

namespace {

using nlohmann::json;

json config_json(const ExperimentConfig& c) {
    json out;
    out["experiment"] = c.experiment;
    out["N"] = c.dim;
    out["n"] = c.bound;
    out["seed"] = c.seed;
    out["seeds"] = c.seeds;
    out["max_level"] = c.max_level;
    out["max_size"] = c.max_size;
    out["depth"] = c.depth;
    out["window_start"] = c.window.start;
    out["window_step"] = c.window.step;
    out["threads"] = c.threads;
    out["input"] = c.input_path;
    out["map"] = c.map_name;
    out["format"] = c.format;
    out["palette_mode"] = c.palette_mode == PaletteMode::kCanonical ? "canonical" : "free";
    out["min_zeros"] = c.min_zeros;
    out["min_growth"] = c.min_growth;
    out["reserve"] = c.reserve;
    return out;
}

json point_json(const std::vector<Rat>& point) {
    json out = json::array();
    for (const Rat& c : point) out.push_back(rat_to_string(c));
    return out;
}

ExperimentResult kuhn_verify(const ExperimentConfig& config) {
    const std::vector<int> counts = ordered_parallel_map<int>(
        static_cast<std::uint64_t>(config.seeds), config.threads, [&](std::uint64_t i) {
            const Colouring phi = random_sperner_colouring(config.dim, config.bound,
                                                           config.seed + i, config.palette_mode);
            return max_colours_per_cube(phi).colour_count;
        });
    const int min_count = *std::min_element(counts.begin(), counts.end());
    const int required = config.dim + 1;
    const bool violated = min_count < required;

    ExperimentResult result;
    if (config.format == "csv") {
        std::ostringstream out;
        out << "# " << config_json(config).dump() << "\n";
        out << "seed,max_cube_colours\n";
        for (std::size_t i = 0; i < counts.size(); ++i) {
            out << (config.seed + i) << ',' << counts[i] << "\n";
        }
        result.report = out.str();
    } else {
        json out;
        out["config"] = config_json(config);
        out["counts"] = counts;
        out["min_count"] = min_count;
        out["required"] = required;
        out["violated"] = violated;
        result.report = out.dump(2) + "\n";
    }
    result.exit_code = violated ? 2 : 0;
    result.human_summary = "kuhn-verify: min cube colours " + std::to_string(min_count) +
                           " over " + std::to_string(config.seeds) + " seeds (bound " +
                           std::to_string(required) + ")";
    return result;
}

ExperimentResult reduction_roundtrip(const ExperimentConfig& config) {
    struct Row {
        int colours = 0;
        int multiplicity = 0;
        int exhaustive = 0;
        bool contained = false;
    };
    const std::vector<Row> rows = ordered_parallel_map<Row>(
        static_cast<std::uint64_t>(config.seeds), config.threads, [&](std::uint64_t i) {
            const Colouring phi = random_sperner_colouring(config.dim, config.bound,
                                                           config.seed + i, config.palette_mode);
            const RichCubeWitness rich = rich_cube_via_cover(phi);
            const std::vector<ColourId> palette = cube_palette(phi, rich.anchor);
            Row row;
            row.colours = static_cast<int>(rich.colours.size());
            row.multiplicity = rich.witness.multiplicity;
            row.exhaustive = max_colours_per_cube(phi).colour_count;
            row.contained = std::includes(palette.begin(), palette.end(), rich.colours.begin(),
                                          rich.colours.end());
            return row;
        });

    const int required = config.dim + 1;
    bool violated = false;
    json rows_json = json::array();
    for (const Row& row : rows) {
        violated |= row.colours < required || !row.contained || row.colours > row.exhaustive;
        rows_json.push_back({{"colours", row.colours},
                             {"multiplicity", row.multiplicity},
                             {"exhaustive", row.exhaustive},
                             {"contained", row.contained}});
    }

    json out;
    out["config"] = config_json(config);
    out["rows"] = std::move(rows_json);
    out["required"] = required;
    out["violated"] = violated;

    ExperimentResult result;
    result.report = out.dump(2) + "\n";
    result.exit_code = violated ? 2 : 0;
    result.human_summary = "reduction-roundtrip: " + std::to_string(config.seeds) + " seeds, " +
                           (violated ? "violations found" : "all cubes rich enough");
    return result;
}

ExperimentResult lebesgue_witness(const ExperimentConfig& config) {
    const BoxCover cover = config.input_path.empty()
                               ? random_box_cover(config.dim, config.seed, false)
                               : parse_cover_file(config.input_path);
    bool small_members = true;
    for (const CoverMember& m : cover.members()) small_members &= box_diameter(m.region) < 1;
    const MultiplicityWitness witness = max_multiplicity_point(cover);
    const bool violated = small_members && witness.multiplicity < cover.dim() + 1;

    json out;
    out["config"] = config_json(config);
    out["members"] = cover.member_count();
    out["small_members"] = small_members;
    out["point"] = point_json(witness.point);
    out["multiplicity"] = witness.multiplicity;
    out["labels"] = witness.labels;
    out["violated"] = violated;

    ExperimentResult result;
    result.report = out.dump(2) + "\n";
    result.exit_code = violated ? 2 : 0;
    result.human_summary =
        "lebesgue-witness: multiplicity " + std::to_string(witness.multiplicity) + " across " +
        std::to_string(cover.member_count()) + " members";
    return result;
}

ExperimentResult subdivide(const ExperimentConfig& config, std::string* tree_payload) {
    const BoxCover cover = config.input_path.empty()
                               ? random_box_cover(config.dim, config.seed, true)
                               : parse_cover_file(config.input_path);
    const SubdivisionTree tree = adaptive_subdivide(cover, config.max_level);
    const WellFoundedReport wf = well_founded_check(tree);

    Rat total_volume = 0;
    Rat accepted_volume = 0;
    bool all_inside = true;
    int accepted = 0, refused = 0;
    for (const SubdivisionLeaf& leaf : tree.leaves) {
        total_volume += leaf.cube.volume();
        if (leaf.status == LeafStatus::kAccepted) {
            ++accepted;
            accepted_volume += leaf.cube.volume();
            bool inside = false;
            for (const CoverMember& m : cover.members()) {
                if (m.label == leaf.fitted_label) {
                    inside = m.region.contains_box(leaf.cube.extent());
                    break;
                }
            }
            all_inside &= inside;
        } else {
            ++refused;
        }
    }

    json out;
    out["config"] = config_json(config);
    out["members"] = cover.member_count();
    out["leaves"] = static_cast<int>(tree.leaves.size());
    out["accepted"] = accepted;
    out["refused"] = refused;
    out["max_depth"] = wf.max_depth;
    out["well_founded"] = wf.is_finite;
    out["total_volume"] = rat_to_string(total_volume);
    out["accepted_volume"] = rat_to_string(accepted_volume);
    out["all_leaves_inside_members"] = all_inside;

    if (tree_payload) *tree_payload = write_tree_jsonl(tree);

    ExperimentResult result;
    result.report = out.dump(2) + "\n";
    result.exit_code = refused > 0 ? 3 : (all_inside ? 0 : 2);
    result.human_summary = "subdivide: " + std::to_string(accepted) + " accepted / " +
                           std::to_string(refused) + " refused leaves, depth " +
                           std::to_string(wf.max_depth);
    return result;
}

ExperimentResult nerve_chains(const ExperimentConfig& config) {
    const BoxCover cover = config.input_path.empty()
                               ? random_box_cover(config.dim, config.seed, false)
                               : parse_cover_file(config.input_path);
    const NervePoset poset = build_nerve_poset(cover, config.max_size);
    const int chain = max_chain_length(poset);
    const MultiplicityWitness witness = max_multiplicity_point(cover);
    const int expected = std::min(witness.multiplicity, config.max_size);
    const bool violated = !poset.truncated && chain < expected;

    json out;
    out["config"] = config_json(config);
    out["poset"] = json::parse(write_poset_json(poset));
    out["max_chain"] = chain;
    out["witness_multiplicity"] = witness.multiplicity;
    out["violated"] = violated;

    ExperimentResult result;
    result.report = out.dump(2) + "\n";
    result.exit_code = poset.truncated ? 3 : (violated ? 2 : 0);
    result.human_summary = "nerve-chains: max chain " + std::to_string(chain) + " vs witness " +
                           std::to_string(witness.multiplicity);
    return result;
}

ExperimentResult c0_chains(const ExperimentConfig& config) {
    SparseColouringOracle oracle;
    const int window_cap = config.window.window_at(std::max(config.depth - 1, 0)) + 1;
    if (config.map_name == "canonical" || config.map_name == "identity") {
        oracle = canonical_sparse_oracle;
    } else if (config.map_name == "random") {
        oracle = random_sparse_oracle(config.bound, window_cap, config.seed);
    } else {
        throw std::invalid_argument("c0-chains oracle must be 'canonical' or 'random'");
    }
    const ExtensionChainResult found =
        extension_chain_search(oracle, config.bound, config.depth, config.window);
    const std::optional<std::string> verdict = verify_extension_chain(oracle, found.chain);

    json chain_json = json::array();
    for (const ChainLink& link : found.chain) {
        json support = json::object();
        for (auto [k, v] : link.sigma.support()) support[std::to_string(k)] = v;
        chain_json.push_back({{"window", link.sigma.window()},
                              {"support", support},
                              {"colour", link.colour}});
    }

    json out;
    out["config"] = config_json(config);
    out["chain"] = std::move(chain_json);
    out["length"] = static_cast<int>(found.chain.size());
    out["nodes_visited"] = found.nodes_visited;
    out["budget_exhausted"] = found.budget_exhausted;
    out["checker"] = verdict ? *verdict : "ok";

    ExperimentResult result;
    result.report = out.dump(2) + "\n";
    if (verdict) {
        result.exit_code = 2;
    } else if (found.budget_exhausted && static_cast<int>(found.chain.size()) < config.depth) {
        result.exit_code = 3;
    }
    result.human_summary = "c0-chains: chain length " + std::to_string(found.chain.size()) +
                           " of " + std::to_string(config.depth) + " requested";
    return result;
}

ExperimentResult brouwer(const ExperimentConfig& config) {
    const GridMap f = builtin_map(config.map_name, config.dim);
    json out;
    out["config"] = config_json(config);
    ExperimentResult result;
    try {
        const BrouwerResult approx = brouwer_approx(f, config.bound);
        out["point"] = point_json(approx.point);
        out["residual"] = rat_to_string(approx.residual);
        out["m"] = approx.scale;
        out["escalations"] = approx.escalations;
        result.exit_code = 0;
        result.human_summary = "brouwer: residual " + rat_to_string(approx.residual) +
                               " at scale " + std::to_string(approx.scale);
    } catch (const std::runtime_error& e) {
        out["error"] = e.what();
        result.exit_code = 3;
        result.human_summary = std::string("brouwer: ") + e.what();
    }
    result.report = out.dump(2) + "\n";
    return result;
}

ExperimentResult emulate(const ExperimentConfig& config) {
    const BoxCover cover = config.input_path.empty()
                               ? random_box_cover(config.dim, config.seed, false)
                               : parse_cover_file(config.input_path);
    const GridCover grid = grid_image(cover, config.bound);

    EmulationConfig econfig;
    econfig.min_zeros = config.min_zeros;
    econfig.min_growth = config.min_growth;
    econfig.reserve = config.reserve;
    econfig.seed = config.seed;
    const EmulationTrace trace = emulate_inductive_search(grid.members, econfig);

    json steps = json::array();
    for (const EmulationStep& step : trace.steps) {
        json record;
        record["sigma"] = step.sigma.coords();
        record["A"] = step.a.members();
        record["L"] = step.level;
        record["member"] = grid.labels[static_cast<std::size_t>(step.member)];
        if (step.a_prime) record["A_prime"] = step.a_prime->members();
        if (step.chi) record["chi"] = *step.chi;
        record["candidates"] = step.candidates_evaluated;
        record["containment_checks"] = step.containment_checks;
        record["sampled"] = step.sampled;
        steps.push_back(std::move(record));
    }

    const char* status = nullptr;
    switch (trace.status) {
        case EmulationStatus::kExhaustedCoordinates: status = "exhausted-coordinates"; break;
        case EmulationStatus::kNoEscape: status = "no-escape"; break;
        case EmulationStatus::kNoCandidates: status = "no-candidates"; break;
        case EmulationStatus::kAuditFailed: status = "audit-failed"; break;
    }

    json out;
    out["config"] = config_json(config);
    out["grid_bound"] = trace.grid_bound;
    out["steps"] = std::move(steps);
    out["status"] = status;
    out["detail"] = trace.detail;
    out["success"] = trace.success;
    out["audit_failures"] = trace.audit_failures;
    if (trace.sigma_hat) {
        out["sigma_hat"] = trace.sigma_hat->coords();
        out["sigma_hat_multiplicity"] = trace.sigma_hat_multiplicity;
        out["stabilization_index"] = trace.stabilization_index;
    }

    ExperimentResult result;
    result.report = out.dump(2) + "\n";
    switch (trace.status) {
        case EmulationStatus::kExhaustedCoordinates: result.exit_code = 0; break;
        case EmulationStatus::kNoEscape:
        case EmulationStatus::kNoCandidates: result.exit_code = 3; break;
        case EmulationStatus::kAuditFailed: result.exit_code = 2; break;
    }
    result.human_summary = std::string("emulate-5.1: ") + status + ", " +
                           std::to_string(trace.steps.size()) + " steps";
    return result;
}

}  // namespace

BoxCover random_box_cover(int dim, std::uint64_t seed, bool open_members) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_bricks(2, 3);
    const int bricks = pick_bricks(rng);

    // Per axis: segment boundaries over denominator 24.
    std::vector<std::vector<int>> cuts24(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        std::vector<int>& c = cuts24[static_cast<std::size_t>(i)];
        c.push_back(0);
        if (bricks == 2) {
            std::uniform_int_distribution<int> jitter(-3, 3);
            c.push_back(12 + jitter(rng));
        } else {
            std::uniform_int_distribution<int> jitter(-2, 2);
            c.push_back(8 + jitter(rng));
            c.push_back(16 + jitter(rng));
        }
        c.push_back(24);
    }

    std::vector<CoverMember> members;
    std::vector<int> at(static_cast<std::size_t>(dim), 0);
    int label_counter = 0;
    for (;;) {
        std::vector<AxisInterval> axes;
        for (int i = 0; i < dim; ++i) {
            const int lo24 = cuts24[static_cast<std::size_t>(i)][static_cast<std::size_t>(at[static_cast<std::size_t>(i)])];
            const int hi24 = cuts24[static_cast<std::size_t>(i)][static_cast<std::size_t>(at[static_cast<std::size_t>(i)]) + 1];
            const int span = hi24 - lo24;
            const int cap = std::min(5, (23 - span) / 2);
            std::uniform_int_distribution<int> pick_margin(1, std::max(1, cap));
            const int mlo = pick_margin(rng);
            const int mhi = pick_margin(rng);
            AxisInterval a;
            const int alo = std::max(0, lo24 - mlo);
            const int ahi = std::min(24, hi24 + mhi);
            a.lo = rat(alo, 24);
            a.hi = rat(ahi, 24);
            if (open_members) {
                a.lo_open = alo > 0;
                a.hi_open = ahi < 24;
            }
            axes.push_back(std::move(a));
        }
        members.push_back(CoverMember{"b" + std::to_string(label_counter++),
                                      Region({RationalBox(std::move(axes))})});
        int i = dim - 1;
        while (i >= 0 && at[static_cast<std::size_t>(i)] == bricks - 1) --i;
        if (i < 0) break;
        ++at[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < dim; ++j) at[static_cast<std::size_t>(j)] = 0;
    }
    return BoxCover(dim, std::move(members));
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    if (config.seeds < 1) throw std::invalid_argument("seeds must be >= 1");
    if (config.threads < 1) throw std::invalid_argument("threads must be >= 1");
    if (config.format != "json" && config.format != "csv") {
        throw std::invalid_argument("format must be json or csv");
    }
    if (config.format == "csv" && config.experiment != "kuhn-verify") {
        throw std::invalid_argument("csv output is limited to scalar sweeps (kuhn-verify)");
    }

    const auto started = std::chrono::steady_clock::now();
    ExperimentResult result;
    std::string tree_payload;
    if (config.experiment == "kuhn-verify") {
        result = kuhn_verify(config);
    } else if (config.experiment == "reduction-roundtrip") {
        result = reduction_roundtrip(config);
    } else if (config.experiment == "lebesgue-witness") {
        result = lebesgue_witness(config);
    } else if (config.experiment == "subdivide") {
        result = subdivide(config, config.tree_out.empty() ? nullptr : &tree_payload);
    } else if (config.experiment == "nerve-chains") {
        result = nerve_chains(config);
    } else if (config.experiment == "c0-chains") {
        result = c0_chains(config);
    } else if (config.experiment == "brouwer") {
        result = brouwer(config);
    } else if (config.experiment == "emulate-5.1") {
        result = emulate(config);
    } else {
        throw std::invalid_argument("unknown experiment: " + config.experiment);
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);

    if (!config.tree_out.empty() && !tree_payload.empty()) {
        std::ofstream out(config.tree_out);
        if (!out) throw std::runtime_error("cannot write " + config.tree_out);
        out << tree_payload;
    }
    result.human_summary += " [" + std::to_string(elapsed.count()) + " ms]";
    return result;
}

}  // namespace sperner
