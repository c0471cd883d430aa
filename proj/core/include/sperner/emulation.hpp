#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sperner/grid.hpp"
#include "sperner/index.hpp"
#include "sperner/lattice.hpp"

namespace sperner {

/// Knobs of the inductive replay. The infinitary construction maximizes
/// over co-infinite index families; every finite surrogate here is
/// explicit, configurable and echoed in the trace.
struct EmulationConfig {
    /// Zero coordinates a candidate sigma must carry (stand-in for
    /// "sigma(i) = 0 for infinitely many i").
    int min_zeros = 1;
    /// Coordinates each A_k must newly absorb (the induction wants more
    /// than one fresh coordinate per step).
    int min_growth = 2;
    /// Coordinates that must stay outside every A_k (stand-in for
    /// co-infinite complements; keeps the trivial A = full-set maximum out).
    int reserve = 1;
    /// Quantifier maxima are exact while the candidate count stays at or
    /// below this; beyond it a seeded sample of `sample_size` is drawn.
    std::uint64_t pair_budget = 250000;
    std::uint64_t sample_size = 4096;
    std::uint64_t seed = 0;
};

struct EmulationStep {
    Index sigma;
    CoordSet a;
    int level = 0;   // L_k
    int member = 0;  // index of U_k in the cover
    /// Escape data carried into the next step: the fresh coordinate set
    /// A'_k and the (A'_k \ A_k, L_k)-function chi_k whose unit ball left
    /// G_{U_k}. Absent on the final step.
    std::optional<CoordSet> a_prime;
    std::optional<std::vector<int>> chi;
    /// Quantifier evaluation counters for this step's maximization.
    std::uint64_t candidates_evaluated = 0;
    std::uint64_t containment_checks = 0;
    bool sampled = false;
};

enum class EmulationStatus {
    kExhaustedCoordinates,  // no admissible next A: normal finite terminal
    kNoEscape,              // every unit escape ball stayed inside U_m
    kNoCandidates,          // no admissible (sigma, A) pair at some step
    kAuditFailed,           // construction finished but an audit failed
};

struct EmulationTrace {
    EmulationConfig config;
    int grid_bound = 0;
    std::vector<EmulationStep> steps;
    EmulationStatus status = EmulationStatus::kNoCandidates;
    std::string detail;

    std::optional<Index> sigma_hat;
    int sigma_hat_multiplicity = 0;
    int stabilization_index = 0;  // least i0 with L_i constant from i0 on (1-based)
    bool success = false;
    std::vector<std::string> audit_failures;
};

struct TraceAudit {
    bool passed = true;
    std::vector<std::string> failures;
};

/// Re-derives the induction invariants from the recorded trace alone:
///  1. property M at every recorded 4-tuple,
///  2. L_1 >= ... >= L_m,
///  3. strict nesting A_k below A_{k+1},
///  4. a zero of sigma_k on the fresh part of A_k, which grew by at least
///     min_growth coordinates,
///  5. restriction compatibility sigma_k | A_i = sigma_i | A_i for i <= k,
///  6. sigma_k vanishes outside the final A_m,
///  7. each recorded escape ball B(sigma_k + chi_k, A'_k \ A_k, 1) really
///     leaves G_{U_k},
/// plus the final membership audit sigma_hat in G_{U_i} for i >= i0.
TraceAudit audit_trace(const EmulationTrace& trace, const std::vector<GridSet>& cover);

/// Replays the inductive 4-tuple construction on a finite grid cover whose
/// members all have sup-diameter below n (scaled diameter below 1). The
/// engine reports success only when the run terminated by exhausting
/// coordinates and the full audit passed; stalls and failures keep their
/// trace for inspection.
EmulationTrace emulate_inductive_search(const std::vector<GridSet>& cover,
                                        const EmulationConfig& config = {});

}  // namespace sperner
