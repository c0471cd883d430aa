#include "sperner/emulation.hpp"

#include <bit>
#include <algorithm>
#include <random>
#include <stdexcept>

namespace sperner {

namespace {

constexpr std::uint64_t kCountCap = std::uint64_t{1} << 62;

std::uint64_t pow_sat(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > kCountCap / std::max<std::uint64_t>(base, 1)) return kCountCap;
        out *= base;
    }
    return out;
}

/// B(centre, moving, 1) containment; the plain ball moves exactly the
/// coordinates of `moving`.
bool unit_ball_inside(const Index& centre, const CoordSet& moving, const GridSet& member) {
    return hat_ball_inside(centre, moving.complement(), 1, member);
}

/// Largest fitting hat-ball radius and the least member realizing it.
struct Fit {
    int level = 0;
    int member = 0;
};

std::optional<Fit> best_fit(const Index& sigma, const CoordSet& a,
                            const std::vector<GridSet>& cover, std::uint64_t& checks) {
    std::optional<Fit> best;
    for (int m = 0; m < static_cast<int>(cover.size()); ++m) {
        const GridSet& member = cover[static_cast<std::size_t>(m)];
        ++checks;
        if (!member.contains(sigma)) continue;
        int k = 0;
        while (k + 1 <= sigma.bound()) {
            ++checks;
            if (!hat_ball_inside(sigma, a, k + 1, member)) break;
            ++k;
        }
        if (!best || k > best->level) best = Fit{k, m};
    }
    return best;
}

/// A candidate drawn from one of the engine's admissible families: the
/// coordinate set absorbed so far and the full index.
struct Candidate {
    Index sigma;
    CoordSet a;
};

/// Enumerates (exactly or by seeded sampling) pairs (mask over `slots`,
/// value tuple per chosen slot in [0, vmax]); calls visit for each.
/// Returns true when the family was sampled rather than enumerated.
template <typename Admissible, typename Visit>
bool for_each_choice(const std::vector<int>& slots, int vmax, const Admissible& admissible,
                     std::uint64_t pair_budget, std::uint64_t sample_size, std::uint64_t seed,
                     const Visit& visit) {
    const int s = static_cast<int>(slots.size());
    std::uint64_t total = 0;
    if (s >= 24) total = kCountCap;
    for (std::uint64_t mask = 0; total < kCountCap && mask < (std::uint64_t{1} << s); ++mask) {
        if (!admissible(mask)) continue;
        total += pow_sat(static_cast<std::uint64_t>(vmax) + 1, std::popcount(mask));
        if (total > pair_budget) break;
    }

    if (total <= pair_budget) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
            if (!admissible(mask)) continue;
            std::vector<int> chosen;
            for (int i = 0; i < s; ++i) {
                if ((mask >> i) & 1u) chosen.push_back(slots[static_cast<std::size_t>(i)]);
            }
            std::vector<int> values(chosen.size(), 0);
            for (;;) {
                visit(chosen, values);
                std::size_t i = chosen.size();
                while (i > 0 && values[i - 1] == vmax) --i;
                if (i == 0) break;
                ++values[i - 1];
                for (std::size_t j = i; j < chosen.size(); ++j) values[j] = 0;
            }
        }
        return false;
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick_mask(0, (std::uint64_t{1} << s) - 1);
    std::uniform_int_distribution<int> pick_value(0, vmax);
    for (std::uint64_t draw = 0; draw < sample_size; ++draw) {
        std::uint64_t mask = 0;
        bool found = false;
        for (int tries = 0; tries < 128; ++tries) {
            mask = pick_mask(rng);
            if (admissible(mask)) {
                found = true;
                break;
            }
        }
        if (!found) continue;
        std::vector<int> chosen;
        for (int i = 0; i < s; ++i) {
            if ((mask >> i) & 1u) chosen.push_back(slots[static_cast<std::size_t>(i)]);
        }
        std::vector<int> values(chosen.size());
        for (int& v : values) v = pick_value(rng);
        visit(chosen, values);
    }
    return true;
}

struct StepSearch {
    std::optional<Fit> fit;
    Candidate chosen{Index(1, 1), CoordSet(1)};
    std::uint64_t candidates = 0;
    std::uint64_t checks = 0;
    bool sampled = false;
};

/// Shared maximization core: given a family generator producing candidates,
/// keep the first candidate of maximal fit level.
template <typename Generator>
StepSearch maximize(const std::vector<GridSet>& cover, const Generator& generate) {
    StepSearch out;
    out.sampled = generate([&](const Candidate& cand) {
        ++out.candidates;
        const std::optional<Fit> fit = best_fit(cand.sigma, cand.a, cover, out.checks);
        if (!fit) return;
        if (!out.fit || fit->level > out.fit->level) {
            out.fit = fit;
            out.chosen = cand;
        }
    });
    return out;
}

int grid_dim(const std::vector<GridSet>& cover) { return cover.front().shape().dim(); }
int grid_bound(const std::vector<GridSet>& cover) { return cover.front().shape().bound(); }

/// The first-step family: sets A with min_growth <= |A| <= N - reserve,
/// sigma zero off A, any values on A, at least one zero inside A and
/// min_zeros zeros overall.
template <typename Visit>
bool first_step_family(const std::vector<GridSet>& cover, const EmulationConfig& config,
                       const Visit& visit) {
    const int dim = grid_dim(cover);
    const int bound = grid_bound(cover);
    std::vector<int> slots(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) slots[static_cast<std::size_t>(i)] = i;
    const auto admissible = [&](std::uint64_t mask) {
        const int size = std::popcount(mask);
        return size >= config.min_growth && dim - size >= config.reserve;
    };
    return for_each_choice(slots, bound, admissible, config.pair_budget, config.sample_size,
                           config.seed, [&](const std::vector<int>& coords,
                                            const std::vector<int>& values) {
        Index sigma(dim, bound);
        CoordSet a(dim);
        bool zero_inside = false;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            sigma.set(coords[i], values[i]);
            a.add(coords[i]);
            zero_inside |= values[i] == 0;
        }
        if (!zero_inside) return;
        if (sigma.zero_count() < config.min_zeros) return;
        visit(Candidate{std::move(sigma), a});
    });
}

/// The extension family after an escape (base = sigma_m + chi_m on A'_m):
/// A = A'_m plus fresh coordinates, growth and reserve respected, new
/// values at most min(n, L_m), a zero somewhere in A \ A_m.
template <typename Visit>
bool extension_family(const std::vector<GridSet>& cover, const EmulationConfig& config,
                      const Index& base, const CoordSet& a_m, const CoordSet& a_prime,
                      int level_m, std::uint64_t seed, const Visit& visit) {
    const int dim = grid_dim(cover);
    const int bound = grid_bound(cover);
    const std::vector<int> slots = a_prime.complement().members();
    const int escape_growth = a_prime.size() - a_m.size();
    const auto admissible = [&](std::uint64_t mask) {
        const int fresh = std::popcount(mask);
        if (escape_growth + fresh < config.min_growth) return false;
        return static_cast<int>(slots.size()) - fresh >= config.reserve;
    };
    const int vmax = std::min(bound, level_m);
    return for_each_choice(slots, vmax, admissible, config.pair_budget, config.sample_size, seed,
                           [&](const std::vector<int>& coords, const std::vector<int>& values) {
        Index sigma = base;
        CoordSet a = a_prime;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            sigma.set(coords[i], values[i]);
            a.add(coords[i]);
        }
        bool zero_in_fresh = false;
        for (int i = 0; i < dim; ++i) {
            if (a.contains(i) && !a_m.contains(i) && sigma[i] == 0) zero_in_fresh = true;
        }
        if (!zero_in_fresh) return;
        if (sigma.zero_count() < config.min_zeros) return;
        visit(Candidate{std::move(sigma), a});
    });
}

struct EscapeResult {
    std::optional<CoordSet> a_prime;
    std::optional<std::vector<int>> chi;
    std::uint64_t candidates = 0;
    std::uint64_t checks = 0;
    bool sampled = false;
};

/// Searches for A'_m and an (A'_m \ A_m, L_m)-function chi with
/// B(sigma_m + chi, A'_m \ A_m, 1) not inside G_{U_m}.
EscapeResult find_escape(const std::vector<GridSet>& cover, const EmulationConfig& config,
                         const Index& sigma_m, const CoordSet& a_m, int level_m, int member_m,
                         std::uint64_t seed) {
    const int bound = grid_bound(cover);
    const std::vector<int> slots = a_m.complement().members();
    const auto admissible = [&](std::uint64_t mask) {
        const int fresh = std::popcount(mask);
        if (fresh < 1) return false;
        // Leave room for the next A_{m+1} to respect the reserve.
        return static_cast<int>(slots.size()) - fresh >= config.reserve;
    };
    const int vmax = std::min(bound, level_m);
    EscapeResult out;
    out.sampled = for_each_choice(
        slots, vmax, admissible, config.pair_budget, config.sample_size, seed,
        [&](const std::vector<int>& coords, const std::vector<int>& values) {
            if (out.a_prime) return;  // first hit wins
            ++out.candidates;
            Index centre = sigma_m;
            CoordSet moving(centre.dim());
            for (std::size_t i = 0; i < coords.size(); ++i) {
                centre.set(coords[i], values[i]);
                moving.add(coords[i]);
            }
            ++out.checks;
            if (!unit_ball_inside(centre, moving, cover[static_cast<std::size_t>(member_m)])) {
                out.a_prime = a_m.unite(moving);
                std::vector<int> chi(static_cast<std::size_t>(centre.dim()), 0);
                for (std::size_t i = 0; i < coords.size(); ++i) {
                    chi[static_cast<std::size_t>(coords[i])] = values[i];
                }
                out.chi = std::move(chi);
            }
        });
    return out;
}

}  // namespace

EmulationTrace emulate_inductive_search(const std::vector<GridSet>& cover,
                                        const EmulationConfig& config) {
    if (cover.empty()) throw std::invalid_argument("emulate_inductive_search: empty cover");
    const GridShape shape = cover.front().shape();
    for (const GridSet& member : cover) {
        if (!(member.shape() == shape)) {
            throw std::invalid_argument("emulate_inductive_search: member shape mismatch");
        }
        if (!member.empty() && member.sup_diameter() >= shape.bound()) {
            throw std::invalid_argument(
                "emulate_inductive_search: member has scaled diameter >= 1");
        }
    }
    if (config.min_zeros < 1 || config.min_growth < 1 || config.reserve < 0) {
        throw std::invalid_argument("emulate_inductive_search: bad config");
    }

    EmulationTrace trace;
    trace.config = config;
    trace.grid_bound = shape.bound();

    // First tuple.
    {
        StepSearch search = maximize(cover, [&](const auto& take) {
            return first_step_family(cover, config, take);
        });
        if (!search.fit) {
            trace.status = EmulationStatus::kNoCandidates;
            trace.detail = "no admissible covered (sigma, A) pair at step 1";
            return trace;
        }
        EmulationStep step{search.chosen.sigma, search.chosen.a, search.fit->level,
                           search.fit->member, std::nullopt, std::nullopt, search.candidates,
                           search.checks, search.sampled};
        trace.steps.push_back(std::move(step));
    }

    for (;;) {
        EmulationStep& current = trace.steps.back();
        const int dim = shape.dim();
        const int free = dim - current.a.size();
        if (free < config.min_growth + config.reserve) {
            trace.status = EmulationStatus::kExhaustedCoordinates;
            break;
        }

        const std::uint64_t step_seed = config.seed + trace.steps.size();
        EscapeResult escape = find_escape(cover, config, current.sigma, current.a, current.level,
                                          current.member, step_seed);
        current.candidates_evaluated += escape.candidates;
        current.containment_checks += escape.checks;
        if (!escape.a_prime) {
            trace.status = EmulationStatus::kNoEscape;
            trace.detail = "no unit escape ball left member " + std::to_string(current.member);
            break;
        }
        current.a_prime = escape.a_prime;
        current.chi = escape.chi;

        Index base = current.sigma;
        for (int i = 0; i < dim; ++i) {
            base.set(i, base[i] + (*current.chi)[static_cast<std::size_t>(i)]);
        }

        StepSearch search = maximize(cover, [&](const auto& take) {
            return extension_family(cover, config, base, current.a, *current.a_prime,
                                    current.level, step_seed, take);
        });
        if (!search.fit) {
            trace.status = EmulationStatus::kNoCandidates;
            trace.detail = "no admissible covered extension after step " +
                           std::to_string(trace.steps.size());
            break;
        }
        EmulationStep step{search.chosen.sigma, search.chosen.a, search.fit->level,
                           search.fit->member, std::nullopt, std::nullopt, search.candidates,
                           search.checks, search.sampled};
        trace.steps.push_back(std::move(step));
    }

    if (!trace.steps.empty()) {
        // The limit index: coordinates fixed so far, zeros elsewhere. With
        // the zero-off-A normalization this is the last sigma itself.
        trace.sigma_hat = trace.steps.back().sigma;
        int mult = 0;
        for (const GridSet& member : cover) mult += member.contains(*trace.sigma_hat);
        trace.sigma_hat_multiplicity = mult;

        const int last_level = trace.steps.back().level;
        int i0 = static_cast<int>(trace.steps.size());
        while (i0 > 1 && trace.steps[static_cast<std::size_t>(i0 - 2)].level == last_level) --i0;
        trace.stabilization_index = i0;
    }

    const TraceAudit audit = audit_trace(trace, cover);
    trace.audit_failures = audit.failures;
    if (trace.status == EmulationStatus::kExhaustedCoordinates) {
        if (audit.passed) {
            trace.success = true;
        } else {
            trace.status = EmulationStatus::kAuditFailed;
            trace.detail = "induction property audit failed";
        }
    }
    return trace;
}

TraceAudit audit_trace(const EmulationTrace& trace, const std::vector<GridSet>& cover) {
    TraceAudit audit;
    const auto fail = [&](std::string why) {
        audit.passed = false;
        audit.failures.push_back(std::move(why));
    };
    if (trace.steps.empty()) {
        fail("trace has no steps");
        return audit;
    }
    const EmulationConfig& config = trace.config;
    const int dim = trace.steps.front().sigma.dim();
    const int bound = trace.steps.front().sigma.bound();
    const CoordSet& a_last = trace.steps.back().a;

    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const EmulationStep& step = trace.steps[k];
        const std::string tag = "step " + std::to_string(k + 1);

        // Property 1, clause 1: the recorded ball fits the recorded member.
        if (!hat_ball_inside(step.sigma, step.a, step.level,
                             cover[static_cast<std::size_t>(step.member)])) {
            fail(tag + ": hat ball of radius L_k leaves U_k (property 1)");
        }
        // Property 1, clause 2: local maximality of L_k over the admissible
        // frozen-extension family (the finite stand-in for the co-infinite
        // families the infinitary construction quantifies over).
        if (step.level + 1 <= bound) {
            const std::vector<int> slots = step.a.complement().members();
            const auto admissible = [&](std::uint64_t mask) {
                const int fresh = std::popcount(mask);
                if (fresh < 1) return false;
                return static_cast<int>(slots.size()) - fresh >= config.reserve;
            };
            bool violated = false;
            const int vmax = std::min(bound, step.level);
            for_each_choice(slots, vmax, admissible, config.pair_budget, config.sample_size,
                            config.seed + 1000 + k,
                            [&](const std::vector<int>& coords, const std::vector<int>& values) {
                if (violated) return;
                Index prime = step.sigma;
                CoordSet a_prime = step.a;
                for (std::size_t i = 0; i < coords.size(); ++i) {
                    prime.set(coords[i], values[i]);
                    a_prime.add(coords[i]);
                }
                if (prime.zero_count() < config.min_zeros) return;
                for (const GridSet& member : cover) {
                    if (hat_ball_inside(prime, a_prime, step.level + 1, member)) {
                        violated = true;
                        return;
                    }
                }
            });
            if (violated) {
                fail(tag + ": a larger ball fits a member, L_k not locally maximal (property 1)");
            }
        }
        // Property 2: monotone levels.
        if (k > 0 && step.level > trace.steps[k - 1].level) {
            fail(tag + ": L_k increased (property 2)");
        }
        // Property 3: strict nesting of the A_k.
        if (k > 0) {
            const CoordSet& prev = trace.steps[k - 1].a;
            if (!prev.subset_of(step.a) || prev.mask() == step.a.mask()) {
                fail(tag + ": A_k does not strictly extend A_{k-1} (property 3)");
            }
        }
        // Property 4: growth and a zero on the fresh part.
        {
            const std::uint64_t prev_mask = k > 0 ? trace.steps[k - 1].a.mask() : 0;
            const std::uint64_t fresh = step.a.mask() & ~prev_mask;
            if (std::popcount(fresh) < config.min_growth) {
                fail(tag + ": A_k grew by fewer than min_growth coordinates (property 4)");
            }
            bool zero_on_fresh = false;
            for (int i = 0; i < dim; ++i) {
                if (((fresh >> i) & 1u) && step.sigma[i] == 0) zero_on_fresh = true;
            }
            if (!zero_on_fresh) fail(tag + ": no zero of sigma_k on A_k \\ A_{k-1} (property 4)");
        }
        // Property 5: restriction compatibility with every earlier tuple.
        for (std::size_t i = 0; i < k; ++i) {
            const EmulationStep& earlier = trace.steps[i];
            for (int c = 0; c < dim; ++c) {
                if (earlier.a.contains(c) && step.sigma[c] != earlier.sigma[c]) {
                    fail(tag + ": sigma_k disagrees with sigma_i on A_i (property 5)");
                    break;
                }
            }
        }
        // Property 6: zeros outside the final A_m.
        for (int c = 0; c < dim; ++c) {
            if (!a_last.contains(c) && step.sigma[c] != 0) {
                fail(tag + ": sigma_k nonzero outside the final A_m (property 6)");
                break;
            }
        }
        // Property 7: the recorded escape ball really leaves U_k.
        if (step.a_prime && step.chi) {
            Index centre = step.sigma;
            CoordSet moving(dim);
            for (int c = 0; c < dim; ++c) {
                if (step.a_prime->contains(c) && !step.a.contains(c)) moving.add(c);
                centre.set(c, centre[c] + (*step.chi)[static_cast<std::size_t>(c)]);
            }
            if (unit_ball_inside(centre, moving, cover[static_cast<std::size_t>(step.member)])) {
                fail(tag + ": escape ball stayed inside U_k (property 7)");
            }
        }
    }

    // Final membership: sigma_hat in U_i for all i at or past stabilization.
    if (trace.sigma_hat) {
        for (std::size_t k = static_cast<std::size_t>(trace.stabilization_index) - 1;
             k < trace.steps.size(); ++k) {
            if (!cover[static_cast<std::size_t>(trace.steps[k].member)].contains(*trace.sigma_hat)) {
                fail("sigma_hat misses U_i at step " + std::to_string(k + 1) +
                     " (final membership)");
            }
        }
    } else {
        fail("trace has no limit index");
    }
    return audit;
}

}  // namespace sperner
