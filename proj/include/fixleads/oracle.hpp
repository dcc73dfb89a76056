#pragma once

#include "event_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fixleads
{

// A run of the system that never reaches the target set: either a path to a
// deadlock or a lasso (prefix followed by a repeated cycle).
struct counterexample
{
    enum class shape
    {
        deadlock_path,
        lasso
    };

    struct step
    {
        std::size_t event;
        state_index state;
    };

    struct fairness_entry
    {
        std::size_t event;
        std::size_t cycle_position;
    };

    shape kind = shape::lasso;
    state_index start = 0;
    std::vector< step > prefix;
    std::vector< step > cycle;
    // Weak fairness only: each event enabled at every cycle state, paired with
    // a position in `cycle` where a step labeled by it is taken.
    std::vector< fairness_entry > fairness_witness;
    bool fair = false;

    // Last state of the prefix (or start).
    [[nodiscard]] state_index loop_entry() const { return prefix.empty() ? start : prefix.back().state; }
};

struct oracle_answer
{
    bool holds = true;
    std::optional< counterexample > cex;
};

// Trace semantics under minimal progress: a ↦ b fails iff some state of a
// reaches, inside the complement of b, a deadlock or a cycle.
oracle_answer oracle_mp( const event_system& sys, const state_set& a, const state_set& b );

// Trace semantics under weak fairness: as above, but a cycle only counts if
// some strongly connected region takes, internally, every event enabled
// throughout it.
oracle_answer oracle_wf( const event_system& sys, const state_set& a, const state_set& b );

// Forward reachability by breadth-first search.
state_set oracle_reachable( const event_system& sys, const state_set& from );

// Re-checks every structural obligation of a counterexample against the
// system. Returns an empty string when valid, otherwise the first violation.
std::string validate_counterexample( const event_system& sys, const state_set& a, const state_set& b,
                                     const counterexample& cex );

} // namespace fixleads
