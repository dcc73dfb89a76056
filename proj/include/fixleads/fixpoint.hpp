#pragma once

#include "state_space.hpp"

#include <functional>
#include <vector>

namespace fixleads
{

// The Kleene chain f^0, f^1, ... of a fixpoint computation. The last two
// entries are equal, witnessing stabilization.
struct iterate_trace
{
    enum class direction
    {
        least,
        greatest
    };

    direction kind = direction::least;
    std::vector< state_set > steps;

    // Iterate f^k; indices past the end saturate at the fixpoint.
    [[nodiscard]] const state_set& at( std::size_t k ) const
    {
        return k < steps.size() ? steps[ k ] : steps.back();
    }
};

struct fixpoint_result
{
    state_set value;
    iterate_trace trace;
};

using set_fn = std::function< state_set( const state_set& ) >;

// Iterate from the empty set (lfp) or the universe (gfp) until two consecutive
// iterates coincide. On a finite universe a monotone f stabilizes within
// |u|+1 applications; exceeding that bound throws `defect`.
fixpoint_result lfp( const state_space& space, const set_fn& f );
fixpoint_result gfp( const state_space& space, const set_fn& f );

// Same iteration without keeping the trace.
state_set lfp_value( const state_space& space, const set_fn& f );
state_set gfp_value( const state_space& space, const set_fn& f );

} // namespace fixleads
