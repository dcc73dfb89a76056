#pragma once

#include "event_system.hpp"
#include "fixpoint.hpp"
#include "verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fixleads
{

// A derivation of p ↦ q from basic ensures steps (SBR), transitivity (STR)
// and disjunction (SDR).
struct certificate
{
    enum class rule
    {
        sbr,
        str,
        sdr
    };

    rule kind = rule::sbr;
    // SBR: premise and conclusion. SDR: q is the common conclusion, p unused.
    state_set p;
    state_set q;
    assumption assume = assumption::mp;
    std::optional< std::size_t > helpful;
    // STR: {left, right}. SDR: the parts.
    std::vector< certificate > kids;

    static certificate sbr( assumption a, state_set p, state_set q, std::optional< std::size_t > helpful = {} );
    static certificate str( certificate left, certificate right );
    static certificate sdr( std::vector< certificate > parts, state_set q );

    [[nodiscard]] std::size_t leaf_count() const;
};

// Builds a chain certificate for a ↦ b from the lfp trace of F_m(b) (or of
// F_m(si ∩ b) when `si` is set). Throws input_error when a is not inside the
// fixpoint.
certificate derive_certificate_mp( const event_system& sys, const state_set& a, const state_set& b,
                                   const iterate_trace& trace, bool si = false );

// Same for F_w(b); every layer is an SDR over per-event fair-loop leaves.
certificate derive_certificate_wf( const event_system& sys, const state_set& a, const state_set& b,
                                   const iterate_trace& trace, bool si = false );

// Definitional ensures condition of a single SBR node.
bool leaf_holds( const event_system& sys, const certificate& leaf, bool si = false );

struct check_result
{
    bool ok = false;
    std::string message;
};

// Validates every node and that the root concludes a' ↦ b with a ⊆ a'.
// Failure messages name the offending node by path (e.g. "root.right.parts[1]").
check_result check_certificate( const event_system& sys, const certificate& cert, const state_set& a,
                                const state_set& b, assumption assume, bool si = false );

} // namespace fixleads
