#pragma once

#include "fixpoint.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fixleads
{

enum class assumption
{
    mp,
    wf
};

std::string to_string( assumption a );

enum class relation
{
    termination_mp,  // T_m
    termination_wf,  // T_w
    ensures_mp,      // E_m
    ensures_wf,      // E_w
    rule_variant_mp, // variant-based sufficient condition under MP
    rule_wf_to_mp,   // WF leads-to plus decreasing variant gives MP leads-to
    variant_theorem
};

std::string to_string( relation r );
std::optional< relation > relation_from_string( const std::string& s );

// Which premise of a rule failed, at which variant level, and where.
struct antecedent_failure
{
    std::string which;
    std::optional< value > level;
    std::vector< state_index > states;
    // Variant value of each offending state (empty when no variant applies).
    std::vector< value > variant_values;
};

struct verdict
{
    relation rel = relation::termination_mp;
    bool holds = false;
    bool si = false;

    std::optional< state_set > fixpoint;
    std::optional< iterate_trace > trace;

    // States of the claimed source outside what was established.
    std::vector< state_index > offending;
    std::optional< antecedent_failure > failure;

    // Non-empty when a soundness self-check fired.
    std::string defect;

    // Helpful event that discharged an ensures under weak fairness.
    std::optional< std::size_t > helpful;

    // Weak fairness: per event, Y(fix, G, fix) at the final iterate.
    std::vector< std::pair< std::size_t, state_set > > contributions;
};

} // namespace fixleads
