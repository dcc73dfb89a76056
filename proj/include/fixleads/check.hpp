#pragma once

#include "dsl.hpp"
#include "json_io.hpp"
#include "oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fixleads
{

struct check_options
{
    // Overrides every property's `under` clause.
    std::optional< assumption > assume;
    // Forces strongest-invariant semantics on every property.
    bool si = false;
    // Cross-check every leads-to verdict against the trace oracle.
    bool oracle = false;
};

struct property_report
{
    std::string name;
    property_ast::form kind = property_ast::form::leadsto;
    assumption under = assumption::mp;
    bool si = false;
    verdict result;

    // Trace oracle on the leads-to part (always run for failing leads-to
    // properties, to produce a counterexample).
    std::optional< oracle_answer > oracle;
    // Fixpoint verdict the oracle is compared against.
    bool fixpoint_holds = false;
    bool agreement = true;
    // Non-empty if the oracle's counterexample failed re-validation.
    std::string counterexample_error;

    double millis = 0;

    [[nodiscard]] bool is_defect() const
    {
        return !result.defect.empty() || !agreement || !counterexample_error.empty();
    }
};

struct report
{
    std::string system;
    std::vector< property_report > properties;

    // 0 all hold, 1 some fail, 3 some defect or disagreement.
    [[nodiscard]] int exit_code() const;
};

property_report check_property( const model& m, const property& p, const check_options& opts );
report check_model( const model& m, const check_options& opts );

// Fixpoint verdict and oracle agreement for a leads-to property only (rules
// are replaced by their consequent). Used by `explain`.
verdict leadsto_verdict( const event_system& sys, const state_set& a, const state_set& b, assumption under,
                         bool si );

json report_to_json( const model& m, const report& r );

// Human-readable report. Sets with at most 16 states are printed as
// predicates over the variables, larger ones as a count.
std::string format_report( const model& m, const report& r );
std::string format_set( const state_set& s );

} // namespace fixleads
