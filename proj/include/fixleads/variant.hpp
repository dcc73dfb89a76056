#pragma once

#include "expr.hpp"
#include "fixpoint.hpp"
#include "verdict.hpp"

#include <string>
#include <vector>

namespace fixleads
{

// A natural-valued function on states, tabulated over the whole space.
class variant_fn
{
public:
    // Throws input_error if some state evaluates to a negative value.
    static variant_fn from_expr( const state_space& space, std::string name, expr e );
    static variant_fn from_table( const state_space& space, std::string name, std::vector< value > table );

    [[nodiscard]] const std::string& name() const { return _name; }
    [[nodiscard]] const state_space& space() const { return *_space; }
    [[nodiscard]] value at( state_index s ) const { return _table[ s ]; }
    [[nodiscard]] const std::vector< value >& table() const { return _table; }
    [[nodiscard]] value max() const { return _max; }
    // Source text of the defining expression, if any.
    [[nodiscard]] const std::string& source() const { return _source; }

    // v(n) = {z | V(z) = n}
    [[nodiscard]] state_set level( value n ) const;
    // v'(n) = {z | V(z) < n}
    [[nodiscard]] state_set below( value n ) const;

private:
    variant_fn( const state_space& space, std::string name, std::vector< value > table );

    const state_space* _space;
    std::string _name;
    std::vector< value > _table;
    value _max = 0;
    std::string _source;
};

// Antecedents: v(n) ∩ p ⊆ f(v'(n)) for every n ≤ max V, and p ⊆ f(p). When
// they hold, p ⊆ lfp(f) is verified directly and a mismatch is reported in
// `defect`.
verdict check_variant_theorem( const set_fn& f, const state_set& p, const variant_fn& v );

} // namespace fixleads
