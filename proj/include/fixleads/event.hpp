#pragma once

#include "state_space.hpp"

#include <span>
#include <string>
#include <vector>

namespace fixleads
{

// A guarded, non-miraculous event: a successor relation defined exactly on
// its guard, with a non-empty image at every guarded state. Successors are
// stored in compressed rows, sorted and de-duplicated.
class event
{
public:
    // successors[s] lists the successors of state s; it must be empty exactly
    // outside the guard.
    event( std::string name, const state_space& space, const state_set& guard,
           const std::vector< std::vector< state_index > >& successors );

    // Guard derived from the rows: every state with a non-empty image.
    event( std::string name, const state_space& space, const std::vector< std::vector< state_index > >& successors );

    [[nodiscard]] const std::string& name() const { return _name; }
    [[nodiscard]] const state_space& space() const { return *_space; }
    [[nodiscard]] const state_set& guard() const { return _guard; }

    [[nodiscard]] std::span< const state_index > successors( state_index s ) const
    {
        return { _targets.data() + _offsets[ s ], _targets.data() + _offsets[ s + 1 ] };
    }

    // Demonic set transformer: complement(guard) ∪ {s ∈ guard | succ(s) ⊆ r}.
    [[nodiscard]] state_set apply( const state_set& r ) const;

    // Union of successor images of r ∩ guard.
    [[nodiscard]] state_set image( const state_set& r ) const;

    [[nodiscard]] std::size_t edge_count() const { return _targets.size(); }

private:
    void build( const std::vector< std::vector< state_index > >& successors );

    std::string _name;
    const state_space* _space;
    state_set _guard;
    std::vector< std::size_t > _offsets;
    std::vector< state_index > _targets;
};

} // namespace fixleads
