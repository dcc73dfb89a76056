#pragma once

#include "event.hpp"
#include "transformer.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fixleads
{

// Named events over one state space plus an initial-state set. The system
// transformer S is the bounded choice of the events in declaration order.
class event_system
{
public:
    event_system( std::string name, std::shared_ptr< const state_space > space, std::vector< event > events,
                  state_set init );

    [[nodiscard]] const std::string& name() const { return _name; }
    [[nodiscard]] const state_space& space() const { return *_space; }
    [[nodiscard]] const std::shared_ptr< const state_space >& space_ptr() const { return _space; }
    [[nodiscard]] const std::vector< std::shared_ptr< const event > >& events() const { return _events; }
    [[nodiscard]] const event& at( std::size_t i ) const { return *_events[ i ]; }
    [[nodiscard]] std::size_t event_count() const { return _events.size(); }
    [[nodiscard]] const state_set& init() const { return _init; }

    [[nodiscard]] std::optional< std::size_t > find_event( const std::string& name ) const;
    // Like find_event but throws input_error for unknown names.
    [[nodiscard]] std::size_t event_index( const std::string& name ) const;

    // S(r) = ⋂ᵢ Eᵢ(r).
    [[nodiscard]] state_set apply( const state_set& r ) const;
    // grd(S) = ⋃ᵢ grd(Eᵢ).
    [[nodiscard]] const state_set& guard() const { return _guard; }

    [[nodiscard]] state_set universe() const { return state_set::universe( *_space ); }
    [[nodiscard]] state_set none() const { return state_set::empty( *_space ); }

private:
    std::string _name;
    std::shared_ptr< const state_space > _space;
    std::vector< std::shared_ptr< const event > > _events;
    state_set _init;
    state_set _guard;
};

transformer event_transformer( const event_system& sys, std::size_t index );

// Choice-fold of the event transformers in declaration order.
transformer system_choice( const event_system& sys );

state_set forward_image( const event_system& sys, const state_set& r );

// Least set containing init and closed under forward_image.
state_set strongest_invariant( const event_system& sys );

} // namespace fixleads
