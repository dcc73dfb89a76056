#include "fixleads/event_system.hpp"

#include "fixleads/fixpoint.hpp"

#include <set>

namespace fixleads
{

event_system::event_system( std::string name, std::shared_ptr< const state_space > space, std::vector< event > events,
                            state_set init )
    : _name{ std::move( name ) }, _space{ std::move( space ) }, _init{ std::move( init ) },
      _guard{ state_set::empty( *_space ) }
{
    if ( events.empty() )
        throw input_error( "system '" + _name + "' declares no events" );
    if ( _init.space() != _space.get() )
        throw space_mismatch();
    std::set< std::string > names;
    for ( auto& e : events )
    {
        if ( &e.space() != _space.get() )
            throw space_mismatch();
        if ( !names.insert( e.name() ).second )
            throw input_error( "duplicate event '" + e.name() + "'" );
        _guard |= e.guard();
        _events.push_back( std::make_shared< const event >( std::move( e ) ) );
    }
}

std::optional< std::size_t > event_system::find_event( const std::string& name ) const
{
    for ( std::size_t i = 0; i < _events.size(); ++i )
        if ( _events[ i ]->name() == name )
            return i;
    return std::nullopt;
}

std::size_t event_system::event_index( const std::string& name ) const
{
    if ( auto i = find_event( name ) )
        return *i;
    throw input_error( "unknown event '" + name + "'" );
}

state_set event_system::apply( const state_set& r ) const
{
    auto out = _events.front()->apply( r );
    for ( std::size_t i = 1; i < _events.size(); ++i )
        out &= _events[ i ]->apply( r );
    return out;
}

transformer event_transformer( const event_system& sys, std::size_t index )
{
    return transformer::rel( sys.events().at( index ) );
}

transformer system_choice( const event_system& sys )
{
    auto t = event_transformer( sys, 0 );
    for ( std::size_t i = 1; i < sys.event_count(); ++i )
        t = transformer::choice( t, event_transformer( sys, i ) );
    return t;
}

state_set forward_image( const event_system& sys, const state_set& r )
{
    auto out = sys.none();
    for ( const auto& e : sys.events() )
        out |= e->image( r );
    return out;
}

state_set strongest_invariant( const event_system& sys )
{
    return lfp_value( sys.space(), [ & ]( const state_set& x ) { return sys.init() | forward_image( sys, x ); } );
}

} // namespace fixleads
