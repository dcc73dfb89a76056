#include "fixleads/event.hpp"

#include <algorithm>

namespace fixleads
{

event::event( std::string name, const state_space& space, const state_set& guard,
              const std::vector< std::vector< state_index > >& successors )
    : _name{ std::move( name ) }, _space{ &space }, _guard{ guard }
{
    if ( guard.space() != &space )
        throw space_mismatch();
    build( successors );
    for ( state_index s = 0; s < space.size(); ++s )
    {
        const bool has_image = _offsets[ s + 1 ] > _offsets[ s ];
        if ( guard.contains( s ) && !has_image )
            throw input_error( "event '" + _name + "' is miraculous at " + space.format_state( s ) +
                               ": guard holds but no successor exists" );
        if ( !guard.contains( s ) && has_image )
            throw input_error( "event '" + _name + "' has successors outside its guard at " +
                               space.format_state( s ) );
    }
}

event::event( std::string name, const state_space& space, const std::vector< std::vector< state_index > >& successors )
    : _name{ std::move( name ) }, _space{ &space }, _guard{ state_set::empty( space ) }
{
    build( successors );
    for ( state_index s = 0; s < space.size(); ++s )
        if ( _offsets[ s + 1 ] > _offsets[ s ] )
            _guard.insert( s );
}

void event::build( const std::vector< std::vector< state_index > >& successors )
{
    const auto n = _space->size();
    if ( successors.size() != n )
        throw input_error( "event '" + _name + "' relation does not cover the state space" );
    _offsets.assign( n + 1, 0 );
    for ( std::size_t s = 0; s < n; ++s )
    {
        auto row = successors[ s ];
        std::sort( row.begin(), row.end() );
        row.erase( std::unique( row.begin(), row.end() ), row.end() );
        for ( auto t : row )
        {
            if ( t >= n )
                throw input_error( "event '" + _name + "' has a successor outside the state space" );
            _targets.push_back( t );
        }
        _offsets[ s + 1 ] = _targets.size();
    }
}

state_set event::apply( const state_set& r ) const
{
    if ( r.space() != _space )
        throw space_mismatch();
    auto out = ~_guard;
    _guard.for_each( [ & ]( state_index s ) {
        const auto succ = successors( s );
        if ( std::all_of( succ.begin(), succ.end(), [ & ]( state_index t ) { return r.contains( t ); } ) )
            out.insert( s );
    } );
    return out;
}

state_set event::image( const state_set& r ) const
{
    if ( r.space() != _space )
        throw space_mismatch();
    auto out = state_set::empty( *_space );
    ( r & _guard ).for_each( [ & ]( state_index s ) {
        for ( auto t : successors( s ) )
            out.insert( t );
    } );
    return out;
}

} // namespace fixleads
