#pragma once

#include "fixleads/dsl.hpp"
#include "fixleads/event_system.hpp"
#include "fixleads/transformer.hpp"

#include <memory>
#include <random>
#include <string>
#include <vector>

namespace fixleads::testing
{

inline model fixture( const std::string& name )
{
    return load_model_file( std::string( FIXLEADS_FIXTURE_DIR ) + "/" + name + ".evt" );
}

// Owns the space so the system can be passed around by value.
struct owned_system
{
    std::shared_ptr< const state_space > space;
    std::shared_ptr< const event_system > sys;

    const event_system& operator*() const { return *sys; }
    const event_system* operator->() const { return sys.get(); }
};

inline std::shared_ptr< const state_space > line_space( std::size_t n )
{
    return std::make_shared< const state_space >(
        state_space::enumerate( { var_decl::range( "x", 0, static_cast< value >( n ) - 1 ) } ) );
}

inline state_set set_of( const state_space& space, std::initializer_list< state_index > members )
{
    return state_set::of( space, members );
}

// Each state kept with probability `density`.
inline state_set random_set( std::mt19937_64& rng, const state_space& space, double density )
{
    std::bernoulli_distribution keep( density );
    auto out = state_set::empty( space );
    for ( std::size_t s = 0; s < space.size(); ++s )
        if ( keep( rng ) )
            out.insert( static_cast< state_index >( s ) );
    return out;
}

inline state_set random_set( std::mt19937_64& rng, const state_space& space )
{
    std::uniform_real_distribution< double > d( 0.0, 1.0 );
    return random_set( rng, space, d( rng ) );
}

// Events given as adjacency rows over one space.
inline owned_system make_system( std::shared_ptr< const state_space > space,
                                 const std::vector< std::pair< std::string, std::vector< std::vector< state_index > > > >&
                                     events,
                                 const state_set& init )
{
    std::vector< event > evs;
    for ( const auto& [ name, rows ] : events )
        evs.emplace_back( name, *space, rows );
    auto sys = std::make_shared< const event_system >( "random", space, std::move( evs ), init );
    return { std::move( space ), std::move( sys ) };
}

// Up to `max_states` states and `max_events` events; guards and successor
// sets drawn at random, every guarded state gets 1..3 successors.
inline owned_system random_system( std::mt19937_64& rng, std::size_t max_states = 64, std::size_t max_events = 4 )
{
    std::uniform_int_distribution< std::size_t > n_dist( 1, max_states );
    std::uniform_int_distribution< std::size_t > e_dist( 1, max_events );
    std::uniform_real_distribution< double > density( 0.1, 0.9 );
    const auto n = n_dist( rng );
    const auto k = e_dist( rng );
    auto space = line_space( n );
    std::uniform_int_distribution< state_index > pick( 0, static_cast< state_index >( n - 1 ) );
    std::uniform_int_distribution< int > fanout( 1, 3 );
    std::vector< std::pair< std::string, std::vector< std::vector< state_index > > > > events;
    for ( std::size_t e = 0; e < k; ++e )
    {
        std::bernoulli_distribution guarded( density( rng ) );
        std::vector< std::vector< state_index > > rows( n );
        for ( std::size_t s = 0; s < n; ++s )
            if ( guarded( rng ) )
            {
                const int f = fanout( rng );
                for ( int i = 0; i < f; ++i )
                    rows[ s ].push_back( pick( rng ) );
            }
        events.emplace_back( "e" + std::to_string( e ), std::move( rows ) );
    }
    const auto init = random_set( rng, *space, 0.15 );
    return make_system( space, events, init );
}

// Brute-force, per-state evaluation of the event transformer and the
// system transformer, kept independent of the library's bitset code.
inline bool all_successors_in( const event& e, state_index s, const state_set& r )
{
    for ( auto t : e.successors( s ) )
        if ( !r.contains( t ) )
            return false;
    return true;
}

inline state_set naive_event_apply( const event& e, const state_set& r )
{
    auto out = state_set::empty( e.space() );
    for ( state_index s = 0; s < e.space().size(); ++s )
        if ( !e.guard().contains( s ) || all_successors_in( e, s, r ) )
            out.insert( s );
    return out;
}

inline state_set naive_system_apply( const event_system& sys, const state_set& r )
{
    auto out = sys.universe();
    for ( std::size_t e = 0; e < sys.event_count(); ++e )
        for ( state_index s = 0; s < sys.space().size(); ++s )
            if ( sys.at( e ).guard().contains( s ) && !all_successors_in( sys.at( e ), s, r ) )
                out.erase( s );
    return out;
}

inline state_set naive_guard( const event_system& sys )
{
    auto out = sys.none();
    for ( state_index s = 0; s < sys.space().size(); ++s )
        for ( std::size_t e = 0; e < sys.event_count(); ++e )
            if ( !sys.at( e ).successors( s ).empty() )
                out.insert( s );
    return out;
}

// Random closed term over the events of `sys`. Dovetail nodes are only
// generated when `dovetail` is set.
inline transformer random_term( std::mt19937_64& rng, const event_system& sys, int depth, bool dovetail = false )
{
    const auto& space = sys.space();
    std::uniform_int_distribution< int > pick( 0, depth > 0 ? ( dovetail ? 6 : 5 ) : 1 );
    switch ( pick( rng ) )
    {
    case 0: return transformer::skip( space );
    case 1: return event_transformer( sys, rng() % sys.event_count() );
    case 2: return transformer::guard( random_set( rng, space ), random_term( rng, sys, depth - 1, dovetail ) );
    case 3: return transformer::precond( random_set( rng, space ), random_term( rng, sys, depth - 1, dovetail ) );
    case 4:
        return transformer::choice( random_term( rng, sys, depth - 1, dovetail ),
                                    random_term( rng, sys, depth - 1, dovetail ) );
    case 5:
        return transformer::seq( random_term( rng, sys, depth - 1, dovetail ),
                                 random_term( rng, sys, depth - 1, dovetail ) );
    default:
        return transformer::dovetail( random_term( rng, sys, depth - 1, dovetail ),
                                      random_term( rng, sys, depth - 1, dovetail ) );
    }
}

} // namespace fixleads::testing
