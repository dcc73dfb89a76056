#include "fixleads/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace fixleads
{

namespace
{

constexpr auto none = std::numeric_limits< std::size_t >::max();

// Breadth-first exploration of the sub-graph inside `region`, remembering how
// each state was first reached.
struct exploration
{
    std::vector< state_index > order;
    std::vector< std::size_t > parent_state; // none for roots
    std::vector< std::size_t > parent_event;
    state_set visited;
};

exploration explore( const event_system& sys, const state_set& sources, const state_set& region )
{
    const auto n = sys.space().size();
    exploration ex{ {}, std::vector< std::size_t >( n, none ), std::vector< std::size_t >( n, none ), sys.none() };
    std::deque< state_index > queue;
    sources.for_each( [ & ]( state_index s ) {
        if ( !region.contains( s ) || ex.visited.contains( s ) )
            return;
        ex.visited.insert( s );
        queue.push_back( s );
    } );
    while ( !queue.empty() )
    {
        const auto s = queue.front();
        queue.pop_front();
        ex.order.push_back( s );
        for ( std::size_t e = 0; e < sys.event_count(); ++e )
            for ( auto t : sys.at( e ).successors( s ) )
            {
                if ( !region.contains( t ) || ex.visited.contains( t ) )
                    continue;
                ex.visited.insert( t );
                ex.parent_state[ t ] = s;
                ex.parent_event[ t ] = e;
                queue.push_back( t );
            }
    }
    return ex;
}

// Rebuilds the BFS path ending at `target` into (start, steps).
void path_to( const exploration& ex, state_index target, counterexample& cex )
{
    std::vector< counterexample::step > rev;
    auto cur = target;
    while ( ex.parent_state[ cur ] != none )
    {
        rev.push_back( { ex.parent_event[ cur ], cur } );
        cur = static_cast< state_index >( ex.parent_state[ cur ] );
    }
    cex.start = cur;
    cex.prefix.assign( rev.rbegin(), rev.rend() );
}

// Strongly connected components of the sub-graph induced by `region`
// (iterative Tarjan). comp[s] is none outside the region.
std::vector< std::size_t > components( const event_system& sys, const state_set& region, std::size_t& count )
{
    const auto n = sys.space().size();
    std::vector< std::size_t > index( n, none ), low( n, 0 ), comp( n, none );
    std::vector< bool > on_stack( n, false );
    std::vector< state_index > stack;
    std::size_t next_index = 0;
    count = 0;

    struct frame
    {
        state_index s;
        std::size_t event;
        std::size_t succ;
    };

    region.for_each( [ & ]( state_index root ) {
        if ( index[ root ] != none )
            return;
        std::vector< frame > call{ { root, 0, 0 } };
        index[ root ] = low[ root ] = next_index++;
        stack.push_back( root );
        on_stack[ root ] = true;
        while ( !call.empty() )
        {
            auto& f = call.back();
            bool descended = false;
            while ( f.event < sys.event_count() && !descended )
            {
                const auto succ = sys.at( f.event ).successors( f.s );
                if ( f.succ >= succ.size() )
                {
                    ++f.event;
                    f.succ = 0;
                    continue;
                }
                const auto t = succ[ f.succ++ ];
                if ( !region.contains( t ) )
                    continue;
                if ( index[ t ] == none )
                {
                    index[ t ] = low[ t ] = next_index++;
                    stack.push_back( t );
                    on_stack[ t ] = true;
                    call.push_back( { t, 0, 0 } );
                    descended = true;
                }
                else if ( on_stack[ t ] )
                    low[ f.s ] = std::min( low[ f.s ], index[ t ] );
            }
            if ( descended )
                continue;
            const auto s = f.s;
            if ( low[ s ] == index[ s ] )
            {
                state_index t;
                do
                {
                    t = stack.back();
                    stack.pop_back();
                    on_stack[ t ] = false;
                    comp[ t ] = count;
                } while ( t != s );
                ++count;
            }
            call.pop_back();
            if ( !call.empty() )
                low[ call.back().s ] = std::min( low[ call.back().s ], low[ s ] );
        }
    } );
    return comp;
}

bool has_internal_edge( const event_system& sys, const state_set& c, std::size_t e )
{
    bool found = false;
    ( c & sys.at( e ).guard() ).for_each( [ & ]( state_index s ) {
        for ( auto t : sys.at( e ).successors( s ) )
            found = found || c.contains( t );
    } );
    return found;
}

// Shortest path inside `c` from `from` to `to`. When from == to and
// `nonempty` is set, returns a shortest non-trivial cycle.
std::vector< counterexample::step > bfs_path( const event_system& sys, const state_set& c, state_index from,
                                              state_index to, bool nonempty )
{
    if ( from == to && !nonempty )
        return {};
    const auto n = sys.space().size();
    std::vector< std::size_t > pstate( n, none ), pevent( n, none );
    std::vector< bool > seen( n, false );
    std::deque< state_index > queue{ from };
    bool reached = false;
    while ( !queue.empty() && !reached )
    {
        const auto s = queue.front();
        queue.pop_front();
        for ( std::size_t e = 0; e < sys.event_count() && !reached; ++e )
            for ( auto t : sys.at( e ).successors( s ) )
            {
                if ( !c.contains( t ) || seen[ t ] )
                    continue;
                seen[ t ] = true;
                pstate[ t ] = s;
                pevent[ t ] = e;
                if ( t == to )
                {
                    reached = true;
                    break;
                }
                queue.push_back( t );
            }
    }
    if ( !reached )
        throw defect( "no path inside a strongly connected component" );
    std::vector< counterexample::step > rev;
    auto cur = to;
    do
    {
        rev.push_back( { pevent[ cur ], cur } );
        cur = static_cast< state_index >( pstate[ cur ] );
    } while ( cur != from );
    return { rev.rbegin(), rev.rend() };
}

struct search_result
{
    exploration ex;
    std::optional< state_index > deadlock;
};

search_result start_search( const event_system& sys, const state_set& a, const state_set& b )
{
    search_result r{ explore( sys, a - b, ~b ), std::nullopt };
    for ( auto s : r.ex.order )
        if ( !sys.guard().contains( s ) )
        {
            r.deadlock = s;
            break;
        }
    return r;
}

oracle_answer deadlock_answer( const exploration& ex, state_index s )
{
    counterexample cex;
    cex.kind = counterexample::shape::deadlock_path;
    path_to( ex, s, cex );
    return { false, cex };
}

} // namespace

oracle_answer oracle_mp( const event_system& sys, const state_set& a, const state_set& b )
{
    const auto search = start_search( sys, a, b );
    if ( search.deadlock )
        return deadlock_answer( search.ex, *search.deadlock );

    std::size_t count = 0;
    const auto comp = components( sys, search.ex.visited, count );
    std::vector< std::size_t > size( count, 0 );
    for ( auto s : search.ex.order )
        ++size[ comp[ s ] ];

    for ( auto s : search.ex.order )
    {
        auto c = sys.none();
        for ( auto t : search.ex.order )
            if ( comp[ t ] == comp[ s ] )
                c.insert( t );
        bool cyclic = size[ comp[ s ] ] > 1;
        for ( std::size_t e = 0; e < sys.event_count() && !cyclic; ++e )
            for ( auto t : sys.at( e ).successors( s ) )
                cyclic = cyclic || t == s;
        if ( !cyclic )
            continue;
        counterexample cex;
        cex.kind = counterexample::shape::lasso;
        path_to( search.ex, s, cex );
        cex.cycle = bfs_path( sys, c, s, s, true );
        return { false, cex };
    }
    return {};
}

oracle_answer oracle_wf( const event_system& sys, const state_set& a, const state_set& b )
{
    const auto search = start_search( sys, a, b );
    if ( search.deadlock )
        return deadlock_answer( search.ex, *search.deadlock );

    std::size_t count = 0;
    const auto comp = components( sys, search.ex.visited, count );
    std::vector< state_set > members( count, sys.none() );
    std::vector< state_index > entry( count, 0 );
    std::vector< bool > has_entry( count, false );
    for ( auto s : search.ex.order )
    {
        members[ comp[ s ] ].insert( s );
        if ( !has_entry[ comp[ s ] ] )
        {
            has_entry[ comp[ s ] ] = true;
            entry[ comp[ s ] ] = s;
        }
    }

    // Components in order of first discovery.
    std::vector< std::size_t > ordered;
    for ( auto s : search.ex.order )
        if ( entry[ comp[ s ] ] == s )
            ordered.push_back( comp[ s ] );

    for ( auto k : ordered )
    {
        const auto& c = members[ k ];
        bool internal = false;
        for ( std::size_t e = 0; e < sys.event_count() && !internal; ++e )
            internal = has_internal_edge( sys, c, e );
        if ( !internal )
            continue;

        std::vector< std::size_t > required;
        bool fair = true;
        for ( std::size_t e = 0; e < sys.event_count() && fair; ++e )
        {
            if ( !c.is_subset_of( sys.at( e ).guard() ) )
                continue;
            required.push_back( e );
            fair = has_internal_edge( sys, c, e );
        }
        if ( !fair )
            continue;

        counterexample cex;
        cex.kind = counterexample::shape::lasso;
        cex.fair = true;
        const auto c0 = entry[ k ];
        path_to( search.ex, c0, cex );

        auto cur = c0;
        auto append = [ & ]( const std::vector< counterexample::step >& steps ) {
            cex.cycle.insert( cex.cycle.end(), steps.begin(), steps.end() );
            if ( !steps.empty() )
                cur = steps.back().state;
        };
        for ( auto e : required )
        {
            std::optional< std::pair< state_index, state_index > > edge;
            ( c & sys.at( e ).guard() ).for_each( [ & ]( state_index s ) {
                for ( auto t : sys.at( e ).successors( s ) )
                    if ( !edge && c.contains( t ) )
                        edge = std::pair{ s, t };
            } );
            append( bfs_path( sys, c, cur, edge->first, false ) );
            cex.fairness_witness.push_back( { e, cex.cycle.size() } );
            append( { { e, edge->second } } );
        }
        c.for_each( [ & ]( state_index v ) {
            bool visited = v == c0 && !cex.cycle.empty();
            for ( const auto& st : cex.cycle )
                visited = visited || st.state == v;
            if ( !visited )
                append( bfs_path( sys, c, cur, v, false ) );
        } );
        append( bfs_path( sys, c, cur, c0, cex.cycle.empty() ) );
        return { false, cex };
    }
    return {};
}

state_set oracle_reachable( const event_system& sys, const state_set& from )
{
    return explore( sys, from, sys.universe() ).visited;
}

std::string validate_counterexample( const event_system& sys, const state_set& a, const state_set& b,
                                     const counterexample& cex )
{
    const auto& space = sys.space();
    if ( cex.start >= space.size() )
        return "start state out of range";
    if ( !a.contains( cex.start ) )
        return "start state is not in the source set";
    if ( b.contains( cex.start ) )
        return "start state is already in the target set";

    auto walk = [ & ]( state_index from, const std::vector< counterexample::step >& steps,
                       const char* what ) -> std::pair< state_index, std::string > {
        auto cur = from;
        for ( std::size_t i = 0; i < steps.size(); ++i )
        {
            const auto& st = steps[ i ];
            if ( st.event >= sys.event_count() || st.state >= space.size() )
                return { cur, std::string( what ) + " step " + std::to_string( i ) + " is malformed" };
            const auto succ = sys.at( st.event ).successors( cur );
            if ( std::find( succ.begin(), succ.end(), st.state ) == succ.end() )
                return { cur, std::string( what ) + " step " + std::to_string( i ) + " is not a transition of '" +
                                  sys.at( st.event ).name() + "'" };
            if ( b.contains( st.state ) )
                return { cur, std::string( what ) + " step " + std::to_string( i ) + " enters the target set" };
            cur = st.state;
        }
        return { cur, "" };
    };

    const auto [ entry, prefix_error ] = walk( cex.start, cex.prefix, "prefix" );
    if ( !prefix_error.empty() )
        return prefix_error;

    if ( cex.kind == counterexample::shape::deadlock_path )
    {
        if ( !cex.cycle.empty() )
            return "deadlock path carries a cycle";
        if ( sys.guard().contains( entry ) )
            return "final state of deadlock path is not a deadlock";
        return "";
    }

    if ( cex.cycle.empty() )
        return "lasso cycle is empty";
    const auto [ end, cycle_error ] = walk( entry, cex.cycle, "cycle" );
    if ( !cycle_error.empty() )
        return cycle_error;
    if ( end != entry )
        return "lasso cycle does not close";

    if ( !cex.fair )
        return "";
    auto cycle_states = sys.none();
    for ( const auto& st : cex.cycle )
        cycle_states.insert( st.state );
    for ( const auto& w : cex.fairness_witness )
        if ( w.cycle_position >= cex.cycle.size() || cex.cycle[ w.cycle_position ].event != w.event )
            return "fairness witness does not point at a step of its event";
    for ( std::size_t e = 0; e < sys.event_count(); ++e )
    {
        if ( !cycle_states.is_subset_of( sys.at( e ).guard() ) )
            continue;
        const bool witnessed = std::any_of( cex.fairness_witness.begin(), cex.fairness_witness.end(),
                                            [ & ]( const auto& w ) { return w.event == e; } );
        if ( !witnessed )
            return "event '" + sys.at( e ).name() + "' is enabled along the whole cycle but never taken";
    }
    return "";
}

} // namespace fixleads
