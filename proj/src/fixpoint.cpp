#include "fixleads/fixpoint.hpp"

#include <string>

namespace fixleads
{

namespace
{

template < typename Sink >
state_set iterate( const state_space& space, const set_fn& f, state_set x, Sink&& sink )
{
    sink( x );
    const auto bound = space.size() + 1;
    for ( std::size_t k = 0; k < bound; ++k )
    {
        auto next = f( x );
        sink( next );
        if ( next == x )
            return x;
        x = std::move( next );
    }
    throw defect( "fixpoint iteration did not stabilize within " + std::to_string( bound ) +
                  " steps; the iterated function is not monotone" );
}

fixpoint_result traced( const state_space& space, const set_fn& f, iterate_trace::direction dir )
{
    fixpoint_result out;
    out.trace.kind = dir;
    auto start = dir == iterate_trace::direction::least ? state_set::empty( space ) : state_set::universe( space );
    out.value = iterate( space, f, std::move( start ),
                         [ & ]( const state_set& s ) { out.trace.steps.push_back( s ); } );
    return out;
}

} // namespace

fixpoint_result lfp( const state_space& space, const set_fn& f )
{
    return traced( space, f, iterate_trace::direction::least );
}

fixpoint_result gfp( const state_space& space, const set_fn& f )
{
    return traced( space, f, iterate_trace::direction::greatest );
}

state_set lfp_value( const state_space& space, const set_fn& f )
{
    return iterate( space, f, state_set::empty( space ), []( const state_set& ) {} );
}

state_set gfp_value( const state_space& space, const set_fn& f )
{
    return iterate( space, f, state_set::universe( space ), []( const state_set& ) {} );
}

} // namespace fixleads
