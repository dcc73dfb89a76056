#include "fixleads/transformer.hpp"

namespace fixleads
{

namespace
{

using node = transformer::node;

void same_space( const state_space* a, const state_space* b )
{
    if ( a != b )
        throw space_mismatch();
}

state_set dovetail_pre( const node& n )
{
    const auto u = state_set::universe( *n.space );
    const auto e = state_set::empty( *n.space );
    const auto f_u = apply( n.kids[ 0 ], u );
    const auto g_u = apply( n.kids[ 1 ], u );
    const auto f_0 = apply( n.kids[ 0 ], e );
    const auto g_0 = apply( n.kids[ 1 ], e );
    return ( f_u | g_u ) & ( ~f_0 | g_u ) & ( ~g_0 | f_u );
}

} // namespace

transformer transformer::skip( const state_space& space )
{
    return transformer( std::make_shared< node >( node{ kind::skip, &space, {}, {}, nullptr } ) );
}

transformer transformer::guard( state_set g, transformer body )
{
    same_space( g.space(), &body.space() );
    const auto* sp = g.space();
    return transformer( std::make_shared< node >( node{ kind::guard, sp, std::move( g ), { std::move( body ) }, nullptr } ) );
}

transformer transformer::precond( state_set p, transformer body )
{
    same_space( p.space(), &body.space() );
    const auto* sp = p.space();
    return transformer(
        std::make_shared< node >( node{ kind::precond, sp, std::move( p ), { std::move( body ) }, nullptr } ) );
}

transformer transformer::choice( transformer left, transformer right )
{
    same_space( &left.space(), &right.space() );
    const auto* sp = &left.space();
    return transformer(
        std::make_shared< node >( node{ kind::choice, sp, {}, { std::move( left ), std::move( right ) }, nullptr } ) );
}

transformer transformer::seq( transformer first, transformer second )
{
    same_space( &first.space(), &second.space() );
    const auto* sp = &first.space();
    return transformer(
        std::make_shared< node >( node{ kind::seq, sp, {}, { std::move( first ), std::move( second ) }, nullptr } ) );
}

transformer transformer::dovetail( transformer left, transformer right )
{
    same_space( &left.space(), &right.space() );
    const auto* sp = &left.space();
    return transformer(
        std::make_shared< node >( node{ kind::dovetail, sp, {}, { std::move( left ), std::move( right ) }, nullptr } ) );
}

transformer transformer::rel( std::shared_ptr< const event > e )
{
    const auto* sp = &e->space();
    return transformer( std::make_shared< node >( node{ kind::rel, sp, {}, {}, std::move( e ) } ) );
}

transformer::kind transformer::type() const { return _node->type; }

const state_space& transformer::space() const { return *_node->space; }

state_set apply( const transformer& t, const state_set& r )
{
    const auto& n = t.get();
    same_space( n.space, r.space() );
    switch ( n.type )
    {
    case transformer::kind::skip:
        return r;
    case transformer::kind::guard:
        return ~n.set | apply( n.kids[ 0 ], r );
    case transformer::kind::precond:
        return n.set & apply( n.kids[ 0 ], r );
    case transformer::kind::choice:
        return apply( n.kids[ 0 ], r ) & apply( n.kids[ 1 ], r );
    case transformer::kind::seq:
        return apply( n.kids[ 0 ], apply( n.kids[ 1 ], r ) );
    case transformer::kind::dovetail:
        return liberal( t, r ) & dovetail_pre( n );
    case transformer::kind::rel:
        return n.ev->apply( r );
    }
    return r;
}

state_set liberal( const transformer& t, const state_set& r )
{
    const auto& n = t.get();
    same_space( n.space, r.space() );
    switch ( n.type )
    {
    case transformer::kind::skip:
        return r;
    case transformer::kind::guard:
        return ~n.set | liberal( n.kids[ 0 ], r );
    case transformer::kind::precond:
        if ( r.is_universe() )
            return liberal( n.kids[ 0 ], r );
        return n.set & liberal( n.kids[ 0 ], r );
    case transformer::kind::choice:
    case transformer::kind::dovetail:
        return liberal( n.kids[ 0 ], r ) & liberal( n.kids[ 1 ], r );
    case transformer::kind::seq:
        return liberal( n.kids[ 0 ], liberal( n.kids[ 1 ], r ) );
    case transformer::kind::rel:
        // Event bodies always terminate.
        return n.ev->apply( r );
    }
    return r;
}

state_set pre( const transformer& t )
{
    const auto& n = t.get();
    if ( n.type == transformer::kind::dovetail )
        return dovetail_pre( n );
    return apply( t, state_set::universe( *n.space ) );
}

state_set grd( const transformer& t ) { return ~apply( t, state_set::empty( t.space() ) ); }

} // namespace fixleads
