#include "fixleads/variant.hpp"

#include <algorithm>

namespace fixleads
{

variant_fn::variant_fn( const state_space& space, std::string name, std::vector< value > table )
    : _space{ &space }, _name{ std::move( name ) }, _table{ std::move( table ) }
{
    if ( _table.size() != space.size() )
        throw input_error( "variant '" + _name + "' is not defined on every state" );
    for ( std::size_t s = 0; s < _table.size(); ++s )
        if ( _table[ s ] < 0 )
            throw input_error( "variant '" + _name + "' is negative (" + std::to_string( _table[ s ] ) + ") at " +
                               space.format_state( static_cast< state_index >( s ) ) );
    if ( !_table.empty() )
        _max = *std::max_element( _table.begin(), _table.end() );
}

variant_fn variant_fn::from_expr( const state_space& space, std::string name, expr e )
{
    const auto type = resolve( e, space.vars() );
    if ( type.kind != expr_type::tag::integer )
        throw input_error( "variant '" + name + "' must be an integer expression, got " + type.describe() );
    std::vector< value > table( space.size() );
    for ( std::size_t s = 0; s < space.size(); ++s )
        table[ s ] = evaluate( e, space.state_of( static_cast< state_index >( s ) ) );
    variant_fn v( space, std::move( name ), std::move( table ) );
    v._source = to_source( e );
    return v;
}

variant_fn variant_fn::from_table( const state_space& space, std::string name, std::vector< value > table )
{
    return variant_fn( space, std::move( name ), std::move( table ) );
}

state_set variant_fn::level( value n ) const
{
    auto out = state_set::empty( *_space );
    for ( std::size_t s = 0; s < _table.size(); ++s )
        if ( _table[ s ] == n )
            out.insert( static_cast< state_index >( s ) );
    return out;
}

state_set variant_fn::below( value n ) const
{
    auto out = state_set::empty( *_space );
    for ( std::size_t s = 0; s < _table.size(); ++s )
        if ( _table[ s ] < n )
            out.insert( static_cast< state_index >( s ) );
    return out;
}

verdict check_variant_theorem( const set_fn& f, const state_set& p, const variant_fn& v )
{
    verdict out;
    out.rel = relation::variant_theorem;
    for ( value n = 0; n <= v.max(); ++n )
    {
        const auto bad = ( v.level( n ) & p ) - f( v.below( n ) );
        if ( !bad.is_empty() )
        {
            antecedent_failure fail{ "v(n) ∩ p ⊆ f(v'(n))", n, bad.members(), {} };
            for ( auto s : fail.states )
                fail.variant_values.push_back( v.at( s ) );
            out.failure = std::move( fail );
            return out;
        }
    }
    const auto bad = p - f( p );
    if ( !bad.is_empty() )
    {
        out.failure = antecedent_failure{ "p ⊆ f(p)", std::nullopt, bad.members(), {} };
        return out;
    }
    out.holds = true;
    auto fix = lfp( v.space(), f );
    if ( !p.is_subset_of( fix.value ) )
        out.defect = "variant theorem antecedents hold but p is not inside lfp(f)";
    out.offending = ( p - fix.value ).members();
    out.fixpoint = std::move( fix.value );
    out.trace = std::move( fix.trace );
    return out;
}

} // namespace fixleads
