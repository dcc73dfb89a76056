#include "fixleads/state_space.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <set>
#include <string>

namespace fixleads
{

var_decl var_decl::range( std::string name, value lo, value hi )
{
    if ( hi < lo )
        throw input_error( "empty range for variable '" + name + "'" );
    if ( hi - lo >= static_cast< value >( default_state_cap ) * 16 )
        throw input_error( "range of variable '" + name + "' is too large" );
    var_decl d;
    d.name = std::move( name );
    d.kind = domain_kind::integer_range;
    for ( value v = lo; v <= hi; ++v )
        d.values.push_back( v );
    return d;
}

var_decl var_decl::boolean( std::string name )
{
    var_decl d;
    d.name = std::move( name );
    d.kind = domain_kind::boolean;
    d.values = { 0, 1 };
    return d;
}

var_decl var_decl::enumeration( std::string name, std::vector< std::string > labels )
{
    if ( labels.empty() )
        throw input_error( "empty enumeration for variable '" + name + "'" );
    std::set< std::string > seen;
    for ( const auto& l : labels )
        if ( !seen.insert( l ).second )
            throw input_error( "duplicate literal '" + l + "' in domain of '" + name + "'" );
    var_decl d;
    d.name = std::move( name );
    d.kind = domain_kind::enumeration;
    for ( std::size_t i = 0; i < labels.size(); ++i )
        d.values.push_back( static_cast< value >( i ) );
    d.labels = std::move( labels );
    return d;
}

std::optional< std::size_t > var_decl::position( value v ) const
{
    if ( values.empty() )
        return std::nullopt;
    // Every domain kind is a contiguous run of integers.
    if ( v < values.front() || v > values.back() )
        return std::nullopt;
    return static_cast< std::size_t >( v - values.front() );
}

std::string var_decl::format( value v ) const
{
    switch ( kind )
    {
    case domain_kind::boolean:
        return v != 0 ? "true" : "false";
    case domain_kind::enumeration:
        if ( auto p = position( v ) )
            return labels[ *p ];
        return "?";
    case domain_kind::integer_range:
        break;
    }
    return std::to_string( v );
}

std::size_t configured_state_cap()
{
    if ( const char* env = std::getenv( "FIXLEADS_MAX_STATES" ) )
    {
        char* end = nullptr;
        const auto parsed = std::strtoull( env, &end, 10 );
        if ( end != env && *end == '\0' && parsed > 0 )
            return static_cast< std::size_t >( parsed );
    }
    return default_state_cap;
}

state_space state_space::enumerate( std::vector< var_decl > vars, const filter_fn& invariant,
                                    std::size_t cap )
{
    std::set< std::string > names;
    for ( const auto& v : vars )
    {
        if ( v.values.empty() )
            throw input_error( "variable '" + v.name + "' has an empty domain" );
        if ( !names.insert( v.name ).second )
            throw input_error( "duplicate variable '" + v.name + "'" );
    }

    state_space s;
    s._vars = std::move( vars );
    s._radix_weight.reserve( s._vars.size() );
    std::uint64_t raw = 1;
    for ( const auto& v : s._vars )
    {
        s._radix_weight.push_back( raw );
        if ( v.size() > cap / raw )
            throw input_error( "state space exceeds the cap of " + std::to_string( cap ) + " states" );
        raw *= v.size();
    }
    s._raw_size = raw;

    if ( !invariant )
    {
        s._size = static_cast< std::size_t >( raw );
        return s;
    }

    assignment a( s._vars.size() );
    for ( std::uint64_t r = 0; r < raw; ++r )
    {
        auto rest = r;
        for ( std::size_t k = 0; k < s._vars.size(); ++k )
        {
            a[ k ] = s._vars[ k ].values[ rest % s._vars[ k ].size() ];
            rest /= s._vars[ k ].size();
        }
        if ( invariant( a ) )
            s._raw_of_dense.push_back( r );
    }
    if ( s._raw_of_dense.empty() )
        throw input_error( "the invariant admits no state" );
    s._size = s._raw_of_dense.size();
    return s;
}

std::optional< std::size_t > state_space::var_position( const std::string& name ) const
{
    for ( std::size_t k = 0; k < _vars.size(); ++k )
        if ( _vars[ k ].name == name )
            return k;
    return std::nullopt;
}

state_space::assignment state_space::state_of( state_index i ) const
{
    assignment a( _vars.size() );
    auto rest = raw_of( i );
    for ( std::size_t k = 0; k < _vars.size(); ++k )
    {
        a[ k ] = _vars[ k ].values[ rest % _vars[ k ].size() ];
        rest /= _vars[ k ].size();
    }
    return a;
}

value state_space::value_of( state_index i, std::size_t var ) const
{
    const auto digit = ( raw_of( i ) / _radix_weight[ var ] ) % _vars[ var ].size();
    return _vars[ var ].values[ digit ];
}

std::optional< state_index > state_space::index_of( std::span< const value > a ) const
{
    if ( a.size() != _vars.size() )
        return std::nullopt;
    std::uint64_t raw = 0;
    for ( std::size_t k = 0; k < _vars.size(); ++k )
    {
        const auto p = _vars[ k ].position( a[ k ] );
        if ( !p )
            return std::nullopt;
        raw += *p * _radix_weight[ k ];
    }
    if ( _raw_of_dense.empty() )
        return static_cast< state_index >( raw );
    const auto it = std::lower_bound( _raw_of_dense.begin(), _raw_of_dense.end(), raw );
    if ( it == _raw_of_dense.end() || *it != raw )
        return std::nullopt;
    return static_cast< state_index >( it - _raw_of_dense.begin() );
}

std::string state_space::format_state( state_index i ) const
{
    std::string out;
    for ( std::size_t k = 0; k < _vars.size(); ++k )
    {
        if ( k > 0 )
            out += " and ";
        out += _vars[ k ].name + "=" + _vars[ k ].format( value_of( i, k ) );
    }
    return out;
}

// state_set

state_set::state_set( const state_space& space, bool full )
    : _space{ &space }, _size{ space.size() },
      _words( ( space.size() + 63 ) / 64, full ? ~std::uint64_t{ 0 } : 0 )
{
    if ( full )
        trim();
}

void state_set::trim()
{
    if ( _size % 64 != 0 && !_words.empty() )
        _words.back() &= ( std::uint64_t{ 1 } << ( _size % 64 ) ) - 1;
}

state_set state_set::empty( const state_space& space ) { return state_set( space, false ); }

state_set state_set::universe( const state_space& space ) { return state_set( space, true ); }

state_set state_set::of( const state_space& space, std::initializer_list< state_index > members )
{
    return of( space, std::span< const state_index >( members.begin(), members.size() ) );
}

state_set state_set::of( const state_space& space, std::span< const state_index > members )
{
    auto s = empty( space );
    for ( auto m : members )
    {
        if ( m >= space.size() )
            throw input_error( "state index " + std::to_string( m ) + " outside the state space" );
        s.insert( m );
    }
    return s;
}

void state_set::check_same( const state_set& other ) const
{
    if ( _space != other._space )
        throw space_mismatch();
}

std::size_t state_set::count() const
{
    std::size_t n = 0;
    for ( auto w : _words )
        n += static_cast< std::size_t >( std::popcount( w ) );
    return n;
}

bool state_set::is_empty() const
{
    return std::all_of( _words.begin(), _words.end(), []( auto w ) { return w == 0; } );
}

bool state_set::is_universe() const { return count() == _size; }

bool state_set::is_subset_of( const state_set& other ) const
{
    check_same( other );
    for ( std::size_t w = 0; w < _words.size(); ++w )
        if ( ( _words[ w ] & ~other._words[ w ] ) != 0 )
            return false;
    return true;
}

state_set state_set::operator|( const state_set& other ) const
{
    auto r = *this;
    r |= other;
    return r;
}

state_set state_set::operator&( const state_set& other ) const
{
    auto r = *this;
    r &= other;
    return r;
}

state_set state_set::operator-( const state_set& other ) const
{
    check_same( other );
    auto r = *this;
    for ( std::size_t w = 0; w < _words.size(); ++w )
        r._words[ w ] &= ~other._words[ w ];
    return r;
}

state_set state_set::operator~() const
{
    auto r = *this;
    for ( auto& w : r._words )
        w = ~w;
    r.trim();
    return r;
}

state_set& state_set::operator|=( const state_set& other )
{
    check_same( other );
    for ( std::size_t w = 0; w < _words.size(); ++w )
        _words[ w ] |= other._words[ w ];
    return *this;
}

state_set& state_set::operator&=( const state_set& other )
{
    check_same( other );
    for ( std::size_t w = 0; w < _words.size(); ++w )
        _words[ w ] &= other._words[ w ];
    return *this;
}

bool state_set::operator==( const state_set& other ) const
{
    check_same( other );
    return _words == other._words;
}

std::vector< state_index > state_set::members() const
{
    std::vector< state_index > out;
    out.reserve( count() );
    for_each( [ & ]( state_index i ) { out.push_back( i ); } );
    return out;
}

} // namespace fixleads
