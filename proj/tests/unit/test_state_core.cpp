#include "support.hpp"

#include "fixleads/expr.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace fixleads;
using namespace fixleads::testing;

TEST_CASE( "single range variable enumerates in order" )
{
    const auto space = state_space::enumerate( { var_decl::range( "x", 0, 2 ) } );
    CHECK( space.size() == 3 );
    for ( state_index i = 0; i < 3; ++i )
        CHECK( space.value_of( i, 0 ) == i );
}

TEST_CASE( "mixed radix codec puts the first variable lowest" )
{
    const auto space = state_space::enumerate( { var_decl::range( "x", 0, 1 ), var_decl::boolean( "y" ) } );
    CHECK( space.size() == 4 );
    for ( value x = 0; x <= 1; ++x )
        for ( value y = 0; y <= 1; ++y )
        {
            const std::vector< value > a{ x, y };
            const auto i = space.index_of( a );
            REQUIRE( i );
            CHECK( *i == x + 2 * y );
        }
}

TEST_CASE( "invariant restriction re-packs densely" )
{
    auto inv = expr::binary( expr_op::ne, expr::ident( "x" ), expr::integer( 1 ) );
    const std::vector< var_decl > vars{ var_decl::range( "x", 0, 2 ) };
    resolve_predicate( inv, vars );
    const auto space =
        state_space::enumerate( vars, [ & ]( std::span< const value > s ) { return evaluate( inv, s ) != 0; } );
    CHECK( space.size() == 2 );
    CHECK( space.value_of( 0, 0 ) == 0 );
    CHECK( space.value_of( 1, 0 ) == 2 );
    const std::vector< value > one{ 1 };
    CHECK_FALSE( space.index_of( one ) );
    CHECK( space.restricted() );
}

TEST_CASE( "codec round-trips on a three-variable space" )
{
    const auto space = state_space::enumerate(
        { var_decl::range( "a", -2, 3 ), var_decl::boolean( "b" ), var_decl::enumeration( "c", { "p", "q", "r" } ) } );
    CHECK( space.size() == 36 );
    for ( state_index i = 0; i < space.size(); ++i )
        CHECK( space.index_of( space.state_of( i ) ) == i );
}

TEST_CASE( "enumeration errors" )
{
    CHECK_THROWS_AS( state_space::enumerate( { var_decl::range( "x", 0, 99 ), var_decl::range( "y", 0, 99 ) }, {}, 1000 ),
                     input_error );
    CHECK_THROWS_AS( state_space::enumerate( { var_decl::range( "x", 0, 2 ) },
                                             []( std::span< const value > ) { return false; } ),
                     input_error );
    CHECK_THROWS_AS( var_decl::range( "x", 3, 1 ), input_error );
}

TEST_CASE( "state cap can be lowered through the environment" )
{
    ::setenv( "FIXLEADS_MAX_STATES", "8", 1 );
    CHECK( configured_state_cap() == 8 );
    CHECK_THROWS_AS( state_space::enumerate( { var_decl::range( "x", 0, 9 ) } ), input_error );
    ::unsetenv( "FIXLEADS_MAX_STATES" );
    CHECK( configured_state_cap() == default_state_cap );
}

TEST_CASE( "predicate evaluation" )
{
    const auto space = state_space::enumerate( { var_decl::range( "x", 0, 2 ) } );
    CHECK( eval_pred( space, expr::binary( expr_op::eq, expr::ident( "x" ), expr::integer( 0 ) ) ) ==
           set_of( space, { 0 } ) );
    CHECK( eval_pred( space, expr::boolean( true ) ).is_universe() );
    CHECK( eval_pred( space, expr::boolean( false ) ).is_empty() );
    auto sum = expr::binary( expr_op::add, expr::ident( "x" ), expr::integer( 1 ) );
    CHECK( eval_pred( space, expr::binary( expr_op::eq, sum, expr::integer( 2 ) ) ) == set_of( space, { 1 } ) );
}

TEST_CASE( "predicate errors" )
{
    const auto space = state_space::enumerate( { var_decl::range( "x", 0, 2 ), var_decl::boolean( "b" ) } );
    CHECK_THROWS_WITH_AS( eval_pred( space, expr::binary( expr_op::eq, expr::ident( "y" ), expr::integer( 0 ) ) ),
                          doctest::Contains( "unknown identifier 'y'" ), input_error );
    CHECK_THROWS_WITH_AS( eval_pred( space, expr::binary( expr_op::eq, expr::ident( "b" ), expr::integer( 0 ) ) ),
                          doctest::Contains( "type mismatch" ), input_error );
    CHECK_THROWS_AS( eval_pred( space, expr::ident( "x" ) ), input_error );
}

TEST_CASE( "set algebra basics" )
{
    const auto space = state_space::enumerate( { var_decl::range( "x", 0, 2 ) } );
    CHECK( ~set_of( space, { 0 } ) == set_of( space, { 1, 2 } ) );
    CHECK( is_subset( state_set::empty( space ), set_of( space, { 1 } ) ) );
    CHECK( set_inter( set_of( space, { 0, 1 } ), set_of( space, { 1, 2 } ) ) == set_of( space, { 1 } ) );
    CHECK( set_diff( set_of( space, { 0, 1 } ), set_of( space, { 1 } ) ) == set_of( space, { 0 } ) );
    CHECK( set_union( set_of( space, { 0 } ), set_of( space, { 2 } ) ).count() == 2 );
    const auto other = state_space::enumerate( { var_decl::range( "x", 0, 2 ) } );
    CHECK_THROWS_AS( (void)( set_of( space, { 0 } ) | set_of( other, { 0 } ) ), space_mismatch );
}

TEST_CASE( "De Morgan and involution on random sets across word boundaries" )
{
    std::mt19937_64 rng( 7 );
    for ( std::size_t n : { 1, 63, 64, 65, 130 } )
    {
        const auto space = line_space( n );
        for ( int trial = 0; trial < 50; ++trial )
        {
            const auto r = random_set( rng, *space );
            const auto s = random_set( rng, *space );
            CHECK( ~~r == r );
            CHECK( ~( r | s ) == ( ~r & ~s ) );
            CHECK( ~( r & s ) == ( ~r | ~s ) );
            CHECK( ( r | s ) == ( s | r ) );
            CHECK( ( r & r ) == r );
            CHECK( ( ~r ).count() == n - r.count() );
            CHECK( ( r | ~r ).is_universe() );
        }
    }
}

namespace
{

expr random_pred( std::mt19937_64& rng, int depth );

expr random_int( std::mt19937_64& rng, int depth )
{
    std::uniform_int_distribution< int > pick( 0, depth > 0 ? 4 : 1 );
    std::uniform_int_distribution< int > lit( -3, 5 );
    switch ( pick( rng ) )
    {
    case 0: return expr::integer( lit( rng ) );
    case 1: return expr::ident( rng() % 2 ? "x" : "y" );
    case 2: return expr::binary( expr_op::add, random_int( rng, depth - 1 ), random_int( rng, depth - 1 ) );
    case 3: return expr::binary( expr_op::sub, random_int( rng, depth - 1 ), random_int( rng, depth - 1 ) );
    default: return expr::binary( expr_op::mul, random_int( rng, depth - 1 ), random_int( rng, depth - 1 ) );
    }
}

expr random_pred( std::mt19937_64& rng, int depth )
{
    static constexpr expr_op cmp[] = { expr_op::eq, expr_op::ne, expr_op::lt, expr_op::le, expr_op::gt, expr_op::ge };
    std::uniform_int_distribution< int > pick( 0, depth > 0 ? 5 : 1 );
    switch ( pick( rng ) )
    {
    case 0: return expr::binary( cmp[ rng() % 6 ], random_int( rng, 1 ), random_int( rng, 1 ) );
    case 1: return expr::ident( "b" );
    case 2: return expr::binary( expr_op::logical_and, random_pred( rng, depth - 1 ), random_pred( rng, depth - 1 ) );
    case 3: return expr::binary( expr_op::logical_or, random_pred( rng, depth - 1 ), random_pred( rng, depth - 1 ) );
    case 4: return expr::binary( expr_op::implies, random_pred( rng, depth - 1 ), random_pred( rng, depth - 1 ) );
    default: return expr::unary( expr_op::logical_not, random_pred( rng, depth - 1 ) );
    }
}

} // namespace

TEST_CASE( "negated predicate denotes the complement" )
{
    const auto space =
        state_space::enumerate( { var_decl::range( "x", 0, 3 ), var_decl::range( "y", -1, 2 ), var_decl::boolean( "b" ) } );
    std::mt19937_64 rng( 11 );
    for ( int trial = 0; trial < 200; ++trial )
    {
        const auto p = random_pred( rng, 3 );
        CHECK( eval_pred( space, expr::unary( expr_op::logical_not, p ) ) == ~eval_pred( space, p ) );
    }
}
