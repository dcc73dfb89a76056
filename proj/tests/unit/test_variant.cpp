#include "support.hpp"

#include "fixleads/mp_engine.hpp"
#include "fixleads/variant.hpp"

#include <doctest.h>

using namespace fixleads;
using namespace fixleads::testing;

TEST_CASE( "level sets of the MONO3 variant" )
{
    const auto mono = fixture( "mono3" );
    const auto& sp = *mono.space;
    const auto& v = mono.variants.at( 0 );
    CHECK( v.name() == "V" );
    CHECK( v.max() == 2 );
    CHECK( v.level( 0 ) == set_of( sp, { 2 } ) );
    CHECK( v.level( 1 ) == set_of( sp, { 1 } ) );
    CHECK( v.level( 2 ) == set_of( sp, { 0 } ) );
    CHECK( v.level( 3 ).is_empty() );
    CHECK( v.below( 0 ).is_empty() );
    CHECK( v.below( 2 ) == set_of( sp, { 1, 2 } ) );
    CHECK( v.below( 3 ).is_universe() );
}

TEST_CASE( "level-set identities on random tables" )
{
    std::mt19937_64 rng( 5 );
    for ( int trial = 0; trial < 50; ++trial )
    {
        const auto sp = line_space( 1 + rng() % 40 );
        std::vector< value > table( sp->size() );
        for ( auto& t : table )
            t = static_cast< value >( rng() % 6 );
        const auto v = variant_fn::from_table( *sp, "R", table );
        auto all = state_set::empty( *sp );
        auto below = state_set::empty( *sp );
        for ( value n = 0; n <= v.max(); ++n )
        {
            CHECK( v.below( n ) == below );
            CHECK( ( v.level( n ) & below ).is_empty() );
            below |= v.level( n );
            all |= v.level( n );
        }
        CHECK( all.is_universe() );
        CHECK( v.below( 0 ).is_empty() );
    }
}

TEST_CASE( "variant expressions must be natural numbers" )
{
    const auto sp = line_space( 3 );
    const auto negative = expr::binary( expr_op::sub, expr::ident( "x" ), expr::integer( 1 ) );
    CHECK_THROWS_AS( variant_fn::from_expr( *sp, "N", negative ), input_error );
    CHECK_THROWS_AS( variant_fn::from_expr( *sp, "B", expr::boolean( true ) ), input_error );
    CHECK_THROWS_AS( variant_fn::from_table( *sp, "T", { 0, -1, 0 } ), input_error );
    const auto ok = variant_fn::from_expr( *sp, "X", expr::ident( "x" ) );
    CHECK( ok.at( 2 ) == 2 );
}

TEST_CASE( "variant theorem on the MONO3 termination function" )
{
    const auto mono = fixture( "mono3" );
    const auto& sp = *mono.space;
    const auto v = check_variant_theorem( f_mp( *mono.sys, set_of( sp, { 2 } ) ), mono.sys->universe(),
                                          mono.variants.at( 0 ) );
    CHECK( v.holds );
    CHECK( v.rel == relation::variant_theorem );
    CHECK( v.fixpoint->is_universe() );
    CHECK( v.defect.empty() );
}

TEST_CASE( "variant theorem antecedent failures" )
{
    const auto ladder = fixture( "ladder3" );
    const auto& sp = *ladder.space;
    const auto v = check_variant_theorem( f_mp( *ladder.sys, set_of( sp, { 2 } ) ), ladder.sys->universe(),
                                          ladder.variants.at( 0 ) );
    CHECK_FALSE( v.holds );
    REQUIRE( v.failure );
    CHECK( v.failure->level == 1 );
    CHECK( v.failure->states == std::vector< state_index >{ 1 } );

    const auto mono = fixture( "mono3" );
    const auto w = check_variant_theorem( f_mp( *mono.sys, mono.sys->none() ), mono.sys->universe(),
                                          mono.variants.at( 0 ) );
    CHECK_FALSE( w.holds );
    REQUIRE( w.failure );
    CHECK( w.failure->level == 0 );
    CHECK( w.failure->states == std::vector< state_index >{ 2 } );
}

TEST_CASE( "variant theorem soundness on random systems" )
{
    std::mt19937_64 rng( 77 );
    int applied = 0;
    for ( int trial = 0; trial < 300; ++trial )
    {
        const auto sys = random_system( rng, 24, 3 );
        const auto& sp = sys->space();
        const auto b = random_set( rng, sp, 0.3 );
        const auto f = f_mp( *sys, b );
        const auto fix = lfp( sp, f );
        // Rank of each state: first iterate containing it.
        std::vector< value > rank( sp.size(), 0 );
        for ( state_index s = 0; s < sp.size(); ++s )
            for ( std::size_t k = 0; k < fix.trace.steps.size(); ++k )
                if ( fix.trace.steps[ k ].contains( s ) )
                {
                    rank[ s ] = static_cast< value >( k );
                    break;
                }
        const auto v = variant_fn::from_table( sp, "rank", rank );
        const auto res = check_variant_theorem( f, fix.value, v );
        CHECK( res.defect.empty() );
        if ( res.holds )
        {
            ++applied;
            CHECK( fix.value.is_subset_of( *res.fixpoint ) );
        }
        const auto p = random_set( rng, sp );
        const auto any = check_variant_theorem( f, p, v );
        if ( any.holds )
            CHECK( p.is_subset_of( fix.value ) );
    }
    CHECK( applied > 0 );
}
