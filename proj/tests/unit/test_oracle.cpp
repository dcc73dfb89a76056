#include "support.hpp"

#include "fixleads/mp_engine.hpp"
#include "fixleads/oracle.hpp"
#include "fixleads/wf_engine.hpp"

#include <doctest.h>

using namespace fixleads;
using namespace fixleads::testing;

TEST_CASE( "minimal progress oracle on IDLE finds the idle self-loop" )
{
    const auto idle = fixture( "idle" );
    const auto& sp = *idle.space;
    const auto a = set_of( sp, { 0 } );
    const auto b = set_of( sp, { 1 } );
    const auto ans = oracle_mp( *idle.sys, a, b );
    CHECK_FALSE( ans.holds );
    REQUIRE( ans.cex );
    CHECK( ans.cex->kind == counterexample::shape::lasso );
    CHECK( ans.cex->start == 0 );
    REQUIRE( ans.cex->cycle.size() == 1 );
    CHECK( ans.cex->cycle[ 0 ].event == idle.sys->event_index( "idle" ) );
    CHECK( ans.cex->cycle[ 0 ].state == 0 );
    CHECK( validate_counterexample( *idle.sys, a, b, *ans.cex ).empty() );
    CHECK( oracle_wf( *idle.sys, a, b ).holds );
}

TEST_CASE( "oracles on MONO3" )
{
    const auto mono = fixture( "mono3" );
    const auto& sp = *mono.space;
    CHECK( oracle_mp( *mono.sys, set_of( sp, { 0 } ), set_of( sp, { 2 } ) ).holds );
    CHECK( oracle_wf( *mono.sys, set_of( sp, { 0 } ), set_of( sp, { 2 } ) ).holds );

    const auto a = set_of( sp, { 0 } );
    const auto dead = oracle_mp( *mono.sys, a, mono.sys->none() );
    CHECK_FALSE( dead.holds );
    REQUIRE( dead.cex );
    CHECK( dead.cex->kind == counterexample::shape::deadlock_path );
    CHECK( dead.cex->loop_entry() == 2 );
    CHECK( dead.cex->prefix.size() == 2 );
    CHECK( validate_counterexample( *mono.sys, a, mono.sys->none(), *dead.cex ).empty() );
}

TEST_CASE( "weak-fairness oracle on CYCLE3 reports a fair lasso" )
{
    const auto cyc = fixture( "cycle3" );
    const auto& sp = *cyc.space;
    const auto a = set_of( sp, { 0 } );
    const auto b = set_of( sp, { 2 } );
    const auto ans = oracle_wf( *cyc.sys, a, b );
    CHECK_FALSE( ans.holds );
    REQUIRE( ans.cex );
    CHECK( ans.cex->fair );
    CHECK( ans.cex->kind == counterexample::shape::lasso );
    const auto inc = cyc.sys->event_index( "inc" );
    bool witnessed = false;
    for ( const auto& w : ans.cex->fairness_witness )
        witnessed = witnessed || w.event == inc;
    CHECK( witnessed );
    CHECK( validate_counterexample( *cyc.sys, a, b, *ans.cex ).empty() );
}

TEST_CASE( "validator rejects tampered counterexamples" )
{
    const auto cyc = fixture( "cycle3" );
    const auto& sp = *cyc.space;
    const auto a = set_of( sp, { 0 } );
    const auto b = set_of( sp, { 2 } );
    const auto good = *oracle_wf( *cyc.sys, a, b ).cex;

    auto wrong_start = good;
    wrong_start.start = 2;
    CHECK_FALSE( validate_counterexample( *cyc.sys, a, b, wrong_start ).empty() );

    auto into_target = good;
    into_target.cycle[ 0 ].state = 2;
    CHECK_FALSE( validate_counterexample( *cyc.sys, a, b, into_target ).empty() );

    auto wrong_event = good;
    wrong_event.cycle[ 0 ].event = wrong_event.cycle[ 0 ].event == 0 ? 1 : 0;
    CHECK_FALSE( validate_counterexample( *cyc.sys, a, b, wrong_event ).empty() );

    auto unfair = good;
    unfair.fairness_witness.clear();
    CHECK_FALSE( validate_counterexample( *cyc.sys, a, b, unfair ).empty() );

    const auto mono = fixture( "mono3" );
    const auto m = set_of( *mono.space, { 0 } );
    auto not_dead = *oracle_mp( *mono.sys, m, mono.sys->none() ).cex;
    not_dead.prefix.pop_back();
    CHECK_FALSE( validate_counterexample( *mono.sys, m, mono.sys->none(), not_dead ).empty() );
}

TEST_CASE( "reachability oracle" )
{
    const auto mono = fixture( "mono3" );
    const auto& sp = *mono.space;
    CHECK( oracle_reachable( *mono.sys, set_of( sp, { 1 } ) ) == set_of( sp, { 1, 2 } ) );
    CHECK( oracle_reachable( *mono.sys, mono.sys->none() ).is_empty() );
}

TEST_CASE( "oracle counterexamples validate and agree with the fixpoint engines" )
{
    std::mt19937_64 rng( 1234 );
    for ( int trial = 0; trial < 200; ++trial )
    {
        const auto sys = random_system( rng, 40, 4 );
        const auto& sp = sys->space();
        for ( int k = 0; k < 5; ++k )
        {
            const auto a = random_set( rng, sp );
            const auto b = random_set( rng, sp, 0.25 );
            const auto mp = oracle_mp( *sys, a, b );
            const auto wf = oracle_wf( *sys, a, b );
            CHECK( mp.holds == leadsto_mp( *sys, a, b ).holds );
            CHECK( wf.holds == leadsto_wf( *sys, a, b ).holds );
            CHECK( ( !mp.holds || wf.holds ) );
            for ( const auto* ans : { &mp, &wf } )
                if ( !ans->holds )
                {
                    REQUIRE( ans->cex );
                    CHECK( validate_counterexample( *sys, a, b, *ans->cex ) == "" );
                }
        }
    }
}
