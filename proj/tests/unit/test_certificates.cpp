#include "support.hpp"

#include "fixleads/certificate.hpp"
#include "fixleads/json_io.hpp"
#include "fixleads/mp_engine.hpp"
#include "fixleads/wf_engine.hpp"

#include <doctest.h>

using namespace fixleads;
using namespace fixleads::testing;

namespace
{

void collect_leaves( certificate& c, std::vector< certificate* >& out )
{
    if ( c.kind == certificate::rule::sbr )
        out.push_back( &c );
    for ( auto& k : c.kids )
        collect_leaves( k, out );
}

certificate derive( const event_system& sys, const state_set& a, const state_set& b, assumption as )
{
    if ( as == assumption::mp )
        return derive_certificate_mp( sys, a, b, *leadsto_mp( sys, a, b ).trace );
    return derive_certificate_wf( sys, a, b, *leadsto_wf( sys, a, b ).trace );
}

} // namespace

TEST_CASE( "MONO3 minimal-progress certificate" )
{
    const auto mono = fixture( "mono3" );
    const auto& sp = *mono.space;
    const auto a = set_of( sp, { 0 } );
    const auto b = set_of( sp, { 2 } );
    const auto cert = derive( *mono.sys, a, b, assumption::mp );
    CHECK( cert.leaf_count() == 3 );
    CHECK( cert.kind == certificate::rule::str );
    const auto res = check_certificate( *mono.sys, cert, a, b, assumption::mp );
    CHECK_MESSAGE( res.ok, res.message );
    CHECK_FALSE( check_certificate( *mono.sys, cert, a, b, assumption::wf ).ok );
    CHECK_FALSE( check_certificate( *mono.sys, cert, a, set_of( sp, { 1, 2 } ), assumption::mp ).ok );
}

TEST_CASE( "a target already covering the source gives a single basic step" )
{
    const auto mono = fixture( "mono3" );
    const auto& sp = *mono.space;
    const auto b = set_of( sp, { 1, 2 } );
    const auto cert = derive( *mono.sys, set_of( sp, { 1 } ), b, assumption::mp );
    CHECK( cert.kind == certificate::rule::sbr );
    CHECK( cert.leaf_count() == 1 );
    CHECK( check_certificate( *mono.sys, cert, set_of( sp, { 1 } ), b, assumption::mp ).ok );
}

TEST_CASE( "no certificate for a failing property" )
{
    const auto idle = fixture( "idle" );
    const auto& sp = *idle.space;
    const auto a = set_of( sp, { 0 } );
    const auto b = set_of( sp, { 1 } );
    CHECK_THROWS_AS( derive( *idle.sys, a, b, assumption::mp ), input_error );

    const auto cyc = fixture( "cycle3" );
    CHECK_THROWS_AS( derive( *cyc.sys, set_of( *cyc.space, { 0 } ), set_of( *cyc.space, { 2 } ), assumption::wf ),
                     input_error );
}

TEST_CASE( "IDLE weak-fairness certificate names the helpful event" )
{
    const auto idle = fixture( "idle" );
    const auto& sp = *idle.space;
    const auto a = set_of( sp, { 0 } );
    const auto b = set_of( sp, { 1 } );
    auto cert = derive( *idle.sys, a, b, assumption::wf );
    const auto res = check_certificate( *idle.sys, cert, a, b, assumption::wf );
    CHECK_MESSAGE( res.ok, res.message );
    std::vector< certificate* > leaves;
    collect_leaves( cert, leaves );
    bool named = false;
    for ( auto* l : leaves )
        named = named || ( l->assume == assumption::wf && l->helpful == idle.sys->event_index( "goal" ) );
    CHECK( named );
    for ( auto* l : leaves )
        if ( l->helpful == idle.sys->event_index( "goal" ) )
        {
            l->helpful = idle.sys->event_index( "idle" );
            const auto bad = check_certificate( *idle.sys, cert, a, b, assumption::wf );
            CHECK_FALSE( bad.ok );
            CHECK( bad.message.find( "root" ) == 0 );
        }
}

TEST_CASE( "weakening a leaf is detected unless the leaf still holds" )
{
    std::mt19937_64 rng( 99 );
    int mutated = 0;
    int rejected = 0;
    for ( int trial = 0; trial < 150; ++trial )
    {
        const auto sys = random_system( rng, 24, 3 );
        const auto& sp = sys->space();
        const auto b = random_set( rng, sp, 0.3 );
        const auto as = trial % 2 ? assumption::wf : assumption::mp;
        const auto fix = as == assumption::mp ? leadsto_mp( *sys, sys->universe(), b )
                                              : leadsto_wf( *sys, sys->universe(), b );
        const auto a = *fix.fixpoint;
        auto cert = as == assumption::mp ? derive_certificate_mp( *sys, a, b, *fix.trace )
                                         : derive_certificate_wf( *sys, a, b, *fix.trace );
        const auto good = check_certificate( *sys, cert, a, b, as );
        REQUIRE_MESSAGE( good.ok, good.message );

        std::vector< certificate* > leaves;
        collect_leaves( cert, leaves );
        auto* leaf = leaves[ rng() % leaves.size() ];
        const auto original = leaf->q;
        const auto flip = static_cast< state_index >( rng() % sp.size() );
        if ( leaf->q.contains( flip ) )
            leaf->q.erase( flip );
        else
            continue;
        ++mutated;
        const auto res = check_certificate( *sys, cert, a, b, as );
        if ( !res.ok )
            ++rejected;
        else
            CHECK( leaf_holds( *sys, *leaf ) );
        leaf->q = original;
    }
    CHECK( mutated > 20 );
    CHECK( rejected == mutated );
}

TEST_CASE( "certificate JSON round trip" )
{
    for ( const auto as : { assumption::mp, assumption::wf } )
    {
        const auto m = fixture( as == assumption::mp ? "mono3" : "idle" );
        const auto& sp = *m.space;
        const auto a = set_of( sp, { 0 } );
        const auto b = as == assumption::mp ? set_of( sp, { 2 } ) : set_of( sp, { 1 } );
        const auto cert = derive( *m.sys, a, b, as );
        const auto j = certificate_to_json( *m.sys, cert );
        const auto back = certificate_from_json( *m.sys, j );
        CHECK( certificate_to_json( *m.sys, back ) == j );
        CHECK( check_certificate( *m.sys, back, a, b, as ).ok );
    }
    const auto mono = fixture( "mono3" );
    CHECK_THROWS_AS( certificate_from_json( *mono.sys, json{ { "rule", "nope" } } ), input_error );
}
