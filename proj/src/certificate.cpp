#include "fixleads/certificate.hpp"

#include "fixleads/wf_engine.hpp"

namespace fixleads
{

namespace
{

struct conclusion
{
    state_set p;
    state_set q;
};

// Distinct iterates from the first non-empty one onwards.
std::vector< state_set > layers( const iterate_trace& trace )
{
    std::vector< state_set > out;
    for ( std::size_t k = 1; k < trace.steps.size(); ++k )
        if ( out.empty() || !( out.back() == trace.steps[ k ] ) )
            out.push_back( trace.steps[ k ] );
    return out;
}

template < typename Layer >
certificate chain( const event_system& sys, const state_set& a, const state_set& b, const iterate_trace& trace,
                   bool si, assumption assume, Layer&& layer )
{
    if ( trace.steps.empty() )
        throw input_error( "empty iterate trace" );
    const auto inv = si ? strongest_invariant( sys ) : sys.universe();
    const auto& fix = trace.steps.back();
    if ( !( inv & a ).is_subset_of( fix ) )
        throw input_error( "source set is not inside the fixpoint; no derivation exists" );
    if ( ( inv & a ).is_subset_of( b ) )
        return certificate::sbr( assume, a, b );

    const auto r = layers( trace );
    std::optional< certificate > acc;
    if ( !( r.front() == b ) )
        acc = certificate::sbr( assume, r.front(), b );
    for ( std::size_t k = 0; k + 1 < r.size(); ++k )
    {
        auto step = layer( r[ k + 1 ], r[ k ] );
        acc = acc ? certificate::str( std::move( step ), std::move( *acc ) ) : std::move( step );
    }
    auto head = certificate::sbr( assume, a, r.back() );
    return acc ? certificate::str( std::move( head ), std::move( *acc ) ) : head;
}

bool same_space( const state_set& s, const event_system& sys ) { return s.space() == &sys.space(); }

std::optional< conclusion > check_node( const event_system& sys, const certificate& c, assumption assume, bool si,
                                        const state_set& inv, const std::string& path, std::string& message )
{
    auto fail = [ & ]( const std::string& why ) -> std::optional< conclusion > {
        message = path + ": " + why;
        return std::nullopt;
    };
    switch ( c.kind )
    {
    case certificate::rule::sbr:
    {
        if ( !c.kids.empty() )
            return fail( "SBR node has children" );
        if ( !same_space( c.p, sys ) || !same_space( c.q, sys ) )
            return fail( "set over a different state space" );
        if ( c.assume != assume )
            return fail( "SBR leaf uses assumption '" + to_string( c.assume ) + "', expected '" + to_string( assume ) +
                         "'" );
        if ( c.helpful && *c.helpful >= sys.event_count() )
            return fail( "helpful event index out of range" );
        if ( !( ( c.p - c.q ) & inv ).is_empty() && assume == assumption::wf && !c.helpful )
            return fail( "SBR leaf under weak fairness names no helpful event" );
        if ( !leaf_holds( sys, c, si ) )
            return fail( "SBR leaf does not satisfy its ensures condition" );
        return conclusion{ c.p, c.q };
    }
    case certificate::rule::str:
    {
        if ( c.kids.size() != 2 )
            return fail( "STR node needs exactly two children" );
        auto left = check_node( sys, c.kids[ 0 ], assume, si, inv, path + ".left", message );
        if ( !left )
            return std::nullopt;
        auto right = check_node( sys, c.kids[ 1 ], assume, si, inv, path + ".right", message );
        if ( !right )
            return std::nullopt;
        if ( !( left->q == right->p ) )
            return fail( "STR middle sets differ (left.q != right.p)" );
        return conclusion{ std::move( left->p ), std::move( right->q ) };
    }
    case certificate::rule::sdr:
    {
        if ( c.kids.empty() )
            return fail( "SDR node has no parts" );
        if ( !same_space( c.q, sys ) )
            return fail( "set over a different state space" );
        auto p = sys.none();
        for ( std::size_t i = 0; i < c.kids.size(); ++i )
        {
            auto part =
                check_node( sys, c.kids[ i ], assume, si, inv, path + ".parts[" + std::to_string( i ) + "]", message );
            if ( !part )
                return std::nullopt;
            if ( !( part->q == c.q ) )
                return fail( "SDR part " + std::to_string( i ) + " concludes a different target" );
            p |= part->p;
        }
        return conclusion{ std::move( p ), c.q };
    }
    }
    return fail( "unknown rule" );
}

} // namespace

certificate certificate::sbr( assumption a, state_set p, state_set q, std::optional< std::size_t > helpful )
{
    certificate c;
    c.kind = rule::sbr;
    c.assume = a;
    c.p = std::move( p );
    c.q = std::move( q );
    c.helpful = helpful;
    return c;
}

certificate certificate::str( certificate left, certificate right )
{
    certificate c;
    c.kind = rule::str;
    c.kids.push_back( std::move( left ) );
    c.kids.push_back( std::move( right ) );
    return c;
}

certificate certificate::sdr( std::vector< certificate > parts, state_set q )
{
    certificate c;
    c.kind = rule::sdr;
    c.kids = std::move( parts );
    c.q = std::move( q );
    return c;
}

std::size_t certificate::leaf_count() const
{
    if ( kind == rule::sbr )
        return 1;
    std::size_t n = 0;
    for ( const auto& k : kids )
        n += k.leaf_count();
    return n;
}

certificate derive_certificate_mp( const event_system& sys, const state_set& a, const state_set& b,
                                   const iterate_trace& trace, bool si )
{
    return chain( sys, a, b, trace, si, assumption::mp, [ & ]( const state_set& hi, const state_set& lo ) {
        return certificate::sbr( assumption::mp, hi, lo );
    } );
}

certificate derive_certificate_wf( const event_system& sys, const state_set& a, const state_set& b,
                                   const iterate_trace& trace, bool si )
{
    return chain( sys, a, b, trace, si, assumption::wf, [ & ]( const state_set& hi, const state_set& lo ) {
        std::vector< certificate > parts;
        for ( std::size_t g = 0; g < sys.event_count(); ++g )
        {
            auto y = fair_loop_y( sys, lo, g, lo );
            if ( !y.is_subset_of( lo ) )
                parts.push_back( certificate::sbr( assumption::wf, std::move( y ), lo, g ) );
        }
        auto covered = sys.none();
        for ( const auto& part : parts )
            covered |= part.p;
        if ( !( covered == hi ) )
            throw defect( "fair-loop parts do not cover the next iterate" );
        return certificate::sdr( std::move( parts ), lo );
    } );
}

bool leaf_holds( const event_system& sys, const certificate& leaf, bool si )
{
    auto lhs = leaf.p - leaf.q;
    if ( si )
        lhs &= strongest_invariant( sys );
    if ( lhs.is_empty() )
        return true;
    if ( leaf.assume == assumption::mp )
        return lhs.is_subset_of( sys.apply( leaf.q ) & sys.guard() );
    if ( !leaf.helpful || *leaf.helpful >= sys.event_count() )
        return false;
    const auto& g = sys.at( *leaf.helpful );
    return lhs.is_subset_of( sys.apply( leaf.p | leaf.q ) & g.guard() & g.apply( leaf.q ) );
}

check_result check_certificate( const event_system& sys, const certificate& cert, const state_set& a,
                                const state_set& b, assumption assume, bool si )
{
    const auto inv = si ? strongest_invariant( sys ) : sys.universe();
    std::string message;
    auto root = check_node( sys, cert, assume, si, inv, "root", message );
    if ( !root )
        return { false, message };
    if ( !a.is_subset_of( root->p ) )
        return { false, "root: conclusion source does not contain the claimed source" };
    if ( !( root->q == b ) )
        return { false, "root: conclusion target differs from the claimed target" };
    return { true, "" };
}

} // namespace fixleads
