#include "fixleads/json_io.hpp"

#include <algorithm>

namespace fixleads
{

namespace
{

json node_to_json( const event_system& sys, const certificate& c )
{
    json j;
    switch ( c.kind )
    {
    case certificate::rule::sbr:
        j[ "rule" ] = "SBR";
        j[ "assumption" ] = to_string( c.assume );
        j[ "p" ] = set_to_json( c.p );
        j[ "q" ] = set_to_json( c.q );
        if ( c.helpful )
            j[ "helpful" ] = *c.helpful < sys.event_count() ? sys.at( *c.helpful ).name() : "?";
        break;
    case certificate::rule::str:
        j[ "rule" ] = "STR";
        j[ "left" ] = node_to_json( sys, c.kids.at( 0 ) );
        j[ "right" ] = node_to_json( sys, c.kids.at( 1 ) );
        break;
    case certificate::rule::sdr:
    {
        j[ "rule" ] = "SDR";
        j[ "q" ] = set_to_json( c.q );
        auto parts = json::array();
        for ( const auto& k : c.kids )
            parts.push_back( node_to_json( sys, k ) );
        j[ "parts" ] = std::move( parts );
        break;
    }
    }
    return j;
}

const json& field( const json& j, const char* key, const std::string& path )
{
    if ( !j.is_object() || !j.contains( key ) )
        throw input_error( path + ": missing field '" + key + "'" );
    return j.at( key );
}

certificate node_from_json( const event_system& sys, const json& j, const std::string& path )
{
    const auto& rule = field( j, "rule", path );
    if ( !rule.is_string() )
        throw input_error( path + ": 'rule' must be a string" );
    const auto name = rule.get< std::string >();
    if ( name == "SBR" )
    {
        const auto a = field( j, "assumption", path ).get< std::string >();
        if ( a != "mp" && a != "wf" )
            throw input_error( path + ": unknown assumption '" + a + "'" );
        std::optional< std::size_t > helpful;
        if ( j.contains( "helpful" ) )
            helpful = sys.event_index( j.at( "helpful" ).get< std::string >() );
        return certificate::sbr( a == "mp" ? assumption::mp : assumption::wf,
                                 set_from_json( sys.space(), field( j, "p", path ) ),
                                 set_from_json( sys.space(), field( j, "q", path ) ), helpful );
    }
    if ( name == "STR" )
        return certificate::str( node_from_json( sys, field( j, "left", path ), path + ".left" ),
                                 node_from_json( sys, field( j, "right", path ), path + ".right" ) );
    if ( name == "SDR" )
    {
        const auto& parts = field( j, "parts", path );
        if ( !parts.is_array() )
            throw input_error( path + ": 'parts' must be an array" );
        std::vector< certificate > kids;
        for ( std::size_t i = 0; i < parts.size(); ++i )
            kids.push_back( node_from_json( sys, parts[ i ], path + ".parts[" + std::to_string( i ) + "]" ) );
        return certificate::sdr( std::move( kids ), set_from_json( sys.space(), field( j, "q", path ) ) );
    }
    throw input_error( path + ": unknown rule '" + name + "'" );
}

json steps_to_json( const event_system& sys, const std::vector< counterexample::step >& steps )
{
    auto out = json::array();
    for ( const auto& st : steps )
        out.push_back( { { "event", sys.at( st.event ).name() }, { "state", state_to_json( sys.space(), st.state ) } } );
    return out;
}

} // namespace

json state_to_json( const state_space& space, state_index s )
{
    json j = json::object();
    const auto vals = space.state_of( s );
    for ( std::size_t i = 0; i < space.vars().size(); ++i )
    {
        const auto& v = space.vars()[ i ];
        switch ( v.kind )
        {
        case domain_kind::boolean: j[ v.name ] = vals[ i ] != 0; break;
        case domain_kind::enumeration: j[ v.name ] = v.labels.at( static_cast< std::size_t >( vals[ i ] ) ); break;
        default: j[ v.name ] = vals[ i ]; break;
        }
    }
    return j;
}

state_index state_from_json( const state_space& space, const json& j )
{
    if ( !j.is_object() )
        throw input_error( "state must be a JSON object" );
    if ( j.size() != space.vars().size() )
        throw input_error( "state " + j.dump() + " does not assign exactly the declared variables" );
    std::vector< value > vals;
    for ( const auto& v : space.vars() )
    {
        if ( !j.contains( v.name ) )
            throw input_error( "state " + j.dump() + " lacks variable '" + v.name + "'" );
        const auto& x = j.at( v.name );
        switch ( v.kind )
        {
        case domain_kind::boolean:
            if ( !x.is_boolean() )
                throw input_error( "variable '" + v.name + "' expects a boolean" );
            vals.push_back( x.get< bool >() ? 1 : 0 );
            break;
        case domain_kind::enumeration:
        {
            if ( !x.is_string() )
                throw input_error( "variable '" + v.name + "' expects a label" );
            const auto label = x.get< std::string >();
            const auto it = std::find( v.labels.begin(), v.labels.end(), label );
            if ( it == v.labels.end() )
                throw input_error( "'" + label + "' is not a label of '" + v.name + "'" );
            vals.push_back( it - v.labels.begin() );
            break;
        }
        default:
            if ( !x.is_number_integer() )
                throw input_error( "variable '" + v.name + "' expects an integer" );
            vals.push_back( x.get< value >() );
        }
    }
    const auto s = space.index_of( vals );
    if ( !s )
        throw input_error( "state " + j.dump() + " is not in the state space" );
    return *s;
}

json set_to_json( const state_set& set )
{
    auto out = json::array();
    set.for_each( [ & ]( state_index s ) { out.push_back( state_to_json( *set.space(), s ) ); } );
    return out;
}

state_set set_from_json( const state_space& space, const json& j )
{
    if ( !j.is_array() )
        throw input_error( "state set must be a JSON array" );
    auto out = state_set::empty( space );
    for ( const auto& s : j )
        out.insert( state_from_json( space, s ) );
    return out;
}

json trace_to_json( const iterate_trace& trace )
{
    json j;
    j[ "kind" ] = trace.kind == iterate_trace::direction::least ? "least" : "greatest";
    auto steps = json::array();
    for ( const auto& s : trace.steps )
        steps.push_back( set_to_json( s ) );
    j[ "steps" ] = std::move( steps );
    return j;
}

json counterexample_to_json( const event_system& sys, const counterexample& cex )
{
    json j;
    j[ "kind" ] = cex.kind == counterexample::shape::lasso ? "lasso" : "deadlock-path";
    j[ "start" ] = state_to_json( sys.space(), cex.start );
    j[ "prefix" ] = steps_to_json( sys, cex.prefix );
    if ( cex.kind == counterexample::shape::lasso )
        j[ "cycle" ] = steps_to_json( sys, cex.cycle );
    if ( cex.fair )
    {
        auto w = json::array();
        for ( const auto& f : cex.fairness_witness )
            w.push_back( { { "event", sys.at( f.event ).name() }, { "cycle_position", f.cycle_position } } );
        j[ "fairness_witness" ] = std::move( w );
    }
    return j;
}

json verdict_to_json( const event_system& sys, const verdict& v )
{
    json j;
    j[ "relation" ] = to_string( v.rel );
    j[ "holds" ] = v.holds;
    j[ "si" ] = v.si;
    if ( v.helpful )
        j[ "helpful" ] = sys.at( *v.helpful ).name();
    if ( v.fixpoint )
        j[ "fixpoint" ] = set_to_json( *v.fixpoint );
    if ( v.trace )
        j[ "trace" ] = trace_to_json( *v.trace );
    if ( !v.offending.empty() )
        j[ "offending" ] = set_to_json( state_set::of( sys.space(), v.offending ) );
    if ( v.failure )
    {
        json f;
        f[ "antecedent" ] = v.failure->which;
        if ( v.failure->level )
            f[ "n" ] = *v.failure->level;
        auto states = json::array();
        for ( std::size_t i = 0; i < v.failure->states.size(); ++i )
        {
            json s{ { "state", state_to_json( sys.space(), v.failure->states[ i ] ) } };
            if ( i < v.failure->variant_values.size() )
                s[ "V" ] = v.failure->variant_values[ i ];
            states.push_back( std::move( s ) );
        }
        f[ "states" ] = std::move( states );
        j[ "antecedent_failure" ] = std::move( f );
    }
    if ( !v.contributions.empty() )
    {
        json c = json::object();
        for ( const auto& [ g, set ] : v.contributions )
            c[ sys.at( g ).name() ] = set_to_json( set );
        j[ "y_contributions" ] = std::move( c );
    }
    if ( !v.defect.empty() )
        j[ "defect" ] = v.defect;
    return j;
}

json certificate_to_json( const event_system& sys, const certificate& cert ) { return node_to_json( sys, cert ); }

certificate certificate_from_json( const event_system& sys, const json& j )
{
    return node_from_json( sys, j, "root" );
}

json system_to_json( const event_system& sys )
{
    const auto& space = sys.space();
    json j;
    j[ "schema" ] = json_schema_version;
    j[ "system" ] = sys.name();
    auto vars = json::array();
    for ( const auto& v : space.vars() )
    {
        json d{ { "name", v.name } };
        switch ( v.kind )
        {
        case domain_kind::boolean: d[ "domain" ] = "bool"; break;
        case domain_kind::enumeration: d[ "domain" ] = v.labels; break;
        default: d[ "domain" ] = { { "lo", v.values.front() }, { "hi", v.values.back() } }; break;
        }
        vars.push_back( std::move( d ) );
    }
    j[ "vars" ] = std::move( vars );
    j[ "states" ] = space.size();
    j[ "init" ] = set_to_json( sys.init() );
    auto events = json::array();
    for ( std::size_t e = 0; e < sys.event_count(); ++e )
    {
        const auto& ev = sys.at( e );
        auto rel = json::array();
        ev.guard().for_each( [ & ]( state_index s ) {
            auto succ = json::array();
            for ( auto t : ev.successors( s ) )
                succ.push_back( state_to_json( space, t ) );
            rel.push_back( { { "from", state_to_json( space, s ) }, { "to", std::move( succ ) } } );
        } );
        events.push_back( { { "name", ev.name() }, { "guard", set_to_json( ev.guard() ) }, { "relation", std::move( rel ) } } );
    }
    j[ "events" ] = std::move( events );
    return j;
}

} // namespace fixleads
