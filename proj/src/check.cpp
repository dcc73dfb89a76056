#include "fixleads/check.hpp"

#include "fixleads/mp_engine.hpp"
#include "fixleads/version.hpp"
#include "fixleads/wf_engine.hpp"

#include <chrono>
#include <sstream>

namespace fixleads
{

namespace
{

std::string describe_steps( const event_system& sys, const std::vector< counterexample::step >& steps )
{
    std::string out;
    for ( const auto& st : steps )
        out += " -" + sys.at( st.event ).name() + "-> " + sys.space().format_state( st.state );
    return out;
}

std::string describe_counterexample( const event_system& sys, const counterexample& cex )
{
    std::string out = sys.space().format_state( cex.start ) + describe_steps( sys, cex.prefix );
    if ( cex.kind == counterexample::shape::deadlock_path )
        return "deadlock: " + out + " (no event enabled)";
    return "lasso: " + out + " then repeat [" + describe_steps( sys, cex.cycle ) + " ]";
}

} // namespace

int report::exit_code() const
{
    bool failed = false;
    for ( const auto& p : properties )
    {
        if ( p.is_defect() )
            return 3;
        failed = failed || !p.result.holds;
    }
    return failed ? 1 : 0;
}

verdict leadsto_verdict( const event_system& sys, const state_set& a, const state_set& b, assumption under, bool si )
{
    if ( under == assumption::mp )
        return si ? leadsto_mp_si( sys, a, b ) : leadsto_mp( sys, a, b );
    return si ? leadsto_wf_si( sys, a, b ) : leadsto_wf( sys, a, b );
}

property_report check_property( const model& m, const property& p, const check_options& opts )
{
    const auto& sys = *m.sys;
    property_report r;
    r.name = p.name;
    r.kind = p.kind;
    r.under = opts.assume.value_or( p.under );
    r.si = p.si || opts.si;
    if ( r.si && !m.has_init )
        throw input_error( "property '" + p.name + "' needs the strongest invariant but the system declares no init" );

    const auto start = std::chrono::steady_clock::now();
    const auto a = r.si ? ( p.p & strongest_invariant( sys ) ) : p.p;

    if ( p.kind == property_ast::form::ensures )
    {
        if ( r.under == assumption::mp )
            r.result = r.si ? ensures_mp_si( sys, p.p, p.q ) : ensures_mp( sys, p.p, p.q );
        else if ( p.via )
            r.result = r.si ? ensures_wf_si( sys, *p.via, p.p, p.q ) : ensures_wf( sys, *p.via, p.p, p.q );
        else
            r.result = ensures_wf_any( sys, p.p, p.q, r.si );
        r.fixpoint_holds = r.result.holds;
    }
    else
    {
        auto oracle_under = r.under;
        if ( p.variant )
        {
            const auto& v = m.variants.at( *p.variant );
            r.result = r.under == assumption::mp ? rule_mp_variant( sys, a, p.q, v ) : rule_wf_to_mp( sys, a, p.q, v );
            r.result.si = r.si;
            r.fixpoint_holds = leadsto_mp( sys, a, p.q ).holds;
            oracle_under = assumption::mp;
        }
        else
        {
            r.result = leadsto_verdict( sys, p.p, p.q, r.under, r.si );
            r.fixpoint_holds = r.result.holds;
        }

        if ( opts.oracle || !r.result.holds )
        {
            r.oracle = oracle_under == assumption::mp ? oracle_mp( sys, a, p.q ) : oracle_wf( sys, a, p.q );
            r.agreement = r.oracle->holds == r.fixpoint_holds;
            if ( r.oracle->cex )
            {
                r.counterexample_error = validate_counterexample( sys, a, p.q, *r.oracle->cex );
                if ( r.counterexample_error.empty() && oracle_under == assumption::wf &&
                     r.oracle->cex->kind == counterexample::shape::lasso && !r.oracle->cex->fair )
                    r.counterexample_error = "weak-fairness lasso lacks a fairness witness";
            }
        }
    }
    r.millis = std::chrono::duration< double, std::milli >( std::chrono::steady_clock::now() - start ).count();
    return r;
}

report check_model( const model& m, const check_options& opts )
{
    report r;
    r.system = m.sys->name();
    for ( const auto& p : m.properties )
        r.properties.push_back( check_property( m, p, opts ) );
    return r;
}

json report_to_json( const model& m, const report& r )
{
    const auto& sys = *m.sys;
    json j;
    j[ "schema" ] = json_schema_version;
    j[ "tool" ] = "fixleads";
    j[ "version" ] = version;
    j[ "system" ] = r.system;
    j[ "states" ] = sys.space().size();
    auto props = json::array();
    for ( const auto& p : r.properties )
    {
        json e;
        e[ "property" ] = p.name;
        e[ "form" ] = p.kind == property_ast::form::ensures ? "ensures" : "leadsto";
        e[ "assumption" ] = to_string( p.under );
        const auto v = verdict_to_json( sys, p.result );
        for ( const auto& [ key, val ] : v.items() )
            e[ key ] = val;
        if ( p.oracle )
        {
            e[ "oracle" ] = { { "holds", p.oracle->holds }, { "agreement", p.agreement } };
            if ( p.oracle->cex )
                e[ "counterexample" ] = counterexample_to_json( sys, *p.oracle->cex );
        }
        if ( !p.counterexample_error.empty() )
            e[ "counterexample_error" ] = p.counterexample_error;
        e[ "timing_ms" ] = p.millis;
        props.push_back( std::move( e ) );
    }
    j[ "properties" ] = std::move( props );
    j[ "exit_code" ] = r.exit_code();
    return j;
}

std::string format_set( const state_set& s )
{
    if ( s.is_empty() )
        return "false";
    if ( s.is_universe() )
        return "true";
    const auto n = s.count();
    if ( n > 16 )
        return std::to_string( n ) + " states";
    const bool compound = s.space()->vars().size() > 1;
    std::string out;
    s.for_each( [ & ]( state_index i ) {
        if ( !out.empty() )
            out += " or ";
        const auto st = s.space()->format_state( i );
        out += compound && n > 1 ? "(" + st + ")" : st;
    } );
    return out;
}

std::string format_report( const model& m, const report& r )
{
    const auto& sys = *m.sys;
    std::ostringstream out;
    out << "system " << r.system << " (" << sys.space().size() << " states, " << sys.event_count() << " events)\n";
    for ( const auto& p : r.properties )
    {
        out << "  " << p.name << ": " << ( p.kind == property_ast::form::ensures ? "ensures" : "leadsto" )
            << " under " << to_string( p.under ) << ( p.si ? " with si" : "" ) << " -> "
            << ( p.result.holds ? "HOLDS" : "FAILS" ) << " [" << to_string( p.result.rel ) << "]";
        out.setf( std::ios::fixed );
        out.precision( 3 );
        out << " (" << p.millis << " ms)\n";
        if ( p.result.helpful )
            out << "    helpful event: " << sys.at( *p.result.helpful ).name() << "\n";
        if ( p.result.fixpoint )
            out << "    fixpoint: " << format_set( *p.result.fixpoint ) << " after "
                << ( p.result.trace ? p.result.trace->steps.size() - 1 : 0 ) << " iterations\n";
        if ( !p.result.offending.empty() && !p.result.holds )
            out << "    not established for: " << format_set( state_set::of( sys.space(), p.result.offending ) )
                << "\n";
        if ( p.result.failure )
        {
            const auto& f = *p.result.failure;
            out << "    antecedent fails: " << f.which;
            if ( f.level )
                out << " at n = " << *f.level;
            out << " for " << format_set( state_set::of( sys.space(), f.states ) ) << "\n";
        }
        if ( p.oracle )
        {
            out << "    oracle: " << ( p.oracle->holds ? "holds" : "fails" )
                << ( p.agreement ? " (agrees)" : " (DISAGREES with fixpoint verdict)" ) << "\n";
            if ( p.oracle->cex )
                out << "    counterexample " << describe_counterexample( sys, *p.oracle->cex ) << "\n";
        }
        if ( !p.counterexample_error.empty() )
            out << "    DEFECT: invalid counterexample: " << p.counterexample_error << "\n";
        if ( !p.result.defect.empty() )
            out << "    DEFECT: " << p.result.defect << "\n";
    }
    return out.str();
}

} // namespace fixleads
