// fixleads command-line driver.
#include "fixleads/check.hpp"
#include "fixleads/mp_engine.hpp"
#include "fixleads/version.hpp"
#include "fixleads/wf_engine.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace fixleads;

namespace
{

enum exit_code
{
    ok = 0,
    fails = 1,
    usage = 2,
    internal = 3
};

struct common_options
{
    std::string file;
    std::string props;
    std::size_t max_states = 0;
};

std::string read_file( const std::string& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw input_error( "cannot open '" + path + "'" );
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

model load( const common_options& c )
{
    const auto cap = c.max_states ? c.max_states : configured_state_cap();
    auto m = load_model( read_file( c.file ), cap );
    if ( !c.props.empty() )
        add_items( m, read_file( c.props ) );
    if ( m.space->large() )
        std::cerr << "warning: " << m.space->size() << " states; fixpoint checks may be slow\n";
    return m;
}

void add_common( CLI::App* cmd, common_options& c )
{
    cmd->add_option( "file", c.file, "specification (.evt)" )->required();
    cmd->add_option( "--props", c.props, "extra variant/property items" );
    cmd->add_option( "--max-states", c.max_states, "state cap (overrides FIXLEADS_MAX_STATES)" );
}

std::optional< assumption > parse_assume( const std::string& s )
{
    if ( s.empty() )
        return std::nullopt;
    return s == "mp" ? assumption::mp : assumption::wf;
}

const property& find_property( const model& m, const std::string& name )
{
    const auto i = m.find_property( name );
    if ( !i )
        throw input_error( "unknown property '" + name + "'" );
    return m.properties[ *i ];
}

void emit( const std::string& out_path, const std::string& text )
{
    if ( out_path.empty() || out_path == "-" )
    {
        std::cout << text;
        return;
    }
    std::ofstream out( out_path, std::ios::binary );
    if ( !out )
        throw input_error( "cannot write '" + out_path + "'" );
    out << text;
}

int run_check( const common_options& c, const check_options& opts, bool as_json )
{
    const auto m = load( c );
    const auto r = check_model( m, opts );
    if ( as_json )
        std::cout << report_to_json( m, r ).dump( 2 ) << "\n";
    else
        std::cout << format_report( m, r );
    return r.exit_code();
}

int run_explain( const common_options& c, const std::string& name, const std::optional< assumption >& assume,
                 bool force_si, const std::string& out_path )
{
    const auto m = load( c );
    const auto& p = find_property( m, name );
    const auto& sys = *m.sys;
    auto under = assume.value_or( p.under );
    const bool si = p.si || force_si;
    if ( si && !m.has_init )
        throw input_error( "property '" + name + "' needs the strongest invariant but the system declares no init" );

    std::optional< certificate > cert;
    if ( p.kind == property_ast::form::ensures )
    {
        verdict v;
        if ( under == assumption::mp )
            v = si ? ensures_mp_si( sys, p.p, p.q ) : ensures_mp( sys, p.p, p.q );
        else if ( p.via )
            v = si ? ensures_wf_si( sys, *p.via, p.p, p.q ) : ensures_wf( sys, *p.via, p.p, p.q );
        else
            v = ensures_wf_any( sys, p.p, p.q, si );
        if ( !v.holds )
        {
            std::cerr << "property '" << name << "' does not hold; no certificate\n";
            return fails;
        }
        cert = certificate::sbr( under, p.p, p.q, v.helpful );
    }
    else
    {
        // Variant rules conclude a leads-to under minimal progress.
        if ( p.variant )
            under = assumption::mp;
        const auto v = leadsto_verdict( sys, p.p, p.q, under, si );
        if ( !v.defect.empty() )
        {
            std::cerr << "defect: " << v.defect << "\n";
            return internal;
        }
        if ( !v.holds )
        {
            std::cerr << "property '" << name << "' does not hold; no certificate\n";
            return fails;
        }
        cert = under == assumption::mp ? derive_certificate_mp( sys, p.p, p.q, *v.trace, si )
                                       : derive_certificate_wf( sys, p.p, p.q, *v.trace, si );
    }

    const auto check = check_certificate( sys, *cert, p.p, p.q, under, si );
    if ( !check.ok )
    {
        std::cerr << "defect: derived certificate rejected: " << check.message << "\n";
        return internal;
    }
    json j;
    j[ "schema" ] = json_schema_version;
    j[ "system" ] = sys.name();
    j[ "property" ] = name;
    j[ "assumption" ] = to_string( under );
    j[ "si" ] = si;
    j[ "a" ] = set_to_json( p.p );
    j[ "b" ] = set_to_json( p.q );
    j[ "leaves" ] = cert->leaf_count();
    j[ "derivation" ] = certificate_to_json( sys, *cert );
    emit( out_path, j.dump( 2 ) + "\n" );
    return ok;
}

int run_check_cert( const common_options& c, const std::string& cert_path )
{
    const auto m = load( c );
    const auto& sys = *m.sys;
    json j;
    try
    {
        j = json::parse( read_file( cert_path ) );
    }
    catch ( const json::parse_error& e )
    {
        throw input_error( std::string( "certificate is not valid JSON: " ) + e.what() );
    }
    if ( !j.is_object() || j.value( "schema", 0 ) != json_schema_version )
        throw input_error( "unsupported certificate schema" );
    if ( j.value( "system", std::string() ) != sys.name() )
    {
        std::cout << "REJECTED: certificate is for system '" << j.value( "system", std::string() ) << "'\n";
        return fails;
    }
    const auto assume_name = j.value( "assumption", std::string() );
    if ( assume_name != "mp" && assume_name != "wf" )
        throw input_error( "certificate has no valid 'assumption'" );
    const auto assume = assume_name == "mp" ? assumption::mp : assumption::wf;
    const bool si = j.value( "si", false );
    const auto a = set_from_json( sys.space(), j.at( "a" ) );
    const auto b = set_from_json( sys.space(), j.at( "b" ) );
    const auto cert = certificate_from_json( sys, j.at( "derivation" ) );

    if ( j.contains( "property" ) )
        if ( const auto i = m.find_property( j[ "property" ].get< std::string >() ) )
        {
            const auto& p = m.properties[ *i ];
            if ( !( p.p == a ) || !( p.q == b ) )
            {
                std::cout << "REJECTED: claimed sets differ from property '" << p.name << "'\n";
                return fails;
            }
        }

    const auto result = check_certificate( sys, cert, a, b, assume, si );
    if ( !result.ok )
    {
        std::cout << "REJECTED: " << result.message << "\n";
        return fails;
    }
    std::cout << "ACCEPTED: " << cert.leaf_count() << " leaves\n";
    return ok;
}

int run_counterexample( const common_options& c, const std::string& name, const std::optional< assumption >& assume,
                        bool force_si, bool as_json )
{
    const auto m = load( c );
    const auto& p = find_property( m, name );
    if ( p.kind != property_ast::form::leadsto )
        throw input_error( "property '" + name + "' is not a leads-to property" );
    const auto& sys = *m.sys;
    const auto under = p.variant ? assumption::mp : assume.value_or( p.under );
    const bool si = p.si || force_si;
    if ( si && !m.has_init )
        throw input_error( "property '" + name + "' needs the strongest invariant but the system declares no init" );
    const auto a = si ? ( p.p & strongest_invariant( sys ) ) : p.p;
    const auto answer = under == assumption::mp ? oracle_mp( sys, a, p.q ) : oracle_wf( sys, a, p.q );
    if ( answer.holds )
    {
        std::cout << ( as_json ? "{\"holds\": true}\n" : "property holds; no counterexample\n" );
        return ok;
    }
    const auto err = validate_counterexample( sys, a, p.q, *answer.cex );
    if ( !err.empty() )
    {
        std::cerr << "defect: invalid counterexample: " << err << "\n";
        return internal;
    }
    json j{ { "holds", false }, { "counterexample", counterexample_to_json( sys, *answer.cex ) } };
    std::cout << j.dump( 2 ) << "\n";
    return fails;
}

int run_si( const common_options& c, bool verify, bool as_json )
{
    const auto m = load( c );
    if ( !m.has_init )
        throw input_error( "system '" + m.sys->name() + "' declares no init" );
    const auto si = strongest_invariant( *m.sys );
    if ( as_json )
        std::cout << set_to_json( si ).dump( 2 ) << "\n";
    else
        si.for_each( [ & ]( state_index s ) { std::cout << m.space->format_state( s ) << "\n"; } );
    if ( verify )
    {
        const bool same = oracle_reachable( *m.sys, m.sys->init() ) == si;
        std::cerr << ( same ? "verified: matches breadth-first reachability\n"
                            : "MISMATCH against breadth-first reachability\n" );
        if ( !same )
            return internal;
    }
    return ok;
}

int run_dump( const common_options& c, bool source )
{
    const auto m = load( c );
    if ( source )
        std::cout << print_spec( m.ast );
    else
        std::cout << system_to_json( *m.sys ).dump( 2 ) << "\n";
    return ok;
}

} // namespace

int main( int argc, char** argv )
{
    CLI::App app{ "fixleads: explicit-state checker for ensures and leads-to under minimal progress and weak fairness" };
    app.set_version_flag( "--version", std::string( fixleads::version ) );
    app.require_subcommand( 1 );

    common_options common;
    std::string assume;
    bool si = false, oracle = false, as_json = false, verify = false, source = false;
    std::string property_name, out_path, cert_path;

    const std::vector< std::string > assumptions{ "mp", "wf" };

    auto* check = app.add_subcommand( "check", "check every property" );
    add_common( check, common );
    check->add_option( "--assume", assume, "override every property's assumption" )
        ->check( CLI::IsMember( assumptions ) );
    check->add_flag( "--si", si, "restrict to the strongest invariant" );
    check->add_flag( "--oracle", oracle, "cross-check against the trace oracle" );
    check->add_flag( "--json", as_json, "JSON report" );

    auto* explain = app.add_subcommand( "explain", "write a derivation certificate" );
    add_common( explain, common );
    explain->add_option( "property", property_name )->required();
    explain->add_option( "-o,--out", out_path, "output file (default stdout)" );
    explain->add_option( "--assume", assume )->check( CLI::IsMember( assumptions ) );
    explain->add_flag( "--si", si );

    auto* cex = app.add_subcommand( "counterexample", "search for a violating run" );
    add_common( cex, common );
    cex->add_option( "property", property_name )->required();
    cex->add_option( "--assume", assume )->check( CLI::IsMember( assumptions ) );
    cex->add_flag( "--si", si );
    cex->add_flag( "--json", as_json );

    auto* si_cmd = app.add_subcommand( "si", "print the strongest invariant" );
    add_common( si_cmd, common );
    si_cmd->add_flag( "--verify", verify, "compare with breadth-first reachability" );
    si_cmd->add_flag( "--json", as_json );

    auto* cert_cmd = app.add_subcommand( "check-cert", "validate a certificate file" );
    add_common( cert_cmd, common );
    cert_cmd->add_option( "certificate", cert_path )->required();

    auto* dump = app.add_subcommand( "dump", "print the elaborated system as JSON" );
    add_common( dump, common );
    dump->add_flag( "--source", source, "print canonical source instead" );

    try
    {
        app.parse( argc, argv );
    }
    catch ( const CLI::ParseError& e )
    {
        return app.exit( e ) == 0 ? ok : usage;
    }

    try
    {
        if ( *check )
            return run_check( common, { parse_assume( assume ), si, oracle }, as_json );
        if ( *explain )
            return run_explain( common, property_name, parse_assume( assume ), si, out_path );
        if ( *cex )
            return run_counterexample( common, property_name, parse_assume( assume ), si, as_json );
        if ( *si_cmd )
            return run_si( common, verify, as_json );
        if ( *cert_cmd )
            return run_check_cert( common, cert_path );
        if ( *dump )
            return run_dump( common, source );
    }
    catch ( const defect& e )
    {
        std::cerr << "defect: " << e.what() << "\n";
        return internal;
    }
    catch ( const fixleads::error& e )
    {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    catch ( const json::exception& e )
    {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
