#include "support.hpp"

#include "fixleads/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace fixleads;
using namespace fixleads::testing;

namespace
{

struct run_result
{
    int exit = -1;
    std::string out;
};

run_result run( const std::string& args )
{
    const auto cmd = std::string( FIXLEADS_CLI ) + " " + args + " 2>/dev/null";
    run_result r;
    FILE* pipe = popen( cmd.c_str(), "r" );
    REQUIRE( pipe );
    char buf[ 4096 ];
    std::size_t n;
    while ( ( n = fread( buf, 1, sizeof buf, pipe ) ) > 0 )
        r.out.append( buf, n );
    const int status = pclose( pipe );
    r.exit = WIFEXITED( status ) ? WEXITSTATUS( status ) : -1;
    return r;
}

std::string fx( const std::string& name ) { return std::string( FIXLEADS_FIXTURE_DIR ) + "/" + name + ".evt"; }

std::filesystem::path scratch( const std::string& name )
{
    const auto dir = std::filesystem::temp_directory_path() / "fixleads_cli_test";
    std::filesystem::create_directories( dir );
    return dir / name;
}

} // namespace

TEST_CASE( "check exit codes on fixtures" )
{
    CHECK( run( "check " + fx( "idle" ) + " --oracle" ).exit == 0 );
    CHECK( run( "check " + fx( "mono3" ) + " --oracle" ).exit == 0 );
    CHECK( run( "check " + fx( "twodown" ) + " --oracle" ).exit == 0 );
    CHECK( run( "check " + fx( "cycle3" ) + " --oracle" ).exit == 1 );
    CHECK( run( "check " + fx( "ladder3" ) ).exit == 1 );
    CHECK( run( "check " + fx( "idle" ) + " --assume mp" ).exit == 1 );
}

TEST_CASE( "input and usage errors exit with 2" )
{
    CHECK( run( "check /nonexistent/file.evt" ).exit == 2 );
    CHECK( run( "frobnicate" ).exit == 2 );
    CHECK( run( "check " + fx( "idle" ) + " --assume bogus" ).exit == 2 );
    const auto bad = scratch( "bad.evt" );
    std::ofstream( bad ) << "system B\nvar x : 0..2\nevent e then x := 5\n";
    CHECK( run( "check " + bad.string() ).exit == 2 );
    CHECK( run( "check " + fx( "idle" ) + " --max-states 1" ).exit == 2 );
    CHECK( run( "explain " + fx( "idle" ) + " nosuch" ).exit == 2 );
    CHECK( run( "--help" ).exit == 0 );
}

TEST_CASE( "JSON report fields" )
{
    const auto r = run( "check " + fx( "cycle3" ) + " --oracle --json" );
    CHECK( r.exit == 1 );
    const auto j = json::parse( r.out );
    CHECK( j.at( "schema" ) == json_schema_version );
    CHECK( j.at( "tool" ) == "fixleads" );
    CHECK( j.at( "system" ) == "CYCLE3" );
    CHECK( j.at( "states" ) == 3 );
    CHECK( j.at( "exit_code" ) == 1 );
    REQUIRE( j.at( "properties" ).size() == 2 );
    for ( const auto& p : j.at( "properties" ) )
    {
        CHECK( p.contains( "relation" ) );
        CHECK( p.contains( "fixpoint" ) );
        CHECK( p.contains( "trace" ) );
        CHECK( p.at( "oracle" ).at( "agreement" ) == true );
        CHECK( p.at( "holds" ) == false );
        CHECK( p.contains( "counterexample" ) );
    }
}

TEST_CASE( "explain then check-cert round trip" )
{
    const auto cert = scratch( "idle_cert.json" );
    CHECK( run( "explain " + fx( "idle" ) + " reach_wf -o " + cert.string() ).exit == 0 );
    const auto ok = run( "check-cert " + fx( "idle" ) + " " + cert.string() );
    CHECK( ok.exit == 0 );
    CHECK( ok.out.find( "ACCEPTED" ) != std::string::npos );

    json j;
    std::ifstream( cert ) >> j;
    CHECK( j.at( "property" ) == "reach_wf" );
    j[ "b" ] = json::array();
    std::ofstream( cert ) << j.dump();
    const auto bad = run( "check-cert " + fx( "idle" ) + " " + cert.string() );
    CHECK( bad.exit == 1 );
    CHECK( bad.out.find( "REJECTED" ) != std::string::npos );

    CHECK( run( "explain " + fx( "cycle3" ) + " reach_mp" ).exit == 1 );
    const auto mono = run( "explain " + fx( "mono3" ) + " reach_mp" );
    CHECK( mono.exit == 0 );
    CHECK( json::parse( mono.out ).at( "leaves" ) == 3 );
}

TEST_CASE( "counterexample subcommand" )
{
    const auto r = run( "counterexample " + fx( "cycle3" ) + " reach_wf" );
    CHECK( r.exit == 1 );
    const auto j = json::parse( r.out );
    const auto& cex = j.contains( "counterexample" ) ? j.at( "counterexample" ) : j;
    CHECK( cex.at( "kind" ) == "lasso" );
    CHECK( !cex.at( "fairness_witness" ).empty() );
    CHECK( run( "counterexample " + fx( "mono3" ) + " reach_mp" ).exit == 0 );
}

TEST_CASE( "strongest invariant and dump" )
{
    CHECK( run( "si " + fx( "mono3" ) + " --verify" ).exit == 0 );
    const auto si = run( "si " + fx( "twodown" ) + " --json" );
    CHECK( si.exit == 0 );
    CHECK( json::accept( si.out ) );
    const auto dump = run( "dump " + fx( "idle" ) );
    CHECK( dump.exit == 0 );
    CHECK( json::parse( dump.out ).dump().find( "goal" ) != std::string::npos );
    const auto src = run( "dump " + fx( "idle" ) + " --source" );
    CHECK( src.out.find( "system IDLE" ) != std::string::npos );
}

TEST_CASE( "extra property files" )
{
    const auto props = scratch( "extra.props" );
    std::ofstream( props ) << "property down : leadsto {x = 2} {x = 0} under wf\n";
    CHECK( run( "check " + fx( "cycle3" ) + " --props " + props.string() + " --oracle" ).exit == 1 );
    std::ofstream( props ) << "property self : leadsto {x = 2} {x = 2} under mp\n";
    const auto r = run( "check " + fx( "mono3" ) + " --props " + props.string() + " --json" );
    CHECK( r.exit == 0 );
    CHECK( json::parse( r.out ).at( "properties" ).size() == 5 );
}
