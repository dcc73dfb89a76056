#include "fixleads/dsl.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace fixleads
{

namespace
{

std::string print_domain( const var_ast& v )
{
    switch ( v.kind )
    {
    case domain_kind::boolean: return "bool";
    case domain_kind::enumeration:
    {
        std::string s = "{";
        for ( std::size_t i = 0; i < v.labels.size(); ++i )
            s += ( i ? ", " : "" ) + v.labels[ i ];
        return s + "}";
    }
    default: return std::to_string( v.lo ) + ".." + std::to_string( v.hi );
    }
}

std::string print_action( const action_ast& a )
{
    if ( a.assigns.empty() )
        return "skip";
    std::string s;
    for ( std::size_t i = 0; i < a.assigns.size(); ++i )
    {
        const auto& as = a.assigns[ i ];
        s += i ? ", " : "";
        if ( as.choice )
        {
            s += as.target + " :in {";
            for ( std::size_t k = 0; k < as.values.size(); ++k )
                s += ( k ? ", " : "" ) + to_source( as.values[ k ] );
            s += "}";
        }
        else
            s += as.target + " := " + to_source( as.values.front() );
    }
    return s;
}

std::string print_property( const property_ast& p )
{
    std::string s = "property " + p.name + " : ";
    s += p.kind == property_ast::form::ensures ? "ensures" : "leadsto";
    s += " {" + to_source( p.p ) + "} {" + to_source( p.q ) + "}";
    if ( p.via )
        s += " via " + *p.via;
    s += " under " + to_string( p.under );
    if ( p.using_variant )
        s += " using " + *p.using_variant;
    if ( p.with_si )
        s += " with si";
    return s;
}

var_decl declare( const var_ast& v )
{
    try
    {
        switch ( v.kind )
        {
        case domain_kind::boolean: return var_decl::boolean( v.name );
        case domain_kind::enumeration: return var_decl::enumeration( v.name, v.labels );
        default: return var_decl::range( v.name, v.lo, v.hi );
        }
    }
    catch ( const parse_error& )
    {
        throw;
    }
    catch ( const input_error& e )
    {
        throw parse_error( v.pos, e.what() );
    }
}

expr_type type_of( const var_decl& v )
{
    switch ( v.kind )
    {
    case domain_kind::boolean: return { expr_type::tag::boolean, nullptr };
    case domain_kind::enumeration: return { expr_type::tag::enumeration, &v.labels };
    default: return { expr_type::tag::integer, nullptr };
    }
}

struct compiled_assign
{
    std::size_t var;
    std::vector< expr > values;
    source_pos pos;
};

using compiled_action = std::vector< compiled_assign >;

compiled_action compile_action( const action_ast& a, const std::vector< var_decl >& vars, const std::string& event )
{
    compiled_action out;
    std::set< std::string > targets;
    for ( const auto& as : a.assigns )
    {
        std::optional< std::size_t > var;
        for ( std::size_t i = 0; i < vars.size(); ++i )
            if ( vars[ i ].name == as.target )
                var = i;
        if ( !var )
            throw parse_error( as.pos, "event '" + event + "' assigns unknown variable '" + as.target + "'" );
        if ( !targets.insert( as.target ).second )
            throw parse_error( as.pos, "event '" + event + "' assigns '" + as.target + "' twice in one action" );
        compiled_assign c{ *var, as.values, as.pos };
        const auto want = type_of( vars[ *var ] );
        for ( auto& e : c.values )
        {
            const auto got = resolve( e, vars );
            if ( !( got == want ) )
                throw parse_error( e.pos, "type mismatch: '" + as.target + "' has type " + want.describe() +
                                              ", assigned " + got.describe() );
        }
        out.push_back( std::move( c ) );
    }
    return out;
}

// Appends every outcome of `action` at state s to `succ`.
void outcomes( const state_space& space, const compiled_action& action, state_index s, const std::string& event,
               std::vector< state_index >& succ )
{
    const auto pre = space.state_of( s );
    if ( action.empty() )
    {
        succ.push_back( s );
        return;
    }
    std::vector< std::vector< value > > choices;
    for ( const auto& c : action )
    {
        std::vector< value > vals;
        for ( const auto& e : c.values )
        {
            const auto v = evaluate( e, pre );
            const auto& decl = space.vars()[ c.var ];
            if ( !decl.position( v ) )
                throw parse_error( c.pos, "event '" + event + "' assigns " + decl.name + " := " + std::to_string( v ) +
                                              ", outside its domain, at state " + space.format_state( s ) );
            vals.push_back( v );
        }
        choices.push_back( std::move( vals ) );
    }
    std::vector< std::size_t > pick( action.size(), 0 );
    for ( ;; )
    {
        auto post = pre;
        for ( std::size_t k = 0; k < action.size(); ++k )
            post[ action[ k ].var ] = choices[ k ][ pick[ k ] ];
        const auto t = space.index_of( post );
        if ( !t )
            throw parse_error( action.front().pos, "event '" + event + "' leaves the invariant from state " +
                                                       space.format_state( s ) );
        succ.push_back( *t );
        std::size_t k = 0;
        while ( k < action.size() && ++pick[ k ] == choices[ k ].size() )
            pick[ k++ ] = 0;
        if ( k == action.size() )
            return;
    }
}

event build_event( const state_space& space, const event_ast& e )
{
    const auto guard = e.guard ? eval_pred( space, *e.guard ) : state_set::universe( space );
    std::vector< compiled_action > actions;
    for ( const auto& a : e.actions )
        actions.push_back( compile_action( a, space.vars(), e.name ) );
    std::vector< std::vector< state_index > > rows( space.size() );
    guard.for_each( [ & ]( state_index s ) {
        for ( const auto& a : actions )
            outcomes( space, a, s, e.name, rows[ s ] );
    } );
    return event( e.name, space, guard, rows );
}

void elaborate_variants( model& m, const std::vector< variant_ast >& vs )
{
    for ( const auto& v : vs )
    {
        for ( const auto& existing : m.variants )
            if ( existing.name() == v.name )
                throw parse_error( v.pos, "duplicate variant '" + v.name + "'" );
        try
        {
            m.variants.push_back( variant_fn::from_expr( *m.space, v.name, v.body ) );
        }
        catch ( const parse_error& )
        {
            throw;
        }
        catch ( const input_error& e )
        {
            throw parse_error( v.pos, e.what() );
        }
    }
}

void elaborate_properties( model& m, const std::vector< property_ast >& ps )
{
    for ( const auto& p : ps )
    {
        if ( m.find_property( p.name ) )
            throw parse_error( p.pos, "duplicate property '" + p.name + "'" );
        property out;
        out.name = p.name;
        out.kind = p.kind;
        out.p = eval_pred( *m.space, p.p );
        out.q = eval_pred( *m.space, p.q );
        out.p_source = to_source( p.p );
        out.q_source = to_source( p.q );
        out.under = p.under;
        out.si = p.with_si;
        if ( p.via )
        {
            if ( p.under != assumption::wf )
                throw parse_error( p.pos, "property '" + p.name + "': 'via' only applies under wf" );
            out.via = m.sys->find_event( *p.via );
            if ( !out.via )
                throw parse_error( p.pos, "property '" + p.name + "' names unknown event '" + *p.via + "'" );
        }
        if ( p.using_variant )
        {
            for ( std::size_t i = 0; i < m.variants.size(); ++i )
                if ( m.variants[ i ].name() == *p.using_variant )
                    out.variant = i;
            if ( !out.variant )
                throw parse_error( p.pos,
                                   "property '" + p.name + "' names unknown variant '" + *p.using_variant + "'" );
        }
        if ( p.with_si && !m.has_init )
            throw parse_error( p.pos, "property '" + p.name + "' uses 'with si' but the system declares no init" );
        m.properties.push_back( std::move( out ) );
    }
}

} // namespace

std::string print_spec( const spec_ast& ast )
{
    std::ostringstream out;
    out << "system " << ast.name << "\n";
    for ( const auto& v : ast.vars )
        out << "var " << v.name << " : " << print_domain( v ) << "\n";
    if ( ast.invariant )
        out << "invariant " << to_source( *ast.invariant ) << "\n";
    if ( ast.init )
        out << "init " << to_source( *ast.init ) << "\n";
    for ( const auto& e : ast.events )
    {
        out << "event " << e.name;
        if ( e.guard )
            out << " when " << to_source( *e.guard );
        out << " then ";
        for ( std::size_t i = 0; i < e.actions.size(); ++i )
            out << ( i ? " [] " : "" ) << print_action( e.actions[ i ] );
        out << "\n";
    }
    for ( const auto& v : ast.variants )
        out << "variant " << v.name << " := " << to_source( v.body ) << "\n";
    for ( const auto& p : ast.properties )
        out << print_property( p ) << "\n";
    return out.str();
}

std::optional< std::size_t > model::find_property( const std::string& name ) const
{
    for ( std::size_t i = 0; i < properties.size(); ++i )
        if ( properties[ i ].name == name )
            return i;
    return std::nullopt;
}

model elaborate( spec_ast ast, std::size_t cap )
{
    model m;
    std::vector< var_decl > vars;
    for ( const auto& v : ast.vars )
    {
        for ( const auto& d : vars )
            if ( d.name == v.name )
                throw parse_error( v.pos, "duplicate variable '" + v.name + "'" );
        vars.push_back( declare( v ) );
    }
    if ( vars.empty() )
        throw input_error( "system '" + ast.name + "' declares no variables" );

    state_space::filter_fn filter;
    std::optional< expr > inv;
    if ( ast.invariant )
    {
        inv = *ast.invariant;
        resolve_predicate( *inv, vars );
        filter = [ & ]( std::span< const value > s ) { return evaluate( *inv, s ) != 0; };
    }
    m.space = std::make_shared< const state_space >( state_space::enumerate( vars, filter, cap ) );

    std::set< std::string > names;
    std::vector< event > events;
    for ( const auto& e : ast.events )
    {
        if ( !names.insert( e.name ).second )
            throw parse_error( e.pos, "duplicate event '" + e.name + "'" );
        events.push_back( build_event( *m.space, e ) );
    }
    if ( events.empty() )
        throw input_error( "system '" + ast.name + "' declares no events" );

    m.has_init = ast.init.has_value();
    auto init = m.has_init ? eval_pred( *m.space, *ast.init ) : state_set::universe( *m.space );
    m.sys = std::make_shared< const event_system >( ast.name, m.space, std::move( events ), std::move( init ) );

    elaborate_variants( m, ast.variants );
    elaborate_properties( m, ast.properties );
    m.ast = std::move( ast );
    return m;
}

void add_items( model& m, std::string_view text )
{
    std::vector< variant_ast > variants;
    std::vector< property_ast > properties;
    parse_items( text, variants, properties );
    elaborate_variants( m, variants );
    elaborate_properties( m, properties );
    m.ast.variants.insert( m.ast.variants.end(), variants.begin(), variants.end() );
    m.ast.properties.insert( m.ast.properties.end(), properties.begin(), properties.end() );
}

model load_model( std::string_view text, std::size_t cap ) { return elaborate( parse_spec( text ), cap ); }

model load_model_file( const std::string& path, std::size_t cap )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw input_error( "cannot open '" + path + "'" );
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_model( buf.str(), cap );
}

} // namespace fixleads
