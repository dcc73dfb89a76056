#include "fixleads/expr.hpp"

#include <algorithm>

namespace fixleads
{

namespace
{

std::string at( const source_pos& p )
{
    if ( p.line == 0 )
        return "";
    return " at " + std::to_string( p.line ) + ":" + std::to_string( p.column );
}

const expr_type int_type{ expr_type::tag::integer, nullptr };
const expr_type bool_type{ expr_type::tag::boolean, nullptr };

expr_type type_of_var( const var_decl& v )
{
    switch ( v.kind )
    {
    case domain_kind::boolean:
        return bool_type;
    case domain_kind::enumeration:
        return { expr_type::tag::enumeration, &v.labels };
    case domain_kind::integer_range:
        break;
    }
    return int_type;
}

void expect( const expr& e, const expr_type& want, const char* what )
{
    if ( !( e.type == want ) )
        throw input_error( std::string( "type mismatch" ) + at( e.pos ) + ": " + what + " expects " +
                           want.describe() + ", got " + e.type.describe() );
}

int precedence( expr_op op )
{
    switch ( op )
    {
    case expr_op::implies:
        return 1;
    case expr_op::logical_or:
        return 2;
    case expr_op::logical_and:
        return 3;
    case expr_op::logical_not:
        return 4;
    case expr_op::eq:
    case expr_op::ne:
    case expr_op::lt:
    case expr_op::le:
    case expr_op::gt:
    case expr_op::ge:
        return 5;
    case expr_op::add:
    case expr_op::sub:
        return 6;
    case expr_op::mul:
        return 7;
    case expr_op::neg:
        return 8;
    case expr_op::int_lit:
    case expr_op::bool_lit:
    case expr_op::name:
        break;
    }
    return 9;
}

const char* symbol( expr_op op )
{
    switch ( op )
    {
    case expr_op::implies: return "=>";
    case expr_op::logical_or: return "or";
    case expr_op::logical_and: return "and";
    case expr_op::logical_not: return "not";
    case expr_op::eq: return "=";
    case expr_op::ne: return "!=";
    case expr_op::lt: return "<";
    case expr_op::le: return "<=";
    case expr_op::gt: return ">";
    case expr_op::ge: return ">=";
    case expr_op::add: return "+";
    case expr_op::sub: return "-";
    case expr_op::mul: return "*";
    case expr_op::neg: return "-";
    default: return "?";
    }
}

void print( const expr& e, int min_prec, std::string& out )
{
    const int p = precedence( e.op );
    const bool paren = p < min_prec || ( e.op == expr_op::int_lit && e.literal < 0 );
    if ( paren )
        out += '(';
    switch ( e.op )
    {
    case expr_op::int_lit:
        out += std::to_string( e.literal );
        break;
    case expr_op::bool_lit:
        out += e.literal != 0 ? "true" : "false";
        break;
    case expr_op::name:
        out += e.name;
        break;
    case expr_op::neg:
        out += "-";
        print( e.args[ 0 ], p, out );
        break;
    case expr_op::logical_not:
        out += "not ";
        print( e.args[ 0 ], p, out );
        break;
    case expr_op::implies:
        print( e.args[ 0 ], p + 1, out );
        out += " => ";
        print( e.args[ 1 ], p, out );
        break;
    case expr_op::eq:
    case expr_op::ne:
    case expr_op::lt:
    case expr_op::le:
    case expr_op::gt:
    case expr_op::ge:
        print( e.args[ 0 ], p + 1, out );
        out += std::string( " " ) + symbol( e.op ) + " ";
        print( e.args[ 1 ], p + 1, out );
        break;
    default:
        print( e.args[ 0 ], p, out );
        out += std::string( " " ) + symbol( e.op ) + " ";
        print( e.args[ 1 ], p + 1, out );
        break;
    }
    if ( paren )
        out += ')';
}

} // namespace

bool expr_type::operator==( const expr_type& other ) const
{
    if ( kind != other.kind )
        return false;
    if ( kind != tag::enumeration )
        return true;
    return labels == other.labels || ( labels && other.labels && *labels == *other.labels );
}

std::string expr_type::describe() const
{
    switch ( kind )
    {
    case tag::boolean:
        return "bool";
    case tag::enumeration:
    {
        std::string s = "{";
        if ( labels )
            for ( std::size_t i = 0; i < labels->size(); ++i )
                s += ( i ? "," : "" ) + ( *labels )[ i ];
        return s + "}";
    }
    case tag::integer:
        break;
    }
    return "int";
}

expr expr::integer( value v )
{
    expr e;
    e.op = expr_op::int_lit;
    e.literal = v;
    return e;
}

expr expr::boolean( bool b )
{
    expr e;
    e.op = expr_op::bool_lit;
    e.literal = b ? 1 : 0;
    return e;
}

expr expr::ident( std::string n )
{
    expr e;
    e.op = expr_op::name;
    e.name = std::move( n );
    return e;
}

expr expr::unary( expr_op op, expr a )
{
    expr e;
    e.op = op;
    e.pos = a.pos;
    e.args.push_back( std::move( a ) );
    return e;
}

expr expr::binary( expr_op op, expr a, expr b )
{
    expr e;
    e.op = op;
    e.pos = a.pos;
    e.args.push_back( std::move( a ) );
    e.args.push_back( std::move( b ) );
    return e;
}

expr_type resolve( expr& e, const std::vector< var_decl >& vars )
{
    for ( auto& a : e.args )
        resolve( a, vars );

    switch ( e.op )
    {
    case expr_op::int_lit:
        e.type = int_type;
        break;
    case expr_op::bool_lit:
        e.type = bool_type;
        break;
    case expr_op::name:
    {
        e.var = -1;
        for ( std::size_t k = 0; k < vars.size(); ++k )
            if ( vars[ k ].name == e.name )
            {
                e.var = static_cast< int >( k );
                e.type = type_of_var( vars[ k ] );
                return e.type;
            }
        // Not a variable: look for an enumeration literal.
        const std::vector< std::string >* found = nullptr;
        for ( const auto& v : vars )
        {
            if ( v.kind != domain_kind::enumeration )
                continue;
            const auto it = std::find( v.labels.begin(), v.labels.end(), e.name );
            if ( it == v.labels.end() )
                continue;
            if ( found && *found != v.labels )
                throw input_error( "ambiguous enumeration literal '" + e.name + "'" + at( e.pos ) );
            found = &v.labels;
            e.literal = it - v.labels.begin();
        }
        if ( !found )
            throw input_error( "unknown identifier '" + e.name + "'" + at( e.pos ) );
        e.type = { expr_type::tag::enumeration, found };
        break;
    }
    case expr_op::neg:
        expect( e.args[ 0 ], int_type, "'-'" );
        e.type = int_type;
        break;
    case expr_op::add:
    case expr_op::sub:
    case expr_op::mul:
        expect( e.args[ 0 ], int_type, symbol( e.op ) );
        expect( e.args[ 1 ], int_type, symbol( e.op ) );
        e.type = int_type;
        break;
    case expr_op::lt:
    case expr_op::le:
    case expr_op::gt:
    case expr_op::ge:
        expect( e.args[ 0 ], int_type, symbol( e.op ) );
        expect( e.args[ 1 ], int_type, symbol( e.op ) );
        e.type = bool_type;
        break;
    case expr_op::eq:
    case expr_op::ne:
        expect( e.args[ 1 ], e.args[ 0 ].type, symbol( e.op ) );
        e.type = bool_type;
        break;
    case expr_op::logical_and:
    case expr_op::logical_or:
    case expr_op::implies:
        expect( e.args[ 0 ], bool_type, symbol( e.op ) );
        expect( e.args[ 1 ], bool_type, symbol( e.op ) );
        e.type = bool_type;
        break;
    case expr_op::logical_not:
        expect( e.args[ 0 ], bool_type, "'not'" );
        e.type = bool_type;
        break;
    }
    return e.type;
}

void resolve_predicate( expr& e, const std::vector< var_decl >& vars )
{
    const auto t = resolve( e, vars );
    if ( t.kind != expr_type::tag::boolean )
        throw input_error( "type mismatch" + at( e.pos ) + ": predicate expected, got " + t.describe() );
}

value evaluate( const expr& e, std::span< const value > state )
{
    switch ( e.op )
    {
    case expr_op::int_lit:
    case expr_op::bool_lit:
        return e.literal;
    case expr_op::name:
        return e.var >= 0 ? state[ static_cast< std::size_t >( e.var ) ] : e.literal;
    case expr_op::neg:
        return -evaluate( e.args[ 0 ], state );
    case expr_op::logical_not:
        return evaluate( e.args[ 0 ], state ) == 0 ? 1 : 0;
    case expr_op::logical_and:
        return ( evaluate( e.args[ 0 ], state ) != 0 && evaluate( e.args[ 1 ], state ) != 0 ) ? 1 : 0;
    case expr_op::logical_or:
        return ( evaluate( e.args[ 0 ], state ) != 0 || evaluate( e.args[ 1 ], state ) != 0 ) ? 1 : 0;
    case expr_op::implies:
        return ( evaluate( e.args[ 0 ], state ) == 0 || evaluate( e.args[ 1 ], state ) != 0 ) ? 1 : 0;
    default:
        break;
    }
    const auto l = evaluate( e.args[ 0 ], state );
    const auto r = evaluate( e.args[ 1 ], state );
    switch ( e.op )
    {
    case expr_op::add: return l + r;
    case expr_op::sub: return l - r;
    case expr_op::mul: return l * r;
    case expr_op::eq: return l == r;
    case expr_op::ne: return l != r;
    case expr_op::lt: return l < r;
    case expr_op::le: return l <= r;
    case expr_op::gt: return l > r;
    case expr_op::ge: return l >= r;
    default: break;
    }
    return 0;
}

state_set eval_pred( const state_space& space, expr pred )
{
    resolve_predicate( pred, space.vars() );
    auto out = state_set::empty( space );
    for ( state_index i = 0; i < space.size(); ++i )
        if ( evaluate( pred, space.state_of( i ) ) != 0 )
            out.insert( i );
    return out;
}

std::string to_source( const expr& e )
{
    std::string out;
    print( e, 0, out );
    return out;
}

} // namespace fixleads
