#include "fixleads/dsl.hpp"

#include <array>
#include <charconv>
#include <set>

namespace fixleads
{

namespace
{

std::string located( source_pos pos, const std::string& message )
{
    return std::to_string( pos.line ) + ":" + std::to_string( pos.column ) + ": " + message;
}

enum class tok
{
    ident,
    integer,
    symbol,
    end
};

struct token
{
    tok kind = tok::end;
    std::string text;
    source_pos pos;
};

const std::set< std::string, std::less<> > keywords{ "system",   "var",     "invariant", "init",  "event", "when",
                                                     "then",     "skip",    "variant",   "property", "ensures",
                                                     "leadsto",  "via",     "under",     "using", "with",  "bool",
                                                     "and",      "or",      "not",       "true",  "false" };

// Multi-byte spellings accepted as synonyms of the ASCII operators.
constexpr std::array< std::pair< std::string_view, std::string_view >, 7 > unicode_ops{ {
    { "≠", "!=" },
    { "≤", "<=" },
    { "≥", ">=" },
    { "∧", "and" },
    { "∨", "or" },
    { "¬", "not" },
    { "⇒", "=>" },
} };

class lexer
{
public:
    explicit lexer( std::string_view text ) : _text{ text } {}

    std::vector< token > run()
    {
        std::vector< token > out;
        for ( ;; )
        {
            skip_space();
            token t;
            t.pos = { _line, _col };
            if ( _i >= _text.size() )
            {
                out.push_back( t );
                return out;
            }
            const char c = _text[ _i ];
            if ( std::isalpha( static_cast< unsigned char >( c ) ) || c == '_' )
            {
                t.kind = tok::ident;
                while ( _i < _text.size() &&
                        ( std::isalnum( static_cast< unsigned char >( _text[ _i ] ) ) || _text[ _i ] == '_' ) )
                    t.text += advance();
            }
            else if ( std::isdigit( static_cast< unsigned char >( c ) ) )
            {
                t.kind = tok::integer;
                while ( _i < _text.size() && std::isdigit( static_cast< unsigned char >( _text[ _i ] ) ) )
                    t.text += advance();
            }
            else
            {
                t.kind = tok::symbol;
                t.text = symbol( t.pos );
                if ( t.text == "and" || t.text == "or" || t.text == "not" )
                    t.kind = tok::ident;
            }
            out.push_back( std::move( t ) );
        }
    }

private:
    char advance()
    {
        const char c = _text[ _i++ ];
        if ( c == '\n' )
        {
            ++_line;
            _col = 1;
        }
        else if ( ( static_cast< unsigned char >( c ) & 0xC0 ) != 0x80 )
            ++_col;
        return c;
    }

    bool starts( std::string_view s ) const { return _text.substr( _i ).starts_with( s ); }

    void skip_space()
    {
        while ( _i < _text.size() )
        {
            const char c = _text[ _i ];
            if ( std::isspace( static_cast< unsigned char >( c ) ) )
                advance();
            else if ( c == '#' || starts( "//" ) )
                while ( _i < _text.size() && _text[ _i ] != '\n' )
                    advance();
            else
                return;
        }
    }

    std::string symbol( source_pos pos )
    {
        for ( const auto& [ spelling, ascii ] : unicode_ops )
            if ( starts( spelling ) )
            {
                for ( std::size_t k = 0; k < spelling.size(); ++k )
                    advance();
                return std::string( ascii );
            }
        if ( starts( ":in" ) &&
             ( _i + 3 >= _text.size() ||
               !( std::isalnum( static_cast< unsigned char >( _text[ _i + 3 ] ) ) || _text[ _i + 3 ] == '_' ) ) )
        {
            advance(), advance(), advance();
            return ":in";
        }
        for ( std::string_view two : { ":=", "..", "[]", "!=", "<=", ">=", "=>" } )
            if ( starts( two ) )
            {
                advance(), advance();
                return std::string( two );
            }
        const char c = _text[ _i ];
        if ( std::string_view( ":{},()=<>+-*" ).find( c ) != std::string_view::npos )
        {
            advance();
            return std::string( 1, c );
        }
        throw parse_error( pos, "unexpected character '" + std::string( 1, c ) + "'" );
    }

    std::string_view _text;
    std::size_t _i = 0;
    int _line = 1;
    int _col = 1;
};

class parser
{
public:
    explicit parser( std::string_view text ) : _toks{ lexer( text ).run() } {}

    spec_ast spec()
    {
        spec_ast ast;
        expect_word( "system" );
        ast.name = identifier( "system name" );
        while ( !at_end() )
            item( ast );
        return ast;
    }

    void items( std::vector< variant_ast >& variants, std::vector< property_ast >& properties )
    {
        while ( !at_end() )
        {
            if ( peek_word( "variant" ) )
                variants.push_back( variant() );
            else if ( peek_word( "property" ) )
                properties.push_back( property() );
            else
                fail( "expected 'variant' or 'property'" );
        }
    }

private:
    const token& cur() const { return _toks[ _k ]; }
    bool at_end() const { return cur().kind == tok::end; }
    const token& next() { return _toks[ _k < _toks.size() - 1 ? _k++ : _k ]; }

    std::string describe( const token& t ) const
    {
        switch ( t.kind )
        {
        case tok::end: return "end of input";
        case tok::integer: return "integer " + t.text;
        default: return "'" + t.text + "'";
        }
    }

    [[noreturn]] void fail( const std::string& what ) const
    {
        throw parse_error( cur().pos, what + ", found " + describe( cur() ) );
    }

    bool peek_word( std::string_view w ) const { return cur().kind == tok::ident && cur().text == w; }
    bool peek_symbol( std::string_view s ) const { return cur().kind == tok::symbol && cur().text == s; }

    void expect_word( std::string_view w )
    {
        if ( !peek_word( w ) )
            fail( "expected '" + std::string( w ) + "'" );
        next();
    }

    void expect_symbol( std::string_view s )
    {
        if ( !peek_symbol( s ) )
            fail( "expected '" + std::string( s ) + "'" );
        next();
    }

    bool accept_symbol( std::string_view s )
    {
        if ( !peek_symbol( s ) )
            return false;
        next();
        return true;
    }

    std::string identifier( const std::string& what )
    {
        if ( cur().kind != tok::ident || keywords.contains( cur().text ) )
            fail( "expected " + what );
        return next().text;
    }

    value integer_literal()
    {
        const bool negative = accept_symbol( "-" );
        if ( cur().kind != tok::integer )
            fail( "expected an integer" );
        const auto& t = next();
        value v = 0;
        const auto [ ptr, ec ] = std::from_chars( t.text.data(), t.text.data() + t.text.size(), v );
        if ( ec != std::errc{} )
            throw parse_error( t.pos, "integer literal out of range" );
        return negative ? -v : v;
    }

    void item( spec_ast& ast )
    {
        const auto pos = cur().pos;
        if ( peek_word( "var" ) )
        {
            next();
            var_ast v;
            v.pos = cur().pos;
            v.name = identifier( "variable name" );
            expect_symbol( ":" );
            if ( peek_word( "bool" ) )
            {
                next();
                v.kind = domain_kind::boolean;
            }
            else if ( accept_symbol( "{" ) )
            {
                v.kind = domain_kind::enumeration;
                do
                    v.labels.push_back( identifier( "enumeration literal" ) );
                while ( accept_symbol( "," ) );
                expect_symbol( "}" );
            }
            else
            {
                v.lo = integer_literal();
                expect_symbol( ".." );
                v.hi = integer_literal();
            }
            ast.vars.push_back( std::move( v ) );
        }
        else if ( peek_word( "invariant" ) )
        {
            next();
            if ( ast.invariant )
                throw parse_error( pos, "duplicate 'invariant' clause" );
            ast.invariant = expression();
        }
        else if ( peek_word( "init" ) )
        {
            next();
            if ( ast.init )
                throw parse_error( pos, "duplicate 'init' clause" );
            ast.init = expression();
        }
        else if ( peek_word( "event" ) )
        {
            next();
            event_ast e;
            e.pos = cur().pos;
            e.name = identifier( "event name" );
            if ( peek_word( "when" ) )
            {
                next();
                e.guard = expression();
            }
            expect_word( "then" );
            do
                e.actions.push_back( action() );
            while ( accept_symbol( "[]" ) );
            ast.events.push_back( std::move( e ) );
        }
        else if ( peek_word( "variant" ) )
            ast.variants.push_back( variant() );
        else if ( peek_word( "property" ) )
            ast.properties.push_back( property() );
        else
            fail( "expected 'var', 'invariant', 'init', 'event', 'variant' or 'property'" );
    }

    action_ast action()
    {
        action_ast a;
        a.pos = cur().pos;
        if ( peek_word( "skip" ) )
        {
            next();
            return a;
        }
        do
        {
            assign_ast s;
            s.pos = cur().pos;
            s.target = identifier( "assignment target or 'skip'" );
            if ( accept_symbol( ":in" ) )
            {
                s.choice = true;
                expect_symbol( "{" );
                do
                    s.values.push_back( expression() );
                while ( accept_symbol( "," ) );
                expect_symbol( "}" );
            }
            else
            {
                expect_symbol( ":=" );
                s.values.push_back( expression() );
            }
            a.assigns.push_back( std::move( s ) );
        } while ( accept_symbol( "," ) );
        return a;
    }

    variant_ast variant()
    {
        expect_word( "variant" );
        variant_ast v;
        v.pos = cur().pos;
        v.name = identifier( "variant name" );
        expect_symbol( ":=" );
        v.body = expression();
        return v;
    }

    expr braced()
    {
        expect_symbol( "{" );
        auto e = expression();
        expect_symbol( "}" );
        return e;
    }

    property_ast property()
    {
        expect_word( "property" );
        property_ast p;
        p.pos = cur().pos;
        p.name = identifier( "property name" );
        expect_symbol( ":" );
        if ( peek_word( "ensures" ) )
            p.kind = property_ast::form::ensures;
        else if ( peek_word( "leadsto" ) )
            p.kind = property_ast::form::leadsto;
        else
            fail( "expected 'ensures' or 'leadsto'" );
        next();
        p.p = braced();
        p.q = braced();
        if ( p.kind == property_ast::form::ensures && peek_word( "via" ) )
        {
            next();
            p.via = identifier( "event name" );
        }
        expect_word( "under" );
        if ( peek_word( "mp" ) )
            p.under = assumption::mp;
        else if ( peek_word( "wf" ) )
            p.under = assumption::wf;
        else
            fail( "expected 'mp' or 'wf'" );
        next();
        if ( p.kind == property_ast::form::leadsto && peek_word( "using" ) )
        {
            next();
            p.using_variant = identifier( "variant name" );
        }
        if ( peek_word( "with" ) )
        {
            next();
            expect_word( "si" );
            p.with_si = true;
        }
        return p;
    }

    // implies (right-assoc) < or < and < not < comparison < +,- < * < unary -
    expr expression()
    {
        auto lhs = disjunction();
        if ( peek_symbol( "=>" ) )
        {
            const auto pos = next().pos;
            auto e = expr::binary( expr_op::implies, std::move( lhs ), expression() );
            e.pos = pos;
            return e;
        }
        return lhs;
    }

    expr disjunction()
    {
        auto e = conjunction();
        while ( peek_word( "or" ) )
        {
            const auto pos = next().pos;
            e = expr::binary( expr_op::logical_or, std::move( e ), conjunction() );
            e.pos = pos;
        }
        return e;
    }

    expr conjunction()
    {
        auto e = negation();
        while ( peek_word( "and" ) )
        {
            const auto pos = next().pos;
            e = expr::binary( expr_op::logical_and, std::move( e ), negation() );
            e.pos = pos;
        }
        return e;
    }

    expr negation()
    {
        if ( peek_word( "not" ) )
        {
            const auto pos = next().pos;
            auto e = expr::unary( expr_op::logical_not, negation() );
            e.pos = pos;
            return e;
        }
        return comparison();
    }

    expr comparison()
    {
        auto e = additive();
        static constexpr std::array< std::pair< std::string_view, expr_op >, 6 > ops{ {
            { "=", expr_op::eq },
            { "!=", expr_op::ne },
            { "<", expr_op::lt },
            { "<=", expr_op::le },
            { ">", expr_op::gt },
            { ">=", expr_op::ge },
        } };
        for ( const auto& [ sym, op ] : ops )
            if ( peek_symbol( sym ) )
            {
                const auto pos = next().pos;
                e = expr::binary( op, std::move( e ), additive() );
                e.pos = pos;
                for ( const auto& [ again, unused ] : ops )
                    if ( peek_symbol( again ) )
                        fail( "comparisons do not chain; add parentheses" );
                break;
            }
        return e;
    }

    expr additive()
    {
        auto e = multiplicative();
        while ( peek_symbol( "+" ) || peek_symbol( "-" ) )
        {
            const auto op = cur().text == "+" ? expr_op::add : expr_op::sub;
            const auto pos = next().pos;
            e = expr::binary( op, std::move( e ), multiplicative() );
            e.pos = pos;
        }
        return e;
    }

    expr multiplicative()
    {
        auto e = unary();
        while ( peek_symbol( "*" ) )
        {
            const auto pos = next().pos;
            e = expr::binary( expr_op::mul, std::move( e ), unary() );
            e.pos = pos;
        }
        return e;
    }

    expr unary()
    {
        if ( peek_symbol( "-" ) )
        {
            const auto pos = next().pos;
            auto e = expr::unary( expr_op::neg, unary() );
            e.pos = pos;
            return e;
        }
        return atom();
    }

    expr atom()
    {
        const auto pos = cur().pos;
        expr e;
        if ( cur().kind == tok::integer )
            e = expr::integer( integer_literal() );
        else if ( peek_word( "true" ) || peek_word( "false" ) )
            e = expr::boolean( next().text == "true" );
        else if ( accept_symbol( "(" ) )
        {
            e = expression();
            expect_symbol( ")" );
            return e;
        }
        else
            e = expr::ident( identifier( "an expression" ) );
        e.pos = pos;
        return e;
    }

    std::vector< token > _toks;
    std::size_t _k = 0;
};

} // namespace

parse_error::parse_error( source_pos pos, const std::string& message )
    : input_error( located( pos, message ) ), _pos{ pos }
{
}

spec_ast parse_spec( std::string_view text ) { return parser( text ).spec(); }

void parse_items( std::string_view text, std::vector< variant_ast >& variants,
                  std::vector< property_ast >& properties )
{
    parser( text ).items( variants, properties );
}

} // namespace fixleads
