#pragma once

#include "state_space.hpp"

#include <memory>
#include <string>
#include <vector>

namespace fixleads
{

enum class expr_op
{
    int_lit,
    bool_lit,
    name,
    neg,
    add,
    sub,
    mul,
    eq,
    ne,
    lt,
    le,
    gt,
    ge,
    logical_and,
    logical_or,
    logical_not,
    implies
};

struct source_pos
{
    int line = 0;
    int column = 0;
};

struct expr_type
{
    enum class tag
    {
        integer,
        boolean,
        enumeration
    };

    tag kind = tag::integer;
    // Label list identifying an enumeration type; two enumeration types are
    // the same iff their label lists are equal.
    const std::vector< std::string >* labels = nullptr;

    bool operator==( const expr_type& other ) const;
    [[nodiscard]] std::string describe() const;
};

// Integer/boolean/enumeration expression over state variables. Names are
// bound by resolve(); evaluation requires a resolved tree.
struct expr
{
    expr_op op = expr_op::int_lit;
    value literal = 0;
    std::string name;
    std::vector< expr > args;
    source_pos pos;

    // Filled by resolve().
    int var = -1;
    expr_type type;

    static expr integer( value v );
    static expr boolean( bool b );
    static expr ident( std::string n );
    static expr unary( expr_op op, expr a );
    static expr binary( expr_op op, expr a, expr b );
};

// Binds names to variables or enumeration literals and type-checks the tree.
// Throws input_error carrying the source position on failure.
expr_type resolve( expr& e, const std::vector< var_decl >& vars );

// Resolves `e` and requires its type to be boolean.
void resolve_predicate( expr& e, const std::vector< var_decl >& vars );

value evaluate( const expr& e, std::span< const value > state );

// The set of states of `space` satisfying `pred`. The predicate is resolved
// against the space's variables first.
state_set eval_pred( const state_space& space, expr pred );

// Fully parenthesized only where needed; re-parses to an equal tree.
std::string to_source( const expr& e );

} // namespace fixleads
