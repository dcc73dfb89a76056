#pragma once

#include "event_system.hpp"
#include "expr.hpp"
#include "variant.hpp"
#include "verdict.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fixleads
{

// Syntax error or elaboration error tied to a source position.
class parse_error : public input_error
{
public:
    parse_error( source_pos pos, const std::string& message );
    [[nodiscard]] source_pos where() const { return _pos; }

private:
    source_pos _pos;
};

struct var_ast
{
    std::string name;
    domain_kind kind = domain_kind::integer_range;
    value lo = 0;
    value hi = 0;
    std::vector< std::string > labels;
    source_pos pos;
};

struct assign_ast
{
    std::string target;
    // `x :in {…}` when set; otherwise `x := values[0]`.
    bool choice = false;
    std::vector< expr > values;
    source_pos pos;
};

// `skip` when assigns is empty.
struct action_ast
{
    std::vector< assign_ast > assigns;
    source_pos pos;
};

struct event_ast
{
    std::string name;
    std::optional< expr > guard;
    // Alternatives separated by `[]`, merged into one event.
    std::vector< action_ast > actions;
    source_pos pos;
};

struct variant_ast
{
    std::string name;
    expr body;
    source_pos pos;
};

struct property_ast
{
    enum class form
    {
        ensures,
        leadsto
    };

    std::string name;
    form kind = form::leadsto;
    expr p;
    expr q;
    std::optional< std::string > via;
    assumption under = assumption::mp;
    std::optional< std::string > using_variant;
    bool with_si = false;
    source_pos pos;
};

struct spec_ast
{
    std::string name;
    std::vector< var_ast > vars;
    std::optional< expr > invariant;
    std::optional< expr > init;
    std::vector< event_ast > events;
    std::vector< variant_ast > variants;
    std::vector< property_ast > properties;
};

// Whole specification.
spec_ast parse_spec( std::string_view text );

// A property file: any number of `variant` and `property` items.
void parse_items( std::string_view text, std::vector< variant_ast >& variants,
                  std::vector< property_ast >& properties );

// Canonical source text; parse_spec(print_spec(a)) reproduces a.
std::string print_spec( const spec_ast& ast );

struct property
{
    std::string name;
    property_ast::form kind = property_ast::form::leadsto;
    state_set p;
    state_set q;
    std::string p_source;
    std::string q_source;
    assumption under = assumption::mp;
    std::optional< std::size_t > via;
    std::optional< std::size_t > variant;
    bool si = false;
};

struct model
{
    spec_ast ast;
    std::shared_ptr< const state_space > space;
    std::shared_ptr< const event_system > sys;
    bool has_init = false;
    std::vector< variant_fn > variants;
    std::vector< property > properties;

    [[nodiscard]] std::optional< std::size_t > find_property( const std::string& name ) const;
};

// Enumerates the space, builds events, init, variants and properties.
model elaborate( spec_ast ast, std::size_t cap = configured_state_cap() );

// Adds variants and properties from a separate file to an elaborated model.
void add_items( model& m, std::string_view text );

model load_model( std::string_view text, std::size_t cap = configured_state_cap() );
model load_model_file( const std::string& path, std::size_t cap = configured_state_cap() );

} // namespace fixleads
