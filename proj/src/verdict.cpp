#include "fixleads/verdict.hpp"

#include <array>

namespace fixleads
{

namespace
{

constexpr std::array< std::pair< relation, const char* >, 7 > names{ {
    { relation::termination_mp, "T_m" },
    { relation::termination_wf, "T_w" },
    { relation::ensures_mp, "E_m" },
    { relation::ensures_wf, "E_w" },
    { relation::rule_variant_mp, "rule-variant-mp" },
    { relation::rule_wf_to_mp, "rule-wf-to-mp" },
    { relation::variant_theorem, "variant-theorem" },
} };

} // namespace

std::string to_string( assumption a ) { return a == assumption::mp ? "mp" : "wf"; }

std::string to_string( relation r )
{
    for ( const auto& [ rel, name ] : names )
        if ( rel == r )
            return name;
    return "?";
}

std::optional< relation > relation_from_string( const std::string& s )
{
    for ( const auto& [ rel, name ] : names )
        if ( s == name )
            return rel;
    return std::nullopt;
}

} // namespace fixleads
