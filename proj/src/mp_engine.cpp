#include "fixleads/mp_engine.hpp"

namespace fixleads
{

namespace
{

verdict ensures_check( const event_system& sys, const state_set& p, const state_set& q, bool si )
{
    verdict out;
    out.rel = relation::ensures_mp;
    out.si = si;
    auto lhs = p - q;
    if ( si )
        lhs &= strongest_invariant( sys );
    const auto bad = lhs - ( sys.apply( q ) & sys.guard() );
    out.holds = bad.is_empty();
    out.offending = bad.members();
    return out;
}

verdict leadsto_check( const event_system& sys, const state_set& a, const state_set& b, bool si )
{
    verdict out;
    out.rel = relation::termination_mp;
    out.si = si;
    auto src = a;
    auto dst = b;
    if ( si )
    {
        const auto inv = strongest_invariant( sys );
        src &= inv;
        dst &= inv;
    }
    auto fix = lfp( sys.space(), f_mp( sys, dst ) );
    const auto bad = src - fix.value;
    out.holds = bad.is_empty();
    out.offending = bad.members();
    out.fixpoint = std::move( fix.value );
    out.trace = std::move( fix.trace );
    return out;
}

antecedent_failure failure_at( const variant_fn& v, std::string which, std::optional< value > level,
                               const state_set& bad )
{
    antecedent_failure f{ std::move( which ), level, bad.members(), {} };
    for ( auto s : f.states )
        f.variant_values.push_back( v.at( s ) );
    return f;
}

} // namespace

verdict ensures_mp( const event_system& sys, const state_set& p, const state_set& q )
{
    return ensures_check( sys, p, q, false );
}

verdict ensures_mp_si( const event_system& sys, const state_set& p, const state_set& q )
{
    return ensures_check( sys, p, q, true );
}

state_set w_mp( const event_system& sys, const state_set& r ) { return sys.guard() & sys.apply( r ); }

set_fn f_mp( const event_system& sys, const state_set& b )
{
    return [ &sys, b ]( const state_set& x ) { return b | w_mp( sys, x ); };
}

verdict leadsto_mp( const event_system& sys, const state_set& a, const state_set& b )
{
    return leadsto_check( sys, a, b, false );
}

verdict leadsto_mp_si( const event_system& sys, const state_set& a, const state_set& b )
{
    return leadsto_check( sys, a, b, true );
}

verdict rule_mp_variant( const event_system& sys, const state_set& a, const state_set& b, const variant_fn& v )
{
    verdict out;
    out.rel = relation::rule_variant_mp;
    const auto open = a - b;
    for ( value n = 0; n <= v.max(); ++n )
    {
        const auto bad = ( open & v.level( n ) ) - sys.apply( v.below( n ) );
        if ( !bad.is_empty() )
        {
            out.failure = failure_at( v, "a ∩ b̄ ∩ v(n) ⊆ S(v'(n))", n, bad );
            return out;
        }
    }
    const auto bad = open - ( sys.guard() & sys.apply( a ) );
    if ( !bad.is_empty() )
    {
        out.failure = failure_at( v, "a ∩ b̄ ⊆ grd(S) ∩ S(a)", std::nullopt, bad );
        return out;
    }
    out.holds = true;
    auto direct = leadsto_mp( sys, a, b );
    if ( !direct.holds )
        out.defect = "variant rule antecedents hold but a is not inside fix(F_m(b))";
    out.offending = std::move( direct.offending );
    out.fixpoint = std::move( direct.fixpoint );
    out.trace = std::move( direct.trace );
    return out;
}

} // namespace fixleads
