#include "fixleads/wf_engine.hpp"

#include "fixleads/mp_engine.hpp"

namespace fixleads
{

namespace
{

state_set loop_gfp( const event_system& sys, const state_set& q, std::size_t g, const state_set& r )
{
    const auto& ev = sys.at( g );
    const auto step = ev.guard() & ev.apply( r );
    return gfp_value( sys.space(), [ & ]( const state_set& x ) { return q | ( step & sys.apply( x ) ); } );
}

verdict ensures_check( const event_system& sys, std::size_t g, const state_set& p, const state_set& q, bool si )
{
    const auto& ev = sys.at( g );
    verdict out;
    out.rel = relation::ensures_wf;
    out.si = si;
    out.helpful = g;
    auto lhs = p - q;
    if ( si )
        lhs &= strongest_invariant( sys );
    const auto bad = lhs - ( sys.apply( p | q ) & ev.guard() & ev.apply( q ) );
    out.holds = bad.is_empty();
    out.offending = bad.members();
    return out;
}

verdict leadsto_check( const event_system& sys, const state_set& a, const state_set& b, bool si )
{
    verdict out;
    out.rel = relation::termination_wf;
    out.si = si;
    auto src = a;
    auto dst = b;
    if ( si )
    {
        const auto inv = strongest_invariant( sys );
        src &= inv;
        dst &= inv;
    }
    auto fix = lfp( sys.space(), f_wf( sys, dst ) );

    const auto bound = dst | ( sys.guard() & sys.apply( fix.value ) );
    for ( std::size_t k = 0; k < fix.trace.steps.size(); ++k )
        if ( !fix.trace.steps[ k ].is_subset_of( bound ) )
        {
            out.defect = "iterate " + std::to_string( k ) + " of F_w(b) leaves b ∪ (grd(S) ∩ S(fix))";
            break;
        }

    for ( std::size_t g = 0; g < sys.event_count(); ++g )
        out.contributions.emplace_back( g, fair_loop_y( sys, fix.value, g, fix.value ) );

    const auto bad = src - fix.value;
    out.holds = bad.is_empty();
    out.offending = bad.members();
    out.fixpoint = std::move( fix.value );
    out.trace = std::move( fix.trace );
    return out;
}

} // namespace

state_set pre_y( const event_system& sys, const state_set& q, std::size_t g )
{
    const auto base = q | sys.at( g ).guard();
    const auto stuck = ~sys.apply( q );
    return lfp_value( sys.space(), [ & ]( const state_set& x ) { return base | ( stuck & sys.apply( x ) ); } );
}

state_set liberal_y( const event_system& sys, const state_set& q, std::size_t g, const state_set& r )
{
    if ( r.is_universe() )
        return sys.universe();
    return loop_gfp( sys, q, g, r );
}

state_set fair_loop_y( const event_system& sys, const state_set& q, std::size_t g, const state_set& r )
{
    if ( r.is_universe() )
        return pre_y( sys, q, g );
    return loop_gfp( sys, q, g, r );
}

state_set w_wf( const event_system& sys, const state_set& r )
{
    auto out = sys.none();
    for ( std::size_t g = 0; g < sys.event_count(); ++g )
        out |= fair_loop_y( sys, r, g, r );
    return out;
}

set_fn f_wf( const event_system& sys, const state_set& b )
{
    return [ &sys, b ]( const state_set& x ) { return b | w_wf( sys, x ); };
}

verdict ensures_wf( const event_system& sys, std::size_t g, const state_set& p, const state_set& q )
{
    return ensures_check( sys, g, p, q, false );
}

verdict ensures_wf_si( const event_system& sys, std::size_t g, const state_set& p, const state_set& q )
{
    return ensures_check( sys, g, p, q, true );
}

verdict ensures_wf_any( const event_system& sys, const state_set& p, const state_set& q, bool si )
{
    verdict first;
    for ( std::size_t g = 0; g < sys.event_count(); ++g )
    {
        auto v = ensures_check( sys, g, p, q, si );
        if ( v.holds )
            return v;
        if ( g == 0 )
            first = std::move( v );
    }
    first.helpful.reset();
    return first;
}

verdict leadsto_wf( const event_system& sys, const state_set& a, const state_set& b )
{
    return leadsto_check( sys, a, b, false );
}

verdict leadsto_wf_si( const event_system& sys, const state_set& a, const state_set& b )
{
    return leadsto_check( sys, a, b, true );
}

verdict rule_wf_to_mp( const event_system& sys, const state_set& a, const state_set& b, const variant_fn& v )
{
    verdict out;
    out.rel = relation::rule_wf_to_mp;
    const auto open = ~b;
    for ( value n = 0; n <= v.max(); ++n )
    {
        const auto bad = ( open & v.level( n ) ) - sys.apply( v.below( n ) );
        if ( !bad.is_empty() )
        {
            antecedent_failure f{ "b̄ ∩ v(n) ⊆ S(v'(n))", n, bad.members(), {} };
            for ( auto s : f.states )
                f.variant_values.push_back( v.at( s ) );
            out.failure = std::move( f );
            return out;
        }
    }
    auto wf = leadsto_wf( sys, a, b );
    if ( !wf.holds )
    {
        out.failure = antecedent_failure{ "a ↦ b under weak fairness", std::nullopt, wf.offending, {} };
        out.fixpoint = std::move( wf.fixpoint );
        out.trace = std::move( wf.trace );
        out.defect = std::move( wf.defect );
        return out;
    }
    out.holds = true;
    out.defect = std::move( wf.defect );
    auto direct = leadsto_mp( sys, a, b );
    if ( !direct.holds && out.defect.empty() )
        out.defect = "weak fairness to minimal progress antecedents hold but a is not inside fix(F_m(b))";
    out.offending = std::move( direct.offending );
    out.fixpoint = std::move( direct.fixpoint );
    out.trace = std::move( direct.trace );
    return out;
}

} // namespace fixleads
