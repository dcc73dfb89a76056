#pragma once

#include "event_system.hpp"
#include "variant.hpp"
#include "verdict.hpp"

namespace fixleads
{

// Termination set of the fair loop:
// lfp(X ↦ q ∪ grd(G) ∪ (¬S(q) ∩ S(X))).
state_set pre_y( const event_system& sys, const state_set& q, std::size_t g );

// Liberal fair loop: u when r = u, otherwise
// gfp(X ↦ q ∪ (grd(G) ∩ G(r) ∩ S(X))).
state_set liberal_y( const event_system& sys, const state_set& q, std::size_t g, const state_set& r );

// Fair loop Y(q)(G)(r). For r ≠ u this is the greatest fixpoint above; at
// r = u it is the termination set, so that Y = liberal_y ∩ pre_y for all r.
state_set fair_loop_y( const event_system& sys, const state_set& q, std::size_t g, const state_set& r );

// W_w(r) = ⋃_G Y(r)(G)(r)
state_set w_wf( const event_system& sys, const state_set& r );

// F_w(b)(X) = b ∪ W_w(X)
set_fn f_wf( const event_system& sys, const state_set& b );

// p ∩ q̄ ⊆ S(p ∪ q) ∩ grd(G) ∩ G(q)
verdict ensures_wf( const event_system& sys, std::size_t g, const state_set& p, const state_set& q );
verdict ensures_wf_si( const event_system& sys, std::size_t g, const state_set& p, const state_set& q );
// Tries every event in declaration order; `helpful` names the first that works.
verdict ensures_wf_any( const event_system& sys, const state_set& p, const state_set& q, bool si = false );

// a ⊆ lfp(F_w(b)). Also checks that every iterate lies inside
// b ∪ (grd(S) ∩ S(fix)) and reports a defect otherwise.
verdict leadsto_wf( const event_system& sys, const state_set& a, const state_set& b );
// si ∩ a ⊆ lfp(F_w(si ∩ b))
verdict leadsto_wf_si( const event_system& sys, const state_set& a, const state_set& b );

// Antecedents: b̄ ∩ v(n) ⊆ S(v'(n)) for n ≤ max V, and a ↦ b under weak
// fairness. On success the MP leads-to is re-checked directly.
verdict rule_wf_to_mp( const event_system& sys, const state_set& a, const state_set& b, const variant_fn& v );

} // namespace fixleads
