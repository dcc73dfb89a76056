#pragma once

#include "event_system.hpp"
#include "variant.hpp"
#include "verdict.hpp"

namespace fixleads
{

// p ∩ q̄ ⊆ S(q) ∩ grd(S)
verdict ensures_mp( const event_system& sys, const state_set& p, const state_set& q );
// Same condition restricted to the strongest invariant.
verdict ensures_mp_si( const event_system& sys, const state_set& p, const state_set& q );

// W_m(r) = grd(S) ∩ S(r)
state_set w_mp( const event_system& sys, const state_set& r );

// F_m(b)(X) = b ∪ W_m(X)
set_fn f_mp( const event_system& sys, const state_set& b );

// a ⊆ lfp(F_m(b))
verdict leadsto_mp( const event_system& sys, const state_set& a, const state_set& b );
// si ∩ a ⊆ lfp(F_m(si ∩ b))
verdict leadsto_mp_si( const event_system& sys, const state_set& a, const state_set& b );

// Antecedents: a ∩ b̄ ∩ v(n) ⊆ S(v'(n)) for n ≤ max V, and
// a ∩ b̄ ⊆ grd(S) ∩ S(a). On success a ⊆ lfp(F_m(b)) is re-checked.
verdict rule_mp_variant( const event_system& sys, const state_set& a, const state_set& b, const variant_fn& v );

} // namespace fixleads
