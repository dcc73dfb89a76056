#pragma once

#include "event.hpp"
#include "state_space.hpp"

#include <memory>

namespace fixleads
{

// A closed term of the set-transformer algebra. Every term carries both a
// demonic reading (apply) and a liberal reading (liberal); the two are tied
// by the pairing condition apply(T,r) = liberal(T,r) ∩ pre(T).
class transformer
{
public:
    enum class kind
    {
        skip,
        guard,
        precond,
        choice,
        seq,
        dovetail,
        rel
    };

    struct node;

    static transformer skip( const state_space& space );
    // g ⟹ body: enabled on g, miraculous elsewhere.
    static transformer guard( state_set g, transformer body );
    // p | body: aborts outside p.
    static transformer precond( state_set p, transformer body );
    static transformer choice( transformer left, transformer right );
    static transformer seq( transformer first, transformer second );
    // Fair choice; accepts any proper outcome of either branch.
    static transformer dovetail( transformer left, transformer right );
    static transformer rel( std::shared_ptr< const event > e );

    [[nodiscard]] kind type() const;
    [[nodiscard]] const state_space& space() const;
    [[nodiscard]] const node& get() const { return *_node; }

private:
    explicit transformer( std::shared_ptr< const node > n ) : _node{ std::move( n ) } {}

    std::shared_ptr< const node > _node;
};

struct transformer::node
{
    transformer::kind type;
    const state_space* space;
    state_set set;                   // guard or precondition
    std::vector< transformer > kids; // body / branches, in order
    std::shared_ptr< const event > ev;
};

// Demonic interpretation T(r).
state_set apply( const transformer& t, const state_set& r );

// Liberal interpretation ℒ(T)(r): terminate in r or loop.
state_set liberal( const transformer& t, const state_set& r );

// Termination set; T(u) except for the dovetail, which has its own rule.
state_set pre( const transformer& t );

// Complement of T(∅).
state_set grd( const transformer& t );

} // namespace fixleads
