#pragma once

#include "error.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fixleads
{

using value = std::int64_t;
using state_index = std::uint32_t;

enum class domain_kind
{
    integer_range,
    boolean,
    enumeration
};

// A state variable together with its finite, ordered domain. Booleans are
// stored as 0/1 and enumeration literals as their position in `labels`.
struct var_decl
{
    std::string name;
    domain_kind kind = domain_kind::integer_range;
    std::vector< value > values;
    std::vector< std::string > labels;

    static var_decl range( std::string name, value lo, value hi );
    static var_decl boolean( std::string name );
    static var_decl enumeration( std::string name, std::vector< std::string > labels );

    [[nodiscard]] std::size_t size() const { return values.size(); }

    // Position of v in the domain, if present.
    [[nodiscard]] std::optional< std::size_t > position( value v ) const;

    [[nodiscard]] std::string format( value v ) const;
};

inline constexpr std::size_t default_state_cap = std::size_t{ 1 } << 20;
inline constexpr std::size_t state_warning_threshold = std::size_t{ 1 } << 16;

// Reads FIXLEADS_MAX_STATES, falling back to default_state_cap.
std::size_t configured_state_cap();

// The enumerated state universe u. Assignments are encoded mixed-radix with
// the first declared variable least significant. When an invariant filter is
// given, the surviving assignments are re-packed densely in raw-index order.
class state_space
{
public:
    using assignment = std::vector< value >;
    using filter_fn = std::function< bool( std::span< const value > ) >;

    static state_space enumerate( std::vector< var_decl > vars, const filter_fn& invariant = {},
                                  std::size_t cap = configured_state_cap() );

    [[nodiscard]] const std::vector< var_decl >& vars() const { return _vars; }
    [[nodiscard]] std::size_t size() const { return _size; }
    [[nodiscard]] std::uint64_t raw_size() const { return _raw_size; }
    [[nodiscard]] bool restricted() const { return !_raw_of_dense.empty(); }
    [[nodiscard]] bool large() const { return _size > state_warning_threshold; }

    [[nodiscard]] std::optional< std::size_t > var_position( const std::string& name ) const;

    [[nodiscard]] assignment state_of( state_index i ) const;
    [[nodiscard]] value value_of( state_index i, std::size_t var ) const;

    // Dense index of an assignment; empty if some value is out of domain or the
    // assignment violates the invariant.
    [[nodiscard]] std::optional< state_index > index_of( std::span< const value > a ) const;

    [[nodiscard]] std::string format_state( state_index i ) const;

private:
    state_space() = default;

    [[nodiscard]] std::uint64_t raw_of( state_index i ) const
    {
        return _raw_of_dense.empty() ? i : _raw_of_dense[ i ];
    }

    std::vector< var_decl > _vars;
    std::vector< std::uint64_t > _radix_weight;
    std::uint64_t _raw_size = 1;
    std::size_t _size = 0;
    std::vector< std::uint64_t > _raw_of_dense;
};

// A subset of a state space, stored as a bit per state.
class state_set
{
public:
    state_set() = default;

    static state_set empty( const state_space& space );
    static state_set universe( const state_space& space );
    static state_set of( const state_space& space, std::initializer_list< state_index > members );
    static state_set of( const state_space& space, std::span< const state_index > members );

    [[nodiscard]] const state_space* space() const { return _space; }
    [[nodiscard]] std::size_t universe_size() const { return _size; }

    [[nodiscard]] bool contains( state_index i ) const
    {
        return ( _words[ i >> 6 ] >> ( i & 63 ) ) & 1U;
    }
    void insert( state_index i ) { _words[ i >> 6 ] |= std::uint64_t{ 1 } << ( i & 63 ); }
    void erase( state_index i ) { _words[ i >> 6 ] &= ~( std::uint64_t{ 1 } << ( i & 63 ) ); }

    [[nodiscard]] std::size_t count() const;
    [[nodiscard]] bool is_empty() const;
    [[nodiscard]] bool is_universe() const;
    [[nodiscard]] bool is_subset_of( const state_set& other ) const;

    [[nodiscard]] state_set operator|( const state_set& other ) const;
    [[nodiscard]] state_set operator&( const state_set& other ) const;
    [[nodiscard]] state_set operator-( const state_set& other ) const;
    [[nodiscard]] state_set operator~() const;

    state_set& operator|=( const state_set& other );
    state_set& operator&=( const state_set& other );

    bool operator==( const state_set& other ) const;

    // Members in ascending index order.
    [[nodiscard]] std::vector< state_index > members() const;

    template < typename Fn >
    void for_each( Fn&& fn ) const
    {
        for ( std::size_t w = 0; w < _words.size(); ++w )
        {
            auto word = _words[ w ];
            while ( word != 0 )
            {
                const auto bit = static_cast< unsigned >( __builtin_ctzll( word ) );
                fn( static_cast< state_index >( w * 64 + bit ) );
                word &= word - 1;
            }
        }
    }

private:
    state_set( const state_space& space, bool full );

    void check_same( const state_set& other ) const;
    void trim();

    const state_space* _space = nullptr;
    std::size_t _size = 0;
    std::vector< std::uint64_t > _words;
};

// Named forms of the set algebra, mirroring the operators.
inline state_set set_union( const state_set& a, const state_set& b ) { return a | b; }
inline state_set set_inter( const state_set& a, const state_set& b ) { return a & b; }
inline state_set set_diff( const state_set& a, const state_set& b ) { return a - b; }
inline state_set complement( const state_set& a ) { return ~a; }
inline bool is_subset( const state_set& a, const state_set& b ) { return a.is_subset_of( b ); }

} // namespace fixleads
