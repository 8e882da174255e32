#pragma once

#include <stconn/circuit.hpp>
#include <stconn/family.hpp>
#include <stconn/ledger.hpp>

#include <cstddef>
#include <string>

namespace stconn
{

struct built_circuit
{
  monotone_circuit circuit;
  depth_ledger ledger;
};

/*! \brief All n^2 entries of the reflexive power (A v I)^(2^t), off the diagonal.
 *
 * Output (i,j), i != j, is 1 iff the input graph has a walk i -> j of at
 * most 2^t edges; diagonal outputs report closed walks of 1..2^t edges.
 * t = 0 returns the input wires unchanged. Depth is t * (1 + ceil(log2 n))
 * for n >= 2.
 */
monotone_circuit build_walk_power( std::size_t n, std::size_t t );

/* promise circuit for "path of length <= l from 1 to n" by ceil(log2 l) reflexive squarings */
built_circuit build_reach_leq( std::size_t n, std::size_t l );

/*! \brief Walk of exactly l edges from 1 to n.
 *
 * Squarings give A^(2^i); the factors for the set bits of l are combined by
 * a balanced product tree, left to right.
 */
built_circuit build_reach_exact( std::size_t n, std::size_t l );

/* total reachability from 1 to n, build_reach_leq(n, n - 1) */
built_circuit build_reach( std::size_t n );

/*! \brief Lifts an inner promise circuit over s + 2 vertices to n vertices.
 *
 * Every set gains the terminals 1 and n. A closure block computes the
 * 2^ceil(log2 2d) reflexive power of the input graph. For each set a copy
 * of `inner` reads the closure restricted to the set: slot 1 is vertex 1,
 * slot s + 2 is vertex n and the middle slots take the remaining members in
 * ascending order; slots without a member read the zero wire. The copies
 * are OR-ed by a balanced tree, deepest copies first (ties in set order).
 *
 * `family` must satisfy the covering condition; this is not re-checked.
 */
built_circuit compose_family( covering_family const& family, built_circuit const& inner,
                              std::string const& label_prefix = {} );

/* plane_family(n) composed with build_reach_leq(q + 2, [n/d]); realizes total reachability */
built_circuit build_explicit( std::size_t n );

} // namespace stconn
