#pragma once

#include <stconn/graph.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace stconn
{

/*! \brief Handle to one wire of a monotone circuit.
 *
 * Wires are numbered in creation order: the n^2 edge inputs first
 * (row-major, vertex labels 1-based), then the constant-zero wire, then one
 * wire per gate.
 */
struct wire_id
{
  std::uint32_t index = 0;

  auto operator<=>( wire_id const& ) const = default;
};

enum class gate_op : std::uint8_t
{
  and_op,
  or_op
};

struct gate
{
  gate_op op;
  wire_id left;
  wire_id right;

  bool operator==( gate const& ) const = default;
};

/*! \brief Append-only DAG of fan-in-2 AND/OR gates over edge variables.
 *
 * Gates may only reference wires created before them, so the gate list is
 * always a topological order. There is a constant-zero wire but no
 * constant-one wire; every circuit maps the empty graph to 0.
 */
class monotone_circuit
{
public:
  explicit monotone_circuit( std::size_t num_vertices );

  /*! \brief Assembles a circuit from raw parts without checking them.
   *
   * Used by the text reader and by tests that need malformed circuits; call
   * validate() before trusting the result.
   */
  static monotone_circuit from_parts( std::size_t num_vertices, std::vector<gate> gates,
                                      std::vector<wire_id> outputs );

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_inputs() const noexcept { return n_ * n_; }
  std::size_t num_gates() const noexcept { return gates_.size(); }
  std::size_t num_wires() const noexcept { return num_inputs() + 1 + gates_.size(); }

  /* input wire for edge variable g_ij, 1 <= i, j <= n */
  wire_id input( std::size_t i, std::size_t j ) const;
  wire_id zero() const noexcept { return wire_id{ static_cast<std::uint32_t>( num_inputs() ) }; }

  bool is_input( wire_id w ) const noexcept { return w.index < num_inputs(); }
  bool is_gate( wire_id w ) const noexcept { return w.index > num_inputs() && w.index < num_wires(); }
  bool contains( wire_id w ) const noexcept { return w.index < num_wires(); }

  wire_id add_gate( gate_op op, wire_id a, wire_id b );
  wire_id add_and( wire_id a, wire_id b ) { return add_gate( gate_op::and_op, a, b ); }
  wire_id add_or( wire_id a, wire_id b ) { return add_gate( gate_op::or_op, a, b ); }

  void add_output( wire_id w );
  void set_outputs( std::vector<wire_id> outputs );

  std::span<gate const> gates() const noexcept { return gates_; }
  std::span<wire_id const> outputs() const noexcept { return outputs_; }
  gate const& gate_of( wire_id w ) const { return gates_[w.index - num_inputs() - 1]; }

  /* longest gate path from any input or the zero wire to w */
  std::uint32_t depth_of( wire_id w ) const;

  /*! \brief Copies `other` into this circuit.
   *
   * `input_map` has one entry per input of `other` (row-major); the zero
   * wire of `other` maps to the zero wire of this circuit. Returns the
   * images of the outputs of `other`.
   */
  std::vector<wire_id> append( monotone_circuit const& other, std::span<wire_id const> input_map );

  bool operator==( monotone_circuit const& other ) const
  {
    return n_ == other.n_ && gates_ == other.gates_ && outputs_ == other.outputs_;
  }

private:
  monotone_circuit() = default;

  std::size_t n_ = 0;
  std::vector<gate> gates_;
  std::vector<wire_id> outputs_;
  std::vector<std::uint32_t> gate_depth_;
};

/*! \brief n x n matrix of wires of one circuit. */
class wire_matrix
{
public:
  wire_matrix() = default;
  explicit wire_matrix( std::size_t n, wire_id fill = {} ) : n_( n ), wires_( n * n, fill ) {}

  /* the n^2 edge inputs of `circuit` arranged as a matrix */
  static wire_matrix inputs_of( monotone_circuit const& circuit );

  std::size_t size() const noexcept { return n_; }
  wire_id& operator()( std::size_t i, std::size_t j ) { return wires_[( i - 1 ) * n_ + ( j - 1 )]; }
  wire_id operator()( std::size_t i, std::size_t j ) const { return wires_[( i - 1 ) * n_ + ( j - 1 )]; }
  std::span<wire_id const> row_major() const noexcept { return wires_; }

private:
  std::size_t n_ = 0;
  std::vector<wire_id> wires_;
};

/*! \brief OR of all wires as a balanced tree.
 *
 * Adjacent wires are paired level by level, left to right, an odd wire out
 * being carried to the next level. Adds ceil(log2 k) levels.
 */
wire_id or_tree( monotone_circuit& circuit, std::span<wire_id const> wires );

/* entry (i,j) = OR_k (a_ik AND b_kj); adds 1 + ceil(log2 n) levels */
wire_matrix bool_matrix_product( monotone_circuit& circuit, wire_matrix const& a, wire_matrix const& b );

/* a single entry of the boolean product */
wire_id bool_product_entry( monotone_circuit& circuit, wire_matrix const& a, wire_matrix const& b,
                            std::size_t i, std::size_t j );

/*! \brief One squaring step of the reflexive closure.
 *
 * Entry (i,j) of the result is the OR over k of cur(i,j) for k = i and
 * cur(i,k) AND cur(k,j) otherwise, which is the product (C v I)(C) without
 * needing a constant-one wire. If `cur` holds walks of length 1..L, the
 * result holds walks of length 1..2L. Adds exactly 1 + ceil(log2 n) levels
 * for n >= 2.
 */
wire_matrix reflexive_square( monotone_circuit& circuit, wire_matrix const& cur );
wire_id reflexive_square_entry( monotone_circuit& circuit, wire_matrix const& cur, std::size_t i, std::size_t j );

/* single-output evaluation; matrix size must match */
bool evaluate( monotone_circuit const& circuit, adjacency_matrix const& graph );
std::vector<bool> evaluate_all( monotone_circuit const& circuit, adjacency_matrix const& graph );

/*! \brief Problem found by validate(). */
struct violation
{
  std::optional<std::size_t> gate_index;
  std::string message;
};

/* first structural violation, or nullopt when the circuit is well formed */
std::optional<violation> validate( monotone_circuit const& circuit );

/*! \brief Length in gates of the longest input-to-output path.
 *
 * Only paths ending at an output count. Inputs and the zero wire have
 * depth 0. Throws on a structurally invalid circuit.
 */
std::uint32_t measure_depth( monotone_circuit const& circuit );

/* ceil(log2 x) for x >= 1 */
std::uint32_t ceil_log2( std::uint64_t x );

} // namespace stconn
