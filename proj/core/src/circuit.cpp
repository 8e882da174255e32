#include <stconn/circuit.hpp>

#include <stconn/error.hpp>

#include <algorithm>
#include <bit>
#include <limits>

namespace stconn
{

std::uint32_t ceil_log2( std::uint64_t x )
{
  require( x >= 1, "ceil_log2 of zero" );
  return x == 1 ? 0u : static_cast<std::uint32_t>( std::bit_width( x - 1 ) );
}

monotone_circuit::monotone_circuit( std::size_t num_vertices )
    : n_( num_vertices )
{
  require( num_vertices >= 1, "circuit needs at least one vertex" );
  require( num_vertices <= 46340, "vertex count too large for 32-bit wire ids" );
}

monotone_circuit monotone_circuit::from_parts( std::size_t num_vertices, std::vector<gate> gates,
                                               std::vector<wire_id> outputs )
{
  require( num_vertices >= 1, "circuit needs at least one vertex" );
  monotone_circuit c;
  c.n_ = num_vertices;
  c.gates_ = std::move( gates );
  c.outputs_ = std::move( outputs );
  /* forward or dangling references get depth 0 here; validate() reports them */
  c.gate_depth_.resize( c.gates_.size(), 0 );
  auto const base = c.num_inputs() + 1;
  for ( std::size_t g = 0; g < c.gates_.size(); ++g )
  {
    auto depth_or_zero = [&]( wire_id w ) -> std::uint32_t {
      if ( w.index >= base && w.index - base < g )
      {
        return c.gate_depth_[w.index - base];
      }
      return 0;
    };
    c.gate_depth_[g] = 1 + std::max( depth_or_zero( c.gates_[g].left ), depth_or_zero( c.gates_[g].right ) );
  }
  return c;
}

wire_id monotone_circuit::input( std::size_t i, std::size_t j ) const
{
  require( i >= 1 && j >= 1 && i <= n_ && j <= n_, "input index out of range" );
  return wire_id{ static_cast<std::uint32_t>( ( i - 1 ) * n_ + ( j - 1 ) ) };
}

wire_id monotone_circuit::add_gate( gate_op op, wire_id a, wire_id b )
{
  if ( !contains( a ) || !contains( b ) )
  {
    throw error( error_kind::invalid_reference, "gate references a wire that does not exist" );
  }
  if ( num_wires() >= std::numeric_limits<std::uint32_t>::max() )
  {
    throw error( error_kind::invalid_parameter, "circuit exceeds 32-bit wire ids" );
  }
  auto const id = wire_id{ static_cast<std::uint32_t>( num_wires() ) };
  gates_.push_back( { op, a, b } );
  gate_depth_.push_back( 1 + std::max( depth_of( a ), depth_of( b ) ) );
  return id;
}

void monotone_circuit::add_output( wire_id w )
{
  if ( !contains( w ) )
  {
    throw error( error_kind::invalid_reference, "output references a wire that does not exist" );
  }
  outputs_.push_back( w );
}

void monotone_circuit::set_outputs( std::vector<wire_id> outputs )
{
  for ( auto w : outputs )
  {
    if ( !contains( w ) )
    {
      throw error( error_kind::invalid_reference, "output references a wire that does not exist" );
    }
  }
  outputs_ = std::move( outputs );
}

std::uint32_t monotone_circuit::depth_of( wire_id w ) const
{
  if ( w.index <= num_inputs() )
  {
    return 0;
  }
  auto const g = w.index - num_inputs() - 1;
  return g < gate_depth_.size() ? gate_depth_[g] : 0;
}

std::vector<wire_id> monotone_circuit::append( monotone_circuit const& other, std::span<wire_id const> input_map )
{
  require( input_map.size() == other.num_inputs(), "input map size mismatch" );
  std::vector<wire_id> image( other.num_wires() );
  std::copy( input_map.begin(), input_map.end(), image.begin() );
  image[other.num_inputs()] = zero();
  auto w = other.num_inputs() + 1;
  for ( auto const& g : other.gates_ )
  {
    image[w++] = add_gate( g.op, image[g.left.index], image[g.right.index] );
  }
  std::vector<wire_id> outs;
  outs.reserve( other.outputs_.size() );
  for ( auto o : other.outputs_ )
  {
    outs.push_back( image[o.index] );
  }
  return outs;
}

wire_matrix wire_matrix::inputs_of( monotone_circuit const& circuit )
{
  auto const n = circuit.num_vertices();
  wire_matrix m( n );
  for ( std::size_t i = 1; i <= n; ++i )
  {
    for ( std::size_t j = 1; j <= n; ++j )
    {
      m( i, j ) = circuit.input( i, j );
    }
  }
  return m;
}

wire_id or_tree( monotone_circuit& circuit, std::span<wire_id const> wires )
{
  require( !wires.empty(), "or_tree needs at least one wire" );
  std::vector<wire_id> level( wires.begin(), wires.end() );
  while ( level.size() > 1 )
  {
    std::vector<wire_id> next;
    next.reserve( ( level.size() + 1 ) / 2 );
    for ( std::size_t k = 0; k + 1 < level.size(); k += 2 )
    {
      next.push_back( circuit.add_or( level[k], level[k + 1] ) );
    }
    if ( level.size() % 2 == 1 )
    {
      next.push_back( level.back() );
    }
    level = std::move( next );
  }
  return level.front();
}

wire_id bool_product_entry( monotone_circuit& circuit, wire_matrix const& a, wire_matrix const& b,
                            std::size_t i, std::size_t j )
{
  auto const n = a.size();
  std::vector<wire_id> terms;
  terms.reserve( n );
  for ( std::size_t k = 1; k <= n; ++k )
  {
    terms.push_back( circuit.add_and( a( i, k ), b( k, j ) ) );
  }
  return or_tree( circuit, terms );
}

wire_matrix bool_matrix_product( monotone_circuit& circuit, wire_matrix const& a, wire_matrix const& b )
{
  require( a.size() == b.size() && a.size() >= 1, "matrix product dimension mismatch" );
  auto const n = a.size();
  wire_matrix result( n );
  for ( std::size_t i = 1; i <= n; ++i )
  {
    for ( std::size_t j = 1; j <= n; ++j )
    {
      result( i, j ) = bool_product_entry( circuit, a, b, i, j );
    }
  }
  return result;
}

wire_id reflexive_square_entry( monotone_circuit& circuit, wire_matrix const& cur, std::size_t i, std::size_t j )
{
  auto const n = cur.size();
  std::vector<wire_id> terms;
  terms.reserve( n );
  for ( std::size_t k = 1; k <= n; ++k )
  {
    terms.push_back( k == i ? cur( i, j ) : circuit.add_and( cur( i, k ), cur( k, j ) ) );
  }
  return or_tree( circuit, terms );
}

wire_matrix reflexive_square( monotone_circuit& circuit, wire_matrix const& cur )
{
  auto const n = cur.size();
  wire_matrix next( n );
  for ( std::size_t i = 1; i <= n; ++i )
  {
    for ( std::size_t j = 1; j <= n; ++j )
    {
      next( i, j ) = reflexive_square_entry( circuit, cur, i, j );
    }
  }
  return next;
}

namespace
{

std::vector<std::uint8_t> wire_values( monotone_circuit const& circuit, adjacency_matrix const& graph )
{
  require( graph.size() == circuit.num_vertices(), "graph size does not match circuit" );
  auto const n = circuit.num_vertices();
  std::vector<std::uint8_t> value( circuit.num_wires(), 0 );
  for ( std::size_t i = 1; i <= n; ++i )
  {
    for ( std::size_t j = 1; j <= n; ++j )
    {
      value[( i - 1 ) * n + ( j - 1 )] = graph( i, j ) ? 1 : 0;
    }
  }
  auto w = circuit.num_inputs() + 1;
  for ( auto const& g : circuit.gates() )
  {
    auto const a = value[g.left.index];
    auto const b = value[g.right.index];
    value[w++] = g.op == gate_op::and_op ? ( a & b ) : ( a | b );
  }
  return value;
}

} // namespace

std::vector<bool> evaluate_all( monotone_circuit const& circuit, adjacency_matrix const& graph )
{
  if ( auto v = validate( circuit ) )
  {
    throw error( error_kind::invalid_reference, "cannot evaluate invalid circuit: " + v->message );
  }
  auto const value = wire_values( circuit, graph );
  std::vector<bool> out;
  out.reserve( circuit.outputs().size() );
  for ( auto o : circuit.outputs() )
  {
    out.push_back( value[o.index] != 0 );
  }
  return out;
}

bool evaluate( monotone_circuit const& circuit, adjacency_matrix const& graph )
{
  require( circuit.outputs().size() == 1, "evaluate expects a single-output circuit" );
  return evaluate_all( circuit, graph ).front();
}

std::optional<violation> validate( monotone_circuit const& circuit )
{
  auto const gates = circuit.gates();
  auto const base = circuit.num_inputs() + 1;
  for ( std::size_t g = 0; g < gates.size(); ++g )
  {
    auto const& gt = gates[g];
    if ( gt.op != gate_op::and_op && gt.op != gate_op::or_op )
    {
      return violation{ g, "gate " + std::to_string( g ) + " has an operator outside {AND, OR}" };
    }
    auto const own = base + g;
    for ( auto w : { gt.left, gt.right } )
    {
      if ( w.index >= own )
      {
        return violation{ g, "gate " + std::to_string( g ) + " references wire " + std::to_string( w.index ) +
                                 " which is not created before it" };
      }
    }
  }
  if ( circuit.outputs().empty() )
  {
    return violation{ std::nullopt, "circuit has no outputs" };
  }
  for ( auto o : circuit.outputs() )
  {
    if ( !circuit.contains( o ) )
    {
      return violation{ std::nullopt, "output references missing wire " + std::to_string( o.index ) };
    }
  }
  return std::nullopt;
}

std::uint32_t measure_depth( monotone_circuit const& circuit )
{
  if ( auto v = validate( circuit ) )
  {
    throw error( error_kind::invalid_reference, "cannot measure invalid circuit: " + v->message );
  }
  /* recomputed from scratch so the answer does not rely on cached state */
  auto const base = circuit.num_inputs() + 1;
  auto const gates = circuit.gates();
  std::vector<std::uint32_t> depth( gates.size() );
  auto depth_of = [&]( wire_id w ) { return w.index < base ? 0u : depth[w.index - base]; };
  for ( std::size_t g = 0; g < gates.size(); ++g )
  {
    depth[g] = 1 + std::max( depth_of( gates[g].left ), depth_of( gates[g].right ) );
  }
  std::uint32_t result = 0;
  for ( auto o : circuit.outputs() )
  {
    result = std::max( result, depth_of( o ) );
  }
  return result;
}

} // namespace stconn
