#include <stconn/constructions.hpp>

#include <stconn/affine_plane.hpp>
#include <stconn/error.hpp>
#include <stconn/predict.hpp>

#include <algorithm>
#include <bit>
#include <cmath>

namespace stconn
{

namespace
{

std::size_t floor_log2( std::size_t x )
{
  return static_cast<std::size_t>( std::bit_width( x ) - 1 );
}

} // namespace

monotone_circuit build_walk_power( std::size_t n, std::size_t t )
{
  monotone_circuit c( n );
  auto cur = wire_matrix::inputs_of( c );
  for ( std::size_t step = 0; step < t; ++step )
  {
    cur = reflexive_square( c, cur );
  }
  c.set_outputs( { cur.row_major().begin(), cur.row_major().end() } );
  return c;
}

built_circuit build_reach_leq( std::size_t n, std::size_t l )
{
  require( n >= 2, "reachability circuit needs n >= 2" );
  require( l >= 1, "path budget must be positive" );
  monotone_circuit c( n );
  auto const t = ceil_log2( l );
  auto cur = wire_matrix::inputs_of( c );
  wire_id out = c.input( 1, n );
  if ( t > 0 )
  {
    for ( std::size_t step = 0; step + 1 < t; ++step )
    {
      cur = reflexive_square( c, cur );
    }
    /* only entry (1,n) of the last power is needed */
    out = reflexive_square_entry( c, cur, 1, n );
  }
  c.add_output( out );

  depth_ledger ledger;
  auto const measured = static_cast<std::int64_t>( measure_depth( c ) );
  ledger.add( "squaring", squaring_depth( n, l ), measured );
  ledger.total_measured = measured;
  return { std::move( c ), std::move( ledger ) };
}

built_circuit build_reach_exact( std::size_t n, std::size_t l )
{
  require( n >= 2, "reachability circuit needs n >= 2" );
  require( l >= 1, "walk length must be positive" );
  monotone_circuit c( n );
  wire_id out = c.input( 1, n );

  auto const top = floor_log2( l );
  auto const single_factor = std::popcount( l ) == 1;
  std::vector<wire_matrix> factors;
  auto power = wire_matrix::inputs_of( c );
  for ( std::size_t bit = 0; bit <= top; ++bit )
  {
    if ( bit > 0 )
    {
      if ( single_factor && bit == top )
      {
        out = bool_product_entry( c, power, power, 1, n );
        break;
      }
      power = bool_matrix_product( c, power, power );
    }
    if ( ( l >> bit ) & 1u )
    {
      factors.push_back( power );
    }
  }

  if ( !single_factor )
  {
    /* balanced product tree; the final product only needs entry (1,n) */
    while ( factors.size() > 2 )
    {
      std::vector<wire_matrix> next;
      for ( std::size_t k = 0; k + 1 < factors.size(); k += 2 )
      {
        next.push_back( bool_matrix_product( c, factors[k], factors[k + 1] ) );
      }
      if ( factors.size() % 2 == 1 )
      {
        next.push_back( factors.back() );
      }
      factors = std::move( next );
    }
    out = bool_product_entry( c, factors[0], factors[1], 1, n );
  }
  c.add_output( out );

  depth_ledger ledger;
  auto const measured = static_cast<std::int64_t>( measure_depth( c ) );
  ledger.add( "powers and product tree", exact_power_depth( n, l ), measured );
  ledger.total_measured = measured;
  return { std::move( c ), std::move( ledger ) };
}

built_circuit build_reach( std::size_t n )
{
  require( n >= 2, "reachability circuit needs n >= 2" );
  return build_reach_leq( n, n - 1 );
}

built_circuit compose_family( covering_family const& family, built_circuit const& inner,
                              std::string const& label_prefix )
{
  auto const& p = family.params();
  require( p.n >= 2, "composition needs n >= 2" );
  require( inner.circuit.num_vertices() == p.s + 2, "inner circuit must have s + 2 vertices" );
  require( inner.circuit.outputs().size() == 1, "inner circuit must have a single output" );

  auto const augmented = augment_with_terminals( family );
  auto const n = p.n;
  auto const slots = p.s + 2;

  monotone_circuit c( n );
  auto closure = wire_matrix::inputs_of( c );
  auto const steps = ceil_log2( 2 * p.d );
  for ( std::size_t step = 0; step < steps; ++step )
  {
    closure = reflexive_square( c, closure );
  }
  std::uint32_t closure_depth_measured = 0;
  for ( auto w : closure.row_major() )
  {
    closure_depth_measured = std::max( closure_depth_measured, c.depth_of( w ) );
  }

  std::vector<wire_id> clone_outputs;
  clone_outputs.reserve( augmented.size() );
  std::vector<std::size_t> slot_vertex( slots + 1 );
  std::vector<wire_id> input_map( slots * slots );
  for ( auto const& set : augmented.sets() )
  {
    std::fill( slot_vertex.begin(), slot_vertex.end(), 0 );
    slot_vertex[1] = 1;
    slot_vertex[slots] = n;
    std::size_t next_slot = 2;
    for ( auto v : set )
    {
      if ( v != 1 && v != n )
      {
        slot_vertex[next_slot++] = v;
      }
    }
    for ( std::size_t a = 1; a <= slots; ++a )
    {
      for ( std::size_t b = 1; b <= slots; ++b )
      {
        auto const u = slot_vertex[a];
        auto const v = slot_vertex[b];
        input_map[( a - 1 ) * slots + ( b - 1 )] = ( u && v ) ? closure( u, v ) : c.zero();
      }
    }
    clone_outputs.push_back( c.append( inner.circuit, input_map ).front() );
  }

  /* deepest copies first so the deepest one sits on a full-height leaf */
  std::stable_sort( clone_outputs.begin(), clone_outputs.end(),
                    [&]( wire_id a, wire_id b ) { return c.depth_of( a ) > c.depth_of( b ); } );
  c.add_output( or_tree( c, clone_outputs ) );

  built_circuit result{ std::move( c ), {} };
  auto& ledger = result.ledger;
  for ( auto const& stage : inner.ledger.stages )
  {
    ledger.add( stage.label, stage.predicted, stage.measured );
  }
  auto const or_levels = static_cast<std::int64_t>( ceil_log2( augmented.size() ) );
  ledger.add( label_prefix + "closure", closure_depth( n, p.d ), closure_depth_measured );
  ledger.add( label_prefix + "or_tree", or_levels, or_levels );
  auto const total = static_cast<std::int64_t>( measure_depth( result.circuit ) );
  ledger.total_measured = total;

  auto const inner_depth = static_cast<double>( measure_depth( inner.circuit ) );
  auto const leading = std::log2( static_cast<double>( p.m ) ) +
                       std::log2( static_cast<double>( n ) ) * std::log2( static_cast<double>( p.d ) ) + inner_depth;
  ledger.overhead = inner.ledger.overhead + ( static_cast<double>( total ) - leading );
  return result;
}

built_circuit build_explicit( std::size_t n )
{
  require( n >= 2, "explicit construction needs n >= 2" );
  auto const family = plane_family( n );
  auto const& p = family.params();
  auto inner = build_reach_leq( p.s + 2, n / p.d );
  inner.ledger.stages.front().label = "inner squaring";
  return compose_family( family, inner );
}

} // namespace stconn
