#include <stconn/evaluator.hpp>

#include <stconn/error.hpp>

#include <algorithm>

namespace stconn
{

batch_evaluator::batch_evaluator( monotone_circuit const& circuit )
    : n_( circuit.num_vertices() )
{
  if ( auto v = validate( circuit ) )
  {
    throw error( error_kind::invalid_reference, "cannot evaluate invalid circuit: " + v->message );
  }
  auto const num_inputs = circuit.num_inputs();
  auto const base = num_inputs + 1;
  auto const gates = circuit.gates();

  std::vector<std::uint8_t> live( circuit.num_wires(), 0 );
  for ( auto o : circuit.outputs() )
  {
    live[o.index] = 1;
  }
  for ( std::size_t g = gates.size(); g-- > 0; )
  {
    if ( live[base + g] )
    {
      live[gates[g].left.index] = 1;
      live[gates[g].right.index] = 1;
    }
  }

  /* slots 0..num_inputs are inputs and zero, live gates follow */
  std::vector<std::uint32_t> slot( circuit.num_wires(), 0 );
  for ( std::size_t w = 0; w < base; ++w )
  {
    slot[w] = static_cast<std::uint32_t>( w );
  }
  auto next = static_cast<std::uint32_t>( base );
  for ( std::size_t g = 0; g < gates.size(); ++g )
  {
    if ( !live[base + g] )
    {
      continue;
    }
    auto const& gt = gates[g];
    program_.push_back( { slot[gt.left.index], slot[gt.right.index], gt.op == gate_op::and_op ? 1u : 0u } );
    slot[base + g] = next++;
  }
  for ( auto o : circuit.outputs() )
  {
    outputs_.push_back( slot[o.index] );
  }
}

std::vector<std::uint64_t> batch_evaluator::run_words( std::span<std::uint64_t const> input_words ) const
{
  auto const num_inputs = n_ * n_;
  require( input_words.size() == num_inputs, "input word count does not match circuit" );
  std::vector<std::uint64_t> value( num_inputs + 1 + program_.size() );
  std::copy( input_words.begin(), input_words.end(), value.begin() );
  value[num_inputs] = 0;
  auto* out = value.data() + num_inputs + 1;
  auto const* v = value.data();
  for ( auto const& s : program_ )
  {
    auto const a = v[s.left];
    auto const b = v[s.right];
    *out++ = s.is_and ? ( a & b ) : ( a | b );
  }
  std::vector<std::uint64_t> result;
  result.reserve( outputs_.size() );
  for ( auto o : outputs_ )
  {
    result.push_back( value[o] );
  }
  return result;
}

std::vector<std::uint64_t> batch_evaluator::run( std::span<adjacency_matrix const> graphs ) const
{
  require( graphs.size() <= 64, "at most 64 graphs per batch" );
  std::vector<std::uint64_t> words( n_ * n_, 0 );
  for ( std::size_t k = 0; k < graphs.size(); ++k )
  {
    require( graphs[k].size() == n_, "graph size does not match circuit" );
    auto const bit = std::uint64_t{ 1 } << k;
    for ( std::size_t i = 1; i <= n_; ++i )
    {
      for ( std::size_t j = 1; j <= n_; ++j )
      {
        if ( graphs[k]( i, j ) )
        {
          words[( i - 1 ) * n_ + ( j - 1 )] |= bit;
        }
      }
    }
  }
  return run_words( words );
}

std::vector<std::uint8_t> batch_evaluator::evaluate_many( std::span<adjacency_matrix const> graphs ) const
{
  require( !outputs_.empty(), "circuit has no outputs" );
  std::vector<std::uint8_t> result( graphs.size() );
  for ( std::size_t start = 0; start < graphs.size(); start += 64 )
  {
    auto const count = std::min<std::size_t>( 64, graphs.size() - start );
    auto const words = run( graphs.subspan( start, count ) );
    for ( std::size_t k = 0; k < count; ++k )
    {
      result[start + k] = static_cast<std::uint8_t>( ( words.front() >> k ) & 1u );
    }
  }
  return result;
}

} // namespace stconn
