#pragma once

#include <stconn/circuit.hpp>
#include <stconn/graph.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace stconn
{

/*! \brief Bit-parallel evaluator for one circuit and up to 64 graphs per pass.
 *
 * Gates that cannot reach an output are dropped at construction time and
 * the rest are renumbered densely. Graph k of a batch occupies bit k of every
 * wire word. The evaluator is immutable after construction; run() keeps its
 * scratch space on the caller's stack, so one evaluator may be shared across
 * threads.
 */
class batch_evaluator
{
public:
  explicit batch_evaluator( monotone_circuit const& circuit );

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_outputs() const noexcept { return outputs_.size(); }
  std::size_t live_gates() const noexcept { return program_.size(); }

  /* one word per output; bit k is the value on graphs[k]; graphs.size() <= 64 */
  std::vector<std::uint64_t> run( std::span<adjacency_matrix const> graphs ) const;

  /* inputs given directly as words, one per edge variable in row-major order */
  std::vector<std::uint64_t> run_words( std::span<std::uint64_t const> input_words ) const;

  /* value of the first output on every graph */
  std::vector<std::uint8_t> evaluate_many( std::span<adjacency_matrix const> graphs ) const;

private:
  struct step
  {
    std::uint32_t left;
    std::uint32_t right;
    std::uint32_t is_and;
  };

  std::size_t n_;
  std::vector<step> program_;
  std::vector<std::uint32_t> outputs_;
};

} // namespace stconn
