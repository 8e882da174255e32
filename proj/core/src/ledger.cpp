#include <stconn/ledger.hpp>

namespace stconn
{

std::int64_t depth_ledger::predicted_stage_sum() const
{
  std::int64_t sum = 0;
  for ( auto const& s : stages )
  {
    sum += s.predicted;
  }
  return sum;
}

std::optional<std::int64_t> depth_ledger::measured_stage_sum() const
{
  std::int64_t sum = 0;
  for ( auto const& s : stages )
  {
    if ( !s.measured )
    {
      return std::nullopt;
    }
    sum += *s.measured;
  }
  return sum;
}

bool depth_ledger::stage_sum_identity_holds() const
{
  auto const sum = measured_stage_sum();
  return sum && total_measured && *sum == *total_measured;
}

void depth_ledger::add( std::string label, std::int64_t predicted, std::optional<std::int64_t> measured )
{
  stages.push_back( { std::move( label ), predicted, measured } );
  total_predicted += predicted;
}

} // namespace stconn
