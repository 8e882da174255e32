#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stconn
{

struct ledger_stage
{
  std::string label;
  std::int64_t predicted = 0;
  std::optional<std::int64_t> measured;
};

/*! \brief Per-stage depth accounting of a construction.
 *
 * Predicted terms are upper bounds from the stage formulas; measured terms
 * come from the emitted gates. `overhead` is the slack of the total over
 * the leading terms log2 m + log2 n * log2 d (+ inner depth), summed over
 * composition levels; it is informational only.
 */
struct depth_ledger
{
  std::vector<ledger_stage> stages;
  std::int64_t total_predicted = 0;
  std::optional<std::int64_t> total_measured;
  double overhead = 0.0;

  std::int64_t predicted_stage_sum() const;

  /* nullopt if any stage is unmeasured */
  std::optional<std::int64_t> measured_stage_sum() const;

  /* total_measured equals the sum of measured stage contributions */
  bool stage_sum_identity_holds() const;

  void add( std::string label, std::int64_t predicted, std::optional<std::int64_t> measured );
};

} // namespace stconn
