#pragma once

#include <string>
#include <vector>

#include "acuc/instance.hpp"

namespace acuc {

/// Binary commitment/startup/shutdown values per generator and period.
struct CommitmentSchedule {
  std::vector<std::vector<int>> u, v, w;  // [gen][t]

  int horizon() const { return u.empty() ? 0 : static_cast<int>(u[0].size()); }
  std::size_t n_gens() const { return u.size(); }
};

CommitmentSchedule all_on_schedule(const UcInstance& inst);

/// Derives v/w from a cyclic u pattern: v marks off->on transitions, w on->off.
CommitmentSchedule schedule_from_commitment(const UcInstance& inst,
                                            const std::vector<std::vector<int>>& u);

/// Checks the full cyclic logical system: transition equalities, startup and
/// shutdown implications, and min-up/min-down windows. Pure function.
bool schedule_is_logical(const CommitmentSchedule& sched, const UcInstance& inst,
                         std::string* reason = nullptr);

}  // namespace acuc
