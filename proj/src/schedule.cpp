#include "acuc/schedule.hpp"

#include <sstream>

namespace acuc {

CommitmentSchedule all_on_schedule(const UcInstance& inst) {
  CommitmentSchedule s;
  const std::size_t ng = inst.n_gens();
  const int T = inst.horizon;
  s.u.assign(ng, std::vector<int>(T, 1));
  s.v.assign(ng, std::vector<int>(T, 0));
  s.w.assign(ng, std::vector<int>(T, 0));
  return s;
}

CommitmentSchedule schedule_from_commitment(const UcInstance& inst,
                                            const std::vector<std::vector<int>>& u) {
  CommitmentSchedule s;
  const int T = inst.horizon;
  s.u = u;
  s.v.assign(u.size(), std::vector<int>(T, 0));
  s.w.assign(u.size(), std::vector<int>(T, 0));
  for (std::size_t g = 0; g < u.size(); ++g) {
    for (int t = 1; t <= T; ++t) {
      const int prev = u[g][wrap_prev(t, T) - 1];
      const int cur = u[g][t - 1];
      if (cur > prev) s.v[g][t - 1] = 1;
      if (prev > cur) s.w[g][t - 1] = 1;
    }
  }
  return s;
}

bool schedule_is_logical(const CommitmentSchedule& sched, const UcInstance& inst,
                         std::string* reason) {
  const int T = inst.horizon;
  auto fail = [&](const std::string& what) {
    if (reason) *reason = what;
    return false;
  };
  if (sched.u.size() != inst.n_gens()) return fail("schedule generator count mismatch");
  for (std::size_t g = 0; g < sched.u.size(); ++g) {
    if (static_cast<int>(sched.u[g].size()) != T) return fail("schedule horizon mismatch");
    const UcGeneratorParams& params = inst.gen_params[g];
    for (int t = 1; t <= T; ++t) {
      const int u = sched.u[g][t - 1];
      const int v = sched.v[g][t - 1];
      const int w = sched.w[g][t - 1];
      const int up = sched.u[g][wrap_prev(t, T) - 1];
      std::ostringstream at;
      at << "gen " << g << " t " << t;
      if ((u != 0 && u != 1) || (v != 0 && v != 1) || (w != 0 && w != 1))
        return fail("non-binary value at " + at.str());
      if (u - up != v - w) return fail("transition equality violated at " + at.str());
      if (v > u) return fail("startup without commitment at " + at.str());
      if (w + u > 1) return fail("shutdown while committed at " + at.str());
      int startups = 0;
      for (int tau : uptime_window(params.min_up, t, T)) startups += sched.v[g][tau - 1];
      if (startups > u) return fail("min-uptime violated at " + at.str());
      int shutdowns = 0;
      for (int tau : downtime_window(params.min_down, t, T))
        shutdowns += sched.w[g][tau - 1];
      if (shutdowns > 1 - u) return fail("min-downtime violated at " + at.str());
    }
  }
  return true;
}

}  // namespace acuc
