#include "redpoctor/budget.hpp"

#include <algorithm>
#include <cmath>

namespace redpoctor {

void AllocationParams::validate() const {
  if (!(phi > 0.0)) {
    throw Error("allocation.phi must be > 0");
  }
  if (!(p_max > 0.0 && p_max <= 1.0)) {
    throw Error("allocation.p_max must be in (0, 1]");
  }
  if (!(epsilon_max > 0.0)) {
    throw Error("allocation.epsilon_max must be > 0");
  }
  if (!(q > 0.0 && q < 1.0)) {
    throw Error("allocation.q must be strictly between 0 and 1");
  }
}

BudgetLedger::BudgetLedger(int w, double epsilon_total)
    : w_(w), epsilon_total_(epsilon_total) {
  if (w < 1) {
    throw Error("window length w must be >= 1");
  }
  if (!(epsilon_total > 0.0)) {
    throw Error("epsilon_total must be > 0");
  }
}

double BudgetLedger::spend_on(int day) const {
  const auto it = spends_.find(day);
  return it == spends_.end() ? 0.0 : it->second;
}

double BudgetLedger::window_sum(int day) const {
  double sum = 0.0;
  const int lo = day - w_ + 1;
  for (auto it = spends_.lower_bound(lo); it != spends_.end() && it->first <= day;
       ++it) {
    sum += it->second;
  }
  return sum;
}

double remaining_budget(const BudgetLedger& ledger, int day) {
  double spent = 0.0;
  const int lo = day - ledger.window() + 1;
  for (auto it = ledger.spends().lower_bound(lo);
       it != ledger.spends().end() && it->first <= day - 1; ++it) {
    spent += it->second;
  }
  return std::max(0.0, ledger.epsilon_total() - spent);
}

BudgetLedger record_spend(const BudgetLedger& ledger, int day, double eps) {
  if (!(eps >= 0.0)) {
    throw Error("spend must be >= 0");
  }
  if (ledger.spends_.count(day) != 0) {
    throw DuplicateDay(day);
  }
  // The window check for `day` needs every spend in [day - w + 1, day].
  if (std::max(1, day - ledger.w_ + 1) < ledger.pruned_below_) {
    throw Error("spend for day " + std::to_string(day) +
                " predates the pruned window");
  }

  BudgetLedger next = ledger;
  next.spends_[day] = eps;
  const double sum = next.window_sum(day);
  if (sum > next.epsilon_total_ + BudgetLedger::kWindowTolerance) {
    throw WindowBudgetExceeded(day, sum);
  }

  // Keep two windows of history so any day inside the newest window can
  // still be recorded and checked; older spends can never appear in a
  // window sum again.
  const int newest = next.spends_.rbegin()->first;
  const int cutoff = newest - 2 * (next.w_ - 1);
  if (cutoff > next.pruned_below_) {
    next.spends_.erase(next.spends_.begin(), next.spends_.lower_bound(cutoff));
    next.pruned_below_ = cutoff;
  }
  return next;
}

double allocate_budget(double eps_r, int interval, const AllocationParams& params) {
  const double p =
      std::min(std::log(params.phi * static_cast<double>(interval) + 1.0),
               params.p_max);
  return std::min(p * eps_r, params.epsilon_max);
}

}  // namespace redpoctor
