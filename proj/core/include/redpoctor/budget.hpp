#pragma once

#include <map>

#include "redpoctor/errors.hpp"

namespace redpoctor {

/// Knobs of the adaptive per-sample budget allocation.
struct AllocationParams {
  double phi = 0.2;          // scale factor of the log portion
  double p_max = 0.6;        // cap on the allocated portion, in (0, 1]
  double epsilon_max = 1.5;  // cap on a single-day spend
  double q = 0.2;            // fraction of a spend that goes to partitioning

  /// Throws Error if any field is out of range.
  void validate() const;
};

/// Sliding-window privacy ledger: per-day epsilon spends with the invariant
/// that every w-day window sums to at most epsilon_total (within 1e-12).
///
/// Ledger values are immutable; record_spend returns a new ledger. Spends
/// that fell more than a window behind the newest recorded day are pruned
/// lazily, which never affects window sums for days at or after the newest
/// recorded day.
class BudgetLedger {
 public:
  BudgetLedger(int w, double epsilon_total);

  int window() const { return w_; }
  double epsilon_total() const { return epsilon_total_; }

  /// Spend recorded for `day`, or 0 if none.
  double spend_on(int day) const;

  /// Sum of spends over [day - w + 1, day]; days < 1 contribute 0.
  double window_sum(int day) const;

  const std::map<int, double>& spends() const { return spends_; }

  static constexpr double kWindowTolerance = 1e-12;

 private:
  friend BudgetLedger record_spend(const BudgetLedger&, int, double);

  int w_;
  double epsilon_total_;
  int pruned_below_ = 1;  // days < this may have been discarded
  std::map<int, double> spends_;
};

/// Budget still available for `day`: epsilon_total minus the spends over
/// [day - w + 1, day - 1], clipped below at 0 (floating-point residue can
/// otherwise surface as a tiny negative).
double remaining_budget(const BudgetLedger& ledger, int day);

/// Returns a new ledger with `eps` recorded on `day`.
///
/// Rejects spends that would break the window invariant
/// (WindowBudgetExceeded — a pipeline bug, never expected in correct
/// operation) and days recorded twice (DuplicateDay).
BudgetLedger record_spend(const BudgetLedger& ledger, int day, double eps);

/// Portion-based allocation for a sampling day:
///   p = min(ln(phi * interval + 1), p_max),  result = min(p * eps_r, epsilon_max).
/// Monotone non-decreasing in both `eps_r` and `interval`.
double allocate_budget(double eps_r, int interval, const AllocationParams& params);

}  // namespace redpoctor
