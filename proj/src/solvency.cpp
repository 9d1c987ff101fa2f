#include "rsdm/solvency.hpp"

#include <algorithm>
#include <map>

#include "rsdm/errors.hpp"

namespace rsdm {
namespace {

void require_nonnegative(const Decimal& value, const char* what) {
  if (value.sign() < 0) throw DomainError(std::string(what) + " must be nonnegative");
}

void require_valid(const std::vector<std::string>& violations) {
  if (violations.empty()) return;
  std::string message = violations.front();
  for (std::size_t i = 1; i < violations.size(); ++i) message += "; " + violations[i];
  throw DomainError(message);
}

}  // namespace

FeeSchedule FeeSchedule::flat(Decimal fee, Decimal rate) {
  FeeSchedule s;
  s.kind = FeeKind::Flat;
  s.flat_fee_per_token = std::move(fee);
  s.warehouse_rate = std::move(rate);
  return s;
}

FeeSchedule FeeSchedule::deadline(DayNumber deadline, Decimal rate) {
  FeeSchedule s;
  s.kind = FeeKind::DeadlineBased;
  s.deadline_day = deadline;
  s.warehouse_rate = std::move(rate);
  return s;
}

FeeSchedule FeeSchedule::mean_holding(Decimal mean_days, Decimal rate) {
  FeeSchedule s;
  s.kind = FeeKind::MeanHoldingBased;
  s.mean_holding_days = std::move(mean_days);
  s.warehouse_rate = std::move(rate);
  return s;
}

std::vector<std::string> validate_schedule(const FeeSchedule& schedule) {
  std::vector<std::string> out;
  if (schedule.warehouse_rate.sign() < 0) out.emplace_back("warehouse rate must be ≥ 0");
  switch (schedule.kind) {
    case FeeKind::Flat:
      if (!schedule.flat_fee_per_token) {
        out.emplace_back("flat schedule requires flat_fee_per_token");
      } else if (schedule.flat_fee_per_token->sign() < 0) {
        out.emplace_back("flat fee must be ≥ 0");
      }
      break;
    case FeeKind::DeadlineBased:
      if (!schedule.deadline_day) out.emplace_back("deadline schedule requires deadline_day");
      break;
    case FeeKind::MeanHoldingBased:
      if (!schedule.mean_holding_days) {
        out.emplace_back("mean-holding schedule requires mean_holding_days");
      } else if (schedule.mean_holding_days->sign() < 0) {
        out.emplace_back("mean holding days must be ≥ 0");
      }
      break;
  }
  return out;
}

std::vector<std::string> validate_records(const std::vector<RedemptionRecord>& records) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    const std::string where = "record " + std::to_string(i) + " (" + r.customer_id + ")";
    if (r.token_count == 0) out.push_back(where + ": token_count must be > 0");
    if (r.redemption_day && *r.redemption_day < r.purchase_day) {
      out.push_back(where + ": redemption_day precedes purchase_day");
    }
  }
  return out;
}

Decimal gross_profit(const std::vector<RedemptionRecord>& records, const Decimal& flat_fee) {
  require_nonnegative(flat_fee, "flat fee");
  mpz_class tokens = 0;
  for (const auto& r : records) tokens += mpz_class(static_cast<unsigned long>(r.token_count));
  return flat_fee * Decimal(tokens, 0);
}

Decimal warehouse_cost(const std::vector<RedemptionRecord>& records, const Decimal& rate,
                       DayNumber as_of_day) {
  require_nonnegative(rate, "warehouse rate");
  require_valid(validate_records(records));
  mpz_class token_days = 0;
  for (const auto& r : records) {
    if (as_of_day < r.purchase_day) {
      throw DomainError("as_of_day precedes the purchase of " + r.customer_id);
    }
    const DayNumber end = r.redemption_day ? std::min(*r.redemption_day, as_of_day) : as_of_day;
    token_days += mpz_class(static_cast<unsigned long>(r.token_count)) *
                  mpz_class(static_cast<long>(end - r.purchase_day));
  }
  return rate * Decimal(token_days, 0);
}

bool is_bankrupt(const Decimal& profit, const Decimal& cost) { return profit < cost; }

std::optional<std::int64_t> breakeven_horizon(const Decimal& flat_fee, const Decimal& rate) {
  require_nonnegative(flat_fee, "flat fee");
  require_nonnegative(rate, "warehouse rate");
  if (rate.is_zero()) return std::nullopt;
  const mpz_class days = floor_quotient(flat_fee, rate) + 1;
  if (!days.fits_slong_p()) throw DomainError("breakeven horizon out of range");
  return days.get_si();
}

Decimal deadline_fee(DayNumber purchase_day, DayNumber deadline_day, const Decimal& rate) {
  require_nonnegative(rate, "warehouse rate");
  if (deadline_day < purchase_day) throw DomainError("deadline precedes purchase");
  return Decimal(static_cast<long>(deadline_day - purchase_day)) * rate;
}

Decimal mean_holding_fee(const Decimal& mean_days, const Decimal& rate) {
  require_nonnegative(mean_days, "mean holding days");
  require_nonnegative(rate, "warehouse rate");
  return mean_days * rate;
}

bool case3_insolvent(const IssuerBook& book) {
  return book.own_reserves + book.period_income < book.period_expenses;
}

Decimal fee_per_token(const FeeSchedule& schedule, const RedemptionRecord& record) {
  require_valid(validate_schedule(schedule));
  switch (schedule.kind) {
    case FeeKind::Flat:
      return *schedule.flat_fee_per_token;
    case FeeKind::DeadlineBased:
      return deadline_fee(record.purchase_day, *schedule.deadline_day, schedule.warehouse_rate);
    case FeeKind::MeanHoldingBased:
      return mean_holding_fee(*schedule.mean_holding_days, schedule.warehouse_rate);
  }
  return Decimal();
}

SolvencyTimeline simulate_issuer(const std::vector<RedemptionRecord>& records,
                                 const FeeSchedule& schedule, DayNumber horizon_day) {
  require_valid(validate_schedule(schedule));
  require_valid(validate_records(records));
  SolvencyTimeline timeline;
  if (records.empty()) return timeline;

  DayNumber start = records.front().purchase_day;
  for (const auto& r : records) {
    start = std::min(start, r.purchase_day);
    if (r.purchase_day > horizon_day) {
      throw DomainError("horizon precedes the purchase of " + r.customer_id);
    }
  }

  // Day-indexed deltas: fees booked and tokens entering/leaving the vault.
  std::map<DayNumber, Decimal> fees_on;
  std::map<DayNumber, mpz_class> held_delta;
  const Decimal& rate = schedule.warehouse_rate;
  for (const auto& r : records) {
    const mpz_class n(static_cast<unsigned long>(r.token_count));
    const Decimal fee = fee_per_token(schedule, r);
    fees_on[r.purchase_day] += fee * Decimal(n, 0);
    held_delta[r.purchase_day] += n;
    if (r.redemption_day) held_delta[*r.redemption_day] -= n;

    if (rate.sign() > 0) {
      const DayNumber breach = r.purchase_day + floor_quotient(fee, rate).get_si() + 1;
      const DayNumber last = r.redemption_day ? std::min(*r.redemption_day, horizon_day)
                                              : horizon_day;
      if (breach <= last && (!timeline.first_position_breach_day ||
                             breach < *timeline.first_position_breach_day)) {
        timeline.first_position_breach_day = breach;
      }
    }
  }

  Decimal profit;
  Decimal cost;
  mpz_class held = 0;  // tokens in the vault at the end of the previous day
  timeline.rows.reserve(static_cast<std::size_t>(horizon_day - start + 1));
  for (DayNumber day = start; day <= horizon_day; ++day) {
    cost += rate * Decimal(held, 0);
    if (auto it = fees_on.find(day); it != fees_on.end()) profit += it->second;
    if (auto it = held_delta.find(day); it != held_delta.end()) held += it->second;
    const bool bankrupt = is_bankrupt(profit, cost);
    if (bankrupt && !timeline.first_bankrupt_day) timeline.first_bankrupt_day = day;
    timeline.rows.push_back({day, profit, cost, bankrupt});
  }
  return timeline;
}

}  // namespace rsdm
