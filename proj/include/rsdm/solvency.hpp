#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsdm/days.hpp"
#include "rsdm/decimal.hpp"

namespace rsdm {

/// One customer's purchase and (possibly pending) redemption of n tokens.
struct RedemptionRecord {
  std::string customer_id;
  std::uint64_t token_count = 0;
  DayNumber purchase_day = 0;
  std::optional<DayNumber> redemption_day;  // empty while the position is open

  friend bool operator==(const RedemptionRecord&, const RedemptionRecord&) = default;
};

enum class FeeKind { Flat, DeadlineBased, MeanHoldingBased };

/// How the issuer prices storage, and what storage costs it (alpha per token per day).
struct FeeSchedule {
  FeeKind kind = FeeKind::Flat;
  std::optional<Decimal> flat_fee_per_token;  // Flat
  std::optional<DayNumber> deadline_day;      // DeadlineBased
  std::optional<Decimal> mean_holding_days;   // MeanHoldingBased
  Decimal warehouse_rate{0};

  static FeeSchedule flat(Decimal fee, Decimal rate);
  static FeeSchedule deadline(DayNumber deadline, Decimal rate);
  static FeeSchedule mean_holding(Decimal mean_days, Decimal rate);
};

std::vector<std::string> validate_schedule(const FeeSchedule& schedule);
std::vector<std::string> validate_records(const std::vector<RedemptionRecord>& records);

/// Balance sheet of an issuer that invests customer collateral.
struct IssuerBook {
  Decimal own_reserves{0};
  Decimal customer_deposits{0};
  Decimal period_income{0};  // may be negative
  Decimal period_expenses{0};
};

/// Sum of flat_fee * n_k.
Decimal gross_profit(const std::vector<RedemptionRecord>& records, const Decimal& flat_fee);

/// Sum of rate * n_k * holding days, where open positions (and positions redeemed
/// after as_of_day) are held through as_of_day.
Decimal warehouse_cost(const std::vector<RedemptionRecord>& records, const Decimal& rate,
                       DayNumber as_of_day);

/// profit < cost. Equality is solvent.
bool is_bankrupt(const Decimal& profit, const Decimal& cost);

/// Smallest whole holding duration d with d > flat_fee / rate; empty when rate is
/// zero (the issuer never goes bankrupt).
std::optional<std::int64_t> breakeven_horizon(const Decimal& flat_fee, const Decimal& rate);

/// Fee that prefunds storage from purchase to deadline: (deadline - purchase) * rate.
Decimal deadline_fee(DayNumber purchase_day, DayNumber deadline_day, const Decimal& rate);

/// mean_days * rate.
Decimal mean_holding_fee(const Decimal& mean_days, const Decimal& rate);

/// own reserves + income < expenses.
bool case3_insolvent(const IssuerBook& book);

/// Fee per token charged to this record under the schedule.
Decimal fee_per_token(const FeeSchedule& schedule, const RedemptionRecord& record);

struct TimelineRow {
  DayNumber day = 0;
  Decimal cumulative_profit;
  Decimal cumulative_cost;
  bool bankrupt = false;
};

struct SolvencyTimeline {
  std::vector<TimelineRow> rows;
  /// First day the aggregate book is bankrupt.
  std::optional<DayNumber> first_bankrupt_day;
  /// First day any single position's fee no longer covers its own storage.
  std::optional<DayNumber> first_position_breach_day;
};

/// Day-by-day replay from the earliest purchase through horizon_day. Fees are
/// collected on the purchase day; storage accrues for every day a token is held.
SolvencyTimeline simulate_issuer(const std::vector<RedemptionRecord>& records,
                                 const FeeSchedule& schedule, DayNumber horizon_day);

}  // namespace rsdm
