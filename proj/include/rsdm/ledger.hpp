#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rsdm/decay.hpp"
#include "rsdm/errors.hpp"

namespace rsdm::ledger {

enum class EventKind { Issue, Transfer, Redeem, WithdrawFees };

std::string_view to_string(EventKind kind);
std::optional<EventKind> parse_event_kind(std::string_view text);

/// One entry of the append-only log.
///
/// Issue credits `party` with new tokens; the first Issue of a series carries
/// its spec. Transfer moves tokens from `party` to `counterparty`. Redeem burns
/// `party`'s tokens for `payout_grams` of collateral. WithdrawFees moves
/// `withdrawn_grams` of realized issuer accrual out of the vault.
struct LedgerEvent {
  std::uint64_t sequence = 0;
  DayNumber day = 0;
  EventKind kind = EventKind::Issue;
  std::string series_id;
  std::string party;
  std::string counterparty;
  std::uint64_t token_count = 0;
  std::optional<Decimal> payout_grams;
  std::optional<Decimal> withdrawn_grams;
  std::optional<RsdmSpec> spec;

  friend bool operator==(const LedgerEvent&, const LedgerEvent&) = default;
};

/// Collateral accounts of one series, all in grams.
struct SeriesBook {
  RsdmSpec spec;
  std::uint64_t issued_tokens = 0;
  std::uint64_t outstanding_tokens = 0;
  Decimal vault_g;
  Decimal cumulative_payout_g;
  Decimal issuer_accrual_g;  // decay and fees realized at redemptions; never decreases
  Decimal withdrawn_fees_g;

  friend bool operator==(const SeriesBook&, const SeriesBook&) = default;
};

struct LedgerState {
  std::map<std::string, SeriesBook> series;
  std::map<std::pair<std::string, std::string>, std::uint64_t> balances;  // (party, series)
  std::uint64_t last_sequence = 0;
  DayNumber last_day = 0;

  std::uint64_t balance(const std::string& party, const std::string& series_id) const;
  friend bool operator==(const LedgerState&, const LedgerState&) = default;
};

enum class RejectReason {
  SequenceGap,
  OutOfOrderDay,
  UnknownSeries,
  SeriesConflict,
  InvalidSpec,
  InvalidEvent,
  InsufficientBalance,
  IssueLimit,
  ExpiredSeries,
  BelowMinimumRedemption,
  PayoutMismatch,
  InsufficientAccrual,
};

std::string_view to_string(RejectReason reason);

/// An event that cannot be applied. The state it was offered to is unchanged.
class Rejected : public Error {
 public:
  Rejected(RejectReason reason, std::uint64_t sequence, const std::string& detail);
  RejectReason reason() const { return reason_; }
  std::uint64_t sequence() const { return sequence_; }

 private:
  RejectReason reason_;
  std::uint64_t sequence_;
};

/// Applies one event, returning the successor state. Throws Rejected.
LedgerState append_event(const LedgerState& state, const LedgerEvent& event);

/// Grams owed to the holder for redeeming `token_count` tokens on `day`,
/// settlement-rounded (9 places, half-even).
Decimal settlement_payout(const RsdmSpec& spec, std::uint64_t token_count, DayNumber day);

struct RedeemOutcome {
  LedgerState state;
  LedgerEvent event;
  Quantity payout;
};

/// Builds, validates and applies the Redeem event for `party`.
RedeemOutcome redeem(const LedgerState& state, const std::string& party,
                     const std::string& series_id, std::uint64_t token_count, DayNumber day);

/// Folds append_event over the log from the empty state. The first bad event
/// aborts with its 1-based log position, which is the missing number for a gap.
LedgerState replay(const std::vector<LedgerEvent>& log);

/// Sum over holders of balance * residual weight on `day` (zero once expired).
Decimal outstanding_claims_g(const LedgerState& state, const std::string& series_id, DayNumber day);

struct PriceQuote {
  DayNumber day = 0;
  std::string asset_id;
  Decimal price;  // accounting units per gram
};

struct HoldingValue {
  std::string series_id;
  std::uint64_t tokens = 0;
  Decimal residual_g;
  Decimal redeemable_g;
  Decimal price;
  DayNumber quote_day = 0;
  Decimal value;  // residual_g * price
  bool expired = false;
};

struct Valuation {
  std::string party;
  DayNumber day = 0;
  std::vector<HoldingValue> holdings;
  Decimal total_residual_g;
  Decimal total_redeemable_g;
  Decimal total_value;
};

class MissingQuote : public Error {
 public:
  explicit MissingQuote(std::vector<std::string> series_ids);
  const std::vector<std::string>& series_ids() const { return series_ids_; }

 private:
  std::vector<std::string> series_ids_;
};

/// Marks `party`'s holdings to market with the latest quote on or before `day`.
Valuation holdings_valuation(const LedgerState& state, const std::vector<PriceQuote>& quotes,
                             const std::string& party, DayNumber day);

/// Single-writer front end that numbers events and keeps the log.
class Ledger {
 public:
  Ledger() = default;
  explicit Ledger(std::vector<LedgerEvent> log);

  const LedgerState& state() const { return state_; }
  const std::vector<LedgerEvent>& log() const { return log_; }

  const LedgerEvent& issue(const std::string& series_id, const std::string& party,
                           std::uint64_t token_count, DayNumber day,
                           std::optional<RsdmSpec> spec = std::nullopt);
  const LedgerEvent& transfer(const std::string& series_id, const std::string& from,
                              const std::string& to, std::uint64_t token_count, DayNumber day);
  const LedgerEvent& redeem(const std::string& series_id, const std::string& party,
                            std::uint64_t token_count, DayNumber day);
  const LedgerEvent& withdraw_fees(const std::string& series_id, const std::string& party,
                                   const Decimal& grams, DayNumber day);
  /// Appends a fully formed event; its sequence must be the next one.
  const LedgerEvent& append(LedgerEvent event);

 private:
  LedgerEvent next(EventKind kind, const std::string& series_id, DayNumber day) const;

  LedgerState state_;
  std::vector<LedgerEvent> log_;
};

}  // namespace rsdm::ledger
