#include "rsdm/ledger.hpp"

#include <algorithm>
#include <limits>

namespace rsdm::ledger {
namespace {

Decimal count_of(std::uint64_t n) { return Decimal(mpz_class(static_cast<unsigned long>(n)), 0); }

std::int64_t elapsed(const RsdmSpec& spec, DayNumber day) { return day - spec.issue_day; }

}  // namespace

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::Issue:
      return "Issue";
    case EventKind::Transfer:
      return "Transfer";
    case EventKind::Redeem:
      return "Redeem";
    case EventKind::WithdrawFees:
      return "WithdrawFees";
  }
  return "";
}

std::optional<EventKind> parse_event_kind(std::string_view text) {
  for (auto k : {EventKind::Issue, EventKind::Transfer, EventKind::Redeem, EventKind::WithdrawFees}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::SequenceGap:
      return "SequenceGap";
    case RejectReason::OutOfOrderDay:
      return "OutOfOrderDay";
    case RejectReason::UnknownSeries:
      return "UnknownSeries";
    case RejectReason::SeriesConflict:
      return "SeriesConflict";
    case RejectReason::InvalidSpec:
      return "InvalidSpec";
    case RejectReason::InvalidEvent:
      return "InvalidEvent";
    case RejectReason::InsufficientBalance:
      return "InsufficientBalance";
    case RejectReason::IssueLimit:
      return "IssueLimit";
    case RejectReason::ExpiredSeries:
      return "ExpiredSeries";
    case RejectReason::BelowMinimumRedemption:
      return "BelowMinimumRedemption";
    case RejectReason::PayoutMismatch:
      return "PayoutMismatch";
    case RejectReason::InsufficientAccrual:
      return "InsufficientAccrual";
  }
  return "";
}

Rejected::Rejected(RejectReason reason, std::uint64_t sequence, const std::string& detail)
    : Error("event " + std::to_string(sequence) + " rejected (" + std::string(to_string(reason)) +
            "): " + detail),
      reason_(reason),
      sequence_(sequence) {}

MissingQuote::MissingQuote(std::vector<std::string> series_ids)
    : Error([&] {
        std::string message = "no price quote for series:";
        for (const auto& id : series_ids) message += " " + id;
        return message;
      }()),
      series_ids_(std::move(series_ids)) {}

std::uint64_t LedgerState::balance(const std::string& party, const std::string& series_id) const {
  auto it = balances.find({party, series_id});
  return it == balances.end() ? 0 : it->second;
}

Decimal settlement_payout(const RsdmSpec& spec, std::uint64_t token_count, DayNumber day) {
  const Quantity per_token = redeemable_quantity(spec, elapsed(spec, day));
  return (count_of(token_count) * per_token.value).round(Decimal::kSettlementPlaces);
}

LedgerState append_event(const LedgerState& state, const LedgerEvent& event) {
  const std::uint64_t seq = event.sequence;
  auto reject = [seq](RejectReason reason, const std::string& detail) {
    return Rejected(reason, seq, detail);
  };

  if (seq != state.last_sequence + 1) {
    throw reject(RejectReason::SequenceGap,
                 "expected sequence " + std::to_string(state.last_sequence + 1));
  }
  if (state.last_sequence > 0 && event.day < state.last_day) {
    throw reject(RejectReason::OutOfOrderDay, "day precedes the previous event");
  }
  if (event.series_id.empty() || event.party.empty()) {
    throw reject(RejectReason::InvalidEvent, "series_id and party are required");
  }
  if (event.kind != EventKind::WithdrawFees && event.token_count == 0) {
    throw reject(RejectReason::InvalidEvent, "token_count must be positive");
  }
  if (event.spec && event.kind != EventKind::Issue) {
    throw reject(RejectReason::InvalidEvent, "only Issue events may carry a series spec");
  }

  LedgerState next = state;
  next.last_sequence = seq;
  next.last_day = event.day;

  auto found = next.series.find(event.series_id);
  if (found == next.series.end()) {
    if (event.kind != EventKind::Issue || !event.spec) {
      throw reject(RejectReason::UnknownSeries, "series " + event.series_id + " is not registered");
    }
    const auto violations = validate_spec(*event.spec);
    if (!violations.empty()) throw reject(RejectReason::InvalidSpec, violations.front());
    if (event.spec->initial_weight_g.decimal_places() > Decimal::kSettlementPlaces) {
      throw reject(RejectReason::InvalidSpec, "initial weight finer than settlement precision");
    }
    SeriesBook book;
    book.spec = *event.spec;
    found = next.series.emplace(event.series_id, std::move(book)).first;
  } else if (event.spec && !(*event.spec == found->second.spec)) {
    throw reject(RejectReason::SeriesConflict, "spec differs from the registered series");
  }
  SeriesBook& book = found->second;
  const RsdmSpec& spec = book.spec;

  auto debit = [&](const std::string& party, std::uint64_t n) {
    auto it = next.balances.find({party, event.series_id});
    const std::uint64_t held = it == next.balances.end() ? 0 : it->second;
    if (held < n) {
      throw reject(RejectReason::InsufficientBalance,
                   party + " holds " + std::to_string(held) + ", needs " + std::to_string(n));
    }
    if (held == n) {
      next.balances.erase(it);
    } else {
      it->second -= n;
    }
  };
  auto credit = [&](const std::string& party, std::uint64_t n) {
    next.balances[{party, event.series_id}] += n;
  };

  switch (event.kind) {
    case EventKind::Issue: {
      if (event.day < spec.issue_day) {
        throw reject(RejectReason::InvalidEvent, "issue before the series issue date");
      }
      if (elapsed(spec, event.day) > spec.expiry_days) {
        throw reject(RejectReason::ExpiredSeries, "series has expired");
      }
      if (event.token_count > std::numeric_limits<std::uint64_t>::max() - book.issued_tokens ||
          (spec.issue_size > 0 && book.issued_tokens + event.token_count > spec.issue_size)) {
        throw reject(RejectReason::IssueLimit, "issue size exceeded");
      }
      book.issued_tokens += event.token_count;
      book.outstanding_tokens += event.token_count;
      book.vault_g += count_of(event.token_count) * spec.initial_weight_g;
      credit(event.party, event.token_count);
      break;
    }
    case EventKind::Transfer: {
      if (event.counterparty.empty()) {
        throw reject(RejectReason::InvalidEvent, "transfer needs a counterparty");
      }
      debit(event.party, event.token_count);
      credit(event.counterparty, event.token_count);
      break;
    }
    case EventKind::Redeem: {
      const std::int64_t dt = elapsed(spec, event.day);
      if (dt > spec.expiry_days) {
        throw reject(RejectReason::ExpiredSeries,
                     "redemption " + std::to_string(dt) + " days after issue, expiry " +
                         std::to_string(spec.expiry_days));
      }
      debit(event.party, event.token_count);
      const Decimal residual = count_of(event.token_count) * residual_weight(spec, dt).value;
      if (residual < spec.min_redemption_g) {
        throw reject(RejectReason::BelowMinimumRedemption,
                     "residual " + residual.to_string() + " g below minimum " +
                         spec.min_redemption_g.to_string() + " g");
      }
      const Decimal payout = settlement_payout(spec, event.token_count, event.day);
      if (!event.payout_grams) {
        throw reject(RejectReason::InvalidEvent, "redeem event lacks payout_grams");
      }
      if (*event.payout_grams != payout) {
        throw reject(RejectReason::PayoutMismatch,
                     "payout " + event.payout_grams->to_string() + " g, expected " +
                         payout.to_string() + " g");
      }
      const Decimal original = count_of(event.token_count) * spec.initial_weight_g;
      book.outstanding_tokens -= event.token_count;
      book.vault_g -= payout;
      book.cumulative_payout_g += payout;
      book.issuer_accrual_g += original - payout;
      break;
    }
    case EventKind::WithdrawFees: {
      if (!event.withdrawn_grams || event.withdrawn_grams->sign() <= 0 ||
          event.withdrawn_grams->decimal_places() > Decimal::kSettlementPlaces) {
        throw reject(RejectReason::InvalidEvent,
                     "withdrawal needs positive grams at settlement precision");
      }
      const Decimal available = book.issuer_accrual_g - book.withdrawn_fees_g;
      if (*event.withdrawn_grams > available) {
        throw reject(RejectReason::InsufficientAccrual,
                     "only " + available.to_string() + " g of realized accrual available");
      }
      book.withdrawn_fees_g += *event.withdrawn_grams;
      book.vault_g -= *event.withdrawn_grams;
      break;
    }
  }
  book.vault_g = book.vault_g.normalized();
  book.cumulative_payout_g = book.cumulative_payout_g.normalized();
  book.issuer_accrual_g = book.issuer_accrual_g.normalized();
  book.withdrawn_fees_g = book.withdrawn_fees_g.normalized();
  return next;
}

RedeemOutcome redeem(const LedgerState& state, const std::string& party,
                     const std::string& series_id, std::uint64_t token_count, DayNumber day) {
  LedgerEvent event;
  event.sequence = state.last_sequence + 1;
  event.day = day;
  event.kind = EventKind::Redeem;
  event.series_id = series_id;
  event.party = party;
  event.token_count = token_count;
  auto it = state.series.find(series_id);
  if (it != state.series.end()) {
    const std::int64_t dt = day - it->second.spec.issue_day;
    if (dt <= it->second.spec.expiry_days && dt >= 0) {
      event.payout_grams = settlement_payout(it->second.spec, token_count, day);
    }
  }
  if (!event.payout_grams) event.payout_grams = Decimal();
  LedgerState next = append_event(state, event);
  return {std::move(next), event, Quantity::grams(*event.payout_grams)};
}

LedgerState replay(const std::vector<LedgerEvent>& log) {
  LedgerState state;
  std::uint64_t position = 0;
  for (const auto& event : log) {
    ++position;
    try {
      state = append_event(state, event);
    } catch (const Rejected& e) {
      if (e.sequence() == position) throw;
      throw Rejected(e.reason(), position, "entry carries sequence " + std::to_string(event.sequence));
    }
  }
  return state;
}

Decimal outstanding_claims_g(const LedgerState& state, const std::string& series_id,
                             DayNumber day) {
  auto it = state.series.find(series_id);
  if (it == state.series.end()) return Decimal();
  const RsdmSpec& spec = it->second.spec;
  const std::int64_t dt = std::max<std::int64_t>(0, day - spec.issue_day);
  if (dt > spec.expiry_days) return Decimal();
  const Decimal per_token = residual_weight(spec, dt).value;
  mpz_class tokens = 0;
  for (const auto& [key, count] : state.balances) {
    if (key.second == series_id) tokens += count_of(count).coefficient();
  }
  return Decimal(tokens, 0) * per_token;
}

Valuation holdings_valuation(const LedgerState& state, const std::vector<PriceQuote>& quotes,
                             const std::string& party, DayNumber day) {
  Valuation out;
  out.party = party;
  out.day = day;
  std::vector<std::string> missing;
  for (const auto& [key, count] : state.balances) {
    if (key.first != party) continue;
    const SeriesBook& book = state.series.at(key.second);
    const RsdmSpec& spec = book.spec;

    const PriceQuote* quote = nullptr;
    for (const auto& q : quotes) {
      if (q.asset_id == spec.collateral_id && q.day <= day && (!quote || q.day >= quote->day)) {
        quote = &q;
      }
    }
    if (!quote) {
      missing.push_back(key.second);
      continue;
    }

    HoldingValue row;
    row.series_id = key.second;
    row.tokens = count;
    row.price = quote->price;
    row.quote_day = quote->day;
    const std::int64_t dt = std::max<std::int64_t>(0, day - spec.issue_day);
    row.expired = dt > spec.expiry_days;
    if (!row.expired) {
      const RedemptionSplit split = redemption_split(spec, dt);
      row.residual_g = count_of(count) * split.residual.value;
      row.redeemable_g = count_of(count) * split.payout.value;
    }
    row.value = row.residual_g * row.price;
    out.total_residual_g += row.residual_g;
    out.total_redeemable_g += row.redeemable_g;
    out.total_value += row.value;
    out.holdings.push_back(std::move(row));
  }
  if (!missing.empty()) throw MissingQuote(std::move(missing));
  return out;
}

Ledger::Ledger(std::vector<LedgerEvent> log) : state_(replay(log)), log_(std::move(log)) {}

LedgerEvent Ledger::next(EventKind kind, const std::string& series_id, DayNumber day) const {
  LedgerEvent event;
  event.sequence = state_.last_sequence + 1;
  event.day = day;
  event.kind = kind;
  event.series_id = series_id;
  return event;
}

const LedgerEvent& Ledger::append(LedgerEvent event) {
  state_ = append_event(state_, event);
  log_.push_back(std::move(event));
  return log_.back();
}

const LedgerEvent& Ledger::issue(const std::string& series_id, const std::string& party,
                                 std::uint64_t token_count, DayNumber day,
                                 std::optional<RsdmSpec> spec) {
  LedgerEvent event = next(EventKind::Issue, series_id, day);
  event.party = party;
  event.token_count = token_count;
  event.spec = std::move(spec);
  return append(std::move(event));
}

const LedgerEvent& Ledger::transfer(const std::string& series_id, const std::string& from,
                                    const std::string& to, std::uint64_t token_count,
                                    DayNumber day) {
  LedgerEvent event = next(EventKind::Transfer, series_id, day);
  event.party = from;
  event.counterparty = to;
  event.token_count = token_count;
  return append(std::move(event));
}

const LedgerEvent& Ledger::redeem(const std::string& series_id, const std::string& party,
                                  std::uint64_t token_count, DayNumber day) {
  RedeemOutcome outcome = ledger::redeem(state_, party, series_id, token_count, day);
  state_ = std::move(outcome.state);
  log_.push_back(std::move(outcome.event));
  return log_.back();
}

const LedgerEvent& Ledger::withdraw_fees(const std::string& series_id, const std::string& party,
                                         const Decimal& grams, DayNumber day) {
  LedgerEvent event = next(EventKind::WithdrawFees, series_id, day);
  event.party = party;
  event.withdrawn_grams = grams;
  return append(std::move(event));
}

}  // namespace rsdm::ledger
