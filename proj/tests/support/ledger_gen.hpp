#pragma once

// Random but valid ledger histories.

#include <functional>
#include <string>
#include <vector>

#include "generators.hpp"
#include "rsdm/ledger.hpp"

namespace gen {

inline std::vector<rsdm::RsdmSpec> ledger_series_specs() {
  const rsdm::DayNumber start = rsdm::parse_iso_date("2035-01-01");
  rsdm::RsdmSpec gold;
  gold.issue_day = start;
  gold.collateral_id = "XAU";
  gold.initial_weight_g = rsdm::Decimal(1);
  gold.daily_decay_factor = rsdm::Decimal::parse("0.99996");
  gold.expiry_days = 18262;
  gold.redemption_fee_rate = rsdm::Decimal::parse("0.003");
  gold.min_redemption_g = rsdm::Decimal(1);

  rsdm::RsdmSpec silver = gold;
  silver.issue_day = start + 10;
  silver.collateral_id = "XAG";
  silver.initial_weight_g = rsdm::Decimal::parse("12.5");
  silver.daily_decay_factor = rsdm::Decimal::parse("0.9999");
  silver.redemption_fee_rate = rsdm::Decimal::parse("0.01");
  silver.min_redemption_g = rsdm::Decimal(50);

  rsdm::RsdmSpec ounce = gold;
  ounce.issue_day = start + 30;
  ounce.collateral_id = "XPT";
  ounce.initial_weight_g = rsdm::Decimal::parse("31.103476800");
  ounce.daily_decay_factor = rsdm::Decimal::parse("0.999987");
  ounce.expiry_days = 1500;
  ounce.redemption_fee_rate = rsdm::Decimal(0);
  ounce.min_redemption_g = rsdm::Decimal::parse("0.5");
  return {gold, silver, ounce};
}

struct LedgerRun {
  std::vector<rsdm::ledger::LedgerEvent> log;
  std::size_t rejected = 0;
};

/// Drives a Ledger until `events` events are accepted. `on_step` sees the state
/// before and after each accepted event; `on_reject` sees each rejected attempt.
inline LedgerRun random_ledger(
    Rng& rng, std::size_t events,
    const std::function<void(const rsdm::ledger::LedgerState&, const rsdm::ledger::LedgerEvent&,
                             const rsdm::ledger::LedgerState&)>& on_step = {},
    const std::function<void(const rsdm::ledger::LedgerState&, const rsdm::ledger::Rejected&)>&
        on_reject = {}) {
  using namespace rsdm::ledger;
  const auto specs = ledger_series_specs();
  const std::vector<std::string> series_ids = {"GOLD-35", "SILVER-35", "PLAT-35"};
  const std::vector<std::string> parties = {"issuer", "ana", "ben", "chen", "dara", "eli", "fay"};
  Ledger book;
  LedgerRun run;
  rsdm::DayNumber day = specs.front().issue_day;
  while (book.log().size() < events) {
    if (integer(rng, 0, 9) < 3) day += integer(rng, 1, 3);
    const std::size_t s = static_cast<std::size_t>(integer(rng, 0, 2));
    const std::string& series = series_ids[s];
    const std::string& party = parties[static_cast<std::size_t>(integer(rng, 0, 6))];
    const LedgerState before = book.state();
    const std::uint64_t held = before.balance(party, series);
    const std::int64_t roll = integer(rng, 0, 99);
    try {
      if (!before.series.contains(series) || roll < 20) {
        const auto count = static_cast<std::uint64_t>(integer(rng, 1, 5000));
        const rsdm::DayNumber at = std::max(day, specs[s].issue_day);
        day = at;
        book.issue(series, "issuer", count, at,
                   before.series.contains(series) ? std::nullopt : std::optional(specs[s]));
      } else if (roll < 55) {
        const std::string& holder = held > 0 ? party : std::string("issuer");
        const std::uint64_t have = before.balance(holder, series);
        const std::string& to = parties[static_cast<std::size_t>(integer(rng, 1, 6))];
        // An occasional overdraft exercises the rejection path.
        const std::uint64_t n = integer(rng, 0, 19) == 0
                                    ? have + 1
                                    : static_cast<std::uint64_t>(integer(rng, 1, std::max<std::int64_t>(1, static_cast<std::int64_t>(have))));
        book.transfer(series, holder, to, n, day);
      } else if (roll < 90) {
        const std::uint64_t n =
            held == 0 ? 1 : static_cast<std::uint64_t>(integer(rng, 1, static_cast<std::int64_t>(held)));
        book.redeem(series, party, n, day);
      } else {
        const auto& b = before.series.at(series);
        const rsdm::Decimal available = b.issuer_accrual_g - b.withdrawn_fees_g;
        const rsdm::Decimal share = decimal(rng, 1, 100, 2);
        rsdm::Decimal grams = (available * share).round(9, rsdm::Rounding::Down);
        if (grams.is_zero() || integer(rng, 0, 19) == 0) grams = available + rsdm::Decimal::parse("0.000000001");
        book.withdraw_fees(series, "issuer", grams, day);
      }
    } catch (const Rejected& e) {
      ++run.rejected;
      if (on_reject) on_reject(before, e);
      if (!(book.state() == before)) throw std::logic_error("rejected event changed the ledger");
      continue;
    }
    if (on_step) on_step(before, book.log().back(), book.state());
  }
  run.log = book.log();
  return run;
}

}  // namespace gen
