#include <sstream>

#include <doctest.h>

#include "rsdm/io.hpp"
#include "rsdm/ledger.hpp"
#include "support/ledger_gen.hpp"

using rsdm::Decimal;
using namespace rsdm::ledger;
using rsdm::DayNumber;

namespace {

Decimal d(const char* text) { return Decimal::parse(text); }

rsdm::RsdmSpec one_gram(const char* minimum = "1") {
  rsdm::RsdmSpec spec;
  spec.issue_day = 100;
  spec.collateral_id = "XAU";
  spec.initial_weight_g = Decimal(1);
  spec.daily_decay_factor = d("0.99996");
  spec.expiry_days = 365;
  spec.redemption_fee_rate = d("0.003");
  spec.min_redemption_g = d(minimum);
  return spec;
}

LedgerEvent issue(std::uint64_t seq, std::uint64_t n, DayNumber day, std::optional<rsdm::RsdmSpec> spec) {
  LedgerEvent e;
  e.sequence = seq;
  e.day = day;
  e.kind = EventKind::Issue;
  e.series_id = "G";
  e.party = "bank";
  e.token_count = n;
  e.spec = std::move(spec);
  return e;
}

LedgerEvent transfer(std::uint64_t seq, const char* from, const char* to, std::uint64_t n, DayNumber day) {
  LedgerEvent e;
  e.sequence = seq;
  e.day = day;
  e.kind = EventKind::Transfer;
  e.series_id = "G";
  e.party = from;
  e.counterparty = to;
  e.token_count = n;
  return e;
}

RejectReason reason_of(const LedgerState& s, const LedgerEvent& e) {
  try {
    (void)append_event(s, e);
  } catch (const Rejected& r) {
    return r.reason();
  }
  FAIL("event was accepted");
  return RejectReason::InvalidEvent;
}

}  // namespace

TEST_CASE("issue credits the holder and fills the vault") {
  const LedgerState empty;
  const LedgerState s = append_event(empty, issue(1, 100, 100, one_gram()));
  CHECK(s.balance("bank", "G") == 100);
  CHECK(s.series.at("G").vault_g == Decimal(100));
  CHECK(s.last_sequence == 1);
  CHECK(empty.series.empty());
}

TEST_CASE("rejections leave the state unchanged") {
  const LedgerState s = append_event({}, issue(1, 100, 100, one_gram()));
  const LedgerState copy = s;
  CHECK(reason_of(s, transfer(2, "bank", "ana", 150, 100)) == RejectReason::InsufficientBalance);
  CHECK(s == copy);
  CHECK(reason_of(s, transfer(3, "bank", "ana", 1, 100)) == RejectReason::SequenceGap);
  CHECK(reason_of(s, transfer(2, "bank", "ana", 1, 99)) == RejectReason::OutOfOrderDay);
  auto stray = transfer(2, "bank", "ana", 1, 100);
  stray.series_id = "X";
  CHECK(reason_of(s, stray) == RejectReason::UnknownSeries);
  auto respec = one_gram();
  respec.daily_decay_factor = d("0.9");
  CHECK(reason_of(s, issue(2, 1, 100, respec)) == RejectReason::SeriesConflict);
  auto bad = one_gram();
  bad.redemption_fee_rate = Decimal(1);
  CHECK(reason_of({}, issue(1, 1, 100, bad)) == RejectReason::InvalidSpec);
  CHECK(reason_of({}, issue(1, 1, 100, std::nullopt)) == RejectReason::UnknownSeries);
  auto capped = one_gram();
  capped.issue_size = 50;
  CHECK(reason_of({}, issue(1, 51, 100, capped)) == RejectReason::IssueLimit);
}

TEST_CASE("redeem pays the fee-adjusted residual") {
  LedgerState s = append_event({}, issue(1, 1000, 100, one_gram()));
  const auto out = redeem(s, "bank", "G", 1000, 101);
  CHECK(out.payout.value == d("996.96012"));
  CHECK(out.event.payout_grams == d("996.96012"));
  const auto& book = out.state.series.at("G");
  CHECK(book.vault_g == d("3.03988"));
  CHECK(book.issuer_accrual_g == d("3.03988"));
  CHECK(book.outstanding_tokens == 0);
  CHECK(out.state.balance("bank", "G") == 0);

  auto wrong = out.event;
  wrong.payout_grams = d("996.96013");
  CHECK(reason_of(s, wrong) == RejectReason::PayoutMismatch);
}

TEST_CASE("redeem minimums, balance and expiry") {
  LedgerState s = append_event({}, issue(1, 2000, 100, one_gram("1000")));
  // 1000 tokens on the issue day hold exactly the 1 kg minimum.
  CHECK_NOTHROW(redeem(s, "bank", "G", 1000, 100));
  auto small = append_event({}, issue(1, 5, 100, one_gram("1000")));
  CHECK_THROWS_AS(redeem(small, "bank", "G", 1, 100), Rejected);
  try {
    redeem(small, "bank", "G", 1, 100);
  } catch (const Rejected& r) {
    CHECK(r.reason() == RejectReason::BelowMinimumRedemption);
  }
  try {
    redeem(s, "ana", "G", 1, 100);
  } catch (const Rejected& r) {
    CHECK(r.reason() == RejectReason::InsufficientBalance);
  }
  try {
    redeem(s, "bank", "G", 1000, 100 + 366);
    FAIL("expired redemption accepted");
  } catch (const Rejected& r) {
    CHECK(r.reason() == RejectReason::ExpiredSeries);
  }
  CHECK(outstanding_claims_g(s, "G", 100 + 366).is_zero());
}

TEST_CASE("fee withdrawals are bounded by accrual") {
  Ledger book;
  book.issue("G", "bank", 10, 100, one_gram());
  book.redeem("G", "bank", 10, 110);
  const Decimal accrual = book.state().series.at("G").issuer_accrual_g;
  CHECK_THROWS_AS(book.withdraw_fees("G", "bank", accrual + d("0.000000001"), 110), Rejected);
  book.withdraw_fees("G", "bank", accrual, 110);
  const auto& s = book.state().series.at("G");
  CHECK(s.vault_g.is_zero());
  CHECK(s.withdrawn_fees_g == accrual);
}

TEST_CASE("valuation uses the latest quote on or before the day") {
  Ledger book;
  book.issue("G", "bank", 10, 100, one_gram());
  const std::vector<PriceQuote> quotes = {{99, "XAU", d("100")}, {102, "XAU", d("500")}};
  const auto at_issue = holdings_valuation(book.state(), quotes, "bank", 100);
  CHECK(at_issue.total_value == Decimal(1000));
  const auto next_day = holdings_valuation(book.state(), quotes, "bank", 101);
  CHECK(next_day.total_value == d("999.96"));
  CHECK(next_day.holdings.front().redeemable_g == d("9.9696012"));
  CHECK(next_day.holdings.front().quote_day == 99);
  CHECK_THROWS_AS(holdings_valuation(book.state(), {{99, "XAG", d("1")}}, "bank", 100), MissingQuote);
  try {
    holdings_valuation(book.state(), {}, "bank", 100);
  } catch (const MissingQuote& e) {
    CHECK(e.series_ids() == std::vector<std::string>{"G"});
  }
}

TEST_CASE("replay examples") {
  CHECK(replay({}) == LedgerState{});

  Ledger book;
  book.issue("G", "bank", 3000, 100, one_gram());
  book.transfer("G", "bank", "ana", 1200, 100);
  book.redeem("G", "ana", 1000, 101);
  const LedgerState s = replay(book.log());
  CHECK(s == book.state());
  CHECK(s.balance("bank", "G") == 1800);
  CHECK(s.balance("ana", "G") == 200);
  const auto& g = s.series.at("G");
  CHECK(g.issued_tokens == 3000);
  CHECK(g.outstanding_tokens == 2000);
  CHECK(g.cumulative_payout_g == d("996.96012"));
  CHECK(g.vault_g == d("2003.03988"));

  auto gapped = book.log();
  gapped.push_back(transfer(4, "bank", "ana", 1, 101));
  gapped.push_back(transfer(6, "bank", "ana", 1, 101));
  try {
    replay(gapped);
    FAIL("gap accepted");
  } catch (const Rejected& r) {
    CHECK(r.sequence() == 5);
    CHECK(r.reason() == RejectReason::SequenceGap);
  }
}

TEST_CASE("property: conservation, accrual, dominance and replay") {
  gen::Rng rng(51);
  std::size_t steps = 0;
  const auto run = gen::random_ledger(rng, 1500, [&](const LedgerState& before, const LedgerEvent& e, const LedgerState& after) {
    ++steps;
    for (const auto& [id, book] : after.series) {
      REQUIRE(book.vault_g + book.cumulative_payout_g + book.withdrawn_fees_g ==
              Decimal(static_cast<long>(book.issued_tokens)) * book.spec.initial_weight_g);
      if (before.series.contains(id)) REQUIRE(book.issuer_accrual_g >= before.series.at(id).issuer_accrual_g);
      REQUIRE(outstanding_claims_g(after, id, e.day) <= book.vault_g);
    }
  });
  CHECK(steps == 1500);
  CHECK(run.rejected > 0);

  std::stringstream persisted;
  for (const auto& e : run.log) rsdm::io::write_event_line(persisted, e);
  const auto reread = rsdm::io::read_event_log(persisted);
  CHECK(reread == run.log);
  const LedgerState a = replay(run.log);
  const LedgerState b = replay(reread);
  CHECK(a == b);
  CHECK(rsdm::io::snapshot_text(a) == rsdm::io::snapshot_text(b));
  CHECK(rsdm::io::state_from_json(rsdm::io::parse_json(rsdm::io::snapshot_text(a))) == a);
}
