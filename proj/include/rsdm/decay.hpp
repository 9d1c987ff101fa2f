#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsdm/days.hpp"
#include "rsdm/decimal.hpp"
#include "rsdm/quantity.hpp"

namespace rsdm {

/// Issuance parameters of one RSDM series. Immutable once issued.
struct RsdmSpec {
  DayNumber issue_day = 0;
  std::string collateral_id;
  Decimal initial_weight_g{1};       // W
  Decimal daily_decay_factor{1};     // theta, in (0, 1]
  std::int64_t expiry_days = 1;      // E, counted from issue_day
  Decimal redemption_fee_rate{0};    // lambda, in [0, 1)
  std::uint64_t issue_size = 0;      // N
  Decimal inspection_fee{0};         // flat charge per metal-in purchase
  Decimal min_redemption_g{1000};

  friend bool operator==(const RsdmSpec&, const RsdmSpec&) = default;
};

/// Lists every violated invariant; empty when the spec is usable.
std::vector<std::string> validate_spec(const RsdmSpec& spec);

/// W * theta^elapsed, exact. Throws ExpiredSeries past expiry.
Quantity residual_weight(const RsdmSpec& spec, std::int64_t elapsed_days);

/// unit_price * residual_weight; unit_price must be in accounting units per gram.
Quantity purchase_price(const RsdmSpec& spec, std::int64_t elapsed_days,
                        const Quantity& unit_price);

/// Split of the residual collateral at redemption. payout + issuer_fee == residual.
struct RedemptionSplit {
  Quantity residual;
  Quantity payout;      // (1 - lambda) * theta^elapsed * W
  Quantity issuer_fee;  // lambda * theta^elapsed * W
};

RedemptionSplit redemption_split(const RsdmSpec& spec, std::int64_t elapsed_days);

/// Grams delivered to the holder per token.
Quantity redeemable_quantity(const RsdmSpec& spec, std::int64_t elapsed_days);

/// (1 + annual_rate)^(1/365); Newton root, |theta^365 - (1 + r)| well under 1e-30.
Decimal daily_factor_from_annual_rate(const Decimal& annual_rate,
                                      int significant_digits = Decimal::kDefaultPrecision);
/// theta^365 - 1, exact.
Decimal annual_rate_from_daily_factor(const Decimal& daily_factor);

/// Depositor's yield: decay rate plus interest, added simply (-2% + 3% = 1%).
Decimal net_yield(const Decimal& annual_decay_rate, const Decimal& annual_interest_rate);

}  // namespace rsdm
