#include "rsdm/decay.hpp"

#include "rsdm/errors.hpp"

namespace rsdm {
namespace {

constexpr long kDaysPerYear = 365;

void check_elapsed(const RsdmSpec& spec, std::int64_t elapsed_days) {
  if (elapsed_days < 0) throw DomainError("elapsed days must be nonnegative");
  if (elapsed_days > spec.expiry_days) {
    throw ExpiredSeries("elapsed " + std::to_string(elapsed_days) + " days exceeds expiry of " +
                        std::to_string(spec.expiry_days) + " days");
  }
}

Decimal decay_multiplier(const RsdmSpec& spec, std::int64_t elapsed_days) {
  check_elapsed(spec, elapsed_days);
  return spec.daily_decay_factor.pow(static_cast<std::uint64_t>(elapsed_days));
}

}  // namespace

std::vector<std::string> validate_spec(const RsdmSpec& spec) {
  std::vector<std::string> violations;
  if (spec.daily_decay_factor.sign() <= 0) violations.emplace_back("decay factor must be > 0");
  if (spec.daily_decay_factor > Decimal(1)) violations.emplace_back("decay factor must be ≤ 1");
  if (spec.initial_weight_g.sign() <= 0) violations.emplace_back("initial weight must be > 0");
  if (spec.redemption_fee_rate.sign() < 0) violations.emplace_back("fee rate must be ≥ 0");
  if (spec.redemption_fee_rate >= Decimal(1)) violations.emplace_back("fee rate must be < 1");
  if (spec.expiry_days <= 0) violations.emplace_back("expiry days must be > 0");
  if (spec.min_redemption_g.sign() <= 0) {
    violations.emplace_back("minimum redemption must be > 0");
  }
  if (spec.inspection_fee.sign() < 0) violations.emplace_back("inspection fee must be ≥ 0");
  return violations;
}

Quantity residual_weight(const RsdmSpec& spec, std::int64_t elapsed_days) {
  return Quantity::grams(spec.initial_weight_g * decay_multiplier(spec, elapsed_days));
}

Quantity purchase_price(const RsdmSpec& spec, std::int64_t elapsed_days,
                        const Quantity& unit_price) {
  if (unit_price.unit != Unit::AccountingPerGram) {
    throw UnitError("purchase price needs a unit price in accounting units per gram");
  }
  if (unit_price.value.sign() < 0) throw DomainError("unit price must be nonnegative");
  return unit_price * residual_weight(spec, elapsed_days);
}

RedemptionSplit redemption_split(const RsdmSpec& spec, std::int64_t elapsed_days) {
  const Quantity residual = residual_weight(spec, elapsed_days);
  const Quantity fee = Quantity::grams(spec.redemption_fee_rate * residual.value);
  const Quantity payout =
      Quantity::grams((Decimal(1) - spec.redemption_fee_rate) * residual.value);
  return {residual, payout, fee};
}

Quantity redeemable_quantity(const RsdmSpec& spec, std::int64_t elapsed_days) {
  return redemption_split(spec, elapsed_days).payout;
}

Decimal daily_factor_from_annual_rate(const Decimal& annual_rate, int significant_digits) {
  if (annual_rate <= Decimal(-1)) throw DomainError("annual rate must exceed -1");
  const Decimal growth = Decimal(1) + annual_rate;
  if (growth == Decimal(1)) return Decimal(1);
  return growth.nth_root(kDaysPerYear, significant_digits);
}

Decimal annual_rate_from_daily_factor(const Decimal& daily_factor) {
  if (daily_factor.sign() <= 0) throw DomainError("daily factor must be positive");
  return daily_factor.pow(kDaysPerYear) - Decimal(1);
}

Decimal net_yield(const Decimal& annual_decay_rate, const Decimal& annual_interest_rate) {
  if (annual_decay_rate <= Decimal(-1) || annual_interest_rate <= Decimal(-1)) {
    throw DomainError("rates must exceed -1");
  }
  return annual_decay_rate + annual_interest_rate;
}

}  // namespace rsdm
