#include "rsdm/demand.hpp"

#include "rsdm/errors.hpp"

namespace rsdm::demand {

std::vector<std::string> validate_scenario(const DemandScenario& s) {
  std::vector<std::string> out;
  auto positive = [&](const Decimal& v, const char* name) {
    if (v.sign() <= 0) out.push_back(std::string(name) + " must be > 0");
  };
  auto nonnegative = [&](const Decimal& v, const char* name) {
    if (v.sign() < 0) out.push_back(std::string(name) + " must be ≥ 0");
  };
  positive(s.marshallian_k, "marshallian_k");
  positive(s.gdp, "gdp");
  positive(s.fiat_multiplier, "fiat_multiplier");
  positive(s.sdm_multiplier, "sdm_multiplier");
  nonnegative(s.fiat_reserve, "fiat_reserve");
  nonnegative(s.sdm_reserve, "sdm_reserve");
  nonnegative(s.other_supply, "other_supply");
  return out;
}

Decimal money_supply(const DemandScenario& s) {
  return s.fiat_multiplier * s.fiat_reserve + s.sdm_multiplier * s.sdm_reserve + s.other_supply;
}

Decimal money_demand(const Decimal& marshallian_k, const Decimal& gdp) {
  if (marshallian_k.sign() <= 0 || gdp.sign() <= 0) {
    throw DomainError("Marshallian K and GDP must be positive");
  }
  return marshallian_k * gdp;
}

Decimal equilibrium_residual(const DemandScenario& s) {
  return money_supply(s) - money_demand(s.marshallian_k, s.gdp);
}

std::optional<Unknown> parse_unknown(std::string_view name) {
  for (auto u : {Unknown::FiatReserve, Unknown::SdmReserve, Unknown::OtherSupply,
                 Unknown::MarshallianK}) {
    if (to_string(u) == name) return u;
  }
  return std::nullopt;
}

std::string_view to_string(Unknown unknown) {
  switch (unknown) {
    case Unknown::FiatReserve:
      return "fiat_reserve";
    case Unknown::SdmReserve:
      return "sdm_reserve";
    case Unknown::OtherSupply:
      return "other_supply";
    case Unknown::MarshallianK:
      return "marshallian_k";
  }
  return "";
}

UnknownSolution solve_unknown(const DemandScenario& s, Unknown unknown, int significant_digits) {
  auto divide = [&](const Decimal& n, const Decimal& d, const char* what) {
    if (d.is_zero()) throw DomainError(std::string("coefficient of ") + what + " is zero");
    return Decimal::divide(n, d, significant_digits);
  };
  Decimal value;
  switch (unknown) {
    case Unknown::FiatReserve:
      value = divide(s.marshallian_k * s.gdp - s.sdm_multiplier * s.sdm_reserve - s.other_supply,
                     s.fiat_multiplier, "fiat_reserve");
      break;
    case Unknown::SdmReserve:
      value = divide(s.marshallian_k * s.gdp - s.fiat_multiplier * s.fiat_reserve - s.other_supply,
                     s.sdm_multiplier, "sdm_reserve");
      break;
    case Unknown::OtherSupply:
      value = s.marshallian_k * s.gdp - s.fiat_multiplier * s.fiat_reserve -
              s.sdm_multiplier * s.sdm_reserve;
      break;
    case Unknown::MarshallianK:
      value = divide(money_supply(s), s.gdp, "marshallian_k");
      break;
  }
  return {value, value.sign() < 0};
}

Decimal collateral_requirement(const Decimal& target_share, const Decimal& multiplier,
                               int significant_digits) {
  if (multiplier.sign() <= 0) throw DomainError("multiplier must be positive");
  return Decimal::divide(target_share, multiplier, significant_digits);
}

Decimal implied_metal_price(const Decimal& reserve_value, const Decimal& metal_mass_tonnes,
                            int significant_digits) {
  if (metal_mass_tonnes.sign() <= 0) throw DomainError("metal mass must be positive");
  return Decimal::divide(reserve_value, metal_mass_tonnes * kTroyOuncesPerTonne,
                         significant_digits);
}

StorabilityVerdict household_storability(const Decimal& redeemed_value, const Decimal& price_per_kg,
                                         const Decimal& threshold_kg, int significant_digits) {
  if (price_per_kg.sign() <= 0) throw DomainError("price per kg must be positive");
  if (threshold_kg.sign() <= 0) throw DomainError("storage threshold must be positive");
  if (redeemed_value.sign() < 0) throw DomainError("redeemed value must be nonnegative");
  StorabilityVerdict out;
  out.mass_kg = Decimal::divide(redeemed_value, price_per_kg, significant_digits);
  out.verdict = out.mass_kg <= threshold_kg ? Storability::Storable : Storability::NotStorable;
  return out;
}

}  // namespace rsdm::demand
