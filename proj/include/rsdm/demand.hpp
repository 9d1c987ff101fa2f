#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsdm/decimal.hpp"

namespace rsdm::demand {

/// Inputs of the broad-money equilibrium; all monetary fields in one accounting unit.
struct DemandScenario {
  Decimal marshallian_k;
  Decimal gdp;
  Decimal fiat_multiplier;
  Decimal sdm_multiplier;
  Decimal fiat_reserve;
  Decimal sdm_reserve;
  Decimal other_supply;
};

std::vector<std::string> validate_scenario(const DemandScenario& scenario);

/// kappa_fiat * B_fiat + kappa_sdm * B_sdm + C_other.
Decimal money_supply(const DemandScenario& scenario);

/// K * GDP. Both inputs must be positive.
Decimal money_demand(const Decimal& marshallian_k, const Decimal& gdp);

/// Supply minus demand; positive means oversupply.
Decimal equilibrium_residual(const DemandScenario& scenario);

enum class Unknown { FiatReserve, SdmReserve, OtherSupply, MarshallianK };

std::optional<Unknown> parse_unknown(std::string_view name);
std::string_view to_string(Unknown unknown);

struct UnknownSolution {
  Decimal value;
  bool negative = false;  // economically infeasible, returned anyway
};

/// Value of `unknown` that zeroes the residual with every other field held fixed.
/// Divisions carry `significant_digits` digits.
UnknownSolution solve_unknown(const DemandScenario& scenario, Unknown unknown,
                              int significant_digits = 40);

/// Base reserve needed for a target broad-money share: target / multiplier.
Decimal collateral_requirement(const Decimal& target_share, const Decimal& multiplier,
                               int significant_digits = 40);

/// Troy ounces per metric tonne.
inline const Decimal kTroyOuncesPerTonne = Decimal::parse("32150.7466");

/// Price per troy ounce implied by valuing `metal_mass_tonnes` at `reserve_value`.
Decimal implied_metal_price(const Decimal& reserve_value, const Decimal& metal_mass_tonnes,
                            int significant_digits = 40);

enum class Storability { Storable, NotStorable };

struct StorabilityVerdict {
  Decimal mass_kg;
  Storability verdict = Storability::Storable;
};

/// mass = value / price_per_kg; storable at home iff mass <= threshold_kg.
StorabilityVerdict household_storability(const Decimal& redeemed_value, const Decimal& price_per_kg,
                                         const Decimal& threshold_kg,
                                         int significant_digits = 40);

}  // namespace rsdm::demand
