#include "rsdm/quantity.hpp"

#include <string>

#include "rsdm/errors.hpp"

namespace rsdm {

std::string_view to_string(Unit unit) {
  switch (unit) {
    case Unit::Gram:
      return "g";
    case Unit::AccountingUnit:
      return "accounting-unit";
    case Unit::AccountingPerGram:
      return "accounting-unit/g";
    case Unit::Dimensionless:
      return "1";
  }
  return "?";
}

namespace {

UnitError mismatch(const char* op, Unit a, Unit b) {
  return UnitError(std::string("cannot ") + op + " " + std::string(to_string(a)) +
                   " and " + std::string(to_string(b)));
}

}  // namespace

Quantity operator+(const Quantity& lhs, const Quantity& rhs) {
  if (lhs.unit != rhs.unit) throw mismatch("add", lhs.unit, rhs.unit);
  return {lhs.value + rhs.value, lhs.unit};
}

Quantity operator-(const Quantity& lhs, const Quantity& rhs) {
  if (lhs.unit != rhs.unit) throw mismatch("subtract", lhs.unit, rhs.unit);
  return {lhs.value - rhs.value, lhs.unit};
}

Quantity operator*(const Quantity& lhs, const Quantity& rhs) {
  if (lhs.unit == Unit::Dimensionless) return {lhs.value * rhs.value, rhs.unit};
  if (rhs.unit == Unit::Dimensionless) return {lhs.value * rhs.value, lhs.unit};
  const bool price_times_mass =
      (lhs.unit == Unit::AccountingPerGram && rhs.unit == Unit::Gram) ||
      (lhs.unit == Unit::Gram && rhs.unit == Unit::AccountingPerGram);
  if (price_times_mass) return {lhs.value * rhs.value, Unit::AccountingUnit};
  throw mismatch("multiply", lhs.unit, rhs.unit);
}

}  // namespace rsdm
