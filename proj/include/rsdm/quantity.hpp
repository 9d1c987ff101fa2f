#pragma once

#include <string_view>

#include "rsdm/decimal.hpp"

namespace rsdm {

enum class Unit { Gram, AccountingUnit, AccountingPerGram, Dimensionless };

std::string_view to_string(Unit unit);

/// A decimal tagged with its unit. Mixing grams and accounting units in a
/// sum, or any product without a defined result unit, throws UnitError.
struct Quantity {
  Decimal value;
  Unit unit = Unit::Dimensionless;

  static Quantity grams(Decimal v) { return {std::move(v), Unit::Gram}; }
  static Quantity money(Decimal v) { return {std::move(v), Unit::AccountingUnit}; }
  static Quantity per_gram(Decimal v) { return {std::move(v), Unit::AccountingPerGram}; }
  static Quantity scalar(Decimal v) { return {std::move(v), Unit::Dimensionless}; }

  friend bool operator==(const Quantity&, const Quantity&) = default;
};

Quantity operator+(const Quantity& lhs, const Quantity& rhs);
Quantity operator-(const Quantity& lhs, const Quantity& rhs);
Quantity operator*(const Quantity& lhs, const Quantity& rhs);

}  // namespace rsdm
