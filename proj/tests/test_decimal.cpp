#include <doctest.h>

#include "rsdm/decimal.hpp"
#include "rsdm/errors.hpp"
#include "rsdm/quantity.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using rsdm::Decimal;
using rsdm::Rounding;

namespace {
Decimal d(const char* text) { return Decimal::parse(text); }
}  // namespace

TEST_CASE("parse and render canonical text") {
  CHECK(d("0.99996").to_string() == "0.99996");
  CHECK(d("1.2500").to_string() == "1.25");
  CHECK(d("-0.000").to_string() == "0");
  CHECK(d("8e12").to_string() == "8000000000000");
  CHECK(d("1.5E-3").to_string() == "0.0015");
  CHECK(d("+42").to_string() == "42");
  CHECK(d(".5").to_string() == "0.5");
  CHECK_THROWS_AS(d(""), rsdm::ParseError);
  CHECK_THROWS_AS(d("abc"), rsdm::ParseError);
  CHECK_THROWS_AS(d("1.2.3"), rsdm::ParseError);
  CHECK_THROWS_AS(d("1e"), rsdm::ParseError);
}

TEST_CASE("exact arithmetic and comparison") {
  CHECK(d("0.1") + d("0.2") == d("0.3"));
  CHECK(d("1") - d("0.003") == d("0.997"));
  CHECK(d("0.997") * d("0.99996") == d("0.99696012"));
  CHECK(d("1.50") == d("1.5"));
  CHECK(d("-2") < d("0.5"));
  CHECK(d("0.99996").pow(2) == d("0.9999200016"));
  CHECK(d("7").pow(0) == Decimal(1));
}

TEST_CASE("division and rounding") {
  CHECK(Decimal::divide(d("1"), d("3"), 5) == d("0.33333"));
  CHECK(Decimal::divide(d("2"), d("3"), 5) == d("0.66667"));
  CHECK(Decimal::divide(d("40e12"), d("8")) == d("5e12"));
  CHECK_THROWS_AS(Decimal::divide(d("1"), d("0")), rsdm::DomainError);
  CHECK(d("2.5").round(0) == d("2"));
  CHECK(d("3.5").round(0) == d("4"));
  CHECK(d("-2.5").round(0) == d("-2"));
  CHECK(d("2.5").round(0, Rounding::HalfUp) == d("3"));
  CHECK(d("0.0000000015").round(9) == d("0.000000002"));
  CHECK(d("0.0000000025").round(9) == d("0.000000002"));
  CHECK(d("-1.5").floor() == -2);
  CHECK(d("-1.5").ceil() == -1);
  CHECK(d("0.99996").to_fixed(9) == "0.999960000");
  CHECK(d("12").to_fixed(2) == "12.00");
  CHECK(d("-0.0000000001").to_fixed(9) == "0.000000000");
}

TEST_CASE("nth root against a rational bracket") {
  const Decimal r = d("0.98").nth_root(365, 40);
  const mpq_class lo = oracle::q(r.to_string()) - oracle::q("1e-38");
  const mpq_class hi = oracle::q(r.to_string()) + oracle::q("1e-38");
  CHECK(oracle::pow(lo, 365) < oracle::q("0.98"));
  CHECK(oracle::pow(hi, 365) > oracle::q("0.98"));
  CHECK(d("16").nth_root(4) == d("2"));
  CHECK_THROWS_AS(d("-1").nth_root(2), rsdm::DomainError);
}

TEST_CASE("floor quotient is exact") {
  CHECK(rsdm::floor_quotient(d("0.3"), d("0.01")) == 30);
  CHECK(rsdm::floor_quotient(d("0.295"), d("0.01")) == 29);
  CHECK(rsdm::floor_quotient(d("-1"), d("3")) == -1);
}

TEST_CASE("property: arithmetic agrees with rationals") {
  gen::Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::string a = gen::decimal_text(rng, -1'000'000'000, 1'000'000'000, static_cast<int>(gen::integer(rng, 0, 12)));
    const std::string b = gen::decimal_text(rng, -1'000'000'000, 1'000'000'000, static_cast<int>(gen::integer(rng, 0, 12)));
    const Decimal x = d(a.c_str());
    const Decimal y = d(b.c_str());
    const mpq_class qx = oracle::q(a);
    const mpq_class qy = oracle::q(b);
    REQUIRE(oracle::q((x + y).to_string()) == qx + qy);
    REQUIRE(oracle::q((x - y).to_string()) == qx - qy);
    REQUIRE(oracle::q((x * y).to_string()) == qx * qy);
    REQUIRE(((x < y) == (qx < qy)));
    REQUIRE(oracle::q(x.to_fixed(9)) == oracle::q(x.round(9).to_string()));
    if (!y.is_zero()) {
      const Decimal quotient = Decimal::divide(x, y, 30);
      REQUIRE(oracle::close(oracle::q(quotient.to_string()), qx / qy, oracle::q("1e-29")));
    }
  }
}

TEST_CASE("quantity units") {
  using rsdm::Quantity;
  const Quantity g = Quantity::grams(d("2"));
  CHECK((g + Quantity::grams(d("1"))).value == d("3"));
  CHECK((g * Quantity::scalar(d("0.5"))).unit == rsdm::Unit::Gram);
  CHECK((Quantity::per_gram(d("100")) * g).unit == rsdm::Unit::AccountingUnit);
  CHECK_THROWS_AS(g + Quantity::money(d("1")), rsdm::UnitError);
  CHECK_THROWS_AS(g * g, rsdm::UnitError);
}
