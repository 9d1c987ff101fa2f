#pragma once

// Seeded random inputs for property tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "rsdm/io.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::int64_t integer(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Uniform decimal in [lo, hi] * 10^-places, as text.
inline std::string decimal_text(Rng& rng, std::int64_t lo, std::int64_t hi, int places) {
  const std::int64_t v = integer(rng, lo, hi);
  std::string digits = std::to_string(v < 0 ? -v : v);
  if (places > 0) {
    if (static_cast<int>(digits.size()) <= places) {
      digits.insert(0, static_cast<std::size_t>(places - digits.size() + 1), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  return (v < 0 ? "-" : "") + digits;
}

inline rsdm::Decimal decimal(Rng& rng, std::int64_t lo, std::int64_t hi, int places) {
  return rsdm::Decimal::parse(decimal_text(rng, lo, hi, places));
}

/// Random MSP instance: coverage on a 0.05 grid so sums tie often, as a JSON
/// document (to exercise the loader) plus the matching oracle data.
struct MspCase {
  rsdm::msp::MspInstance instance;
  oracle::Msp reference;
};

inline MspCase msp_case(Rng& rng, int currencies, int functions) {
  using rsdm::io::json;
  json doc;
  doc["functions"] = json::array();
  oracle::Msp ref;
  for (int k = 0; k < functions; ++k) {
    const std::string w = decimal_text(rng, 0, 20, 1);
    const std::string h = integer(rng, 0, 2) == 0 ? "0" : decimal_text(rng, 0, 12, 1);
    doc["functions"].push_back({{"id", "F" + std::to_string(k + 1)}, {"weight", w}, {"threshold", h}});
    ref.w.push_back(oracle::q(w));
    ref.h.push_back(oracle::q(h));
  }
  doc["currencies"] = json::array();
  const int mandatory = static_cast<int>(integer(rng, 0, 2));
  for (int c = 0; c < currencies; ++c) {
    const std::string id = "C" + std::to_string(100 + integer(rng, 0, 899)) + "_" + std::to_string(c);
    json cov = json::object();
    std::vector<mpq_class> row;
    for (int k = 0; k < functions; ++k) {
      const rsdm::Decimal units(static_cast<long>(integer(rng, 0, 20)));
      const std::string value = rsdm::Decimal::divide(units, rsdm::Decimal(20)).to_string();
      if (value != "0" || integer(rng, 0, 1) == 0) cov["F" + std::to_string(k + 1)] = value;
      row.push_back(oracle::q(value));
    }
    const bool is_mandatory = c < mandatory;
    doc["currencies"].push_back(
        {{"id", id}, {"class", "Other"}, {"mandatory", is_mandatory}, {"coverage", cov}});
    ref.ids.push_back(id);
    ref.u.push_back(row);
    ref.mandatory.push_back(is_mandatory);
  }
  const int parallel = static_cast<int>(integer(rng, std::max(1, mandatory), std::max(2, currencies / 2 + 1)));
  const std::string beta = decimal_text(rng, 0, 30, 2);
  doc["max_parallel"] = parallel;
  doc["balance_penalty"] = beta;
  ref.max_parallel = static_cast<std::size_t>(parallel);
  ref.beta = oracle::q(beta);
  return {rsdm::io::msp_instance_from_json(doc), ref};
}

}  // namespace gen
