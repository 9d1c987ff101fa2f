#include "rsdm/msp.hpp"

#include <algorithm>
#include <unordered_map>

#include "rsdm/errors.hpp"

namespace rsdm::msp {

std::string_view to_string(CurrencyClass cls) {
  switch (cls) {
    case CurrencyClass::Fiat:
      return "Fiat";
    case CurrencyClass::Commodity:
      return "Commodity";
    case CurrencyClass::Crypto:
      return "Crypto";
    case CurrencyClass::RSDM:
      return "RSDM";
    case CurrencyClass::Other:
      return "Other";
  }
  return "Other";
}

std::optional<CurrencyClass> parse_currency_class(std::string_view text) {
  for (auto cls : {CurrencyClass::Fiat, CurrencyClass::Commodity, CurrencyClass::Crypto,
                   CurrencyClass::RSDM, CurrencyClass::Other}) {
    if (to_string(cls) == text) return cls;
  }
  return std::nullopt;
}

std::string_view to_string(ObjectiveKind kind) {
  return kind == ObjectiveKind::Linear ? "linear" : "saturating";
}

Decimal CurrencyCandidate::score(std::string_view function_id) const {
  auto it = coverage.find(std::string(function_id));
  return it == coverage.end() ? Decimal() : it->second;
}

std::vector<MonetaryFunction> default_function_catalog() {
  static const char* const kDescriptions[] = {
      "unit of account, measure of value",
      "medium of exchange",
      "means of payment",
      "store of value",
      "prevents hoarding",
      "low logistics (circulation and storage) costs",
      "no weight loss during circulation",
      "supply can match wealth (e.g. GDP)",
      "stable purchasing power for long-term contracts",
      "accepted for taxation",
      "difficult to over-issue",
      "cheap anti-counterfeiting, easy to identify forgeries",
  };
  std::vector<MonetaryFunction> catalog;
  for (int k = 0; k < 12; ++k) {
    catalog.push_back({"F" + std::to_string(k + 1), Decimal(1), Decimal(0), kDescriptions[k]});
  }
  return catalog;
}

std::vector<ValidationIssue> validate_instance(const MspInstance& instance) {
  std::vector<ValidationIssue> issues;
  if (instance.functions.empty()) issues.push_back({"/functions", "at least one function"});
  if (instance.currencies.empty()) issues.push_back({"/currencies", "at least one currency"});
  if (instance.max_parallel == 0) issues.push_back({"/max_parallel", "must be positive"});
  if (instance.balance_penalty.sign() < 0) {
    issues.push_back({"/balance_penalty", "balance penalty must be ≥ 0"});
  }

  std::set<std::string> function_ids;
  for (std::size_t k = 0; k < instance.functions.size(); ++k) {
    const auto& f = instance.functions[k];
    const std::string base = "/functions/" + std::to_string(k);
    if (!function_ids.insert(f.id).second) issues.push_back({base + "/id", "duplicate id " + f.id});
    if (f.weight.sign() < 0) issues.push_back({base + "/weight", "weight must be ≥ 0"});
    if (f.threshold.sign() < 0) issues.push_back({base + "/threshold", "threshold must be ≥ 0"});
  }

  std::set<std::string> currency_ids;
  std::size_t mandatory = 0;
  for (std::size_t c = 0; c < instance.currencies.size(); ++c) {
    const auto& cur = instance.currencies[c];
    const std::string base = "/currencies/" + std::to_string(c);
    if (!currency_ids.insert(cur.id).second) {
      issues.push_back({base + "/id", "duplicate id " + cur.id});
    }
    if (cur.mandatory) ++mandatory;
    for (const auto& [fid, u] : cur.coverage) {
      const std::string pointer = base + "/coverage/" + fid;
      if (function_ids.count(fid) == 0) {
        issues.push_back({pointer, "unknown function id " + fid});
      }
      if (u.sign() < 0 || u > Decimal(1)) {
        issues.push_back({pointer, "coverage must lie in [0,1]"});
      }
    }
  }
  if (mandatory > instance.max_parallel) {
    issues.push_back({"/max_parallel",
                      std::to_string(mandatory) + " mandatory currencies exceed max_parallel",
                      IssueKind::Infeasible});
  }

  for (std::size_t k = 0; k < instance.functions.size(); ++k) {
    const auto& f = instance.functions[k];
    Decimal column;
    for (const auto& cur : instance.currencies) column += cur.score(f.id);
    if (column < f.threshold) {
      issues.push_back({"/functions/" + std::to_string(k) + "/threshold",
                        "threshold unreachable: column sum " + column.to_string() + " < " +
                            f.threshold.to_string(),
                        IssueKind::Infeasible});
    }
  }
  return issues;
}

namespace {

std::vector<const CurrencyCandidate*> resolve(const MspInstance& instance,
                                              const Selection& selection) {
  std::unordered_map<std::string_view, const CurrencyCandidate*> by_id;
  for (const auto& cur : instance.currencies) by_id.emplace(cur.id, &cur);
  std::vector<const CurrencyCandidate*> out;
  for (const auto& id : selection) {
    auto it = by_id.find(id);
    if (it == by_id.end()) throw DomainError("unknown currency id " + id);
    out.push_back(it->second);
  }
  return out;
}

Decimal penalty(const MspInstance& instance, std::size_t count) {
  return instance.balance_penalty * Decimal(static_cast<long>(count));
}

}  // namespace

Decimal evaluate_linear_objective(const MspInstance& instance, const Selection& selection) {
  const auto chosen = resolve(instance, selection);
  Decimal total;
  for (const auto* cur : chosen) {
    for (const auto& f : instance.functions) total += f.weight * cur->score(f.id);
  }
  return total - penalty(instance, chosen.size());
}

Decimal evaluate_saturating_objective(const MspInstance& instance, const Selection& selection) {
  const auto chosen = resolve(instance, selection);
  Decimal total;
  for (const auto& f : instance.functions) {
    Decimal weighted;
    for (const auto* cur : chosen) weighted += f.weight * cur->score(f.id);
    total += std::min(Decimal(1), weighted);
  }
  return total - penalty(instance, chosen.size());
}

Decimal evaluate_objective(const MspInstance& instance, const Selection& selection,
                           ObjectiveKind kind) {
  return kind == ObjectiveKind::Linear ? evaluate_linear_objective(instance, selection)
                                       : evaluate_saturating_objective(instance, selection);
}

std::map<std::string, Decimal> function_scores(const MspInstance& instance,
                                               const Selection& selection) {
  const auto chosen = resolve(instance, selection);
  std::map<std::string, Decimal> scores;
  for (const auto& f : instance.functions) {
    Decimal achieved;
    for (const auto* cur : chosen) achieved += cur->score(f.id);
    scores[f.id] = achieved;
  }
  return scores;
}

FeasibilityVerdict check_feasible(const MspInstance& instance, const Selection& selection) {
  FeasibilityVerdict verdict;
  std::set<std::string> known;
  for (const auto& cur : instance.currencies) known.insert(cur.id);
  Selection resolvable;
  for (const auto& id : selection) {
    if (known.count(id) == 0) {
      verdict.violations.push_back({ConstraintKind::UnknownCurrency, id, "not in the pool"});
    } else {
      resolvable.insert(id);
    }
  }
  if (selection.size() > instance.max_parallel) {
    verdict.violations.push_back(
        {ConstraintKind::Cardinality, "",
         std::to_string(selection.size()) + " currencies exceed max_parallel " +
             std::to_string(instance.max_parallel)});
  }
  const auto scores = function_scores(instance, resolvable);
  for (const auto& f : instance.functions) {
    const Decimal& achieved = scores.at(f.id);
    if (achieved < f.threshold) {
      verdict.violations.push_back({ConstraintKind::Threshold, f.id,
                                    "coverage " + achieved.to_string() + " below threshold " +
                                        f.threshold.to_string()});
    }
  }
  for (const auto& cur : instance.currencies) {
    if (cur.mandatory && selection.count(cur.id) == 0) {
      verdict.violations.push_back({ConstraintKind::Mandatory, cur.id, "mandatory currency missing"});
    }
  }
  return verdict;
}

std::vector<Decimal> linearized_y_values(const MspInstance& instance, const Selection& selection) {
  const auto chosen = resolve(instance, selection);
  std::vector<Decimal> y;
  y.reserve(instance.functions.size());
  for (const auto& f : instance.functions) {
    Decimal weighted;
    for (const auto* cur : chosen) weighted += f.weight * cur->score(f.id);
    // Both upper bounds of y_k hold; the objective pushes y_k to the tighter one.
    y.push_back(std::min(Decimal(1), weighted));
  }
  return y;
}

CoverageReport coverage_report(const MspInstance& instance, const Selection& selection) {
  CoverageReport report;
  const auto scores = function_scores(instance, selection);
  report.covers_catalog = true;
  for (const auto& f : instance.functions) {
    FunctionCoverage row;
    row.function_id = f.id;
    row.achieved = scores.at(f.id);
    row.threshold = f.threshold;
    row.saturated = std::min(Decimal(1), f.weight * row.achieved);
    row.covered = row.achieved >= f.threshold;
    report.covers_catalog = report.covers_catalog && row.covered;
    report.functions.push_back(std::move(row));
  }
  return report;
}

}  // namespace rsdm::msp
