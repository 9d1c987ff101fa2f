#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rsdm/decimal.hpp"

namespace rsdm::msp {

enum class CurrencyClass { Fiat, Commodity, Crypto, RSDM, Other };
enum class ObjectiveKind { Linear, Saturating };

std::string_view to_string(CurrencyClass cls);
std::optional<CurrencyClass> parse_currency_class(std::string_view text);
std::string_view to_string(ObjectiveKind kind);

struct MonetaryFunction {
  std::string id;
  Decimal weight{1};     // w_k
  Decimal threshold{0};  // H_k, compared against raw coverage sums
  std::string description;
};

struct CurrencyCandidate {
  std::string id;
  CurrencyClass currency_class = CurrencyClass::Other;
  std::map<std::string, Decimal> coverage;  // function id -> u_ck in [0, 1]; missing = 0
  bool mandatory = false;

  Decimal score(std::string_view function_id) const;
};

struct MspInstance {
  std::vector<MonetaryFunction> functions;
  std::vector<CurrencyCandidate> currencies;
  std::uint32_t max_parallel = 1;  // N^Parallel
  Decimal balance_penalty{0};      // beta^Balance
};

/// The twelve monetary functions of a good modern money, unit weights, zero thresholds.
std::vector<MonetaryFunction> default_function_catalog();

/// Sorted, duplicate-free set of currency ids with x_c = 1.
using Selection = std::set<std::string>;

enum class IssueKind {
  Invalid,     // malformed data; the instance cannot be solved
  Infeasible,  // well formed, but no selection can satisfy the constraints
};

struct ValidationIssue {
  std::string pointer;  // JSON pointer into the instance document
  std::string message;
  IssueKind kind = IssueKind::Invalid;
};

/// Empty iff the instance is well formed and not trivially infeasible.
std::vector<ValidationIssue> validate_instance(const MspInstance& instance);

/// sum over selected c of sum_k w_k u_ck, minus beta * |selection|.
Decimal evaluate_linear_objective(const MspInstance& instance, const Selection& selection);
/// sum_k min{1, sum over selected c of w_k u_ck}, minus beta * |selection|.
Decimal evaluate_saturating_objective(const MspInstance& instance, const Selection& selection);
Decimal evaluate_objective(const MspInstance& instance, const Selection& selection,
                           ObjectiveKind kind);

/// Raw achieved coverage sum_c u_ck x_c per function id.
std::map<std::string, Decimal> function_scores(const MspInstance& instance,
                                               const Selection& selection);

enum class ConstraintKind { UnknownCurrency, Cardinality, Threshold, Mandatory };

struct ConstraintViolation {
  ConstraintKind kind;
  std::string subject;  // function or currency id; empty for cardinality
  std::string detail;
};

struct FeasibilityVerdict {
  std::vector<ConstraintViolation> violations;
  bool feasible() const { return violations.empty(); }
};

FeasibilityVerdict check_feasible(const MspInstance& instance, const Selection& selection);

struct MspSolution {
  Selection selection;
  Decimal objective;
  ObjectiveKind objective_kind = ObjectiveKind::Linear;
  std::map<std::string, Decimal> per_function_score;
};

struct SolveStats {
  std::uint64_t nodes = 0;  // subsets visited (exhaustive) or search nodes (branch and bound)
};

/// A feasible optimum, or the reasons no selection can satisfy the constraints.
struct MspResult {
  std::optional<MspSolution> solution;
  std::vector<std::string> infeasibility;
  SolveStats stats;

  bool feasible() const { return solution.has_value(); }
};

inline constexpr std::size_t kExhaustiveLimit = 25;

/// Enumerates all 2^n subsets. Ties go to the lexicographically smallest id
/// sequence. Throws SizeGuardError above `limit` currencies.
MspResult solve_exhaustive(const MspInstance& instance, ObjectiveKind kind,
                           std::size_t limit = kExhaustiveLimit);

/// Depth-first branch and bound for the linear objective.
MspResult solve_branch_and_bound(const MspInstance& instance);

/// Exact optimum of the saturating objective through its linearization
/// (auxiliary y_k <= 1, y_k <= sum_c w_k u_ck x_c), searched by the same
/// branch and bound.
MspResult solve_saturating(const MspInstance& instance);

/// Largest y_k admissible under the linearization for a fixed selection;
/// equals min{1, sum_c w_k u_ck x_c}.
std::vector<Decimal> linearized_y_values(const MspInstance& instance, const Selection& selection);

struct FunctionCoverage {
  std::string function_id;
  Decimal achieved;   // sum_c u_ck x_c
  Decimal threshold;  // H_k
  Decimal saturated;  // min{1, w_k * achieved}
  bool covered = false;
};

struct CoverageReport {
  std::vector<FunctionCoverage> functions;
  bool covers_catalog = false;  // every function covered
};

CoverageReport coverage_report(const MspInstance& instance, const Selection& selection);

}  // namespace rsdm::msp
