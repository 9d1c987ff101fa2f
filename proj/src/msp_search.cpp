// Exact search over 0-1 currency selections. Instance decimals are scaled once
// to exact integers so the inner loops avoid big-number allocation; every
// returned objective is re-evaluated in Decimal and cross-checked.

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "rsdm/errors.hpp"
#include "rsdm/msp.hpp"

namespace rsdm::msp {
namespace {

using Int = boost::multiprecision::checked_int256_t;

Int to_scaled(const Decimal& value, std::int64_t places) {
  const std::int64_t shift = value.exponent() + places;
  mpz_class c = value.coefficient();
  if (shift >= 0) {
    c *= pow10(static_cast<std::uint64_t>(shift));
  } else {
    const mpz_class divisor = pow10(static_cast<std::uint64_t>(-shift));
    if (mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t()) == 0) {
      throw std::logic_error("scale too small for " + value.to_string());
    }
    c /= divisor;
  }
  if (mpz_sizeinbase(c.get_mpz_t(), 2) > 240) {
    throw DomainError("instance precision exceeds the exact search range");
  }
  return Int(c.get_str());
}

Decimal from_scaled(const Int& value, std::int64_t places) {
  return Decimal(mpz_class(value.str()), -places);
}

/// Instance data in id order, scaled to common exact integer units.
struct ScaledModel {
  std::vector<std::string> ids;
  std::vector<bool> mandatory;
  std::size_t functions = 0;
  std::uint32_t max_parallel = 0;
  std::int64_t objective_places = 0;  // scale of weighted scores, beta and 1
  std::vector<Int> score;             // sum_k w_k u_ck
  std::vector<std::vector<Int>> weighted;  // w_k u_ck
  std::vector<std::vector<Int>> raw;       // u_ck, at threshold scale
  std::vector<Int> threshold;
  Int beta;
  Int one;
};

std::int64_t max_places(const std::vector<Decimal>& values) {
  std::int64_t places = 0;
  for (const auto& v : values) places = std::max(places, v.decimal_places());
  return places;
}

ScaledModel build_model(const MspInstance& instance) {
  std::vector<std::size_t> order(instance.currencies.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return instance.currencies[a].id < instance.currencies[b].id;
  });

  std::vector<Decimal> weights;
  std::vector<Decimal> thresholds;
  std::vector<Decimal> scores;
  for (const auto& f : instance.functions) {
    weights.push_back(f.weight);
    thresholds.push_back(f.threshold);
  }
  for (const auto& cur : instance.currencies) {
    for (const auto& f : instance.functions) scores.push_back(cur.score(f.id));
  }
  const std::int64_t wp = max_places(weights);
  const std::int64_t up = max_places(scores);
  const std::int64_t objective_places =
      std::max(wp + up, instance.balance_penalty.decimal_places());
  const std::int64_t coverage_places = std::max(up, max_places(thresholds));

  ScaledModel model;
  model.functions = instance.functions.size();
  model.max_parallel = instance.max_parallel;
  model.objective_places = objective_places;
  model.beta = to_scaled(instance.balance_penalty, objective_places);
  model.one = to_scaled(Decimal(1), objective_places);
  for (const auto& f : instance.functions) {
    model.threshold.push_back(to_scaled(f.threshold, coverage_places));
  }
  for (std::size_t index : order) {
    const auto& cur = instance.currencies[index];
    model.ids.push_back(cur.id);
    model.mandatory.push_back(cur.mandatory);
    std::vector<Int> weighted;
    std::vector<Int> raw;
    Int total = 0;
    for (const auto& f : instance.functions) {
      const Decimal u = cur.score(f.id);
      weighted.push_back(to_scaled(f.weight * u, objective_places));
      raw.push_back(to_scaled(u, coverage_places));
      total += weighted.back();
    }
    model.score.push_back(total);
    model.weighted.push_back(std::move(weighted));
    model.raw.push_back(std::move(raw));
  }
  return model;
}

void require_solvable(const MspInstance& instance) {
  std::string message;
  for (const auto& issue : validate_instance(instance)) {
    if (issue.kind != IssueKind::Invalid) continue;
    if (!message.empty()) message += "; ";
    message += issue.pointer + ": " + issue.message;
  }
  if (!message.empty()) throw DomainError("invalid instance: " + message);
}

/// Why the feasible region is empty, per constraint where that can be pinned down.
std::vector<std::string> diagnose(const ScaledModel& model) {
  std::vector<std::string> reasons;
  std::size_t mandatory = 0;
  for (bool m : model.mandatory) mandatory += m ? 1 : 0;
  if (mandatory > model.max_parallel) {
    reasons.push_back("cardinality: " + std::to_string(mandatory) +
                      " mandatory currencies exceed max_parallel " +
                      std::to_string(model.max_parallel));
    return reasons;
  }
  const std::size_t room = model.max_parallel - mandatory;
  for (std::size_t k = 0; k < model.functions; ++k) {
    Int best = 0;
    std::vector<Int> optional;
    for (std::size_t c = 0; c < model.ids.size(); ++c) {
      if (model.mandatory[c]) {
        best += model.raw[c][k];
      } else {
        optional.push_back(model.raw[c][k]);
      }
    }
    std::sort(optional.begin(), optional.end(), std::greater<>());
    for (std::size_t j = 0; j < std::min(room, optional.size()); ++j) best += optional[j];
    if (best < model.threshold[k]) {
      reasons.push_back("threshold unreachable for function #" + std::to_string(k + 1));
    }
  }
  if (reasons.empty()) reasons.emplace_back("no selection satisfies all thresholds jointly");
  return reasons;
}

MspSolution make_solution(const MspInstance& instance, const ScaledModel& model,
                          const std::vector<std::size_t>& chosen, const Int& value,
                          ObjectiveKind kind) {
  MspSolution solution;
  for (std::size_t c : chosen) solution.selection.insert(model.ids[c]);
  solution.objective = evaluate_objective(instance, solution.selection, kind);
  solution.objective_kind = kind;
  solution.per_function_score = function_scores(instance, solution.selection);
  if (solution.objective != from_scaled(value, model.objective_places)) {
    throw std::logic_error("scaled objective disagrees with decimal re-evaluation");
  }
  return solution;
}

MspResult finish(const MspInstance& instance, const ScaledModel& model,
                 const std::optional<Int>& best, const std::vector<std::size_t>& chosen,
                 ObjectiveKind kind, std::uint64_t nodes) {
  MspResult result;
  result.stats.nodes = nodes;
  if (best) {
    result.solution = make_solution(instance, model, chosen, *best, kind);
  } else {
    result.infeasibility = diagnose(model);
  }
  return result;
}

// Lexicographic order of the sorted id sequences of two subsets (ids are in
// index order): the subset owning the smallest differing element is smaller
// unless the other subset stops there.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  const int first = std::countr_zero(diff);
  const std::uint64_t above = first == 63 ? 0 : ~std::uint64_t{0} << (first + 1);
  if ((a >> first) & 1U) return (b & above) != 0;
  return (a & above) == 0;
}

std::vector<std::size_t> mask_indices(std::uint64_t mask) {
  std::vector<std::size_t> out;
  while (mask != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

template <typename Objective>
MspResult run_exhaustive(const MspInstance& instance, const ScaledModel& model, ObjectiveKind kind,
                         Objective objective) {
  const std::size_t n = model.ids.size();
  std::uint64_t mandatory_mask = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (model.mandatory[c]) mandatory_mask |= std::uint64_t{1} << c;
  }
  std::vector<Int> raw_sum(model.functions, Int(0));
  std::vector<Int> weighted_sum(model.functions, Int(0));
  Int score_sum = 0;

  std::optional<Int> best;
  std::uint64_t best_mask = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t mask = 0;
  for (std::uint64_t step = 0; step < total; ++step) {
    if (step != 0) {
      // Gray code: exactly one membership flips per step.
      const auto c = static_cast<std::size_t>(std::countr_zero(step));
      const std::uint64_t bit = std::uint64_t{1} << c;
      const bool adding = (mask & bit) == 0;
      mask ^= bit;
      for (std::size_t k = 0; k < model.functions; ++k) {
        if (adding) {
          raw_sum[k] += model.raw[c][k];
          weighted_sum[k] += model.weighted[c][k];
        } else {
          raw_sum[k] -= model.raw[c][k];
          weighted_sum[k] -= model.weighted[c][k];
        }
      }
      if (adding) {
        score_sum += model.score[c];
      } else {
        score_sum -= model.score[c];
      }
    }
    if ((mask & mandatory_mask) != mandatory_mask) continue;
    const auto count = static_cast<std::uint32_t>(std::popcount(mask));
    if (count > model.max_parallel) continue;
    bool meets = true;
    for (std::size_t k = 0; k < model.functions && meets; ++k) {
      meets = raw_sum[k] >= model.threshold[k];
    }
    if (!meets) continue;
    const Int value = objective(score_sum, weighted_sum, count);
    if (!best || value > *best || (value == *best && lex_less(mask, best_mask))) {
      best = value;
      best_mask = mask;
    }
  }
  return finish(instance, model, best, mask_indices(best_mask), kind, total);
}

Int linear_value(const ScaledModel& model, const Int& score_sum, std::uint32_t count) {
  return score_sum - model.beta * count;
}

Int saturating_value(const ScaledModel& model, const std::vector<Int>& weighted_sum,
                     std::uint32_t count) {
  Int total = 0;
  for (const auto& w : weighted_sum) total += std::min(model.one, w);
  return total - model.beta * count;
}

/// Depth-first branch and bound over the optional (non-mandatory) currencies in
/// id order, with mandatory currencies fixed to 1 at the root.
class BranchAndBound {
 public:
  BranchAndBound(const ScaledModel& model, ObjectiveKind kind) : model_(model), kind_(kind) {
    const std::size_t m = model.functions;
    raw_sum_.assign(m, Int(0));
    weighted_sum_.assign(m, Int(0));
    for (std::size_t c = 0; c < model.ids.size(); ++c) {
      if (model.mandatory[c]) {
        mandatory_.push_back(c);
        add(c);
      } else {
        optional_.push_back(c);
      }
    }
    precompute_suffix_bounds();
  }

  void run() {
    if (count_ > model_.max_parallel) return;
    visit(0);
  }

  const std::optional<Int>& best() const { return best_; }
  const std::vector<std::size_t>& best_selection() const { return best_selection_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  // prefix[j] = sum of the j largest values.
  static std::vector<Int> descending_prefix(std::vector<Int> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    std::vector<Int> prefix(values.size() + 1, Int(0));
    for (std::size_t j = 0; j < values.size(); ++j) prefix[j + 1] = prefix[j] + values[j];
    return prefix;
  }

  void precompute_suffix_bounds() {
    const std::size_t depth = optional_.size();
    raw_top_.resize(depth + 1);
    weighted_top_.resize(depth + 1);
    marginal_top_.resize(depth + 1);
    for (std::size_t pos = 0; pos <= depth; ++pos) {
      std::vector<Int> marginals;
      for (std::size_t i = pos; i < depth; ++i) {
        const Int gain = model_.score[optional_[i]] - model_.beta;
        if (gain > 0) marginals.push_back(gain);
      }
      marginal_top_[pos] = descending_prefix(std::move(marginals));
      for (std::size_t k = 0; k < model_.functions; ++k) {
        std::vector<Int> raw;
        std::vector<Int> weighted;
        for (std::size_t i = pos; i < depth; ++i) {
          raw.push_back(model_.raw[optional_[i]][k]);
          weighted.push_back(model_.weighted[optional_[i]][k]);
        }
        raw_top_[pos].push_back(descending_prefix(std::move(raw)));
        weighted_top_[pos].push_back(descending_prefix(std::move(weighted)));
      }
    }
  }

  void add(std::size_t c) {
    for (std::size_t k = 0; k < model_.functions; ++k) {
      raw_sum_[k] += model_.raw[c][k];
      weighted_sum_[k] += model_.weighted[c][k];
    }
    score_sum_ += model_.score[c];
    ++count_;
  }

  void remove(std::size_t c) {
    for (std::size_t k = 0; k < model_.functions; ++k) {
      raw_sum_[k] -= model_.raw[c][k];
      weighted_sum_[k] -= model_.weighted[c][k];
    }
    score_sum_ -= model_.score[c];
    --count_;
  }

  std::size_t room(std::size_t pos) const {
    return std::min<std::size_t>(model_.max_parallel - count_, optional_.size() - pos);
  }

  bool thresholds_reachable(std::size_t pos) const {
    const std::size_t r = room(pos);
    for (std::size_t k = 0; k < model_.functions; ++k) {
      if (raw_sum_[k] + raw_top_[pos][k][r] < model_.threshold[k]) return false;
    }
    return true;
  }

  Int bound(std::size_t pos) const {
    const std::size_t r = room(pos);
    if (kind_ == ObjectiveKind::Linear) {
      const auto& top = marginal_top_[pos];
      return linear_value(model_, score_sum_, count_) + top[std::min(r, top.size() - 1)];
    }
    // Any completion adding j currencies raises each y_k by at most the j largest
    // remaining weighted scores and pays beta for each.
    std::optional<Int> best;
    for (std::size_t j = 0; j <= r; ++j) {
      Int total = 0;
      for (std::size_t k = 0; k < model_.functions; ++k) {
        total += std::min(model_.one, weighted_sum_[k] + weighted_top_[pos][k][j]);
      }
      total -= model_.beta * static_cast<std::uint32_t>(count_ + j);
      if (!best || total > *best) best = total;
    }
    return *best;
  }

  Int value() const {
    return kind_ == ObjectiveKind::Linear ? linear_value(model_, score_sum_, count_)
                                          : saturating_value(model_, weighted_sum_, count_);
  }

  void visit(std::size_t pos) {
    ++nodes_;
    if (!thresholds_reachable(pos)) return;
    // Ties must stay alive so the tie-break can see every optimum.
    if (best_ && bound(pos) < *best_) return;
    if (pos == optional_.size()) {
      consider_leaf();
      return;
    }
    const std::size_t c = optional_[pos];
    if (count_ < model_.max_parallel) {
      add(c);
      chosen_.push_back(c);
      visit(pos + 1);
      chosen_.pop_back();
      remove(c);
    }
    visit(pos + 1);
  }

  void consider_leaf() {
    const Int v = value();
    if (best_ && v < *best_) return;
    std::vector<std::size_t> selection;
    std::merge(mandatory_.begin(), mandatory_.end(), chosen_.begin(), chosen_.end(),
               std::back_inserter(selection));
    if (!best_ || v > *best_ ||
        std::lexicographical_compare(selection.begin(), selection.end(),
                                     best_selection_.begin(), best_selection_.end())) {
      best_ = v;
      best_selection_ = std::move(selection);
    }
  }

  const ScaledModel& model_;
  ObjectiveKind kind_;
  std::vector<std::size_t> mandatory_;
  std::vector<std::size_t> optional_;
  std::vector<std::vector<std::vector<Int>>> raw_top_;       // [pos][k][j]
  std::vector<std::vector<std::vector<Int>>> weighted_top_;  // [pos][k][j]
  std::vector<std::vector<Int>> marginal_top_;               // [pos][j]

  std::vector<Int> raw_sum_;
  std::vector<Int> weighted_sum_;
  Int score_sum_ = 0;
  std::uint32_t count_ = 0;
  std::vector<std::size_t> chosen_;

  std::optional<Int> best_;
  std::vector<std::size_t> best_selection_;
  std::uint64_t nodes_ = 0;
};

MspResult solve_by_search(const MspInstance& instance, ObjectiveKind kind) {
  require_solvable(instance);
  const ScaledModel model = build_model(instance);
  BranchAndBound search(model, kind);
  try {
    search.run();
  } catch (const std::overflow_error&) {
    throw DomainError("instance precision exceeds the exact search range");
  }
  return finish(instance, model, search.best(), search.best_selection(), kind, search.nodes());
}

}  // namespace

MspResult solve_exhaustive(const MspInstance& instance, ObjectiveKind kind, std::size_t limit) {
  const std::size_t n = instance.currencies.size();
  const std::size_t hard_limit = std::min<std::size_t>(limit, 62);
  if (n > hard_limit) {
    throw SizeGuardError("exhaustive enumeration limited to " + std::to_string(hard_limit) +
                         " currencies, instance has " + std::to_string(n));
  }
  require_solvable(instance);
  const ScaledModel model = build_model(instance);
  try {
    if (kind == ObjectiveKind::Linear) {
      return run_exhaustive(instance, model, kind,
                            [&](const Int& score_sum, const std::vector<Int>&, std::uint32_t count) {
                              return linear_value(model, score_sum, count);
                            });
    }
    return run_exhaustive(instance, model, kind,
                          [&](const Int&, const std::vector<Int>& weighted, std::uint32_t count) {
                            return saturating_value(model, weighted, count);
                          });
  } catch (const std::overflow_error&) {
    throw DomainError("instance precision exceeds the exact search range");
  }
}

MspResult solve_branch_and_bound(const MspInstance& instance) {
  return solve_by_search(instance, ObjectiveKind::Linear);
}

MspResult solve_saturating(const MspInstance& instance) {
  return solve_by_search(instance, ObjectiveKind::Saturating);
}

}  // namespace rsdm::msp
