#include "rsdm/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace rsdm::io {
namespace {

std::string join_issues(LoadStage stage, const std::vector<LoadIssue>& issues) {
  std::string message = std::string(to_string(stage)) + " error";
  for (const auto& issue : issues) {
    message += "\n  " + (issue.pointer.empty() ? std::string("/") : issue.pointer) + ": " +
               issue.message;
  }
  return message;
}

std::string escape_pointer_token(const std::string& token) {
  std::string out;
  for (char c : token) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

/// Collects schema issues with JSON-pointer locations while extracting fields.
class Schema {
 public:
  std::vector<LoadIssue> issues;

  bool object(const json& doc, const std::string& at) {
    if (doc.is_object()) return true;
    issues.push_back({at, "expected an object"});
    return false;
  }

  const json* field(const json& obj, const std::string& at, const std::string& key,
                    bool required) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) {
      if (required) issues.push_back({at + "/" + escape_pointer_token(key), "missing required field"});
      return nullptr;
    }
    return &*it;
  }

  std::optional<Decimal> decimal(const json& obj, const std::string& at, const std::string& key,
                                 bool required = true) {
    const json* v = field(obj, at, key, required);
    if (!v) return std::nullopt;
    const std::string here = at + "/" + escape_pointer_token(key);
    try {
      if (v->is_string()) return Decimal::parse(v->get<std::string>());
      if (v->is_number_integer()) return Decimal(static_cast<long>(v->get<std::int64_t>()));
    } catch (const ParseError&) {
      issues.push_back({here, "not a decimal literal"});
      return std::nullopt;
    }
    issues.push_back({here, "expected a decimal string"});
    return std::nullopt;
  }

  std::optional<std::string> text(const json& obj, const std::string& at, const std::string& key,
                                  bool required = true) {
    const json* v = field(obj, at, key, required);
    if (!v) return std::nullopt;
    if (!v->is_string()) {
      issues.push_back({at + "/" + escape_pointer_token(key), "expected a string"});
      return std::nullopt;
    }
    return v->get<std::string>();
  }

  std::optional<std::int64_t> integer(const json& obj, const std::string& at,
                                      const std::string& key, bool required = true) {
    const json* v = field(obj, at, key, required);
    if (!v) return std::nullopt;
    if (!v->is_number_integer()) {
      issues.push_back({at + "/" + escape_pointer_token(key), "expected an integer"});
      return std::nullopt;
    }
    return v->get<std::int64_t>();
  }

  std::optional<std::uint64_t> count(const json& obj, const std::string& at,
                                     const std::string& key, bool required = true) {
    auto v = integer(obj, at, key, required);
    if (!v) return std::nullopt;
    if (*v < 0) {
      issues.push_back({at + "/" + escape_pointer_token(key), "expected a nonnegative integer"});
      return std::nullopt;
    }
    return static_cast<std::uint64_t>(*v);
  }

  std::optional<bool> boolean(const json& obj, const std::string& at, const std::string& key,
                              bool required = true) {
    const json* v = field(obj, at, key, required);
    if (!v) return std::nullopt;
    if (!v->is_boolean()) {
      issues.push_back({at + "/" + escape_pointer_token(key), "expected a boolean"});
      return std::nullopt;
    }
    return v->get<bool>();
  }

  void finish() const {
    if (!issues.empty()) throw LoadError(LoadStage::Schema, issues);
  }
};

void fail_validation(const std::vector<std::string>& violations, const std::string& at) {
  if (violations.empty()) return;
  std::vector<LoadIssue> issues;
  for (const auto& v : violations) issues.push_back({at, v});
  throw LoadError(LoadStage::Validation, std::move(issues));
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream stream(line);
  while (std::getline(stream, cell, ',')) {
    const auto first = cell.find_first_not_of(" \t\r");
    const auto last = cell.find_last_not_of(" \t\r");
    cells.push_back(first == std::string::npos ? "" : cell.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::int64_t parse_int_cell(const std::string& cell, std::size_t row, const char* column) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw ParseError("row " + std::to_string(row) + ": " + column + " is not an integer: '" +
                     cell + "'");
  }
  return value;
}

void expect_header(std::istream& in, const std::string& expected) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("missing CSV header '" + expected + "'");
  if (!header.empty() && header.back() == '\r') header.pop_back();
  if (header != expected) {
    throw ParseError("unexpected CSV header '" + header + "', expected '" + expected + "'");
  }
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

std::string_view to_string(LoadStage stage) {
  switch (stage) {
    case LoadStage::Read:
      return "read";
    case LoadStage::Parse:
      return "parse";
    case LoadStage::Schema:
      return "schema";
    case LoadStage::Validation:
      return "validation";
  }
  return "";
}

LoadError::LoadError(LoadStage stage, std::vector<LoadIssue> issues)
    : Error(join_issues(stage, issues)), stage_(stage), issues_(std::move(issues)) {}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(LoadStage::Read, {{"", "cannot open " + path.string()}});
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw LoadError(LoadStage::Parse, {{"", e.what()}});
  }
}

// ---------------------------------------------------------------- RsdmSpec

json to_json(const RsdmSpec& spec) {
  return {
      {"issue_date", format_iso_date(spec.issue_day)},
      {"collateral_id", spec.collateral_id},
      {"initial_weight_g", spec.initial_weight_g.to_string()},
      {"daily_decay_factor", spec.daily_decay_factor.to_string()},
      {"expiry_days", spec.expiry_days},
      {"redemption_fee_rate", spec.redemption_fee_rate.to_string()},
      {"issue_size", spec.issue_size},
      {"inspection_fee", spec.inspection_fee.to_string()},
      {"min_redemption_g", spec.min_redemption_g.to_string()},
  };
}

RsdmSpec spec_from_json(const json& doc, const std::string& base) {
  Schema schema;
  if (!schema.object(doc, base)) schema.finish();
  RsdmSpec spec;
  if (auto date = schema.text(doc, base, "issue_date")) {
    try {
      spec.issue_day = parse_iso_date(*date);
    } catch (const ParseError& e) {
      schema.issues.push_back({base + "/issue_date", e.what()});
    }
  }
  if (auto v = schema.text(doc, base, "collateral_id")) spec.collateral_id = *v;
  if (auto v = schema.decimal(doc, base, "initial_weight_g")) spec.initial_weight_g = *v;
  if (auto v = schema.decimal(doc, base, "daily_decay_factor")) spec.daily_decay_factor = *v;
  if (auto v = schema.integer(doc, base, "expiry_days")) spec.expiry_days = *v;
  if (auto v = schema.decimal(doc, base, "redemption_fee_rate")) spec.redemption_fee_rate = *v;
  if (auto v = schema.count(doc, base, "issue_size", false)) spec.issue_size = *v;
  if (auto v = schema.decimal(doc, base, "inspection_fee", false)) spec.inspection_fee = *v;
  if (auto v = schema.decimal(doc, base, "min_redemption_g", false)) spec.min_redemption_g = *v;
  schema.finish();
  fail_validation(validate_spec(spec), base);
  return spec;
}

// ---------------------------------------------------------------- MSP

json to_json(const msp::MspInstance& instance) {
  json functions = json::array();
  for (const auto& f : instance.functions) {
    json entry = {{"id", f.id}, {"weight", f.weight.to_string()},
                  {"threshold", f.threshold.to_string()}};
    if (!f.description.empty()) entry["description"] = f.description;
    functions.push_back(std::move(entry));
  }
  json currencies = json::array();
  for (const auto& c : instance.currencies) {
    json coverage = json::object();
    for (const auto& [fid, u] : c.coverage) coverage[fid] = u.to_string();
    currencies.push_back({{"id", c.id},
                          {"class", std::string(msp::to_string(c.currency_class))},
                          {"mandatory", c.mandatory},
                          {"coverage", std::move(coverage)}});
  }
  return {{"functions", std::move(functions)},
          {"currencies", std::move(currencies)},
          {"max_parallel", instance.max_parallel},
          {"balance_penalty", instance.balance_penalty.to_string()}};
}

msp::MspInstance msp_instance_from_json(const json& doc) {
  Schema schema;
  if (!schema.object(doc, "")) schema.finish();
  msp::MspInstance instance;

  if (const json* functions = schema.field(doc, "", "functions", true)) {
    if (!functions->is_array()) {
      schema.issues.push_back({"/functions", "expected an array"});
    } else {
      for (std::size_t k = 0; k < functions->size(); ++k) {
        const std::string at = "/functions/" + std::to_string(k);
        const json& f = (*functions)[k];
        if (!schema.object(f, at)) continue;
        msp::MonetaryFunction fn;
        if (auto v = schema.text(f, at, "id")) fn.id = *v;
        if (auto v = schema.decimal(f, at, "weight")) fn.weight = *v;
        if (auto v = schema.decimal(f, at, "threshold")) fn.threshold = *v;
        if (auto v = schema.text(f, at, "description", false)) fn.description = *v;
        instance.functions.push_back(std::move(fn));
      }
    }
  }

  if (const json* currencies = schema.field(doc, "", "currencies", true)) {
    if (!currencies->is_array()) {
      schema.issues.push_back({"/currencies", "expected an array"});
    } else {
      for (std::size_t c = 0; c < currencies->size(); ++c) {
        const std::string at = "/currencies/" + std::to_string(c);
        const json& cur = (*currencies)[c];
        if (!schema.object(cur, at)) continue;
        msp::CurrencyCandidate candidate;
        if (auto v = schema.text(cur, at, "id")) candidate.id = *v;
        if (auto v = schema.text(cur, at, "class")) {
          if (auto cls = msp::parse_currency_class(*v)) {
            candidate.currency_class = *cls;
          } else {
            schema.issues.push_back({at + "/class", "expected Fiat|Commodity|Crypto|RSDM|Other"});
          }
        }
        if (auto v = schema.boolean(cur, at, "mandatory", false)) candidate.mandatory = *v;
        if (const json* coverage = schema.field(cur, at, "coverage", true)) {
          if (schema.object(*coverage, at + "/coverage")) {
            for (const auto& item : coverage->items()) {
              if (auto u = schema.decimal(*coverage, at + "/coverage", item.key())) {
                candidate.coverage[item.key()] = *u;
              }
            }
          }
        }
        instance.currencies.push_back(std::move(candidate));
      }
    }
  }

  if (auto v = schema.integer(doc, "", "max_parallel")) {
    if (*v < 0 || *v > std::numeric_limits<std::uint32_t>::max()) {
      schema.issues.push_back({"/max_parallel", "out of range"});
    } else {
      instance.max_parallel = static_cast<std::uint32_t>(*v);
    }
  }
  if (auto v = schema.decimal(doc, "", "balance_penalty")) instance.balance_penalty = *v;
  schema.finish();

  std::vector<LoadIssue> invalid;
  for (const auto& issue : msp::validate_instance(instance)) {
    if (issue.kind == msp::IssueKind::Invalid) invalid.push_back({issue.pointer, issue.message});
  }
  if (!invalid.empty()) throw LoadError(LoadStage::Validation, std::move(invalid));
  return instance;
}

json to_json(const msp::MspSolution& solution) {
  json scores = json::object();
  for (const auto& [fid, s] : solution.per_function_score) scores[fid] = s.to_string();
  return {{"selection", solution.selection},
          {"objective", solution.objective.to_string()},
          {"objective_kind", std::string(msp::to_string(solution.objective_kind))},
          {"per_function_score", std::move(scores)}};
}

json to_json(const msp::MspResult& result) {
  if (result.solution) {
    json out = to_json(*result.solution);
    out["status"] = "optimal";
    return out;
  }
  return {{"status", "infeasible"}, {"reasons", result.infeasibility}};
}

json to_json(const msp::FeasibilityVerdict& verdict) {
  json violations = json::array();
  for (const auto& v : verdict.violations) {
    const char* kind = "";
    switch (v.kind) {
      case msp::ConstraintKind::UnknownCurrency:
        kind = "unknown_currency";
        break;
      case msp::ConstraintKind::Cardinality:
        kind = "cardinality";
        break;
      case msp::ConstraintKind::Threshold:
        kind = "threshold";
        break;
      case msp::ConstraintKind::Mandatory:
        kind = "mandatory";
        break;
    }
    violations.push_back({{"constraint", kind}, {"subject", v.subject}, {"detail", v.detail}});
  }
  return {{"feasible", verdict.feasible()}, {"violations", std::move(violations)}};
}

json to_json(const msp::CoverageReport& report) {
  json rows = json::array();
  for (const auto& r : report.functions) {
    rows.push_back({{"function", r.function_id},
                    {"achieved", r.achieved.to_string()},
                    {"threshold", r.threshold.to_string()},
                    {"saturated", r.saturated.to_string()},
                    {"covered", r.covered}});
  }
  return {{"functions", std::move(rows)}, {"covers_catalog", report.covers_catalog}};
}

// ---------------------------------------------------------------- demand

json to_json(const demand::DemandScenario& s) {
  return {{"marshallian_k", s.marshallian_k.to_string()},
          {"gdp", s.gdp.to_string()},
          {"fiat_multiplier", s.fiat_multiplier.to_string()},
          {"sdm_multiplier", s.sdm_multiplier.to_string()},
          {"fiat_reserve", s.fiat_reserve.to_string()},
          {"sdm_reserve", s.sdm_reserve.to_string()},
          {"other_supply", s.other_supply.to_string()}};
}

demand::DemandScenario scenario_from_json(const json& doc) {
  Schema schema;
  if (!schema.object(doc, "")) schema.finish();
  demand::DemandScenario s;
  auto read = [&](const char* key, Decimal& out) {
    if (auto v = schema.decimal(doc, "", key)) out = *v;
  };
  read("marshallian_k", s.marshallian_k);
  read("gdp", s.gdp);
  read("fiat_multiplier", s.fiat_multiplier);
  read("sdm_multiplier", s.sdm_multiplier);
  read("fiat_reserve", s.fiat_reserve);
  read("sdm_reserve", s.sdm_reserve);
  read("other_supply", s.other_supply);
  schema.finish();
  fail_validation(demand::validate_scenario(s), "");
  return s;
}

// ---------------------------------------------------------------- ledger

json to_json(const ledger::LedgerEvent& e) {
  json out = {{"sequence", e.sequence},
              {"day", e.day},
              {"kind", std::string(ledger::to_string(e.kind))},
              {"series_id", e.series_id},
              {"party", e.party}};
  if (!e.counterparty.empty()) out["counterparty"] = e.counterparty;
  if (e.kind != ledger::EventKind::WithdrawFees) out["token_count"] = e.token_count;
  if (e.payout_grams) out["payout_grams"] = e.payout_grams->to_string();
  if (e.withdrawn_grams) out["withdrawn_grams"] = e.withdrawn_grams->to_string();
  if (e.spec) out["spec"] = to_json(*e.spec);
  return out;
}

ledger::LedgerEvent event_from_json(const json& doc, const std::string& base) {
  Schema schema;
  if (!schema.object(doc, base)) schema.finish();
  ledger::LedgerEvent e;
  if (auto v = schema.count(doc, base, "sequence")) e.sequence = *v;
  if (auto v = schema.integer(doc, base, "day")) e.day = *v;
  if (auto v = schema.text(doc, base, "kind")) {
    if (auto kind = ledger::parse_event_kind(*v)) {
      e.kind = *kind;
    } else {
      schema.issues.push_back({base + "/kind", "expected Issue|Transfer|Redeem|WithdrawFees"});
    }
  }
  if (auto v = schema.text(doc, base, "series_id")) e.series_id = *v;
  if (auto v = schema.text(doc, base, "party")) e.party = *v;
  if (auto v = schema.text(doc, base, "counterparty", false)) e.counterparty = *v;
  if (auto v = schema.count(doc, base, "token_count", e.kind != ledger::EventKind::WithdrawFees)) {
    e.token_count = *v;
  }
  e.payout_grams = schema.decimal(doc, base, "payout_grams", false);
  e.withdrawn_grams = schema.decimal(doc, base, "withdrawn_grams", false);
  schema.finish();
  if (const json* spec = schema.field(doc, base, "spec", false)) {
    e.spec = spec_from_json(*spec, base + "/spec");
  }
  return e;
}

json to_json(const ledger::LedgerState& state) {
  json series = json::object();
  for (const auto& [id, book] : state.series) {
    series[id] = {{"spec", to_json(book.spec)},
                  {"issued_tokens", book.issued_tokens},
                  {"outstanding_tokens", book.outstanding_tokens},
                  {"vault_g", book.vault_g.to_string()},
                  {"cumulative_payout_g", book.cumulative_payout_g.to_string()},
                  {"issuer_accrual_g", book.issuer_accrual_g.to_string()},
                  {"withdrawn_fees_g", book.withdrawn_fees_g.to_string()}};
  }
  json balances = json::array();
  for (const auto& [key, tokens] : state.balances) {
    balances.push_back({{"party", key.first}, {"series_id", key.second}, {"tokens", tokens}});
  }
  return {{"last_sequence", state.last_sequence},
          {"last_day", state.last_day},
          {"series", std::move(series)},
          {"balances", std::move(balances)}};
}

ledger::LedgerState state_from_json(const json& doc) {
  Schema schema;
  if (!schema.object(doc, "")) schema.finish();
  ledger::LedgerState state;
  if (auto v = schema.count(doc, "", "last_sequence")) state.last_sequence = *v;
  if (auto v = schema.integer(doc, "", "last_day")) state.last_day = *v;
  if (const json* series = schema.field(doc, "", "series", true); series && series->is_object()) {
    for (const auto& item : series->items()) {
      const std::string at = "/series/" + escape_pointer_token(item.key());
      const json& b = item.value();
      if (!schema.object(b, at)) continue;
      ledger::SeriesBook book;
      if (const json* spec = schema.field(b, at, "spec", true)) book.spec = spec_from_json(*spec, at + "/spec");
      if (auto v = schema.count(b, at, "issued_tokens")) book.issued_tokens = *v;
      if (auto v = schema.count(b, at, "outstanding_tokens")) book.outstanding_tokens = *v;
      if (auto v = schema.decimal(b, at, "vault_g")) book.vault_g = *v;
      if (auto v = schema.decimal(b, at, "cumulative_payout_g")) book.cumulative_payout_g = *v;
      if (auto v = schema.decimal(b, at, "issuer_accrual_g")) book.issuer_accrual_g = *v;
      if (auto v = schema.decimal(b, at, "withdrawn_fees_g")) book.withdrawn_fees_g = *v;
      state.series.emplace(item.key(), std::move(book));
    }
  }
  if (const json* balances = schema.field(doc, "", "balances", true);
      balances && balances->is_array()) {
    for (std::size_t i = 0; i < balances->size(); ++i) {
      const std::string at = "/balances/" + std::to_string(i);
      const json& b = (*balances)[i];
      if (!schema.object(b, at)) continue;
      auto party = schema.text(b, at, "party");
      auto series_id = schema.text(b, at, "series_id");
      auto tokens = schema.count(b, at, "tokens");
      if (party && series_id && tokens) state.balances[{*party, *series_id}] = *tokens;
    }
  }
  schema.finish();
  return state;
}

json to_json(const ledger::Valuation& v) {
  json rows = json::array();
  for (const auto& h : v.holdings) {
    rows.push_back({{"series_id", h.series_id},
                    {"tokens", h.tokens},
                    {"residual_g", h.residual_g.to_string()},
                    {"redeemable_g", h.redeemable_g.to_string()},
                    {"price", h.price.to_string()},
                    {"quote_day", h.quote_day},
                    {"value", h.value.to_string()},
                    {"expired", h.expired}});
  }
  return {{"party", v.party},
          {"day", v.day},
          {"holdings", std::move(rows)},
          {"total_residual_g", v.total_residual_g.to_string()},
          {"total_redeemable_g", v.total_redeemable_g.to_string()},
          {"total_value", v.total_value.to_string()}};
}

std::string snapshot_text(const ledger::LedgerState& state) {
  return to_json(state).dump(2) + "\n";
}

void write_event_line(std::ostream& out, const ledger::LedgerEvent& event) {
  out << to_json(event).dump() << '\n';
}

std::vector<ledger::LedgerEvent> read_event_log(std::istream& in) {
  std::vector<ledger::LedgerEvent> log;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (blank(line)) continue;
    json doc;
    try {
      doc = json::parse(line);
    } catch (const json::parse_error& e) {
      throw LoadError(LoadStage::Parse, {{"line " + std::to_string(number), e.what()}});
    }
    log.push_back(event_from_json(doc, "line " + std::to_string(number)));
  }
  return log;
}

// ---------------------------------------------------------------- CSV

std::vector<RedemptionRecord> read_records_csv(std::istream& in) {
  expect_header(in, "customer_id,token_count,purchase_day,redemption_day");
  std::vector<RedemptionRecord> records;
  std::string line;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (blank(line)) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 4) {
      throw ParseError("row " + std::to_string(row) + ": expected 4 columns");
    }
    RedemptionRecord r;
    r.customer_id = cells[0];
    const std::int64_t count = parse_int_cell(cells[1], row, "token_count");
    if (count <= 0) throw ParseError("row " + std::to_string(row) + ": token_count must be > 0");
    r.token_count = static_cast<std::uint64_t>(count);
    r.purchase_day = parse_int_cell(cells[2], row, "purchase_day");
    if (!cells[3].empty()) r.redemption_day = parse_int_cell(cells[3], row, "redemption_day");
    records.push_back(std::move(r));
  }
  return records;
}

void write_records_csv(std::ostream& out, const std::vector<RedemptionRecord>& records) {
  out << "customer_id,token_count,purchase_day,redemption_day\n";
  for (const auto& r : records) {
    out << r.customer_id << ',' << r.token_count << ',' << r.purchase_day << ',';
    if (r.redemption_day) out << *r.redemption_day;
    out << '\n';
  }
}

void write_timeline_csv(std::ostream& out, const SolvencyTimeline& timeline, int places) {
  out << "day,cum_profit,cum_cost,bankrupt\n";
  for (const auto& row : timeline.rows) {
    out << row.day << ',' << row.cumulative_profit.to_fixed(places) << ','
        << row.cumulative_cost.to_fixed(places) << ',' << (row.bankrupt ? "true" : "false")
        << '\n';
  }
}

std::vector<ledger::PriceQuote> read_quotes_csv(std::istream& in) {
  expect_header(in, "day,asset_id,price");
  std::vector<ledger::PriceQuote> quotes;
  std::string line;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (blank(line)) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 3) throw ParseError("row " + std::to_string(row) + ": expected 3 columns");
    ledger::PriceQuote q;
    q.day = parse_int_cell(cells[0], row, "day");
    q.asset_id = cells[1];
    q.price = Decimal::parse(cells[2]);
    if (q.price.sign() < 0) throw ParseError("row " + std::to_string(row) + ": negative price");
    quotes.push_back(std::move(q));
  }
  return quotes;
}

Document load_document(const std::filesystem::path& path, DocumentKind kind) {
  const json doc = parse_json(read_text_file(path));
  switch (kind) {
    case DocumentKind::RsdmSpec:
      return spec_from_json(doc);
    case DocumentKind::MspInstance:
      return msp_instance_from_json(doc);
    case DocumentKind::DemandScenario:
      return scenario_from_json(doc);
  }
  throw LoadError(LoadStage::Schema, {{"", "unknown document kind"}});
}

}  // namespace rsdm::io
