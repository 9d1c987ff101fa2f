#include "rsdm/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rsdm/io.hpp"

#ifndef RSDM_DEFAULT_DATA_DIR
#define RSDM_DEFAULT_DATA_DIR "presets"
#endif

namespace rsdm::cli {
namespace {

namespace fs = std::filesystem;
using io::json;

/// Raised for command-line mistakes that CLI11 cannot detect by itself.
class UsageError : public Error {
 public:
  using Error::Error;
};

const CLI::Validator kDecimalLiteral(
    [](std::string& value) -> std::string {
      try {
        Decimal::parse(value);
        return {};
      } catch (const ParseError& e) {
        return e.what();
      }
    },
    "DECIMAL", "decimal literal");

Decimal decimal_flag(const std::string& text) { return Decimal::parse(text); }

CliConfig load_config(const std::optional<std::string>& path) {
  CliConfig config;
  config.data_dir = RSDM_DEFAULT_DATA_DIR;
  if (path) {
    const json doc = io::parse_json(io::read_text_file(*path));
    std::vector<io::LoadIssue> issues;
    if (!doc.is_object()) throw io::LoadError(io::LoadStage::Schema, {{"", "expected an object"}});
    if (doc.contains("precision_digits")) {
      if (doc["precision_digits"].is_number_integer()) {
        config.precision_digits = doc["precision_digits"].get<int>();
      } else {
        issues.push_back({"/precision_digits", "expected an integer"});
      }
    }
    if (doc.contains("settlement_decimals")) {
      if (doc["settlement_decimals"].is_number_integer()) {
        config.settlement_decimals = doc["settlement_decimals"].get<int>();
      } else {
        issues.push_back({"/settlement_decimals", "expected an integer"});
      }
    }
    if (doc.contains("data_dir")) {
      if (doc["data_dir"].is_string()) {
        config.data_dir = doc["data_dir"].get<std::string>();
      } else {
        issues.push_back({"/data_dir", "expected a string"});
      }
    }
    if (doc.contains("output_format")) {
      const auto& f = doc["output_format"];
      if (f == "table") {
        config.output_format = OutputFormat::Table;
      } else if (f == "json") {
        config.output_format = OutputFormat::Json;
      } else if (f == "csv") {
        config.output_format = OutputFormat::Csv;
      } else {
        issues.push_back({"/output_format", "expected table|json|csv"});
      }
    }
    if (!issues.empty()) throw io::LoadError(io::LoadStage::Schema, std::move(issues));
  }
  if (const char* env = std::getenv("RSDM_DATA_DIR"); env != nullptr && *env != '\0') {
    config.data_dir = env;
  }
  if (config.settlement_decimals < 0 ||
      config.precision_digits < config.settlement_decimals + 6) {
    throw io::LoadError(io::LoadStage::Validation,
                        {{"/precision_digits", "precision_digits must be ≥ settlement_decimals + 6"}});
  }
  return config;
}

/// A path as given, or else relative to the data directory (presets).
fs::path resolve(const CliConfig& config, const std::string& name) {
  const fs::path given(name);
  if (fs::exists(given) || given.is_absolute()) return given;
  const fs::path candidate = config.data_dir / given;
  return fs::exists(candidate) ? candidate : given;
}

std::vector<std::string> split_ids(const std::string& list) {
  std::vector<std::string> ids;
  std::stringstream stream(list);
  std::string id;
  while (std::getline(stream, id, ',')) {
    if (!id.empty()) ids.push_back(id);
  }
  return ids;
}

/// Renders key/value rows as an aligned table, JSON object or two-column CSV.
void emit_record(std::ostream& out, OutputFormat format,
                 const std::vector<std::pair<std::string, std::string>>& rows) {
  switch (format) {
    case OutputFormat::Json: {
      json doc = json::object();
      for (const auto& [k, v] : rows) doc[k] = v;
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "field,value\n";
      for (const auto& [k, v] : rows) out << k << ',' << v << '\n';
      break;
    case OutputFormat::Table: {
      std::size_t width = 0;
      for (const auto& row : rows) width = std::max(width, row.first.size());
      for (const auto& [k, v] : rows) {
        out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
      }
      break;
    }
  }
}

struct DecayArgs {
  std::optional<std::string> spec;
  std::optional<std::string> theta;
  std::optional<std::string> weight;
  std::optional<std::string> lambda;
  std::optional<std::string> price;
  std::int64_t days = 0;
  std::optional<std::string> annual;
  std::optional<std::string> daily;
};

RsdmSpec spec_for(const CliConfig& config, const DecayArgs& args) {
  RsdmSpec spec;
  if (args.spec) {
    spec = std::get<RsdmSpec>(io::load_document(resolve(config, *args.spec),
                                                io::DocumentKind::RsdmSpec));
  } else {
    // Ad-hoc series from flags; no expiry applies.
    spec.expiry_days = std::max<std::int64_t>(args.days, 1);
    spec.min_redemption_g = Decimal(1);
  }
  if (args.theta) spec.daily_decay_factor = decimal_flag(*args.theta);
  if (args.weight) spec.initial_weight_g = decimal_flag(*args.weight);
  if (args.lambda) spec.redemption_fee_rate = decimal_flag(*args.lambda);
  const auto violations = validate_spec(spec);
  if (!violations.empty()) throw DomainError(violations.front());
  return spec;
}

struct LedgerArgs {
  std::string dir;
  std::optional<std::string> event;
  std::optional<std::string> kind;
  std::optional<std::string> series;
  std::optional<std::string> party;
  std::optional<std::string> counterparty;
  std::uint64_t count = 0;
  std::optional<std::int64_t> day;
  std::optional<std::string> spec;
  std::optional<std::string> grams;
  std::optional<std::string> quotes;
  bool force = false;
};

fs::path events_path(const fs::path& dir) { return dir / "events.jsonl"; }
fs::path snapshot_path(const fs::path& dir) { return dir / "snapshot.json"; }

std::vector<ledger::LedgerEvent> load_log(const fs::path& dir) {
  std::ifstream in(events_path(dir));
  if (!in) throw io::LoadError(io::LoadStage::Read, {{"", "no ledger at " + dir.string()}});
  return io::read_event_log(in);
}

void write_snapshot(const fs::path& dir, const ledger::LedgerState& state) {
  std::ofstream out(snapshot_path(dir), std::ios::binary | std::ios::trunc);
  out << io::snapshot_text(state);
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int dispatch(CLI::App& app);

  // Parsed values.
  std::optional<std::string> config_path;
  std::optional<std::string> format;
  std::optional<int> places;
  DecayArgs decay;
  std::string beta;
  std::string alpha;
  std::string schedule = "flat";
  std::optional<std::int64_t> deadline;
  std::optional<std::string> mean_days;
  std::optional<std::int64_t> horizon;
  std::string records;
  std::string instance;
  std::string objective = "linear";
  std::string method = "bnb";
  std::string select;
  std::string scenario;
  std::string unknown;
  LedgerArgs ledger_args;

  CLI::App* decay_residual = nullptr;
  CLI::App* decay_quote = nullptr;
  CLI::App* decay_convert = nullptr;
  CLI::App* solvency_breakeven = nullptr;
  CLI::App* solvency_simulate = nullptr;
  CLI::App* msp_solve = nullptr;
  CLI::App* msp_check = nullptr;
  CLI::App* msp_report = nullptr;
  CLI::App* demand_supply = nullptr;
  CLI::App* demand_solve = nullptr;
  CLI::App* ledger_init = nullptr;
  CLI::App* ledger_append = nullptr;
  CLI::App* ledger_replay = nullptr;
  CLI::App* ledger_value = nullptr;

 private:
  std::string fixed(const Decimal& v) const { return v.to_fixed(config_.settlement_decimals); }

  void run_decay_residual();
  void run_decay_quote();
  void run_decay_convert();
  void run_breakeven();
  void run_simulate();
  msp::MspInstance load_msp() const;
  void run_msp_solve();
  void run_msp_check();
  void run_msp_report();
  demand::DemandScenario load_scenario() const;
  void run_demand_supply();
  void run_demand_solve();
  void run_ledger_init();
  void run_ledger_append();
  void run_ledger_replay();
  void run_ledger_value();

  std::ostream& out_;
  std::ostream& err_;
  CliConfig config_;
};

int Runner::dispatch(CLI::App& app) {
  config_ = load_config(config_path);
  if (format) {
    if (*format == "table") config_.output_format = OutputFormat::Table;
    if (*format == "json") config_.output_format = OutputFormat::Json;
    if (*format == "csv") config_.output_format = OutputFormat::Csv;
  }
  if (places) {
    if (*places < 0 || config_.precision_digits < *places + 6) {
      throw DomainError("settlement places must satisfy precision_digits ≥ places + 6");
    }
    config_.settlement_decimals = *places;
  }
  (void)app;
  if (decay_residual->parsed()) run_decay_residual();
  else if (decay_quote->parsed()) run_decay_quote();
  else if (decay_convert->parsed()) run_decay_convert();
  else if (solvency_breakeven->parsed()) run_breakeven();
  else if (solvency_simulate->parsed()) run_simulate();
  else if (msp_solve->parsed()) run_msp_solve();
  else if (msp_check->parsed()) run_msp_check();
  else if (msp_report->parsed()) run_msp_report();
  else if (demand_supply->parsed()) run_demand_supply();
  else if (demand_solve->parsed()) run_demand_solve();
  else if (ledger_init->parsed()) run_ledger_init();
  else if (ledger_append->parsed()) run_ledger_append();
  else if (ledger_replay->parsed()) run_ledger_replay();
  else if (ledger_value->parsed()) run_ledger_value();
  else throw UsageError("missing subcommand");
  return kExitOk;
}

void Runner::run_decay_residual() {
  const RsdmSpec spec = spec_for(config_, decay);
  const Quantity residual = residual_weight(spec, decay.days);
  if (config_.output_format == OutputFormat::Table) {
    out_ << fixed(residual.value) << '\n';
  } else {
    emit_record(out_, config_.output_format,
                {{"days", std::to_string(decay.days)}, {"residual_g", fixed(residual.value)}});
  }
}

void Runner::run_decay_quote() {
  const RsdmSpec spec = spec_for(config_, decay);
  const RedemptionSplit split = redemption_split(spec, decay.days);
  std::vector<std::pair<std::string, std::string>> rows = {
      {"days", std::to_string(decay.days)},
      {"residual_g", fixed(split.residual.value)},
      {"payout_g", fixed(split.payout.value)},
      {"issuer_fee_g", fixed(split.issuer_fee.value)},
  };
  if (decay.price) {
    const Quantity price =
        purchase_price(spec, decay.days, Quantity::per_gram(decimal_flag(*decay.price)));
    rows.emplace_back("purchase_price", fixed(price.value));
  }
  emit_record(out_, config_.output_format, rows);
}

void Runner::run_decay_convert() {
  if (decay.annual.has_value() == decay.daily.has_value()) {
    throw UsageError("give exactly one of --annual or --daily");
  }
  std::vector<std::pair<std::string, std::string>> rows;
  if (decay.annual) {
    const Decimal theta =
        daily_factor_from_annual_rate(decimal_flag(*decay.annual), config_.precision_digits);
    rows = {{"annual_rate", *decay.annual}, {"daily_factor", fixed(theta)}};
  } else {
    const Decimal rate = annual_rate_from_daily_factor(decimal_flag(*decay.daily));
    rows = {{"daily_factor", *decay.daily}, {"annual_rate", fixed(rate)}};
  }
  emit_record(out_, config_.output_format, rows);
}

void Runner::run_breakeven() {
  const auto days = breakeven_horizon(decimal_flag(beta), decimal_flag(alpha));
  const std::string text = days ? std::to_string(*days) : "never";
  if (config_.output_format == OutputFormat::Table) {
    out_ << text << '\n';
  } else {
    emit_record(out_, config_.output_format, {{"breakeven_days", text}});
  }
}

void Runner::run_simulate() {
  std::ifstream in(resolve(config_, records));
  if (!in) throw io::LoadError(io::LoadStage::Read, {{"", "cannot open " + records}});
  const auto recs = io::read_records_csv(in);
  FeeSchedule fees;
  const Decimal rate = decimal_flag(alpha);
  if (schedule == "flat") {
    if (beta.empty()) throw UsageError("flat schedule needs --beta");
    fees = FeeSchedule::flat(decimal_flag(beta), rate);
  } else if (schedule == "deadline") {
    if (!deadline) throw UsageError("deadline schedule needs --deadline");
    fees = FeeSchedule::deadline(*deadline, rate);
  } else {
    if (!mean_days) throw UsageError("mean schedule needs --mean-days");
    fees = FeeSchedule::mean_holding(decimal_flag(*mean_days), rate);
  }
  DayNumber last = 0;
  for (const auto& r : recs) last = std::max(last, r.redemption_day.value_or(r.purchase_day));
  const SolvencyTimeline timeline = simulate_issuer(recs, fees, horizon.value_or(last));
  auto day_text = [](const std::optional<DayNumber>& d) {
    return d ? std::to_string(*d) : std::string("none");
  };
  switch (config_.output_format) {
    case OutputFormat::Csv:
      io::write_timeline_csv(out_, timeline, config_.settlement_decimals);
      break;
    case OutputFormat::Json: {
      json rows = json::array();
      for (const auto& row : timeline.rows) {
        rows.push_back({{"day", row.day},
                        {"cum_profit", fixed(row.cumulative_profit)},
                        {"cum_cost", fixed(row.cumulative_cost)},
                        {"bankrupt", row.bankrupt}});
      }
      json doc = {{"first_bankrupt_day", day_text(timeline.first_bankrupt_day)},
                  {"first_position_breach_day", day_text(timeline.first_position_breach_day)},
                  {"timeline", std::move(rows)}};
      out_ << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Table: {
      std::vector<std::pair<std::string, std::string>> rows = {
          {"records", std::to_string(recs.size())},
          {"first_bankrupt_day", day_text(timeline.first_bankrupt_day)},
          {"first_position_breach_day", day_text(timeline.first_position_breach_day)},
      };
      if (!timeline.rows.empty()) {
        rows.emplace_back("final_day", std::to_string(timeline.rows.back().day));
        rows.emplace_back("final_cum_profit", fixed(timeline.rows.back().cumulative_profit));
        rows.emplace_back("final_cum_cost", fixed(timeline.rows.back().cumulative_cost));
      }
      emit_record(out_, OutputFormat::Table, rows);
      break;
    }
  }
}

msp::MspInstance Runner::load_msp() const {
  return std::get<msp::MspInstance>(
      io::load_document(resolve(config_, instance), io::DocumentKind::MspInstance));
}

void Runner::run_msp_solve() {
  const msp::MspInstance inst = load_msp();
  const auto kind =
      objective == "linear" ? msp::ObjectiveKind::Linear : msp::ObjectiveKind::Saturating;
  msp::MspResult result;
  if (method == "exhaustive") {
    result = msp::solve_exhaustive(inst, kind);
  } else if (kind == msp::ObjectiveKind::Linear) {
    result = msp::solve_branch_and_bound(inst);
  } else {
    result = msp::solve_saturating(inst);
  }
  out_ << io::to_json(result).dump(2) << '\n';
}

void Runner::run_msp_check() {
  const msp::MspInstance inst = load_msp();
  const auto ids = split_ids(select);
  const msp::FeasibilityVerdict verdict =
      msp::check_feasible(inst, msp::Selection(ids.begin(), ids.end()));
  out_ << io::to_json(verdict).dump(2) << '\n';
}

void Runner::run_msp_report() {
  const msp::MspInstance inst = load_msp();
  const auto ids = split_ids(select);
  const msp::CoverageReport report =
      msp::coverage_report(inst, msp::Selection(ids.begin(), ids.end()));
  if (config_.output_format == OutputFormat::Table) {
    out_ << "function  achieved  threshold  saturated  covered\n";
    for (const auto& r : report.functions) {
      out_ << r.function_id << "  " << fixed(r.achieved) << "  " << fixed(r.threshold) << "  "
           << fixed(r.saturated) << "  " << (r.covered ? "yes" : "no") << '\n';
    }
    out_ << "covers_catalog  " << (report.covers_catalog ? "yes" : "no") << '\n';
  } else {
    out_ << io::to_json(report).dump(2) << '\n';
  }
}

demand::DemandScenario Runner::load_scenario() const {
  return std::get<demand::DemandScenario>(
      io::load_document(resolve(config_, scenario), io::DocumentKind::DemandScenario));
}

void Runner::run_demand_supply() {
  const auto s = load_scenario();
  emit_record(out_, config_.output_format,
              {{"money_supply", fixed(demand::money_supply(s))},
               {"money_demand", fixed(demand::money_demand(s.marshallian_k, s.gdp))},
               {"equilibrium_residual", fixed(demand::equilibrium_residual(s))}});
}

void Runner::run_demand_solve() {
  const auto s = load_scenario();
  const auto which = demand::parse_unknown(unknown);
  if (!which) throw UsageError("unknown field '" + unknown + "'");
  const auto solution = demand::solve_unknown(s, *which, config_.precision_digits);
  emit_record(out_, config_.output_format,
              {{std::string(demand::to_string(*which)), fixed(solution.value)},
               {"negative_solution", solution.negative ? "true" : "false"}});
}

void Runner::run_ledger_init() {
  const fs::path dir(ledger_args.dir);
  if (fs::exists(events_path(dir)) && !ledger_args.force) {
    throw DomainError("ledger already exists at " + dir.string() + " (use --force)");
  }
  fs::create_directories(dir);
  std::ofstream(events_path(dir), std::ios::trunc);
  write_snapshot(dir, ledger::LedgerState{});
  out_ << "initialized " << dir.string() << '\n';
}

void Runner::run_ledger_append() {
  const fs::path dir(ledger_args.dir);
  ledger::Ledger book(load_log(dir));
  const ledger::LedgerEvent* appended = nullptr;
  if (ledger_args.event) {
    appended = &book.append(io::event_from_json(io::parse_json(*ledger_args.event)));
  } else {
    if (!ledger_args.kind || !ledger_args.series || !ledger_args.party || !ledger_args.day) {
      throw UsageError("append needs --event or --kind, --series, --party and --day");
    }
    const auto kind = ledger::parse_event_kind(*ledger_args.kind);
    if (!kind) throw UsageError("unknown event kind '" + *ledger_args.kind + "'");
    const auto& a = ledger_args;
    switch (*kind) {
      case ledger::EventKind::Issue: {
        std::optional<RsdmSpec> spec;
        if (a.spec) {
          spec = std::get<RsdmSpec>(
              io::load_document(resolve(config_, *a.spec), io::DocumentKind::RsdmSpec));
        }
        appended = &book.issue(*a.series, *a.party, a.count, *a.day, spec);
        break;
      }
      case ledger::EventKind::Transfer:
        if (!a.counterparty) throw UsageError("transfer needs --counterparty");
        appended = &book.transfer(*a.series, *a.party, *a.counterparty, a.count, *a.day);
        break;
      case ledger::EventKind::Redeem:
        appended = &book.redeem(*a.series, *a.party, a.count, *a.day);
        break;
      case ledger::EventKind::WithdrawFees:
        if (!a.grams) throw UsageError("withdrawal needs --grams");
        appended = &book.withdraw_fees(*a.series, *a.party, decimal_flag(*a.grams), *a.day);
        break;
    }
  }
  {
    std::ofstream log(events_path(dir), std::ios::app | std::ios::binary);
    io::write_event_line(log, *appended);
  }
  write_snapshot(dir, book.state());
  out_ << io::to_json(*appended).dump() << '\n';
}

void Runner::run_ledger_replay() {
  const fs::path dir(ledger_args.dir);
  const ledger::LedgerState state = ledger::replay(load_log(dir));
  const std::string text = io::snapshot_text(state);
  std::ifstream existing(snapshot_path(dir), std::ios::binary);
  std::ostringstream previous;
  previous << existing.rdbuf();
  if (existing && previous.str() != text) {
    err_ << "snapshot differed from replay; rewritten\n";
  }
  write_snapshot(dir, state);
  out_ << text;
}

void Runner::run_ledger_value() {
  const fs::path dir(ledger_args.dir);
  const ledger::LedgerState state = ledger::replay(load_log(dir));
  if (!ledger_args.quotes || !ledger_args.party || !ledger_args.day) {
    throw UsageError("value needs --quotes, --party and --day");
  }
  std::ifstream in(resolve(config_, *ledger_args.quotes));
  if (!in) throw io::LoadError(io::LoadStage::Read, {{"", "cannot open " + *ledger_args.quotes}});
  const auto quotes = io::read_quotes_csv(in);
  const auto valuation = ledger::holdings_valuation(state, quotes, *ledger_args.party, *ledger_args.day);
  if (config_.output_format == OutputFormat::Json) {
    out_ << io::to_json(valuation).dump(2) << '\n';
    return;
  }
  out_ << "series_id,tokens,residual_g,redeemable_g,price,value\n";
  for (const auto& h : valuation.holdings) {
    out_ << h.series_id << ',' << h.tokens << ',' << fixed(h.residual_g) << ','
         << fixed(h.redeemable_g) << ',' << fixed(h.price) << ',' << fixed(h.value) << '\n';
  }
  out_ << "total,," << fixed(valuation.total_residual_g) << ','
       << fixed(valuation.total_redeemable_g) << ",," << fixed(valuation.total_value) << '\n';
}

void build(CLI::App& app, Runner& r) {
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", r.config_path, "CliConfig JSON file");
  app.add_option("--format", r.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--places", r.places, "Settlement decimal places for rendering");

  auto* decay = app.add_subcommand("decay", "Decay and redemption arithmetic");
  decay->require_subcommand(1);
  auto add_series_flags = [&](CLI::App* cmd) {
    cmd->add_option("--spec", r.decay.spec, "RsdmSpec JSON file");
    cmd->add_option("--theta", r.decay.theta, "Daily decay factor")->check(kDecimalLiteral);
    cmd->add_option("--w", r.decay.weight, "Initial weight in grams")->check(kDecimalLiteral);
    cmd->add_option("--lambda", r.decay.lambda, "Redemption fee rate")->check(kDecimalLiteral);
    cmd->add_option("--days", r.decay.days, "Elapsed days")->required()->check(CLI::NonNegativeNumber);
  };
  r.decay_residual = decay->add_subcommand("residual", "Residual collateral weight per token");
  add_series_flags(r.decay_residual);
  r.decay_quote = decay->add_subcommand("redeem-quote", "Payout and fee split at redemption");
  add_series_flags(r.decay_quote);
  r.decay_quote->add_option("--price", r.decay.price, "Collateral price per gram")
      ->check(kDecimalLiteral);
  r.decay_convert = decay->add_subcommand("convert-rate", "Annual rate <-> daily factor");
  r.decay_convert->add_option("--annual", r.decay.annual)->check(kDecimalLiteral);
  r.decay_convert->add_option("--daily", r.decay.daily)->check(kDecimalLiteral);

  auto* solvency = app.add_subcommand("solvency", "Issuer solvency analysis");
  solvency->require_subcommand(1);
  r.solvency_breakeven = solvency->add_subcommand("breakeven", "First bankrupt holding duration");
  r.solvency_breakeven->add_option("--beta", r.beta)->required()->check(kDecimalLiteral);
  r.solvency_breakeven->add_option("--alpha", r.alpha)->required()->check(kDecimalLiteral);
  r.solvency_simulate = solvency->add_subcommand("simulate", "Day-by-day solvency timeline");
  r.solvency_simulate->add_option("records", r.records, "Redemption records CSV")->required();
  r.solvency_simulate->add_option("--schedule", r.schedule)
      ->check(CLI::IsMember({"flat", "deadline", "mean"}));
  r.solvency_simulate->add_option("--beta", r.beta)->check(kDecimalLiteral);
  r.solvency_simulate->add_option("--alpha", r.alpha)->required()->check(kDecimalLiteral);
  r.solvency_simulate->add_option("--deadline", r.deadline);
  r.solvency_simulate->add_option("--mean-days", r.mean_days)->check(kDecimalLiteral);
  r.solvency_simulate->add_option("--horizon", r.horizon);

  auto* msp = app.add_subcommand("msp", "Multi-monetary system selection");
  msp->require_subcommand(1);
  r.msp_solve = msp->add_subcommand("solve", "Optimal currency selection");
  r.msp_solve->add_option("instance", r.instance)->required();
  r.msp_solve->add_option("--objective", r.objective)
      ->check(CLI::IsMember({"linear", "saturating"}));
  r.msp_solve->add_option("--method", r.method)->check(CLI::IsMember({"bnb", "exhaustive"}));
  r.msp_check = msp->add_subcommand("check", "Feasibility of a selection");
  r.msp_check->add_option("instance", r.instance)->required();
  r.msp_check->add_option("--select", r.select, "Comma-separated currency ids");
  r.msp_report = msp->add_subcommand("report", "Function coverage of a selection");
  r.msp_report->add_option("instance", r.instance)->required();
  r.msp_report->add_option("--select", r.select, "Comma-separated currency ids");

  auto* demand = app.add_subcommand("demand", "Money supply and demand equilibrium");
  demand->require_subcommand(1);
  r.demand_supply = demand->add_subcommand("supply", "Supply, demand and residual");
  r.demand_supply->add_option("scenario", r.scenario)->required();
  r.demand_solve = demand->add_subcommand("solve", "Solve the equilibrium for one field");
  r.demand_solve->add_option("scenario", r.scenario)->required();
  r.demand_solve->add_option("--unknown", r.unknown)
      ->required()
      ->check(CLI::IsMember({"fiat_reserve", "sdm_reserve", "other_supply", "marshallian_k"}));

  auto* ledger = app.add_subcommand("ledger", "Event-sourced token ledger");
  ledger->require_subcommand(1);
  auto& la = r.ledger_args;
  r.ledger_init = ledger->add_subcommand("init", "Create an empty ledger directory");
  r.ledger_init->add_option("dir", la.dir)->required();
  r.ledger_init->add_flag("--force", la.force);
  r.ledger_append = ledger->add_subcommand("append", "Append one event");
  r.ledger_append->add_option("dir", la.dir)->required();
  r.ledger_append->add_option("--event", la.event, "Event as a JSON object");
  r.ledger_append->add_option("--kind", la.kind)
      ->check(CLI::IsMember({"Issue", "Transfer", "Redeem", "WithdrawFees"}));
  r.ledger_append->add_option("--series", la.series);
  r.ledger_append->add_option("--party", la.party);
  r.ledger_append->add_option("--counterparty", la.counterparty);
  r.ledger_append->add_option("--count", la.count);
  r.ledger_append->add_option("--day", la.day);
  r.ledger_append->add_option("--spec", la.spec, "RsdmSpec JSON for a new series");
  r.ledger_append->add_option("--grams", la.grams)->check(kDecimalLiteral);
  r.ledger_replay = ledger->add_subcommand("replay", "Rebuild the snapshot from the log");
  r.ledger_replay->add_option("dir", la.dir)->required();
  r.ledger_value = ledger->add_subcommand("value", "Mark a party's holdings to market");
  r.ledger_value->add_option("dir", la.dir)->required();
  r.ledger_value->add_option("--quotes", la.quotes, "Price quotes CSV");
  r.ledger_value->add_option("--party", la.party);
  r.ledger_value->add_option("--day", la.day);
}

}  // namespace

RunResult run(const std::vector<std::string>& argv) {
  std::ostringstream out;
  std::ostringstream err;
  RunResult result;

  CLI::App app{"Redeemable self-decaying money toolkit", "rsdm"};
  Runner runner(out, err);
  build(app, runner);

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& a : argv) raw.push_back(a.c_str());
  if (raw.empty()) raw.push_back("rsdm");

  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
    result.exit_code = runner.dispatch(app);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    result.exit_code = kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    result.exit_code = kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    result.exit_code = kExitUsage;
  } catch (const io::LoadError& e) {
    err << e.what() << '\n';
    result.exit_code = kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    result.exit_code = kExitDomain;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    result.exit_code = kExitDomain;
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace rsdm::cli
