#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "rsdm/cli.hpp"
#include "rsdm/io.hpp"
#include "rsdm/msp.hpp"

namespace fs = std::filesystem;
using rsdm::cli::run;
using rsdm::cli::RunResult;

namespace {

const fs::path kPresets = RSDM_PRESET_DIR;

RunResult rsdm_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "rsdm");
  return run(args);
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("rsdm_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("documented examples") {
  auto r = rsdm_cli({"decay", "residual", "--theta", "0.99996", "--w", "1", "--days", "1"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0.999960000\n");
  r = rsdm_cli({"solvency", "breakeven", "--beta", "0.3", "--alpha", "0.01"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "31\n");
  r = rsdm_cli({"solvency", "breakeven", "--beta", "0.3", "--alpha", "0"});
  CHECK(r.out == "never\n");
}

TEST_CASE("msp solve matches the exhaustive oracle on presets") {
  for (const char* preset : {"triple_monetary.json", "india.json", "eurozone.json"}) {
    for (const char* objective : {"linear", "saturating"}) {
      const auto bnb = rsdm_cli({"msp", "solve", preset, "--objective", objective, "--method", "bnb"});
      const auto full = rsdm_cli({"msp", "solve", preset, "--objective", objective, "--method", "exhaustive"});
      REQUIRE(bnb.exit_code == 0);
      CHECK(bnb.out == full.out);
      const auto inst = std::get<rsdm::msp::MspInstance>(
          rsdm::io::load_document(kPresets / preset, rsdm::io::DocumentKind::MspInstance));
      const auto kind = std::string(objective) == "linear" ? rsdm::msp::ObjectiveKind::Linear
                                                           : rsdm::msp::ObjectiveKind::Saturating;
      CHECK(bnb.out == rsdm::io::to_json(rsdm::msp::solve_exhaustive(inst, kind)).dump(2) + "\n");
    }
  }
}

TEST_CASE("msp check and report") {
  auto r = rsdm_cli({"msp", "check", "eurozone.json", "--select", "EUR,GOLD_RSDM"});
  CHECK(r.exit_code == 0);
  CHECK(rsdm::io::parse_json(r.out)["feasible"] == true);
  r = rsdm_cli({"msp", "check", "eurozone.json", "--select", "GOLD_RSDM"});
  bool mandatory = false;
  const auto verdict = rsdm::io::parse_json(r.out);
  for (const auto& v : verdict["violations"]) mandatory = mandatory || v["constraint"] == "mandatory";
  CHECK(mandatory);
  r = rsdm_cli({"--format", "json", "msp", "report", "eurozone.json", "--select", "EUR,GOLD_RSDM"});
  CHECK(rsdm::io::parse_json(r.out)["covers_catalog"] == true);
  r = rsdm_cli({"msp", "report", "eurozone.json", "--select", "EUR"});
  CHECK(r.out.find("covers_catalog  no") != std::string::npos);
}

TEST_CASE("decay subcommands") {
  auto r = rsdm_cli({"decay", "redeem-quote", "--spec", "gold_rsdm_spec.json", "--days", "1", "--format", "csv"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("payout_g,0.996960120\n") != std::string::npos);
  r = rsdm_cli({"decay", "residual", "--spec", "gold_rsdm_spec.json", "--days", "20000"});
  CHECK(r.exit_code == 1);
  r = rsdm_cli({"decay", "convert-rate", "--annual", "-0.02"});
  CHECK(r.out.find("0.999944652") != std::string::npos);
  r = rsdm_cli({"--places", "12", "decay", "convert-rate", "--daily", "0.99996"});
  CHECK(r.out.find("-0.014494224577") != std::string::npos);
  r = rsdm_cli({"decay", "convert-rate"});
  CHECK(r.exit_code == 2);
}

TEST_CASE("demand subcommands") {
  auto r = rsdm_cli({"demand", "supply", "equilibrium_scenario.json", "--format", "json"});
  REQUIRE(r.exit_code == 0);
  const auto doc = rsdm::io::parse_json(r.out);
  CHECK(doc["money_demand"] == "84000000000000.000000000");
  CHECK(doc["equilibrium_residual"] == "36000000000000.000000000");
  r = rsdm_cli({"demand", "solve", "equilibrium_scenario.json", "--unknown", "sdm_reserve"});
  CHECK(r.out.find("500000000000.000000000") != std::string::npos);
  CHECK(rsdm_cli({"demand", "solve", "equilibrium_scenario.json", "--unknown", "gdp"}).exit_code == 2);
}

TEST_CASE("solvency simulate") {
  auto r = rsdm_cli({"solvency", "simulate", "jiaozi_solvency.csv", "--beta", "0.03", "--alpha", "0.0001", "--format", "csv"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.starts_with("day,cum_profit,cum_cost,bankrupt\n"));
  r = rsdm_cli({"solvency", "simulate", "jiaozi_solvency.csv", "--schedule", "deadline", "--alpha", "0.0001"});
  CHECK(r.exit_code == 2);
}

TEST_CASE("usage and domain errors") {
  CHECK(rsdm_cli({"bogus"}).exit_code == 2);
  CHECK(rsdm_cli({}).exit_code == 2);
  CHECK(rsdm_cli({"decay", "residual", "--theta", "abc", "--days", "1"}).exit_code == 2);
  CHECK(rsdm_cli({"msp", "solve", "eurozone.json", "--method", "simplex"}).exit_code == 2);
  CHECK(rsdm_cli({"decay", "residual", "--theta", "1.1", "--days", "1"}).exit_code == 1);

  const fs::path dir = fresh_dir("errors");
  fs::create_directories(dir);
  const std::string text = rsdm::io::read_text_file(kPresets / "triple_monetary.json");
  std::ofstream(dir / "cut.json") << text.substr(0, 100);
  auto r = rsdm_cli({"msp", "solve", (dir / "cut.json").string()});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("parse") != std::string::npos);
  CHECK(rsdm_cli({"msp", "solve", "no_such_file.json"}).exit_code == 1);

  std::ofstream(dir / "config.json") << R"({"precision_digits": 10, "settlement_decimals": 9})";
  CHECK(rsdm_cli({"--config", (dir / "config.json").string(), "solvency", "breakeven", "--beta", "1", "--alpha", "1"}).exit_code == 1);
}

TEST_CASE("config file and data directory") {
  const fs::path dir = fresh_dir("config");
  fs::create_directories(dir);
  std::ofstream(dir / "config.json") << R"({"precision_digits": 40, "settlement_decimals": 4, "output_format": "json"})";
  auto r = rsdm_cli({"--config", (dir / "config.json").string(), "decay", "residual", "--theta", "0.99996", "--w", "1", "--days", "2"});
  CHECK(r.exit_code == 0);
  CHECK(rsdm::io::parse_json(r.out)["residual_g"] == "0.9999");

  fs::copy_file(kPresets / "eurozone.json", dir / "mine.json");
  CHECK(rsdm_cli({"msp", "solve", "mine.json"}).exit_code == 1);
  ::setenv("RSDM_DATA_DIR", dir.string().c_str(), 1);
  CHECK(rsdm_cli({"msp", "solve", "mine.json"}).exit_code == 0);
  ::unsetenv("RSDM_DATA_DIR");
}

TEST_CASE("ledger workflow") {
  const fs::path dir = fresh_dir("ledger");
  const std::string where = dir.string();
  REQUIRE(rsdm_cli({"ledger", "init", where}).exit_code == 0);
  CHECK(rsdm_cli({"ledger", "init", where}).exit_code == 1);

  const auto spec = rsdm::io::read_text_file(kPresets / "gold_rsdm_spec.json");
  auto r = rsdm_cli({"ledger", "append", where, "--kind", "Issue", "--series", "AU35", "--party", "vault-bank",
                     "--count", "5000", "--day", "23741", "--spec", "gold_rsdm_spec.json"});
  REQUIRE(r.exit_code == 0);
  r = rsdm_cli({"ledger", "append", where, "--kind", "Transfer", "--series", "AU35", "--party", "vault-bank",
                "--counterparty", "asha", "--count", "2000", "--day", "23741"});
  REQUIRE(r.exit_code == 0);
  r = rsdm_cli({"ledger", "append", where, "--kind", "Redeem", "--series", "AU35", "--party", "asha",
                "--count", "1500", "--day", "23742"});
  REQUIRE(r.exit_code == 0);
  CHECK(rsdm::io::parse_json(r.out)["payout_grams"] == "1495.44018");
  r = rsdm_cli({"ledger", "append", where, "--kind", "Redeem", "--series", "AU35", "--party", "asha",
                "--count", "500", "--day", "23742"});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("BelowMinimumRedemption") != std::string::npos);
  r = rsdm_cli({"ledger", "append", where, "--event",
                R"({"sequence": 4, "day": 23743, "kind": "Transfer", "series_id": "AU35", "party": "asha", "counterparty": "ravi", "token_count": 100})"});
  CHECK(r.exit_code == 0);

  const std::string snapshot = rsdm::io::read_text_file(dir / "snapshot.json");
  r = rsdm_cli({"ledger", "replay", where});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == snapshot);
  CHECK(r.err.empty());

  std::ofstream(dir / "quotes.csv") << "day,asset_id,price\n23741,XAU,95\n23743,XAU,100\n";
  r = rsdm_cli({"ledger", "value", where, "--quotes", (dir / "quotes.csv").string(), "--party", "asha", "--day", "23743"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("AU35,400,399.968000640") != std::string::npos);
  r = rsdm_cli({"ledger", "value", where, "--quotes", (dir / "quotes.csv").string(), "--party", "asha", "--day", "23700"});
  CHECK(r.exit_code == 1);
}
