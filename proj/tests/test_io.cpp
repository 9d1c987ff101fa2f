#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "rsdm/io.hpp"

using rsdm::Decimal;
namespace fs = std::filesystem;
using rsdm::io::json;
using rsdm::io::LoadError;
using rsdm::io::LoadStage;

namespace {

const fs::path kPresets = RSDM_PRESET_DIR;

fs::path scratch(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "rsdm_io_tests";
  fs::create_directories(dir);
  const fs::path file = dir / name;
  std::ofstream(file, std::ios::binary) << text;
  return file;
}

LoadError load_failure(const fs::path& path, rsdm::io::DocumentKind kind) {
  try {
    rsdm::io::load_document(path, kind);
  } catch (const LoadError& e) {
    return e;
  }
  FAIL("document loaded");
  return LoadError(LoadStage::Read, {});
}

}  // namespace

TEST_CASE("iso dates") {
  CHECK(rsdm::parse_iso_date("1970-01-01") == 0);
  CHECK(rsdm::parse_iso_date("2035-01-01") == 23741);
  CHECK(rsdm::format_iso_date(23741) == "2035-01-01");
  CHECK_THROWS_AS(rsdm::parse_iso_date("2035-02-30"), rsdm::ParseError);
  CHECK_THROWS_AS(rsdm::parse_iso_date("35-1-1"), rsdm::ParseError);
}

TEST_CASE("presets load") {
  using rsdm::io::DocumentKind;
  for (const char* name : {"triple_monetary.json", "india.json", "eurozone.json"}) {
    const auto inst = std::get<rsdm::msp::MspInstance>(rsdm::io::load_document(kPresets / name, DocumentKind::MspInstance));
    CHECK(inst.functions.size() == 12);
    CHECK(rsdm::msp::validate_instance(inst).empty());
  }
  const auto spec = std::get<rsdm::RsdmSpec>(rsdm::io::load_document(kPresets / "gold_rsdm_spec.json", DocumentKind::RsdmSpec));
  CHECK(spec.daily_decay_factor == Decimal::parse("0.99996"));
  CHECK(spec.redemption_fee_rate == Decimal::parse("0.003"));
  CHECK(spec.min_redemption_g == Decimal(1000));
  CHECK(rsdm::format_iso_date(spec.issue_day) == "2035-01-01");
  const auto scenario = std::get<rsdm::demand::DemandScenario>(
      rsdm::io::load_document(kPresets / "equilibrium_scenario.json", DocumentKind::DemandScenario));
  CHECK(scenario.marshallian_k == Decimal::parse("0.7"));
  std::ifstream csv(kPresets / "jiaozi_solvency.csv");
  CHECK(rsdm::io::read_records_csv(csv).size() == 40);
}

TEST_CASE("load errors are staged and located") {
  using rsdm::io::DocumentKind;
  const std::string text = rsdm::io::read_text_file(kPresets / "triple_monetary.json");

  auto e = load_failure(scratch("truncated.json", text.substr(0, text.size() / 2)), DocumentKind::MspInstance);
  CHECK(e.stage() == LoadStage::Parse);

  e = load_failure(kPresets / "no_such_preset.json", DocumentKind::MspInstance);
  CHECK(e.stage() == LoadStage::Read);

  e = load_failure(scratch("empty_object.json", "{}"), DocumentKind::MspInstance);
  CHECK(e.stage() == LoadStage::Schema);

  json doc = json::parse(text);
  doc["currencies"][0]["coverage"]["F1"] = "1.5";
  e = load_failure(scratch("over.json", doc.dump()), DocumentKind::MspInstance);
  CHECK(e.stage() == LoadStage::Validation);
  REQUIRE(e.issues().size() == 1);
  CHECK(e.issues()[0].pointer == "/currencies/0/coverage/F1");

  doc = json::parse(text);
  doc["currencies"][1]["coverage"]["F2"] = 0.5;
  doc["max_parallel"] = "three";
  doc["functions"][0].erase("weight");
  e = load_failure(scratch("schema.json", doc.dump()), DocumentKind::MspInstance);
  CHECK(e.stage() == LoadStage::Schema);
  std::vector<std::string> pointers;
  for (const auto& issue : e.issues()) pointers.push_back(issue.pointer);
  CHECK(std::find(pointers.begin(), pointers.end(), "/currencies/1/coverage/F2") != pointers.end());
  CHECK(std::find(pointers.begin(), pointers.end(), "/max_parallel") != pointers.end());
  CHECK(std::find(pointers.begin(), pointers.end(), "/functions/0/weight") != pointers.end());

  e = load_failure(kPresets / "triple_monetary.json", DocumentKind::RsdmSpec);
  CHECK(e.stage() == LoadStage::Schema);
}

TEST_CASE("documents round trip") {
  const auto inst = std::get<rsdm::msp::MspInstance>(
      rsdm::io::load_document(kPresets / "eurozone.json", rsdm::io::DocumentKind::MspInstance));
  const auto again = rsdm::io::msp_instance_from_json(rsdm::io::to_json(inst));
  CHECK(rsdm::io::to_json(again) == rsdm::io::to_json(inst));

  rsdm::RsdmSpec spec;
  spec.issue_day = 23741;
  spec.collateral_id = "XAU";
  spec.initial_weight_g = Decimal::parse("31.1034768");
  spec.daily_decay_factor = Decimal::parse("0.99996");
  spec.expiry_days = 18262;
  CHECK(rsdm::io::spec_from_json(rsdm::io::to_json(spec)) == spec);

  const std::vector<rsdm::RedemptionRecord> records = {{"a", 3, 1, 9}, {"b", 7, 2, std::nullopt}};
  std::stringstream csv;
  rsdm::io::write_records_csv(csv, records);
  CHECK(csv.str() == "customer_id,token_count,purchase_day,redemption_day\na,3,1,9\nb,7,2,\n");
  CHECK(rsdm::io::read_records_csv(csv) == records);

  std::stringstream quotes("day,asset_id,price\n10,XAU,95.5\n12,XAU,96\n");
  const auto q = rsdm::io::read_quotes_csv(quotes);
  REQUIRE(q.size() == 2);
  CHECK(q[1].price == Decimal(96));
  std::stringstream bad("day,asset_id,price\nten,XAU,1\n");
  CHECK_THROWS_AS(rsdm::io::read_quotes_csv(bad), rsdm::ParseError);
}
