#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rsdm/decay.hpp"
#include "rsdm/demand.hpp"
#include "rsdm/errors.hpp"
#include "rsdm/ledger.hpp"
#include "rsdm/msp.hpp"
#include "rsdm/solvency.hpp"

namespace rsdm::io {

using json = nlohmann::json;

enum class LoadStage { Read, Parse, Schema, Validation };
std::string_view to_string(LoadStage stage);

struct LoadIssue {
  std::string pointer;
  std::string message;
};

/// Failure to turn a document into a valid typed object. `stage` says whether
/// the text was unreadable, did not match the schema, or violated invariants.
class LoadError : public Error {
 public:
  LoadError(LoadStage stage, std::vector<LoadIssue> issues);
  LoadStage stage() const { return stage_; }
  const std::vector<LoadIssue>& issues() const { return issues_; }

 private:
  LoadStage stage_;
  std::vector<LoadIssue> issues_;
};

std::string read_text_file(const std::filesystem::path& path);
json parse_json(const std::string& text);

json to_json(const RsdmSpec& spec);
RsdmSpec spec_from_json(const json& doc, const std::string& base = "");

json to_json(const msp::MspInstance& instance);
msp::MspInstance msp_instance_from_json(const json& doc);
json to_json(const msp::MspSolution& solution);
json to_json(const msp::MspResult& result);
json to_json(const msp::FeasibilityVerdict& verdict);
json to_json(const msp::CoverageReport& report);

json to_json(const demand::DemandScenario& scenario);
demand::DemandScenario scenario_from_json(const json& doc);

json to_json(const ledger::LedgerEvent& event);
ledger::LedgerEvent event_from_json(const json& doc, const std::string& base = "");
json to_json(const ledger::LedgerState& state);
ledger::LedgerState state_from_json(const json& doc);
json to_json(const ledger::Valuation& valuation);

/// Deterministic snapshot text; identical states give identical bytes.
std::string snapshot_text(const ledger::LedgerState& state);

/// One compact JSON object per line.
void write_event_line(std::ostream& out, const ledger::LedgerEvent& event);
std::vector<ledger::LedgerEvent> read_event_log(std::istream& in);

/// `customer_id,token_count,purchase_day,redemption_day`; empty redemption_day = open.
std::vector<RedemptionRecord> read_records_csv(std::istream& in);
void write_records_csv(std::ostream& out, const std::vector<RedemptionRecord>& records);
/// `day,cum_profit,cum_cost,bankrupt`.
void write_timeline_csv(std::ostream& out, const SolvencyTimeline& timeline, int places);
/// `day,asset_id,price`.
std::vector<ledger::PriceQuote> read_quotes_csv(std::istream& in);

enum class DocumentKind { RsdmSpec, MspInstance, DemandScenario };
using Document = std::variant<RsdmSpec, msp::MspInstance, demand::DemandScenario>;

/// Reads, parses, schema-checks and validates a document of the expected kind.
Document load_document(const std::filesystem::path& path, DocumentKind kind);

}  // namespace rsdm::io
