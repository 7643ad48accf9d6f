#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "rsklip/constructions.hpp"
#include "rsklip/greene.hpp"
#include "rsklip/metrics.hpp"
#include "rsklip/search.hpp"
#include "rsklip/seq_lemma.hpp"
#include "rsklip/tableaux.hpp"
#include "rsklip/verify.hpp"

namespace rsklip::cli {

inline constexpr const char* kArtifactVersion = "0.1.0";

// One top-level JSON object per invocation: command, echoed parameters,
// structured outputs, artifact version. Keys are emitted sorted, so a fixed
// seed yields byte-identical documents.
struct ResultRecord {
  std::string command;
  nlohmann::json params;
  nlohmann::json outputs;
};

nlohmann::json to_json(const ResultRecord& record);

// "3 1 2" -> Permutation; throws ValidationError on junk or invalid words.
Permutation parse_permutation(const std::string& text);
// "6 4 4 2 2" -> Partition; the empty string is the empty partition.
Partition parse_partition(const std::string& text);
Side parse_side(const std::string& text);

nlohmann::json permutation_json(const Permutation& p);
nlohmann::json partition_json(const Partition& p);
nlohmann::json tableau_json(const Tableau& t);
nlohmann::json blocks_json(const std::vector<Block>& blocks);
nlohmann::json decomposition_json(const Decomposition& d);
nlohmann::json sequence_pair_json(const SequencePair& pair);
nlohmann::json exhaustive_json(const ExhaustiveResult& res, int witness_cap);
nlohmann::json sweep_json(const SweepReport& rep);
nlohmann::json trial_json(const TrialRecord& rec, int n, int t);
nlohmann::json suite_json(const SuiteReport& rep);

// trial,n,t,realized_d,delta,ratio — one row per trial, header first.
std::string trials_csv(const SweepReport& rep);

// ASCII cell grid: '#' cells of both diagrams, 'o' first-only, 'x'
// second-only; rows joined by '\n', no trailing newline.
std::string render_diagram(const Partition& lam,
                           const std::optional<Partition>& overlay);

}  // namespace rsklip::cli
