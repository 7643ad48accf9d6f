#include "cli_support.hpp"

#include <sstream>

#include "rsklip/errors.hpp"

namespace rsklip::cli {

using nlohmann::json;

json to_json(const ResultRecord& record) {
  return json{{"command", record.command},
              {"params", record.params},
              {"outputs", record.outputs},
              {"version", kArtifactVersion}};
}

namespace {

std::vector<int> parse_ints(const std::string& text, const char* what) {
  std::istringstream in(text);
  std::vector<int> out;
  std::string token;
  while (in >> token) {
    try {
      size_t used = 0;
      const int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(value);
    } catch (const std::exception&) {
      throw ValidationError(std::string(what) + ": '" + token +
                            "' is not an integer");
    }
  }
  return out;
}

}  // namespace

Permutation parse_permutation(const std::string& text) {
  return Permutation(parse_ints(text, "permutation"));
}

Partition parse_partition(const std::string& text) {
  return Partition(parse_ints(text, "partition"));
}

Side parse_side(const std::string& text) {
  if (text == "left") return Side::left;
  if (text == "right") return Side::right;
  throw ValidationError("side must be 'left' or 'right', got '" + text + "'");
}

json permutation_json(const Permutation& p) { return json(p.values()); }

json partition_json(const Partition& p) { return json(p.parts()); }

json tableau_json(const Tableau& t) { return json(t.rows()); }

json blocks_json(const std::vector<Block>& blocks) {
  json out = json::array();
  for (const Block& b : blocks)
    out.push_back({{"kind", b.kind == BlockKind::lambda_side ? "lam" : "mu"},
                   {"first_row", b.first_row},
                   {"last_row", b.last_row},
                   {"area", b.area},
                   {"box_height", b.box_height},
                   {"box_width", b.box_width}});
  return out;
}

json decomposition_json(const Decomposition& d) {
  return json{
      {"direction",
       d.direction == Direction::increasing ? "increasing" : "decreasing"},
      {"pieces", d.pieces},
      {"sizes", partition_json(d.sizes)}};
}

json sequence_pair_json(const SequencePair& pair) {
  return json{{"a", pair.a}, {"b", pair.b}, {"cap", pair.cap}};
}

json exhaustive_json(const ExhaustiveResult& res, int witness_cap) {
  json witnesses = json::array();
  for (const Witness& w : res.witnesses) {
    if (witness_cap >= 0 &&
        witnesses.size() >= static_cast<size_t>(witness_cap))
      break;
    witnesses.push_back({{"pi", w.pi},
                         {"tau", w.tau},
                         {"lam", partition_json(w.lam)},
                         {"mu", partition_json(w.mu)},
                         {"delta", w.delta}});
  }
  return json{{"n", res.n},
              {"side", res.side == Side::left ? "left" : "right"},
              {"pruned", res.pruned},
              {"max_delta", res.max_delta},
              {"bound", res.bound},
              {"evaluated", res.evaluated},
              {"attaining", res.attaining},
              {"rowcol_violations", res.rowcol_violations},
              {"witness_total", res.witnesses.size()},
              {"witnesses", witnesses}};
}

json trial_json(const TrialRecord& rec, int n, int t) {
  return json{{"trial", rec.trial}, {"n", n},         {"t", t},
              {"realized_d", rec.realized_d},         {"delta", rec.delta},
              {"ratio", rec.ratio}};
}

json sweep_json(const SweepReport& rep) {
  json trials = json::array();
  for (const TrialRecord& rec : rep.trials)
    trials.push_back(trial_json(rec, rep.params.n, rep.params.t));
  return json{
      {"walk", rep.walk_kind},
      {"n", rep.params.n},
      {"t", rep.params.t},
      {"trials_run", rep.params.trials},
      {"side", rep.params.side == Side::left ? "left" : "right"},
      {"seed", rep.params.seed},
      {"max_delta", rep.max_delta},
      {"mean_delta", rep.mean_delta},
      {"max_envelope_ratio", rep.max_envelope_ratio},
      {"cap_violations", rep.cap_violations},
      {"prefix_violations", rep.prefix_violations},
      {"triangle_violations", rep.triangle_violations},
      {"block_area_violations", rep.block_area_violations},
      {"box_violations", rep.box_violations},
      {"trials", trials}};
}

json suite_json(const SuiteReport& rep) {
  json checks = json::array();
  for (const CheckResult& c : rep.checks)
    checks.push_back(
        {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return json{{"suite", rep.suite},
              {"passed", rep.all_passed()},
              {"checks", checks}};
}

std::string trials_csv(const SweepReport& rep) {
  std::ostringstream out;
  out << "trial,n,t,realized_d,delta,ratio\n";
  for (const TrialRecord& rec : rep.trials)
    out << rec.trial << ',' << rep.params.n << ',' << rep.params.t << ','
        << rec.realized_d << ',' << rec.delta << ',' << rec.ratio << '\n';
  return out.str();
}

std::string render_diagram(const Partition& lam,
                           const std::optional<Partition>& overlay) {
  const Partition& mu = overlay ? *overlay : lam;
  const int rows = std::max(lam.num_parts(), mu.num_parts());
  std::string out;
  for (int r = 1; r <= rows; ++r) {
    if (r > 1) out += '\n';
    const int a = lam.part(r), b = mu.part(r);
    for (int c = 1; c <= std::max(a, b); ++c)
      out += c <= a && c <= b ? '#' : (c <= a ? 'o' : 'x');
  }
  return out;
}

}  // namespace rsklip::cli
