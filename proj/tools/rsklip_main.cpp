#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "cli_support.hpp"
#include "rsklip/errors.hpp"

namespace {

using namespace rsklip;
using nlohmann::json;

struct GlobalOpts {
  std::string format = "json";
  bool jsonl = false;
  int workers = static_cast<int>(
      std::max(1u, std::thread::hardware_concurrency()));
};

void emit(const GlobalOpts& opts, const cli::ResultRecord& record,
          const std::string& ascii) {
  if (opts.format == "json")
    std::cout << cli::to_json(record).dump() << '\n';
  else
    std::cout << ascii << '\n';
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  return out.str();
}

std::string side_name(Side side) {
  return side == Side::left ? "left" : "right";
}

json interval_json(const ValueInterval& iv) {
  return json{{"lo", iv.lo}, {"hi", iv.hi}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RSK shapes, adjacent-transposition distances, and the "
               "diagram-distance experiments around them"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read default option values from a file");
  app.set_version_flag("--version", cli::kArtifactVersion);

  GlobalOpts global;
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"json", "ascii", "csv"}))
      ->capture_default_str();
  app.add_flag("--jsonl", global.jsonl,
               "stream walk sweeps as one JSON object per trial");
  app.add_option("--workers", global.workers,
                 "worker threads for scans and sweeps")
      ->capture_default_str();

  int exit_code = 0;

  // ---- rsk ----
  auto* rsk_cmd =
      app.add_subcommand("rsk", "row-insert a permutation; report P, Q, shape");
  rsk_cmd->fallthrough();
  std::string rsk_perm;
  rsk_cmd->add_option("--perm", rsk_perm, "one-line permutation, e.g. \"3 1 2\"")
      ->required();
  rsk_cmd->callback([&] {
    const Permutation pi = cli::parse_permutation(rsk_perm);
    const TableauPair pq = rsk(pi);
    cli::ResultRecord rec{"rsk",
                          {{"perm", pi.values()}},
                          {{"p", cli::tableau_json(pq.p)},
                           {"q", cli::tableau_json(pq.q)},
                           {"shape", cli::partition_json(pq.p.shape())}}};
    std::ostringstream ascii;
    ascii << "P:";
    for (const auto& row : pq.p.rows()) ascii << "\n  " << join_ints(row);
    ascii << "\nQ:";
    for (const auto& row : pq.q.rows()) ascii << "\n  " << join_ints(row);
    ascii << "\nshape: " << join_ints(pq.p.shape().parts());
    emit(global, rec, ascii.str());
  });

  // ---- delta ----
  auto* delta_cmd = app.add_subcommand(
      "delta", "half the l1 distance between two partitions");
  delta_cmd->fallthrough();
  std::string delta_lam, delta_mu;
  delta_cmd->add_option("--lam", delta_lam, "first partition")->required();
  delta_cmd->add_option("--mu", delta_mu, "second partition")->required();
  delta_cmd->callback([&] {
    const Partition lam = cli::parse_partition(delta_lam);
    const Partition mu = cli::parse_partition(delta_mu);
    const int value = delta(lam, mu);
    cli::ResultRecord rec{
        "delta",
        {{"lam", cli::partition_json(lam)}, {"mu", cli::partition_json(mu)}},
        {{"delta", value}, {"twice_delta", twice_delta(lam, mu)}}};
    emit(global, rec, "delta: " + std::to_string(value));
  });

  // ---- distance ----
  auto* dist_cmd = app.add_subcommand(
      "distance", "adjacent-transposition distance between two permutations");
  dist_cmd->fallthrough();
  std::string dist_pi, dist_tau, dist_side;
  dist_cmd->add_option("--pi", dist_pi)->required();
  dist_cmd->add_option("--tau", dist_tau)->required();
  dist_cmd->add_option("--side", dist_side, "left (value swaps) or right (position swaps)")
      ->required();
  dist_cmd->callback([&] {
    const Permutation pi = cli::parse_permutation(dist_pi);
    const Permutation tau = cli::parse_permutation(dist_tau);
    const Side side = cli::parse_side(dist_side);
    const int d = adjacent_distance(pi, tau, side);
    cli::ResultRecord rec{"distance",
                          {{"pi", pi.values()},
                           {"tau", tau.values()},
                           {"side", side_name(side)}},
                          {{"distance", d}}};
    emit(global, rec, "distance: " + std::to_string(d));
  });

  // ---- construct ----
  auto* con_cmd = app.add_subcommand(
      "construct", "extremal pair at swap distance t with shape distance "
                   "t*(k+1)/2");
  con_cmd->fallthrough();
  int con_n = 0, con_t = 1;
  bool con_witness = false;
  con_cmd->add_option("--n", con_n, "permutation size")->required();
  con_cmd->add_option("--t", con_t, "swap budget")->capture_default_str();
  con_cmd->add_flag("--emit-witness", con_witness,
                    "include the monotone decompositions (t = 1 only)");
  con_cmd->callback([&] {
    if (con_t == 1) {
      const T1Construction c = construct_t1(con_n);
      json outputs{{"k", c.k},
                   {"core_n", c.core_n},
                   {"pi", c.pi.values()},
                   {"tau", c.tau.values()},
                   {"lam", cli::partition_json(c.lam)},
                   {"mu", cli::partition_json(c.mu)},
                   {"delta", delta(c.lam, c.mu)},
                   {"left_distance", adjacent_distance(c.pi, c.tau, Side::left)},
                   {"intermediates", interval_json(c.intermediates)}};
      json smalls = json::array(), bigs = json::array();
      for (const ValueInterval& iv : c.small_blocks)
        smalls.push_back(interval_json(iv));
      for (const ValueInterval& iv : c.big_blocks)
        bigs.push_back(interval_json(iv));
      outputs["small_blocks"] = smalls;
      outputs["big_blocks"] = bigs;
      if (con_witness) {
        const ConstructionWitness w = padded_decompositions(c);
        outputs["witness"] =
            json{{"pi_increasing", cli::decomposition_json(w.pi_increasing)},
                 {"pi_decreasing", cli::decomposition_json(w.pi_decreasing)},
                 {"tau_increasing", cli::decomposition_json(w.tau_increasing)},
                 {"tau_decreasing", cli::decomposition_json(w.tau_decreasing)}};
      }
      cli::ResultRecord rec{"construct", {{"n", con_n}, {"t", 1}}, outputs};
      std::ostringstream ascii;
      ascii << "pi:  " << join_ints(c.pi.values()) << "\ntau: "
            << join_ints(c.tau.values()) << "\nlam: "
            << join_ints(c.lam.parts()) << "\nmu:  " << join_ints(c.mu.parts())
            << "\ndelta: " << delta(c.lam, c.mu);
      emit(global, rec, ascii.str());
    } else {
      if (con_witness)
        throw ValidationError(
            "--emit-witness is only defined for t = 1 constructions");
      const GeneralTConstruction c = construct_general_t(con_n, con_t);
      cli::ResultRecord rec{
          "construct",
          {{"n", con_n}, {"t", con_t}},
          {{"k", c.k},
           {"block_size", c.block_size},
           {"pi", c.pi.values()},
           {"tau", c.tau.values()},
           {"lam", cli::partition_json(c.lam)},
           {"mu", cli::partition_json(c.mu)},
           {"delta", delta(c.lam, c.mu)},
           {"left_distance", adjacent_distance(c.pi, c.tau, Side::left)}}};
      std::ostringstream ascii;
      ascii << "pi:  " << join_ints(c.pi.values()) << "\ntau: "
            << join_ints(c.tau.values()) << "\nlam: "
            << join_ints(c.lam.parts()) << "\nmu:  " << join_ints(c.mu.parts())
            << "\ndelta: " << delta(c.lam, c.mu) << "\ndistance: " << c.t;
      emit(global, rec, ascii.str());
    }
  });

  // ---- blocks ----
  auto* blocks_cmd = app.add_subcommand(
      "blocks", "surplus-row blocks of a partition pair, with bounding boxes");
  blocks_cmd->fallthrough();
  std::string blocks_lam, blocks_mu;
  blocks_cmd->add_option("--lam", blocks_lam)->required();
  blocks_cmd->add_option("--mu", blocks_mu)->required();
  blocks_cmd->callback([&] {
    const Partition lam = cli::parse_partition(blocks_lam);
    const Partition mu = cli::parse_partition(blocks_mu);
    const std::vector<Block> blocks = decompose_blocks(lam, mu);
    cli::ResultRecord rec{
        "blocks",
        {{"lam", cli::partition_json(lam)}, {"mu", cli::partition_json(mu)}},
        {{"blocks", cli::blocks_json(blocks)},
         {"delta", delta_half(lam, mu)}}};
    std::ostringstream ascii;
    for (const Block& b : blocks)
      ascii << (b.kind == BlockKind::lambda_side ? "lam" : "mu ") << " rows "
            << b.first_row << ".." << b.last_row << " area " << b.area
            << " box " << b.box_height << "x" << b.box_width << '\n';
    ascii << "delta: " << delta_half(lam, mu);
    emit(global, rec, ascii.str());
  });

  // ---- greene ----
  auto* greene_cmd = app.add_subcommand(
      "greene", "increasing-subsequence profile via min-cost flow");
  greene_cmd->fallthrough();
  std::string greene_perm;
  int greene_j = 0;
  greene_cmd->add_option("--perm", greene_perm)->required();
  greene_cmd->add_option("--j", greene_j,
                         "report the size of the best union of j increasing "
                         "subsequences");
  greene_cmd->callback([&] {
    const Permutation pi = cli::parse_permutation(greene_perm);
    const GreeneProfile profile = greene_profile(pi);
    json outputs{{"profile", profile.mu},
                 {"shape", cli::partition_json(profile.derived_shape)}};
    json params{{"perm", pi.values()}};
    if (greene_j != 0) {
      outputs["mu_j"] = max_union_increasing(pi, greene_j);
      params["j"] = greene_j;
    }
    cli::ResultRecord rec{"greene", params, outputs};
    std::ostringstream ascii;
    ascii << "profile: " << join_ints(profile.mu) << "\nshape: "
          << join_ints(profile.derived_shape.parts());
    if (greene_j != 0)
      ascii << "\nmu_" << greene_j << ": " << max_union_increasing(pi, greene_j);
    emit(global, rec, ascii.str());
  });

  // ---- search ----
  auto* search_cmd = app.add_subcommand(
      "search", "exhaustive adjacent-swap scan or seeded transposition walks");
  search_cmd->fallthrough();
  int search_n = 0, search_t = 1, search_witness_cap = 100;
  long long search_trials = 1000;
  std::uint64_t search_seed = 0;
  std::string search_mode = "exhaustive", search_side = "left",
              search_transpositions = "adjacent";
  bool search_prune = false;
  search_cmd->add_option("--n", search_n, "permutation size")->required();
  search_cmd->add_option("--t", search_t, "walk length / swap budget")
      ->capture_default_str();
  search_cmd->add_option("--mode", search_mode)
      ->check(CLI::IsMember({"exhaustive", "walk"}))
      ->capture_default_str();
  search_cmd->add_option("--trials", search_trials)->capture_default_str();
  search_cmd->add_option("--seed", search_seed)->capture_default_str();
  search_cmd->add_option("--side", search_side)
      ->check(CLI::IsMember({"left", "right"}))
      ->capture_default_str();
  search_cmd->add_option("--transpositions", search_transpositions,
                         "walk step kind")
      ->check(CLI::IsMember({"adjacent", "general"}))
      ->capture_default_str();
  search_cmd->add_flag("--prune", search_prune,
                       "scan only lexicographic orbit minima");
  search_cmd->add_option("--witness-cap", search_witness_cap,
                         "maximum witnesses embedded in the output")
      ->capture_default_str();
  search_cmd->callback([&] {
    const Side side = cli::parse_side(search_side);
    if (search_mode == "exhaustive") {
      if (search_t != 1)
        throw ValidationError("exhaustive mode scans t = 1 only");
      if (search_transpositions != "adjacent")
        throw ValidationError("exhaustive mode scans adjacent swaps only");
      const ExhaustiveResult res =
          exhaustive_t1(search_n, side, search_prune, global.workers);
      cli::ResultRecord rec{"search",
                            {{"n", search_n},
                             {"t", 1},
                             {"mode", "exhaustive"},
                             {"side", side_name(side)},
                             {"prune", search_prune}},
                            cli::exhaustive_json(res, search_witness_cap)};
      std::ostringstream ascii;
      ascii << "max_delta: " << res.max_delta << " (bound " << res.bound
            << ")\nevaluated: " << res.evaluated
            << "\nattaining: " << res.attaining
            << "\nwitnesses: " << res.witnesses.size()
            << "\nline-surplus violations: " << res.rowcol_violations;
      emit(global, rec, ascii.str());
      return;
    }
    SweepParams params;
    params.n = search_n;
    params.t = search_t;
    params.trials = search_trials;
    params.side = side;
    params.seed = search_seed;
    params.workers = global.workers;
    const SweepReport rep = search_transpositions == "adjacent"
                                ? random_walk_sweep(params)
                                : general_transposition_sweep(params);
    if (global.format == "csv") {
      std::cout << cli::trials_csv(rep);
      return;
    }
    if (global.jsonl) {
      for (const TrialRecord& t : rep.trials)
        std::cout << cli::trial_json(t, params.n, params.t).dump() << '\n';
      json summary = cli::sweep_json(rep);
      summary.erase("trials");
      cli::ResultRecord rec{"search",
                            {{"mode", "walk"},
                             {"transpositions", search_transpositions}},
                            summary};
      std::cout << cli::to_json(rec).dump() << '\n';
      return;
    }
    cli::ResultRecord rec{
        "search",
        {{"mode", "walk"}, {"transpositions", search_transpositions}},
        cli::sweep_json(rep)};
    std::ostringstream ascii;
    ascii << "max_delta: " << rep.max_delta << "\nmean_delta: "
          << rep.mean_delta << "\nmax_envelope_ratio: "
          << rep.max_envelope_ratio << "\nviolations: cap="
          << rep.cap_violations << " prefix=" << rep.prefix_violations
          << " area=" << rep.block_area_violations << " box="
          << rep.box_violations << " triangle=" << rep.triangle_violations;
    emit(global, rec, ascii.str());
  });

  // ---- seqlemma ----
  auto* seq_cmd = app.add_subcommand(
      "seqlemma", "paired-sequence bound: enumeration, the doubling family, "
                  "or the geometric stationary point");
  seq_cmd->fallthrough();
  std::string seq_mode;
  int seq_k = 0, seq_cap = 0, seq_ell1 = 1, seq_ell2 = 1;
  double seq_c = 2.0;
  seq_cmd->add_option("--mode", seq_mode)
      ->check(CLI::IsMember({"enumerate", "tight", "kkt"}))
      ->required();
  seq_cmd->add_option("--k", seq_k, "sequence length (interior length for kkt)");
  seq_cmd->add_option("--T", seq_cap, "cap on the products a_i*b_i");
  seq_cmd->add_option("--ell1", seq_ell1)->capture_default_str();
  seq_cmd->add_option("--ell2", seq_ell2)->capture_default_str();
  seq_cmd->add_option("--c", seq_c, "geometric ratio")->capture_default_str();
  seq_cmd->callback([&] {
    if (seq_mode == "enumerate") {
      const RatioMinimum min = minimize_ratio(seq_k, seq_cap);
      const BoundCheck bound = check_bound(min.pair);
      cli::ResultRecord rec{"seqlemma",
                            {{"mode", "enumerate"}, {"k", seq_k}, {"T", seq_cap}},
                            {{"pair", cli::sequence_pair_json(min.pair)},
                             {"delta", min.stats.delta},
                             {"n_total", min.stats.n_total},
                             {"ratio", min.stats.ratio},
                             {"candidates", min.candidates},
                             {"bound", bound.bound},
                             {"bound_holds", bound.holds}}};
      std::ostringstream ascii;
      ascii << "minimizer a: " << join_ints(std::vector<int>(
                   min.pair.a.begin(), min.pair.a.end()))
            << "\nminimizer b: " << join_ints(std::vector<int>(
                   min.pair.b.begin(), min.pair.b.end()))
            << "\nN/delta^2: " << min.stats.ratio
            << "\ncandidates: " << min.candidates;
      emit(global, rec, ascii.str());
    } else if (seq_mode == "tight") {
      const SequencePair pair = tight_sequence(seq_k);
      const SequenceStats stats = sequence_stats(pair);
      const BoundCheck bound = check_bound(pair);
      const double tightness = stats.delta * stats.delta /
                               (stats.n_total * pair.cap * std::log(pair.cap));
      cli::ResultRecord rec{"seqlemma",
                            {{"mode", "tight"}, {"k", seq_k}},
                            {{"pair", cli::sequence_pair_json(pair)},
                             {"delta", stats.delta},
                             {"n_total", stats.n_total},
                             {"bound", bound.bound},
                             {"bound_holds", bound.holds},
                             {"tightness", tightness}}};
      std::ostringstream ascii;
      ascii << "delta: " << stats.delta << "\nbound: " << bound.bound
            << "\ndelta^2/(N T ln T): " << tightness;
      emit(global, rec, ascii.str());
    } else {
      const ContinuousOptimum opt =
          continuous_optimum(seq_k, seq_ell1, seq_ell2, seq_c);
      const std::vector<double> residuals = kkt_residuals(opt);
      double max_residual = 0;
      for (double r : residuals) max_residual = std::max(max_residual, r);
      cli::ResultRecord rec{"seqlemma",
                            {{"mode", "kkt"},
                             {"k", seq_k},
                             {"ell1", seq_ell1},
                             {"ell2", seq_ell2},
                             {"c", seq_c}},
                            {{"a", opt.a},
                             {"b", opt.b},
                             {"cap", opt.cap},
                             {"residuals", residuals},
                             {"max_residual", max_residual}}};
      std::ostringstream ascii;
      ascii << "cap: " << opt.cap << "\nmax residual: " << max_residual;
      emit(global, rec, ascii.str());
    }
  });

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand(
      "verify", "run a named self-check suite; exits 2 on any failure");
  verify_cmd->fallthrough();
  std::string verify_suite = "all";
  verify_cmd->add_option("--suite", verify_suite)
      ->check(CLI::IsMember(known_suites()))
      ->capture_default_str();
  verify_cmd->callback([&] {
    const SuiteReport rep = run_suite(verify_suite, global.workers);
    cli::ResultRecord rec{"verify",
                          {{"suite", verify_suite}},
                          cli::suite_json(rep)};
    std::ostringstream ascii;
    for (const CheckResult& c : rep.checks)
      ascii << (c.passed ? "PASS" : "FAIL") << "  " << c.name << " — "
            << c.detail << '\n';
    ascii << (rep.all_passed() ? "all checks passed" : "FAILURES PRESENT");
    emit(global, rec, ascii.str());
    if (!rep.all_passed()) exit_code = 2;
  });

  // ---- diagram ----
  auto* diagram_cmd = app.add_subcommand(
      "diagram", "ASCII cell grid of one partition or of an overlaid pair");
  diagram_cmd->fallthrough();
  std::string diagram_lam, diagram_mu;
  diagram_cmd->add_option("--lam", diagram_lam)->required();
  diagram_cmd->add_option("--mu", diagram_mu, "optional overlay partition");
  diagram_cmd->callback([&] {
    const Partition lam = cli::parse_partition(diagram_lam);
    std::optional<Partition> mu;
    if (!diagram_mu.empty()) mu = cli::parse_partition(diagram_mu);
    const std::string text = cli::render_diagram(lam, mu);
    json params{{"lam", cli::partition_json(lam)}};
    if (mu) params["mu"] = cli::partition_json(*mu);
    cli::ResultRecord rec{"diagram", params, {{"diagram", text}}};
    emit(global, rec, text);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return 1;
  } catch (const ResourceRefusal& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
