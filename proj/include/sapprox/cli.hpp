#pragma once

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sapprox/json_io.hpp"
#include "sapprox/verify.hpp"

namespace sapprox::cli {

namespace detail {

inline Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline Space load_space(const std::string& path) { return space_from_json(load_json(path)); }
inline BeliefStructure load_belief(const std::string& path) {
  return belief_from_json(load_json(path));
}

// "a,b" -> labels; the empty string denotes the empty set.
inline std::vector<std::string> split_set_arg(const std::string& arg) {
  std::vector<std::string> out;
  if (arg.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = arg.find(',', start);
    out.push_back(arg.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct Emitter {
  std::ostream& fallback;
  std::string out_path;

  void line(const std::string& text) const {
    if (out_path.empty()) {
      fallback << text << '\n';
      return;
    }
    std::ofstream file(out_path, std::ios::app);
    if (!file) throw Error("cannot open output file: " + out_path);
    file << text << '\n';
  }

  void prepare() const {
    if (out_path.empty()) return;
    std::ofstream file(out_path, std::ios::trunc);
    if (!file) throw Error("cannot open output file: " + out_path);
  }
};

inline std::vector<DeciderKind> parse_kind_arg(const std::string& kind) {
  if (kind == "all")
    return {DeciderKind::subseteq, DeciderKind::intersects, DeciderKind::card_threshold,
            DeciderKind::table};
  if (kind == "inclusion") return {DeciderKind::subseteq};
  return {decider_kind_from_string(kind)};
}

}  // namespace detail

// Full command-line front end. Deterministic: output depends only on argv and
// the input files. Exit codes: 0 success, 1 validation/parse errors, 2 when a
// verify run finds a counterexample.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact toolkit for S-approximation spaces and belief structures"};
  app.require_subcommand(1);

  std::string space_path, belief_path, set_arg, out_path, scope_arg = "space";
  std::string claims_arg, kind_arg = "all";
  bool strict = false;
  long random_trials = 0;
  std::uint64_t seed = 0;
  std::size_t u_size = 6, w_size = 4;
  std::int64_t max_den = 12;

  auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", out_path, "write output to a file"); };

  CLI::App* regions_cmd = app.add_subcommand("regions", "lower/upper approximations and regions");
  regions_cmd->add_option("--space", space_path, "space JSON file")->required();
  regions_cmd->add_option("--set", set_arg, "query set, comma-separated W labels")->required();
  add_out(regions_cmd);

  CLI::App* quality_cmd = app.add_subcommand("quality", "qualities of approximation");
  quality_cmd->add_option("--space", space_path, "space JSON file")->required();
  quality_cmd->add_option("--set", set_arg, "query set, comma-separated W labels")->required();
  add_out(quality_cmd);

  CLI::App* check_cmd = app.add_subcommand("check", "partial monotonicity check");
  check_cmd->add_option("--space", space_path, "space JSON file")->required();
  check_cmd->add_option("--scope", scope_arg, "space or decider")
      ->check(CLI::IsMember({"space", "decider"}));
  add_out(check_cmd);

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "remove trivial elements");
  reduce_cmd->add_option("--space", space_path, "space JSON file")->required();
  add_out(reduce_cmd);

  CLI::App* inflection_cmd = app.add_subcommand("inflection", "minimal accepted sets per element");
  inflection_cmd->add_option("--space", space_path, "space JSON file")->required();
  add_out(inflection_cmd);

  CLI::App* belief_cmd = app.add_subcommand("belief", "belief-structure constructions");
  belief_cmd->require_subcommand(1);
  CLI::App* belief_from_space_cmd =
      belief_cmd->add_subcommand("from-space", "induce masses on W from a space");
  belief_from_space_cmd->add_option("--space", space_path, "space JSON file")->required();
  belief_from_space_cmd->add_flag("--strict", strict, "enforce the construction's hypotheses");
  add_out(belief_from_space_cmd);

  CLI::App* space_cmd = app.add_subcommand("space", "space constructions");
  space_cmd->require_subcommand(1);
  CLI::App* space_from_belief_cmd =
      space_cmd->add_subcommand("from-belief", "build the canonical inclusion space");
  space_from_belief_cmd->add_option("--belief", belief_path, "belief JSON file")->required();
  add_out(space_from_belief_cmd);

  CLI::App* belpl_cmd = app.add_subcommand("bel-pl", "belief/plausibility of a query set");
  belpl_cmd->add_option("--belief", belief_path, "belief JSON file")->required();
  belpl_cmd->add_option("--set", set_arg, "query set, comma-separated W labels")->required();
  add_out(belpl_cmd);

  CLI::App* induce_cmd = app.add_subcommand("induce", "carry a belief structure across a space");
  induce_cmd->add_option("--belief", belief_path, "belief JSON file over U")->required();
  induce_cmd->add_option("--space", space_path, "space JSON file")->required();
  induce_cmd->add_flag("--strict", strict, "enforce the construction's hypotheses");
  add_out(induce_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the claim suite");
  auto* vs = verify_cmd->add_option("--space", space_path, "space JSON file");
  auto* vb = verify_cmd->add_option("--belief", belief_path, "belief JSON file");
  auto* vr = verify_cmd->add_option("--random", random_trials, "number of random trials");
  vs->excludes(vb)->excludes(vr);
  vb->excludes(vs)->excludes(vr);
  vr->excludes(vs)->excludes(vb);
  verify_cmd->add_option("--seed", seed, "master seed for generated inputs");
  verify_cmd->add_option("--claims", claims_arg, "comma-separated claim ids (default: all)");
  verify_cmd->add_option("--kind", kind_arg,
                         "decider kind for --random: subseteq|intersects|card_threshold|table|all");
  verify_cmd->add_option("--u-size", u_size, "max |U| for --random (1-8)");
  verify_cmd->add_option("--w-size", w_size, "max |W| for --random (1-5)");
  verify_cmd->add_option("--max-den", max_den, "max denominator for generated beliefs");
  add_out(verify_cmd);

  std::vector<const char*> argv;
  argv.push_back("sapprox");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  const detail::Emitter emit{out, out_path};
  try {
    emit.prepare();

    if (regions_cmd->parsed()) {
      const Space g = detail::load_space(space_path);
      const ElementSet x = ElementSet::of_labels(g.w(), detail::split_set_arg(set_arg));
      const RegionDecomposition r = decompose(g, x);
      Json doc;
      doc["lower"] = set_to_json(lower_approx(g, x));
      doc["upper"] = set_to_json(upper_approx(g, x));
      doc["pos"] = set_to_json(r.pos);
      doc["neg"] = set_to_json(r.neg);
      doc["br"] = set_to_json(r.br);
      emit.line(doc.dump());
      return 0;
    }

    if (quality_cmd->parsed()) {
      const Space g = detail::load_space(space_path);
      const ElementSet x = ElementSet::of_labels(g.w(), detail::split_set_arg(set_arg));
      emit.line(quality_to_json(quality(g, x)).dump());
      return 0;
    }

    if (check_cmd->parsed()) {
      const Space g = detail::load_space(space_path);
      const MonotoneScope scope =
          scope_arg == "space" ? MonotoneScope::space : MonotoneScope::decider;
      emit.line(monotone_report_to_json(check_partial_monotone(g, scope), scope).dump());
      return 0;
    }

    if (reduce_cmd->parsed()) {
      emit.line(space_to_json(reduce(detail::load_space(space_path))).dump());
      return 0;
    }

    if (inflection_cmd->parsed()) {
      const Space g = detail::load_space(space_path);
      emit.line(inflection_to_json(g, inflection_set(g)).dump());
      return 0;
    }

    if (belief_from_space_cmd->parsed()) {
      const Space g = detail::load_space(space_path);
      const auto result =
          belief_from_space(g, strict ? Enforce::strict : Enforce::permissive);
      emit.line(induced_to_json(result).dump());
      return 0;
    }

    if (space_from_belief_cmd->parsed()) {
      emit.line(space_to_json(space_from_belief(detail::load_belief(belief_path))).dump());
      return 0;
    }

    if (belpl_cmd->parsed()) {
      const BeliefStructure bs = detail::load_belief(belief_path);
      const ElementSet x = ElementSet::of_labels(bs.universe(), detail::split_set_arg(set_arg));
      emit.line(reading_to_json(evaluate(bs, x)).dump());
      return 0;
    }

    if (induce_cmd->parsed()) {
      const BeliefStructure bs_u = detail::load_belief(belief_path);
      const Space g = detail::load_space(space_path);
      const auto result = induce_belief(bs_u, g, strict ? Enforce::strict : Enforce::permissive);
      emit.line(induced_to_json(result).dump());
      return 0;
    }

    if (verify_cmd->parsed()) {
      const std::vector<std::string> claims =
          claims_arg.empty() ? all_claim_ids() : parse_claim_ids(claims_arg);
      std::vector<ClaimReport> reports;
      if (*vr) {
        GeneratorConfig cfg;
        cfg.trials = random_trials;
        cfg.seed = seed;
        cfg.kinds = detail::parse_kind_arg(kind_arg);
        if (u_size < 1 || u_size > max_random_u)
          throw SizeCapError("--u-size must be in [1, " + std::to_string(max_random_u) + "]");
        if (w_size < 1 || w_size > max_random_w)
          throw SizeCapError("--w-size must be in [1, " + std::to_string(max_random_w) + "]");
        cfg.max_u = u_size;
        cfg.max_w = w_size;
        cfg.max_denominator = max_den;
        reports = verify_claims(cfg, claims);
      } else if (*vs) {
        reports = verify_claims(make_claim_inputs(detail::load_space(space_path), seed), claims);
      } else if (*vb) {
        ClaimInputs in;
        in.belief_w = detail::load_belief(belief_path);
        reports = verify_claims(in, claims);
      } else {
        throw ValidationError("verify requires --space, --belief, or --random");
      }
      for (const auto& report : reports) emit.line(claim_report_to_json(report).dump());
      return any_counterexample(reports) ? 2 : 0;
    }

    throw Error("no subcommand dispatched");
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace sapprox::cli
