#pragma once

// Executable claim suite: every proposition about approximation spaces and
// belief structures that this library implements can be checked against a
// brute-force oracle, on a concrete instance or on streams of seeded random
// instances. Claims are never assumed: each check either confirms the claim
// or produces a counterexample witness that replays through the public
// operations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sapprox/bridges.hpp"
#include "sapprox/generators.hpp"
#include "sapprox/json_io.hpp"
#include "sapprox/naive.hpp"

namespace sapprox {

enum class ClaimStatus { holds, counterexample, skipped_precondition };

inline std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::holds: return "holds";
    case ClaimStatus::counterexample: return "counterexample";
    case ClaimStatus::skipped_precondition: return "skipped-precondition";
  }
  throw Error("unreachable claim status");
}

struct ClaimReport {
  std::string claim;
  ClaimStatus status = ClaimStatus::holds;
  long trials = 0;
  Json witness;        // populated iff status == counterexample
  std::string reason;  // populated iff status == skipped_precondition
};

inline const std::vector<std::string>& all_claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (int i = 1; i <= 15; ++i) v.push_back("P2.1-" + std::to_string(i));
    for (const char* id : {"P3.2", "P3.3", "P3.4", "P3.5", "P3.6", "P3.7", "T3.8", "T3.9", "T3.10"})
      v.push_back(id);
    return v;
  }();
  return ids;
}

inline std::vector<std::string> parse_claim_ids(const std::string& csv) {
  const auto& known = all_claim_ids();
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    const std::string id =
        csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (std::find(known.begin(), known.end(), id) == known.end())
      throw ParseError("unknown claim id '" + id + "'");
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  // Reports always come out in canonical claim order.
  std::vector<std::string> ordered;
  for (const auto& id : known)
    if (std::find(out.begin(), out.end(), id) != out.end()) ordered.push_back(id);
  return ordered;
}

// One trial's inputs. A concrete source fills whichever parts it has; the
// generator fills all three.
struct ClaimInputs {
  std::optional<Space> space;
  std::optional<BeliefStructure> belief_w;  // over some W, for T3.9
  std::optional<BeliefStructure> belief_u;  // over space->u(), for T3.10
};

namespace claim_detail {

struct Outcome {
  ClaimStatus status = ClaimStatus::holds;
  Json witness;
  std::string reason;
};

inline Outcome holds() { return {}; }
inline Outcome skip(std::string reason) {
  return {ClaimStatus::skipped_precondition, Json(), std::move(reason)};
}
inline Outcome fail(Json witness) {
  return {ClaimStatus::counterexample, std::move(witness), ""};
}

inline constexpr std::size_t claim_universe_cap = 5;

// The region claims enumerate P(W) (or its square) exhaustively.
inline void gate_space_size(const Space& g) {
  if (g.w()->size() > claim_universe_cap)
    throw SizeCapError("claim checks require |W| <= " + std::to_string(claim_universe_cap) +
                       ", got " + std::to_string(g.w()->size()));
}

inline bool is_monotone(const Space& g) {
  return check_partial_monotone(g, MonotoneScope::space).holds;
}

inline bool is_irreducible(const Space& g) { return trivial_elements(g).is_empty(); }

// P2.1 items 1..15: the region/approximation inclusions, exhaustive over
// pairs X, Y.
inline Outcome check_p21(int item, const Space& g) {
  gate_space_size(g);
  if (!is_monotone(g)) return skip("space is not partial monotone");
  const std::uint64_t n = std::uint64_t(1) << g.w()->size();
  for (std::uint64_t xm = 0; xm < n; ++xm) {
    for (std::uint64_t ym = 0; ym < n; ++ym) {
      const ElementSet x = ElementSet::from_mask(g.w(), xm);
      const ElementSet y = ElementSet::from_mask(g.w(), ym);
      const bool x_in_y = x.subset_of(y);
      bool ok = true;
      switch (item) {
        case 1: ok = !x_in_y || naive::upper(g, x).subset_of(naive::upper(g, y)); break;
        case 2: ok = !x_in_y || naive::lower(g, x).subset_of(naive::lower(g, y)); break;
        case 3: ok = (naive::upper(g, x) | naive::upper(g, y)).subset_of(naive::upper(g, x | y)); break;
        case 4: ok = naive::upper(g, x & y).subset_of(naive::upper(g, x) & naive::upper(g, y)); break;
        case 5: ok = (naive::lower(g, x) | naive::lower(g, y)).subset_of(naive::lower(g, x | y)); break;
        case 6: ok = naive::lower(g, x & y).subset_of(naive::lower(g, x) & naive::lower(g, y)); break;
        case 7: ok = naive::upper(g, x) == naive::lower(g, x.complement()).complement(); break;
        case 8: ok = naive::lower(g, x) == naive::upper(g, x.complement()).complement(); break;
        case 9: ok = !x_in_y || naive::pos(g, x).subset_of(naive::pos(g, y)); break;
        case 10: ok = !x_in_y || naive::neg(g, y).subset_of(naive::neg(g, x)); break;
        case 11: ok = (naive::pos(g, x) | naive::pos(g, y)).subset_of(naive::pos(g, x | y)); break;
        case 12: ok = naive::neg(g, x | y).subset_of(naive::neg(g, x) | naive::neg(g, y)); break;
        case 13: ok = naive::pos(g, x & y).subset_of(naive::pos(g, x) & naive::pos(g, y)); break;
        case 14: ok = (naive::neg(g, x) & naive::neg(g, y)).subset_of(naive::neg(g, x & y)); break;
        case 15:
          ok = (naive::pos(g, x) & naive::neg(g, y))
                   .subset_of(naive::pos(g, x) & naive::neg(g, x & y));
          break;
        default: throw Error("unknown P2.1 item");
      }
      if (!ok) {
        Json w;
        w["item"] = item;
        w["space"] = space_to_json(g);
        w["X"] = set_to_json(x);
        w["Y"] = set_to_json(y);
        return fail(std::move(w));
      }
    }
  }
  return holds();
}

// P3.2: the qualities are dual on every space, monotone or not.
inline Outcome check_p32(const Space& g) {
  gate_space_size(g);
  const std::uint64_t n = std::uint64_t(1) << g.w()->size();
  for (std::uint64_t xm = 0; xm < n; ++xm) {
    const ElementSet x = ElementSet::from_mask(g.w(), xm);
    if (quality(g, x).q_lower != Rational(1) - quality(g, x.complement()).q_upper) {
      Json w;
      w["space"] = space_to_json(g);
      w["X"] = set_to_json(x);
      return fail(std::move(w));
    }
  }
  return holds();
}

inline Outcome check_p33(const Space& g) {
  gate_space_size(g);
  if (!is_monotone(g)) return skip("space is not partial monotone");
  if (!is_irreducible(g)) return skip("space is reducible");
  if (quality(g, ElementSet::empty(g.w())).q_lower != Rational(0)) {
    Json w;
    w["space"] = space_to_json(g);
    w["q_lower_empty"] = quality(g, ElementSet::empty(g.w())).q_lower.str();
    return fail(std::move(w));
  }
  return holds();
}

inline Outcome check_p34(const Space& g) {
  gate_space_size(g);
  if (!is_monotone(g)) return skip("space is not partial monotone");
  if (!is_irreducible(g)) return skip("space is reducible");
  if (quality(g, ElementSet::full(g.w())).q_lower != Rational(1)) {
    Json w;
    w["space"] = space_to_json(g);
    w["q_lower_full"] = quality(g, ElementSet::full(g.w())).q_lower.str();
    return fail(std::move(w));
  }
  return holds();
}

// P3.5: superadditivity of the lower quality over families of up to 3
// distinct subsets. Family enumeration is capped at |W| <= 4.
inline Outcome check_p35(const Space& g) {
  gate_space_size(g);
  if (!is_monotone(g)) return skip("space is not partial monotone");
  if (g.w()->size() > 4) return skip("family enumeration is capped at |W| <= 4");
  const auto violation = find_superadditivity_violation(lower_quality_function(g), 3);
  if (violation) {
    Json w;
    w["space"] = space_to_json(g);
    Json family = Json::array();
    for (const auto& set : violation->family) family.push_back(set_to_json(set));
    w["family"] = std::move(family);
    w["lhs"] = violation->lhs.str();
    w["rhs"] = violation->rhs.str();
    return fail(std::move(w));
  }
  return holds();
}

// P3.6: the lower quality of an irreducible partial monotone space is a
// belief function; certified by normalization plus Moebius nonnegativity.
inline Outcome check_p36(const Space& g) {
  gate_space_size(g);
  if (!is_monotone(g)) return skip("space is not partial monotone");
  if (!is_irreducible(g)) return skip("space is reducible");
  const SetFunction f = lower_quality_function(g);
  if (f.values.front() != Rational(0) || f.values.back() != Rational(1)) {
    Json w;
    w["space"] = space_to_json(g);
    w["reason"] = "lower quality is not normalized";
    return fail(std::move(w));
  }
  const SetFunction masses = mobius(f);
  for (std::size_t m = 0; m < masses.values.size(); ++m) {
    if (masses.values[m].is_negative()) {
      Json w;
      w["space"] = space_to_json(g);
      w["set"] = set_to_json(ElementSet::from_mask(g.w(), std::uint64_t(m)));
      w["mass"] = masses.values[m].str();
      return fail(std::move(w));
    }
  }
  return holds();
}

// P3.7: the upper quality is a plausibility function, i.e. its dual
// 1 - q_upper(X^c) is a belief function.
inline Outcome check_p37(const Space& g) {
  gate_space_size(g);
  if (!is_monotone(g)) return skip("space is not partial monotone");
  if (!is_irreducible(g)) return skip("space is reducible");
  const std::size_t n = std::size_t(1) << g.w()->size();
  std::vector<Rational> dual(n);
  for (std::size_t m = 0; m < n; ++m) {
    const ElementSet x = ElementSet::from_mask(g.w(), std::uint64_t(m));
    dual[m] = Rational(1) - quality(g, x.complement()).q_upper;
    if (dual[m] != quality(g, x).q_lower) {
      Json w;
      w["space"] = space_to_json(g);
      w["X"] = set_to_json(x);
      w["reason"] = "dual of q_upper differs from q_lower";
      return fail(std::move(w));
    }
  }
  const SetFunction masses = mobius(make_set_function(g.w(), std::move(dual)));
  for (std::size_t m = 0; m < masses.values.size(); ++m) {
    if (masses.values[m].is_negative()) {
      Json w;
      w["space"] = space_to_json(g);
      w["set"] = set_to_json(ElementSet::from_mask(g.w(), std::uint64_t(m)));
      w["mass"] = masses.values[m].str();
      return fail(std::move(w));
    }
  }
  return holds();
}

// T3.8: an irreducible partial monotone space induces a belief structure.
inline Outcome check_t38(const Space& g) {
  gate_space_size(g);
  if (!is_monotone(g)) return skip("space is not partial monotone");
  if (!is_irreducible(g)) return skip("space is reducible");
  const InducedMassResult result = belief_from_space(g, Enforce::permissive);
  if (!result.valid) {
    Json w;
    w["space"] = space_to_json(g);
    w["candidate"] = induced_to_json(result);
    return fail(std::move(w));
  }
  return holds();
}

// T3.9: the constructed space reproduces Bel and Pl exactly and round-trips
// back to the input structure.
inline Outcome check_t39(const BeliefStructure& bs) {
  if (bs.universe()->size() > claim_universe_cap)
    throw SizeCapError("claim checks require |W| <= " + std::to_string(claim_universe_cap));
  const Space g = space_from_belief(bs);
  const std::uint64_t n = std::uint64_t(1) << bs.universe()->size();
  for (std::uint64_t m = 0; m < n; ++m) {
    const ElementSet x = ElementSet::from_mask(bs.universe(), m);
    const QualityPair q = quality(g, x);
    const Rational bel = naive::bel(bs, x);
    const Rational pl = naive::pl(bs, x);
    if (q.q_lower != bel || q.q_upper != pl) {
      Json w;
      w["belief"] = belief_to_json(bs);
      w["X"] = set_to_json(x);
      w["q_lower"] = q.q_lower.str();
      w["bel"] = bel.str();
      w["q_upper"] = q.q_upper.str();
      w["pl"] = pl.str();
      return fail(std::move(w));
    }
  }
  const InducedMassResult back = belief_from_space(g, Enforce::permissive);
  bool reproduced = back.valid && back.masses.size() == bs.masses().size();
  if (reproduced)
    for (const auto& [set, mass] : bs.masses())
      if (back.masses.find(set) == back.masses.end() || back.masses.at(set) != mass) {
        reproduced = false;
        break;
      }
  if (!reproduced) {
    Json w;
    w["belief"] = belief_to_json(bs);
    w["round_trip"] = induced_to_json(back);
    return fail(std::move(w));
  }
  return holds();
}

// T3.10: the induced masses on W form a valid belief structure and match
// the direct share-distribution oracle term for term.
inline Outcome check_t310(const BeliefStructure& bs_u, const Space& g) {
  gate_space_size(g);
  if (!same_universe(bs_u.universe(), g.u())) return skip("belief universe differs from U");
  if (!is_monotone(g)) return skip("space is not partial monotone");
  if (!is_irreducible(g)) return skip("space is reducible");

  const InducedMassResult result = induce_belief(bs_u, g, Enforce::permissive);
  const auto oracle = naive::induce(bs_u, g);

  auto witness = [&](const ElementSet& set, const Rational& expected, const Rational& got) {
    Json w;
    w["space"] = space_to_json(g);
    w["belief_u"] = belief_to_json(bs_u);
    w["set"] = set_to_json(set);
    w["expected"] = expected.str();
    w["got"] = got.str();
    return fail(std::move(w));
  };

  Rational total(0);
  for (const auto& [set, mass] : result.masses) total += mass;
  const Rational empty_mass = result.masses.count(ElementSet::empty(g.w()))
                                  ? result.masses.at(ElementSet::empty(g.w()))
                                  : Rational(0);
  if (!result.valid || total != Rational(1) || !empty_mass.is_zero()) {
    Json w;
    w["space"] = space_to_json(g);
    w["belief_u"] = belief_to_json(bs_u);
    w["candidate"] = induced_to_json(result);
    return fail(std::move(w));
  }
  // Term-for-term comparison as total functions on P(W).
  const std::uint64_t n = std::uint64_t(1) << g.w()->size();
  for (std::uint64_t m = 0; m < n; ++m) {
    const ElementSet set = ElementSet::from_mask(g.w(), m);
    const Rational got = result.masses.count(set) ? result.masses.at(set) : Rational(0);
    const Rational expected = oracle.count(set) ? oracle.at(set) : Rational(0);
    if (got != expected) return witness(set, expected, got);
  }
  return holds();
}

inline Outcome check_claim(const std::string& id, const ClaimInputs& in) {
  if (id.rfind("P2.1-", 0) == 0) {
    if (!in.space) return skip("no space in source");
    return check_p21(std::stoi(id.substr(5)), *in.space);
  }
  if (id == "P3.2") return in.space ? check_p32(*in.space) : skip("no space in source");
  if (id == "P3.3") return in.space ? check_p33(*in.space) : skip("no space in source");
  if (id == "P3.4") return in.space ? check_p34(*in.space) : skip("no space in source");
  if (id == "P3.5") return in.space ? check_p35(*in.space) : skip("no space in source");
  if (id == "P3.6") return in.space ? check_p36(*in.space) : skip("no space in source");
  if (id == "P3.7") return in.space ? check_p37(*in.space) : skip("no space in source");
  if (id == "T3.8") return in.space ? check_t38(*in.space) : skip("no space in source");
  if (id == "T3.9") return in.belief_w ? check_t39(*in.belief_w) : skip("no belief in source");
  if (id == "T3.10") {
    if (!in.space) return skip("no space in source");
    if (!in.belief_u) return skip("no belief over U available");
    return check_t310(*in.belief_u, *in.space);
  }
  throw ParseError("unknown claim id '" + id + "'");
}

}  // namespace claim_detail

// Re-runs a claim on the inputs embedded in its witness and reports whether
// the failure triggers again. Every emitted counterexample must replay.
inline bool replay_witness(const std::string& claim_id, const Json& witness) {
  ClaimInputs in;
  if (witness.contains("space")) in.space = space_from_json(witness.at("space"));
  if (witness.contains("belief")) in.belief_w = belief_from_json(witness.at("belief"));
  if (witness.contains("belief_u")) in.belief_u = belief_from_json(witness.at("belief_u"));
  return claim_detail::check_claim(claim_id, in).status == ClaimStatus::counterexample;
}

// Fills the belief slots for a concrete space: T3.9 prefers the structure the
// space itself induces (falling back to a seeded random one when the induced
// candidate is invalid), T3.10 gets a seeded random structure over U.
inline ClaimInputs make_claim_inputs(const Space& g, std::uint64_t seed) {
  ClaimInputs in;
  in.space = g;
  SplitMix64 rng(seed);
  if (g.w()->size() <= max_enumerable_universe) {
    const InducedMassResult induced = belief_from_space(g, Enforce::permissive);
    if (induced.valid && !induced.masses.empty())
      in.belief_w = induced.to_belief();
    else if (g.w()->size() <= max_random_w)
      in.belief_w = random_belief_over(rng.fork(1).next(), g.w(), 12);
  }
  if (g.u()->size() <= max_random_u)
    in.belief_u = random_belief_over(rng.fork(2).next(), g.u(), 12);
  return in;
}

// One concrete trial.
inline std::vector<ClaimReport> verify_claims(const ClaimInputs& in,
                                              const std::vector<std::string>& claims) {
  std::vector<ClaimReport> reports;
  reports.reserve(claims.size());
  for (const auto& id : claims) {
    const auto outcome = claim_detail::check_claim(id, in);
    ClaimReport report;
    report.claim = id;
    report.status = outcome.status;
    report.trials = outcome.status == ClaimStatus::skipped_precondition ? 0 : 1;
    report.witness = outcome.witness;
    report.reason = outcome.reason;
    if (report.status == ClaimStatus::counterexample && !replay_witness(id, report.witness))
      throw Error("internal: counterexample witness for " + id + " does not replay");
    reports.push_back(std::move(report));
  }
  return reports;
}

struct GeneratorConfig {
  long trials = 100;
  std::uint64_t seed = 0;
  std::vector<DeciderKind> kinds = {DeciderKind::subseteq, DeciderKind::intersects,
                                    DeciderKind::card_threshold, DeciderKind::table};
  std::size_t max_u = 6;
  std::size_t max_w = 4;
  std::int64_t max_denominator = 12;
};

// Seeded random-instance run: trial t draws its inputs deterministically from
// the master seed, cycling through the configured decider kinds. Per claim,
// the first failing trial's witness is reported and later trials are not
// examined; `trials` counts the trials the claim was actually evaluated on.
inline std::vector<ClaimReport> verify_claims(const GeneratorConfig& cfg,
                                              const std::vector<std::string>& claims) {
  if (cfg.trials < 1) throw ValidationError("trial count must be positive");
  std::vector<ClaimReport> reports;
  for (const auto& id : claims) {
    ClaimReport r;
    r.claim = id;
    r.status = ClaimStatus::skipped_precondition;
    r.reason = "no trial met the preconditions";
    reports.push_back(std::move(r));
  }

  for (long t = 0; t < cfg.trials; ++t) {
    SplitMix64 rng(cfg.seed + 0x9e3779b97f4a7c15ULL * std::uint64_t(t + 1));
    const DeciderKind kind = cfg.kinds[std::size_t(t) % cfg.kinds.size()];
    const std::size_t u_size = 1 + std::size_t(rng.below(cfg.max_u));
    const std::size_t w_size = 1 + std::size_t(rng.below(cfg.max_w));
    const Space g = random_space(rng.fork(1).next(), u_size, w_size, kind);

    ClaimInputs in;
    in.space = g;
    in.belief_w = random_belief(rng.fork(2).next(), w_size, cfg.max_denominator);
    in.belief_u = random_belief_over(rng.fork(3).next(), g.u(), cfg.max_denominator);

    for (auto& report : reports) {
      if (report.status == ClaimStatus::counterexample) continue;
      const auto outcome = claim_detail::check_claim(report.claim, in);
      if (outcome.status == ClaimStatus::skipped_precondition) {
        if (report.trials == 0) report.reason = outcome.reason;
        continue;
      }
      report.trials += 1;
      if (outcome.status == ClaimStatus::counterexample) {
        report.status = ClaimStatus::counterexample;
        report.witness = outcome.witness;
        report.reason.clear();
        if (!replay_witness(report.claim, report.witness))
          throw Error("internal: counterexample witness for " + report.claim + " does not replay");
      } else {
        report.status = ClaimStatus::holds;
        report.reason.clear();
      }
    }
  }
  return reports;
}

inline Json claim_report_to_json(const ClaimReport& report) {
  Json out;
  out["claim"] = report.claim;
  out["status"] = to_string(report.status);
  out["trials"] = report.trials;
  if (report.status == ClaimStatus::counterexample) out["witness"] = report.witness;
  if (report.status == ClaimStatus::skipped_precondition) out["reason"] = report.reason;
  return out;
}

inline bool any_counterexample(const std::vector<ClaimReport>& reports) {
  for (const auto& r : reports)
    if (r.status == ClaimStatus::counterexample) return true;
  return false;
}

}  // namespace sapprox
