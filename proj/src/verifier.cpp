#include "finring/verifier.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <random>

#include "finring/inverses.hpp"
#include "finring/transfer.hpp"

namespace finring {

namespace {

struct TheoremName {
  TheoremId id;
  std::string_view name;
};

constexpr std::array<TheoremName, 20> kNames{{
    {TheoremId::JACOBSON_LEMMA, "JACOBSON_LEMMA"},
    {TheoremId::CLINE_D, "CLINE_D"},
    {TheoremId::CLINE_GD, "CLINE_GD"},
    {TheoremId::CLINE_PD, "CLINE_PD"},
    {TheoremId::STRONGLY_CLEAN_TRANSFER, "STRONGLY_CLEAN_TRANSFER"},
    {TheoremId::ONE_MINUS_CLEAN, "ONE_MINUS_CLEAN"},
    {TheoremId::PSEUDO_ONE_MINUS, "PSEUDO_ONE_MINUS"},
    {TheoremId::CORNER_CLEAN, "CORNER_CLEAN"},
    {TheoremId::CORNER_PI_REGULAR, "CORNER_PI_REGULAR"},
    {TheoremId::CORNER_QUASIPOLAR, "CORNER_QUASIPOLAR"},
    {TheoremId::CORNER_PSEUDOPOLAR, "CORNER_PSEUDOPOLAR"},
    {TheoremId::DECOMP_EQUIV_1_1, "DECOMP_EQUIV_1_1"},
    {TheoremId::DECOMP_EQUIV_1_2, "DECOMP_EQUIV_1_2"},
    {TheoremId::DECOMP_EQUIV_1_3, "DECOMP_EQUIV_1_3"},
    {TheoremId::LEMMA_S_SHARP, "LEMMA_S_SHARP"},
    {TheoremId::UNIQUENESS, "UNIQUENESS"},
    {TheoremId::RADICAL_CHAIN, "RADICAL_CHAIN"},
    {TheoremId::VARIANT_COINCIDENCE, "VARIANT_COINCIDENCE"},
    {TheoremId::CORNER_QUASIPOLAR_ANY_E, "CORNER_QUASIPOLAR_ANY_E"},
    {TheoremId::CORNER_PSEUDOPOLAR_ANY_E, "CORNER_PSEUDOPOLAR_ANY_E"},
}};

constexpr std::array kDrazinVariants{Variant::drazin, Variant::pseudo, Variant::generalized};
constexpr std::array kPolarVariants{PolarVariant::pi_regular, PolarVariant::quasipolar,
                                    PolarVariant::pseudopolar};

enum class Domain { pairs, elements, corners };

Domain domain_of(TheoremId id) {
  switch (id) {
    case TheoremId::JACOBSON_LEMMA:
    case TheoremId::CLINE_D:
    case TheoremId::CLINE_GD:
    case TheoremId::CLINE_PD:
    case TheoremId::STRONGLY_CLEAN_TRANSFER:
    case TheoremId::ONE_MINUS_CLEAN:
    case TheoremId::PSEUDO_ONE_MINUS:
      return Domain::pairs;
    case TheoremId::CORNER_CLEAN:
    case TheoremId::CORNER_PI_REGULAR:
    case TheoremId::CORNER_QUASIPOLAR:
    case TheoremId::CORNER_PSEUDOPOLAR:
    case TheoremId::CORNER_QUASIPOLAR_ANY_E:
    case TheoremId::CORNER_PSEUDOPOLAR_ANY_E:
      return Domain::corners;
    default:
      return Domain::elements;
  }
}

struct Outcome {
  bool applicable = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

/// Per-ring state shared by all cases of one run.
class Context {
 public:
  explicit Context(const RingPtr& ring) : oracle(ring) {}

  const FiniteRing& ring() const { return oracle.ring(); }
  std::string label(Index x) const { return ring().label(x); }

  const InverseOracle& corner(Index e) {
    auto& slot = corners_[e];
    if (!slot) slot = std::make_unique<InverseOracle>(build_corner(oracle.ring_ptr(), e));
    return *slot;
  }

  const InverseOracle oracle;

 private:
  std::map<Index, std::unique_ptr<InverseOracle>> corners_;
};

std::uint64_t domain_size(TheoremId id, const Context& ctx) {
  const std::uint64_t n = ctx.ring().order();
  switch (domain_of(id)) {
    case Domain::pairs: return n * n;
    case Domain::elements: return n;
    case Domain::corners: return ctx.oracle.structure().idempotents().size() * n;
  }
  return 0;
}

std::string pair_text(const Context& ctx, Index a, Index b) {
  return "a=" + ctx.label(a) + " b=" + ctx.label(b);
}

// Theorem checks -------------------------------------------------------------

Outcome check_jacobson(const Context& ctx, Index a, Index b) {
  const FiniteRing& r = ctx.ring();
  const Structure& st = ctx.oracle.structure();
  Outcome out;
  const Index one_ab = r.add(r.one(), r.mul(a, b));
  const Index one_ba = r.add(r.one(), r.mul(b, a));
  const auto result = jacobson_inverse(st, a, b);
  if (!result) {
    out.applicable = false;
    // Lemma with a, b swapped.
    if (st.is_unit(one_ba)) {
      out.applicable = true;
      out.failures.push_back("1+ba is a unit but 1+ab is not: " + pair_text(ctx, a, b));
    }
    return out;
  }
  if (st.inverse(one_ba) != result) {
    out.failures.push_back("formula " + ctx.label(*result) + " differs from scanned inverse of " +
                           ctx.label(one_ba) + ": " + pair_text(ctx, a, b));
  }
  (void)one_ab;
  return out;
}

Outcome check_cline(const Context& ctx, Index a, Index b, Variant v) {
  const FiniteRing& r = ctx.ring();
  Outcome out;
  const auto ab_inverse = ctx.oracle.drazin(r.mul(a, b), v);
  if (!ab_inverse) {
    out.applicable = false;
    if (ctx.oracle.drazin(r.mul(b, a), v)) {
      out.applicable = true;
      out.failures.push_back("ba invertible but ab is not: " + pair_text(ctx, a, b));
    }
    return out;
  }
  const auto result = cline(ctx.oracle, a, b, v);
  const auto scanned = ctx.oracle.drazin(r.mul(b, a), v);
  if (!result || !scanned || result->inverse != scanned->inverse) {
    out.failures.push_back("Cline formula disagrees with scan: " + pair_text(ctx, a, b));
    return out;
  }
  const int gap = int(ab_inverse->index) - int(result->index);
  out.notes.push_back(gap >= -1 && gap <= 1 ? "index relation |ind(ab)-ind(ba)| <= 1 held"
                                            : "index relation |ind(ab)-ind(ba)| <= 1 violated");
  return out;
}

Outcome check_clean_transfer(const Context& ctx, Index a, Index b, bool one_minus) {
  const FiniteRing& r = ctx.ring();
  Outcome out;
  const Index ab = r.mul(a, b);
  const Index source = one_minus ? r.sub(r.one(), ab) : ab;
  const auto decompositions = ctx.oracle.strongly_clean_decompositions(source);
  const Index ba = r.mul(b, a);
  const Index target = one_minus ? r.sub(r.one(), ba) : ba;
  if (decompositions.empty()) {
    out.applicable = false;
    if (ctx.oracle.is_strongly_clean(target)) {
      out.applicable = true;
      out.failures.push_back("target strongly clean but source is not: " + pair_text(ctx, a, b));
    }
    return out;
  }
  for (const auto& d : decompositions) {
    const CleanTransfer t = one_minus ? one_minus_clean_transfer(ctx.oracle, a, b, d)
                                      : strongly_clean_transfer(ctx.oracle, a, b, d);
    if (!ctx.oracle.is_clean_decomposition(target, t.result)) {
      out.failures.push_back("transferred decomposition invalid: " + pair_text(ctx, a, b) +
                             " e=" + ctx.label(d.idempotent));
    }
  }
  return out;
}

Outcome check_pseudo_one_minus(const Context& ctx, Index a, Index b) {
  const FiniteRing& r = ctx.ring();
  Outcome out;
  const Index alpha = r.sub(r.one(), r.mul(a, b));
  const Index beta = r.sub(r.one(), r.mul(b, a));
  // Predicate-level companion: 1-ab strongly pi-regular => 1-ba too.
  if (ctx.oracle.is_strongly_pi_regular(alpha) && !ctx.oracle.is_strongly_pi_regular(beta)) {
    out.failures.push_back("1-ab strongly pi-regular but 1-ba is not: " + pair_text(ctx, a, b));
  }
  const auto t = pseudo_one_minus_transfer(ctx.oracle, a, b);
  if (!t) {
    out.applicable = !out.failures.empty();
    if (ctx.oracle.drazin(beta, Variant::pseudo)) {
      out.applicable = true;
      out.failures.push_back("1-ba pD-invertible but 1-ab is not: " + pair_text(ctx, a, b));
    }
    return out;
  }
  const auto oracle = ctx.oracle.drazin(beta, Variant::pseudo);
  if (!oracle || oracle->inverse != t->beta_inverse || oracle->spectral_idempotent != t->f ||
      oracle->index != t->index) {
    out.failures.push_back("formula disagrees with scanned (1-ba)^pD: " + pair_text(ctx, a, b));
  }
  return out;
}

Outcome check_corner(Context& ctx, Index e, Index a, CornerProperty p, bool require_centrality) {
  Outcome out;
  const InverseOracle& corner = ctx.corner(e);
  const CornerReport rep = corner_equivalence(ctx.oracle, corner, e, a, p, require_centrality);
  for (const auto& f : rep.failures) {
    out.failures.push_back(f + " fails: e=" + ctx.label(e) + " a=" + ctx.label(a) +
                           " P1=" + (rep.p1 ? "1" : "0") + " P2=" + (rep.p2 ? "1" : "0") +
                           " P3=" + (rep.p3 ? "1" : "0"));
  }
  if (rep.converse_not_claimed) out.notes.push_back("P3 without P1 for non-central e (converse not claimed)");
  return out;
}

Outcome check_decomposition_equivalence(const Context& ctx, Index a, PolarVariant v) {
  const InverseOracle& o = ctx.oracle;
  Outcome out;
  const Profile profile = o.classify(a);
  bool by_definition = false;
  switch (v) {
    case PolarVariant::pi_regular: by_definition = profile.strongly_pi_regular; break;
    case PolarVariant::quasipolar: by_definition = profile.quasipolar; break;
    case PolarVariant::pseudopolar: by_definition = profile.pseudopolar; break;
  }
  const bool has_inverse = o.drazin(a, matching_variant(v)).has_value();
  const bool has_decomposition = o.polar_decomposition(a, v).has_value();
  const bool found_by_search = !o.polar_decompositions_by_search(a, v).empty();
  if (by_definition != has_inverse || has_inverse != has_decomposition ||
      has_decomposition != found_by_search) {
    out.failures.push_back(std::string(to_string(v)) + " mismatch at a=" + ctx.label(a) +
                           ": definition=" + (by_definition ? "1" : "0") +
                           " inverse=" + (has_inverse ? "1" : "0") +
                           " decomposition=" + (has_decomposition ? "1" : "0") +
                           " search=" + (found_by_search ? "1" : "0"));
  }
  return out;
}

Outcome check_s_sharp(const Context& ctx, Index a) {
  const InverseOracle& o = ctx.oracle;
  Outcome out;
  out.applicable = false;
  for (PolarVariant v : kPolarVariants) {
    const auto oracle = o.drazin(a, matching_variant(v));
    for (const auto& d : o.polar_decompositions_by_search(a, v)) {
      out.applicable = true;
      const DrazinResult r = o.decomposition_to_inverse(a, d);
      if (!oracle || *oracle != r) {
        out.failures.push_back(std::string(to_string(v)) + ": s#=" + ctx.label(r.inverse) +
                               " is not the inverse of a=" + ctx.label(a) +
                               " (s=" + ctx.label(d.regular_part) + ")");
      }
    }
  }
  return out;
}

Outcome check_uniqueness(const Context& ctx, Index a) {
  const InverseOracle& o = ctx.oracle;
  Outcome out;
  const auto group = o.group_inverse_solutions(a);
  if (group.size() > 1) out.failures.push_back("two group inverses of " + ctx.label(a));
  if (group.size() == 1 && !o.commutants().comm2(a)[group.front()]) {
    out.failures.push_back("group inverse of " + ctx.label(a) + " outside comm^2(a)");
  }
  for (Variant v : kDrazinVariants) {
    const auto strict = o.drazin_solutions(a, v, Commuting::double_commutant);
    const auto relaxed = o.drazin_solutions(a, v, Commuting::commutant);
    const std::string name(to_string(v));
    if (strict.size() > 1) out.failures.push_back("two " + name + " inverses of " + ctx.label(a));
    if (relaxed.size() > 1) {
      out.failures.push_back("two " + name + " inverses of " + ctx.label(a) + " with b in comm(a)");
    }
    if (strict != relaxed) {
      out.failures.push_back(name + " inverse of " + ctx.label(a) +
                             " changes when comm^2(a) is relaxed to comm(a)");
    }
  }
  return out;
}

Outcome check_radical_chain(const Context& ctx, Index x) {
  const Structure& st = ctx.oracle.structure();
  Outcome out;
  if (st.in_jacobson(x) && !st.in_j_sharp(x)) out.failures.push_back("J not in J#: " + ctx.label(x));
  if (st.in_j_sharp(x) && !st.is_quasinilpotent(x)) {
    out.failures.push_back("J# not in qnil: " + ctx.label(x));
  }
  if (st.is_nilpotent(x) && !st.is_quasinilpotent(x)) {
    out.failures.push_back("Nil not in qnil: " + ctx.label(x));
  }
  // Holds for finite rings only.
  if (st.is_quasinilpotent(x) && !st.is_nilpotent(x)) {
    out.failures.push_back("finite-ring coincidence: qnil not in Nil: " + ctx.label(x));
  }
  if (x == ctx.ring().zero() &&
      !(st.is_nilpotent(x) && st.in_jacobson(x) && st.in_j_sharp(x) && st.is_quasinilpotent(x))) {
    out.failures.push_back("zero missing from a radical set");
  }
  if (x == ctx.ring().one() && !st.is_unit(x)) out.failures.push_back("one is not a unit");
  return out;
}

Outcome check_coincidence(const Context& ctx, Index a) {
  Outcome out;
  const auto d = ctx.oracle.drazin_solutions(a, Variant::drazin);
  const auto p = ctx.oracle.drazin_solutions(a, Variant::pseudo);
  const auto g = ctx.oracle.drazin_solutions(a, Variant::generalized);
  if (d != p || p != g) {
    out.failures.push_back("Drazin variants disagree at " + ctx.label(a));
  }
  return out;
}

Outcome check_case(TheoremId id, Context& ctx, std::uint64_t idx) {
  const std::uint64_t n = ctx.ring().order();
  if (domain_of(id) == Domain::pairs) {
    const Index a = Index(idx / n), b = Index(idx % n);
    switch (id) {
      case TheoremId::JACOBSON_LEMMA: return check_jacobson(ctx, a, b);
      case TheoremId::CLINE_D: return check_cline(ctx, a, b, Variant::drazin);
      case TheoremId::CLINE_GD: return check_cline(ctx, a, b, Variant::generalized);
      case TheoremId::CLINE_PD: return check_cline(ctx, a, b, Variant::pseudo);
      case TheoremId::STRONGLY_CLEAN_TRANSFER: return check_clean_transfer(ctx, a, b, false);
      case TheoremId::ONE_MINUS_CLEAN: return check_clean_transfer(ctx, a, b, true);
      case TheoremId::PSEUDO_ONE_MINUS: return check_pseudo_one_minus(ctx, a, b);
      default: break;
    }
  } else if (domain_of(id) == Domain::corners) {
    const Index e = ctx.oracle.structure().idempotents()[idx / n];
    const Index a = Index(idx % n);
    switch (id) {
      case TheoremId::CORNER_CLEAN:
        return check_corner(ctx, e, a, CornerProperty::strongly_clean, true);
      case TheoremId::CORNER_PI_REGULAR:
        return check_corner(ctx, e, a, CornerProperty::strongly_pi_regular, true);
      case TheoremId::CORNER_QUASIPOLAR:
        return check_corner(ctx, e, a, CornerProperty::quasipolar, true);
      case TheoremId::CORNER_PSEUDOPOLAR:
        return check_corner(ctx, e, a, CornerProperty::pseudopolar, true);
      case TheoremId::CORNER_QUASIPOLAR_ANY_E:
        return check_corner(ctx, e, a, CornerProperty::quasipolar, false);
      case TheoremId::CORNER_PSEUDOPOLAR_ANY_E:
        return check_corner(ctx, e, a, CornerProperty::pseudopolar, false);
      default: break;
    }
  } else {
    const Index a = Index(idx);
    switch (id) {
      case TheoremId::DECOMP_EQUIV_1_1:
        return check_decomposition_equivalence(ctx, a, PolarVariant::pi_regular);
      case TheoremId::DECOMP_EQUIV_1_2:
        return check_decomposition_equivalence(ctx, a, PolarVariant::quasipolar);
      case TheoremId::DECOMP_EQUIV_1_3:
        return check_decomposition_equivalence(ctx, a, PolarVariant::pseudopolar);
      case TheoremId::LEMMA_S_SHARP: return check_s_sharp(ctx, a);
      case TheoremId::UNIQUENESS: return check_uniqueness(ctx, a);
      case TheoremId::RADICAL_CHAIN: return check_radical_chain(ctx, a);
      case TheoremId::VARIANT_COINCIDENCE: return check_coincidence(ctx, a);
      default: break;
    }
  }
  throw ConfigError("no checker for " + std::string(to_string(id)));
}

// Run loop -------------------------------------------------------------------

// Uniform draw in [0, bound) from the raw generator output, so that samples
// do not depend on the standard library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = gen();
  } while (x >= limit);
  return x % bound;
}

void record(VerificationReport& report, std::map<std::string, std::size_t>& note_slot,
            std::uint64_t idx, Outcome&& outcome) {
  if (outcome.applicable) {
    ++report.cases_checked;
  } else {
    ++report.cases_not_applicable;
  }
  if (!outcome.failures.empty()) {
    std::string witness;
    for (const auto& f : outcome.failures) {
      if (!witness.empty()) witness += "; ";
      witness += f;
    }
    report.failures.push_back({idx, std::move(witness)});
  }
  for (auto& note : outcome.notes) {
    auto [it, inserted] = note_slot.try_emplace(note, report.observations.size());
    if (inserted) report.observations.push_back({note, 0});
    ++report.observations[it->second].count;
  }
}

Outcome guarded_check(TheoremId id, Context& ctx, std::uint64_t idx) {
  try {
    return check_case(id, ctx, idx);
  } catch (const TheoremViolation& ex) {
    Outcome out;
    out.failures.emplace_back(ex.what());
    return out;
  } catch (const std::invalid_argument& ex) {
    Outcome out;
    out.failures.emplace_back(std::string("invalid certificate: ") + ex.what());
    return out;
  }
}

void check_cap(TheoremId id, const FiniteRing& r, const VerifyOptions& options) {
  const std::size_t cap = is_corner_theorem(id) ? options.corner_cap : options.pair_cap;
  if (r.order() > cap && !options.force) {
    throw ConfigError(std::string(to_string(id)) + " on " + r.spec() + ": order " +
                      std::to_string(r.order()) + " exceeds cap " + std::to_string(cap) +
                      " (use --force)");
  }
}

VerificationReport execute(TheoremId id, Context& ctx, const RunMode& mode,
                           std::optional<std::uint64_t> limit, bool stop_on_failure) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.theorem_id = std::string(to_string(id));
  report.ring = ctx.ring().spec();
  report.mode = mode;
  report.cases_total = domain_size(id, ctx);

  std::map<std::string, std::size_t> note_slot;
  auto run_case = [&](std::uint64_t idx) {
    record(report, note_slot, idx, guarded_check(id, ctx, idx));
    return !(stop_on_failure && !report.failures.empty());
  };

  if (mode.sample) {
    std::mt19937_64 gen(mode.sample->seed);
    if (report.cases_total > 0) {
      for (std::uint64_t i = 0; i < mode.sample->count; ++i) {
        if (limit && i >= *limit) break;
        if (!run_case(uniform_below(gen, report.cases_total))) break;
      }
    }
  } else {
    std::uint64_t end = report.cases_total;
    if (limit) end = std::min(end, *limit);
    for (std::uint64_t idx = 0; idx < end; ++idx)
      if (!run_case(idx)) break;
  }
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace

std::string_view to_string(TheoremId id) {
  for (const auto& [tid, name] : kNames)
    if (tid == id) return name;
  return "?";
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
  for (const auto& [tid, tname] : kNames)
    if (tname == name) return tid;
  return std::nullopt;
}

const std::vector<TheoremId>& standard_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> out;
    for (const auto& entry : kNames) {
      if (entry.id == TheoremId::VARIANT_COINCIDENCE) break;
      out.push_back(entry.id);
    }
    return out;
  }();
  return ids;
}

bool is_corner_theorem(TheoremId id) { return domain_of(id) == Domain::corners; }

VerificationReport run_theorem(TheoremId id, const RingPtr& ring, const RunMode& mode,
                               const VerifyOptions& options) {
  check_cap(id, *ring, options);
  Context ctx(ring);
  return execute(id, ctx, mode, std::nullopt, false);
}

VerificationReport run_theorem(TheoremId id, const std::string& ring_spec, const RunMode& mode,
                               const VerifyOptions& options) {
  return run_theorem(id, parse_ring_spec(ring_spec, options.build), mode, options);
}

SearchResult search_counterexample(TheoremId id, const std::vector<std::string>& rings,
                                   std::uint64_t budget, const VerifyOptions& options) {
  SearchResult result;
  for (const auto& spec : rings) {
    if (result.cases_used >= budget) break;
    const RingPtr ring = parse_ring_spec(spec, options.build);
    check_cap(id, *ring, options);
    Context ctx(ring);
    VerificationReport report = execute(id, ctx, {}, budget - result.cases_used, true);
    result.cases_used += report.cases_checked + report.cases_not_applicable;
    const bool failed = !report.failures.empty();
    if (failed) {
      result.found = true;
      result.failure = report.failures.front();
      result.failing_ring = report.ring;
    }
    result.reports.push_back(std::move(report));
    if (failed) break;
  }
  return result;
}

VerificationReport consistency_suite(const std::string& ring_spec, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const RingPtr ring = parse_ring_spec(ring_spec, options.build);
  Context ctx(ring);
  VerificationReport merged;
  merged.theorem_id = "CONSISTENCY";
  merged.ring = ring->spec();
  for (TheoremId id : {TheoremId::RADICAL_CHAIN, TheoremId::UNIQUENESS, TheoremId::DECOMP_EQUIV_1_1,
                       TheoremId::DECOMP_EQUIV_1_2, TheoremId::DECOMP_EQUIV_1_3,
                       TheoremId::LEMMA_S_SHARP, TheoremId::VARIANT_COINCIDENCE}) {
    check_cap(id, *ring, options);
    VerificationReport part = execute(id, ctx, {}, std::nullopt, false);
    merged.cases_total += part.cases_total;
    merged.cases_checked += part.cases_checked;
    merged.cases_not_applicable += part.cases_not_applicable;
    for (auto& f : part.failures) {
      merged.failures.push_back({f.case_index, part.theorem_id + ": " + f.witness});
    }
    for (auto& o : part.observations) {
      merged.observations.push_back({part.theorem_id + ": " + o.note, o.count});
    }
  }
  merged.wall_time = std::chrono::steady_clock::now() - start;
  return merged;
}

nlohmann::json to_json(const VerificationReport& report, bool include_timing) {
  nlohmann::json j;
  j["theorem_id"] = report.theorem_id;
  j["ring"] = report.ring;
  if (report.mode.sample) {
    j["mode"] = "sample";
    j["sample_size"] = report.mode.sample->count;
    j["seed"] = report.mode.sample->seed;
  } else {
    j["mode"] = "exhaustive";
  }
  j["cases_total"] = report.cases_total;
  j["cases_checked"] = report.cases_checked;
  j["cases_not_applicable"] = report.cases_not_applicable;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : report.failures) {
    j["failures"].push_back({{"case", f.case_index}, {"witness", f.witness}});
  }
  j["observations"] = nlohmann::json::array();
  for (const auto& o : report.observations) {
    j["observations"].push_back({{"note", o.note}, {"count", o.count}});
  }
  j["pass"] = report.pass();
  if (include_timing) j["wall_time_seconds"] = report.wall_time.count();
  return j;
}

}  // namespace finring
