#include "finring/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "finring/inverses.hpp"
#include "finring/ring_spec.hpp"
#include "finring/structure.hpp"
#include "finring/transfer.hpp"
#include "finring/verifier.hpp"

namespace finring::cli {

namespace {

using nlohmann::json;

std::string set_text(const FiniteRing& r, const std::vector<Index>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += r.label(xs[i]);
  }
  return s + "}";
}

json labels_json(const FiniteRing& r, const std::vector<Index>& xs) {
  json arr = json::array();
  for (Index x : xs) arr.push_back(r.label(x));
  return arr;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Common {
  std::string ring;
  bool json = false;
};

BuildOptions build_options(const CliConfig& config) {
  BuildOptions b;
  b.order_cap = config.order_cap;
  return b;
}

// info -----------------------------------------------------------------------

int run_info(const Common& c, const CliConfig& config, std::ostream& out) {
  const RingPtr ring = parse_ring_spec(c.ring, build_options(config));
  const FiniteRing& r = *ring;
  const Structure st(ring);

  std::vector<Index> nil, jac, jsharp, qnil;
  for (Index x = 0; x < r.order(); ++x) {
    if (st.is_nilpotent(x)) nil.push_back(x);
    if (st.in_jacobson(x)) jac.push_back(x);
    if (st.in_j_sharp(x)) jsharp.push_back(x);
    if (st.is_quasinilpotent(x)) qnil.push_back(x);
  }

  if (c.json) {
    json j;
    j["ring"] = r.spec();
    j["order"] = r.order();
    j["zero"] = r.label(r.zero());
    j["one"] = r.label(r.one());
    j["units"] = json::array();
    for (Index u : st.units()) {
      j["units"].push_back({{"element", r.label(u)}, {"inverse", r.label(*st.inverse(u))}});
    }
    j["idempotents"] = labels_json(r, st.idempotents());
    j["nilpotents"] = json::array();
    for (Index x : nil) {
      j["nilpotents"].push_back({{"element", r.label(x)}, {"index", *st.nilpotency_index(x)}});
    }
    j["jacobson"] = labels_json(r, jac);
    j["j_sharp"] = json::array();
    for (Index x : jsharp) {
      j["j_sharp"].push_back({{"element", r.label(x)}, {"index", *st.j_sharp_index(x)}});
    }
    j["qnil"] = labels_json(r, qnil);
    out << j.dump(2) << '\n';
    return 0;
  }

  out << "ring: " << r.spec() << '\n';
  out << "order: " << r.order() << '\n';
  out << "units (" << st.units().size() << "): " << set_text(r, st.units()) << '\n';
  out << "unit inverses:";
  for (Index u : st.units()) out << ' ' << r.label(u) << "->" << r.label(*st.inverse(u));
  out << '\n';
  out << "idempotents (" << st.idempotents().size() << "): " << set_text(r, st.idempotents())
      << '\n';
  out << "nilpotents (" << nil.size() << "): " << set_text(r, nil) << '\n';
  out << "nilpotency index:";
  for (Index x : nil) out << ' ' << r.label(x) << "->" << *st.nilpotency_index(x);
  out << '\n';
  out << "J (" << jac.size() << "): " << set_text(r, jac) << '\n';
  out << "J# (" << jsharp.size() << "): " << set_text(r, jsharp) << '\n';
  out << "J# index:";
  for (Index x : jsharp) out << ' ' << r.label(x) << "->" << *st.j_sharp_index(x);
  out << '\n';
  out << "qnil (" << qnil.size() << "): " << set_text(r, qnil) << '\n';
  return 0;
}

// classify / inverse ---------------------------------------------------------

int run_classify(const Common& c, const std::string& element, const CliConfig& config,
                 std::ostream& out) {
  const RingPtr ring = parse_ring_spec(c.ring, build_options(config));
  const Index a = parse_element(*ring, element);
  const InverseOracle oracle(ring);
  const Profile p = oracle.classify(a);
  if (c.json) {
    json j;
    j["ring"] = ring->spec();
    j["element"] = ring->label(a);
    j["flags"] = json::object();
    for (const auto& [name, value] : p.flags()) j["flags"][std::string(name)] = value;
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "ring: " << ring->spec() << '\n';
  out << "element: " << ring->label(a) << '\n';
  for (const auto& [name, value] : p.flags()) out << name << ": " << yes_no(value) << '\n';
  return 0;
}

int run_inverse(const Common& c, const std::string& element, const std::string& variant_name,
                const CliConfig& config, std::ostream& out) {
  const auto variant = parse_variant(variant_name);
  if (!variant) throw ConfigError("unknown variant '" + variant_name + "'");
  const RingPtr ring = parse_ring_spec(c.ring, build_options(config));
  const FiniteRing& r = *ring;
  const Index a = parse_element(r, element);
  const InverseOracle oracle(ring);
  const auto result = oracle.drazin(a, *variant);
  if (c.json) {
    json j;
    j["ring"] = r.spec();
    j["element"] = r.label(a);
    j["variant"] = std::string(to_string(*variant));
    if (result) {
      j["inverse"] = r.label(result->inverse);
      j["index"] = result->index;
      j["spectral_idempotent"] = r.label(result->spectral_idempotent);
    } else {
      j["inverse"] = nullptr;
    }
    out << j.dump(2) << '\n';
    return 0;
  }
  if (!result) {
    out << "none\n";
    return 0;
  }
  out << "inverse: " << r.label(result->inverse) << '\n';
  out << "index: " << result->index << '\n';
  out << "spectral_idempotent: " << r.label(result->spectral_idempotent) << '\n';
  return 0;
}

// transfer -------------------------------------------------------------------

struct TransferArgs {
  std::string formula;
  std::string a;
  std::string b;
  std::string variant = "drazin";
  std::optional<std::string> e;
};

json witness_json(const FiniteRing& r, const std::optional<TransferWitness>& w,
                  const std::string& formula) {
  json j;
  j["formula"] = formula;
  j["ring"] = r.spec();
  j["applicable"] = w.has_value();
  if (!w) return j;
  j["inputs"] = json::object();
  for (const auto& [name, value] : w->inputs) j["inputs"][name] = r.label(value);
  j["outputs"] = json::object();
  for (const auto& [name, value] : w->outputs) j["outputs"][name] = r.label(value);
  if (w->index) j["index"] = *w->index;
  return j;
}

void witness_text(const FiniteRing& r, const std::optional<TransferWitness>& w,
                  const std::string& formula, const std::string& why_absent, std::ostream& out) {
  out << "formula: " << formula << '\n';
  if (!w) {
    out << "none (" << why_absent << ")\n";
    return;
  }
  out << "inputs:";
  for (const auto& [name, value] : w->inputs) out << ' ' << name << '=' << r.label(value);
  out << "\noutputs:";
  for (const auto& [name, value] : w->outputs) out << ' ' << name << '=' << r.label(value);
  out << '\n';
  if (w->index) out << "index: " << *w->index << '\n';
}

int run_transfer(const Common& c, const TransferArgs& t, const CliConfig& config,
                 std::ostream& out) {
  const RingPtr ring = parse_ring_spec(c.ring, build_options(config));
  const FiniteRing& r = *ring;
  const Index a = parse_element(r, t.a);
  const Index b = parse_element(r, t.b);
  const InverseOracle oracle(ring);

  std::optional<TransferWitness> w;
  std::string why_absent;
  std::size_t alternatives = 0;

  if (t.formula == "jacobson") {
    why_absent = "1+ab is not a unit";
    if (auto inv = jacobson_inverse(oracle.structure(), a, b)) {
      w = TransferWitness{"jacobson",
                          {{"a", a}, {"b", b}, {"1+ab", r.add(r.one(), r.mul(a, b))}},
                          {{"1+ba", r.add(r.one(), r.mul(b, a))}, {"(1+ba)^-1", *inv}},
                          std::nullopt};
    }
  } else if (t.formula == "cline") {
    const auto variant = parse_variant(t.variant);
    if (!variant || *variant == Variant::group) {
      throw ConfigError("cline needs --variant drazin|pseudo|generalized");
    }
    why_absent = "ab has no " + t.variant + " inverse";
    if (auto result = cline(oracle, a, b, *variant)) {
      const Index ab = r.mul(a, b);
      w = TransferWitness{"cline",
                          {{"a", a}, {"b", b}, {"ab", ab}, {"(ab)^inv", oracle.drazin(ab, *variant)->inverse}},
                          {{"ba", r.mul(b, a)}, {"(ba)^inv", result->inverse},
                           {"spectral_idempotent", result->spectral_idempotent}},
                          result->index};
    }
  } else if (t.formula == "clean" || t.formula == "one-minus-clean") {
    const bool one_minus = t.formula == "one-minus-clean";
    const Index ab = r.mul(a, b);
    const Index source = one_minus ? r.sub(r.one(), ab) : ab;
    auto decompositions = oracle.strongly_clean_decompositions(source);
    alternatives = decompositions.size();
    why_absent = std::string(one_minus ? "1-ab" : "ab") + " is not strongly clean";
    if (t.e) {
      const Index e = parse_element(r, *t.e);
      std::erase_if(decompositions, [&](const auto& d) { return d.idempotent != e; });
      why_absent = r.label(e) + " gives no strongly clean decomposition";
    }
    if (!decompositions.empty()) {
      const auto& d = decompositions.front();
      const CleanTransfer ct = one_minus ? one_minus_clean_transfer(oracle, a, b, d)
                                         : strongly_clean_transfer(oracle, a, b, d);
      w = TransferWitness{t.formula,
                          {{"a", a}, {"b", b}, {"e", d.idempotent}, {"u", d.unit}},
                          {{"f", ct.f}, {"g", ct.result.idempotent}, {"v", ct.result.unit}},
                          std::nullopt};
    }
  } else if (t.formula == "pseudo-one-minus") {
    why_absent = "1-ab is not pseudo-Drazin invertible";
    if (auto pt = pseudo_one_minus_transfer(oracle, a, b)) w = pt->witness(a, b);
  } else {
    throw ConfigError("unknown formula '" + t.formula + "'");
  }

  if (c.json) {
    out << witness_json(r, w, t.formula).dump(2) << '\n';
  } else {
    witness_text(r, w, t.formula, why_absent, out);
    if (alternatives > 1 && !t.e) {
      out << "decompositions available: " << alternatives << " (select one with --e)\n";
    }
  }
  return 0;
}

// verify / search / validate -------------------------------------------------

std::vector<std::string> resolve_rings(const std::vector<std::string>& given,
                                       const CliConfig& config) {
  std::vector<std::string> rings;
  for (const auto& spec : given) {
    if (spec == "registry") {
      const auto reg = config.registry_path ? read_registry_file(*config.registry_path)
                                            : default_registry();
      rings.insert(rings.end(), reg.begin(), reg.end());
    } else {
      rings.push_back(spec);
    }
  }
  return rings;
}

struct VerifyArgs {
  std::string theorem;
  std::vector<std::string> rings;
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 0;
  std::optional<std::string> json_path;
  bool force = false;
  bool timings = false;
};

std::vector<TheoremId> resolve_theorems(const std::string& name) {
  if (name == "all") return standard_theorems();
  auto id = parse_theorem(name);
  if (!id) throw ConfigError("unknown theorem '" + name + "'");
  return {*id};
}

VerifyOptions verify_options(const CliConfig& config, bool force) {
  VerifyOptions options;
  options.pair_cap = config.exhaustive_cap;
  options.force = force;
  options.build = build_options(config);
  return options;
}

void write_json(const json& doc, const std::string& path, std::ostream& out) {
  if (path == "-") {
    out << doc.dump(2) << '\n';
    return;
  }
  std::ofstream file(path);
  if (!file) throw ConfigError("cannot write " + path);
  file << doc.dump(2) << '\n';
}

int run_verify(const VerifyArgs& v, const CliConfig& config, std::ostream& out) {
  const auto theorems = resolve_theorems(v.theorem);
  const auto rings = resolve_rings(v.rings, config);
  const VerifyOptions options = verify_options(config, v.force);
  RunMode mode;
  if (v.sample) mode.sample = SampleMode{*v.sample, v.seed};

  // Parse every ring and check every cap before running anything.
  std::vector<RingPtr> built;
  for (const auto& spec : rings) built.push_back(parse_ring_spec(spec, options.build));

  std::vector<VerificationReport> reports;
  for (const auto& ring : built) {
    for (TheoremId id : theorems) {
      const std::size_t cap = is_corner_theorem(id) ? options.corner_cap : options.pair_cap;
      if (ring->order() > cap && !options.force) {
        throw ConfigError(std::string(to_string(id)) + " on " + ring->spec() + ": order " +
                          std::to_string(ring->order()) + " exceeds cap " + std::to_string(cap) +
                          " (use --force)");
      }
    }
  }
  bool pass = true;
  const bool json_to_stdout = v.json_path && *v.json_path == "-";
  for (const auto& ring : built) {
    for (TheoremId id : theorems) {
      VerificationReport report = run_theorem(id, ring, mode, options);
      pass = pass && report.pass();
      if (!json_to_stdout) {
        out << (report.pass() ? "PASS " : "FAIL ") << report.theorem_id << ' ' << report.ring
            << " total=" << report.cases_total << " checked=" << report.cases_checked
            << " not_applicable=" << report.cases_not_applicable
            << " failures=" << report.failures.size();
        if (v.timings) out << " time=" << report.wall_time.count() << "s";
        out << '\n';
        for (const auto& f : report.failures) out << "  case " << f.case_index << ": " << f.witness << '\n';
        for (const auto& o : report.observations) out << "  note: " << o.note << " (x" << o.count << ")\n";
      }
      reports.push_back(std::move(report));
    }
  }
  if (v.json_path) {
    json doc;
    doc["pass"] = pass;
    doc["reports"] = json::array();
    for (const auto& r : reports) doc["reports"].push_back(to_json(r, v.timings));
    write_json(doc, *v.json_path, out);
  }
  return pass ? 0 : 1;
}

int run_search(const std::string& theorem, const std::vector<std::string>& given,
               std::uint64_t budget, bool force, bool as_json, const CliConfig& config,
               std::ostream& out) {
  auto id = parse_theorem(theorem);
  if (!id) throw ConfigError("unknown theorem '" + theorem + "'");
  const auto rings = resolve_rings(given, config);
  const SearchResult result = search_counterexample(*id, rings, budget, verify_options(config, force));
  if (as_json) {
    json j;
    j["theorem_id"] = theorem;
    j["found"] = result.found;
    j["cases_used"] = result.cases_used;
    j["rings_visited"] = json::array();
    for (const auto& r : result.reports) j["rings_visited"].push_back(r.ring);
    if (result.failure) {
      j["failure"] = {{"ring", result.failing_ring},
                      {"case", result.failure->case_index},
                      {"witness", result.failure->witness}};
    }
    out << j.dump(2) << '\n';
  } else if (result.found) {
    out << "counterexample in " << result.failing_ring << " (case " << result.failure->case_index
        << "): " << result.failure->witness << '\n';
  } else {
    out << "exhausted after " << result.cases_used << " cases, no counterexample\n";
  }
  return result.found ? 1 : 0;
}

int run_validate(const Common& c, const CliConfig& config, std::ostream& out) {
  BuildOptions b = build_options(config);
  b.validate_tables = false;
  const RingPtr ring = parse_ring_spec(c.ring, b);
  const ValidationReport report = validate_ring(*ring);
  if (c.json) {
    json j;
    j["ring"] = ring->spec();
    j["valid"] = report.valid;
    if (!report.valid) {
      j["failure"] = report.failure;
      j["witness"] = labels_json(*ring, report.witness);
    }
    out << j.dump(2) << '\n';
  } else if (report.valid) {
    out << "valid: " << ring->spec() << " (order " << ring->order() << ")\n";
  } else {
    out << "invalid: " << report.failure << " witness " << set_text(*ring, report.witness) << '\n';
  }
  return report.valid ? 0 : 1;
}

}  // namespace

CliConfig default_config() {
  CliConfig config;
  if (const char* env = std::getenv("RING_ORDER_CAP")) {
    try {
      const long long cap = std::stoll(env);
      if (cap > 0) config.order_cap = std::size_t(cap);
    } catch (const std::exception&) {
      // ignored: malformed overrides fall back to the default
    }
  }
  return config;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig config = default_config();

  CLI::App app{"Finite ring generalized inverses and transfer theorem checks", "ring"};
  app.require_subcommand(1);
  app.add_option("--order-cap", config.order_cap, "Largest ring order to build")
      ->check(CLI::PositiveNumber);
  app.add_option("--exhaustive-cap", config.exhaustive_cap,
                 "Largest ring order for pair-quantified theorems")
      ->check(CLI::PositiveNumber);
  std::string registry_path;
  app.add_option("--registry-file", registry_path, "File listing ring specs, one per line");

  Common common;
  std::string element;
  std::string variant;
  TransferArgs transfer;
  VerifyArgs verify;
  std::string search_theorem;
  std::vector<std::string> search_rings;
  std::uint64_t budget = 1'000'000;
  bool search_force = false;

  auto* info = app.add_subcommand("info", "Structural subsets of a ring");
  info->add_option("--ring", common.ring, "Ring spec")->required();
  info->add_flag("--json", common.json);

  auto* classify = app.add_subcommand("classify", "Property profile of one element");
  classify->add_option("--ring", common.ring)->required();
  classify->add_option("--element", element)->required();
  classify->add_flag("--json", common.json);

  auto* inverse = app.add_subcommand("inverse", "Group / Drazin-type inverse of one element");
  inverse->add_option("--ring", common.ring)->required();
  inverse->add_option("--element", element)->required();
  inverse->add_option("--variant", variant)
      ->required()
      ->check(CLI::IsMember({"group", "drazin", "pseudo", "generalized"}));
  inverse->add_flag("--json", common.json);

  auto* transfer_cmd = app.add_subcommand("transfer", "Apply one transfer formula");
  transfer_cmd->add_option("--formula", transfer.formula)
      ->required()
      ->check(CLI::IsMember({"jacobson", "cline", "clean", "one-minus-clean", "pseudo-one-minus"}));
  transfer_cmd->add_option("--ring", common.ring)->required();
  transfer_cmd->add_option("--a", transfer.a)->required();
  transfer_cmd->add_option("--b", transfer.b)->required();
  transfer_cmd->add_option("--variant", transfer.variant)
      ->check(CLI::IsMember({"drazin", "pseudo", "generalized"}));
  transfer_cmd->add_option("--e", transfer.e, "Idempotent of the source decomposition");
  transfer_cmd->add_flag("--json", common.json);

  auto* verify_cmd = app.add_subcommand("verify", "Check theorems over rings");
  verify_cmd->add_option("--theorem", verify.theorem)->required();
  verify_cmd->add_option("--ring", verify.rings, "Ring spec or 'registry'")->required();
  auto* sample_opt = verify_cmd->add_option("--sample", verify.sample, "Number of sampled cases");
  verify_cmd->add_option("--seed", verify.seed)->needs(sample_opt);
  verify_cmd->add_option("--json", verify.json_path, "Write the JSON report here ('-' for stdout)");
  verify_cmd->add_flag("--force", verify.force, "Ignore the exhaustive caps");
  verify_cmd->add_flag("--timings", verify.timings, "Include wall times");

  auto* search = app.add_subcommand("search", "Look for a counterexample");
  search->add_option("--theorem", search_theorem)->required();
  search->add_option("--ring", search_rings, "Ring spec or 'registry', repeatable")->required();
  search->add_option("--budget", budget, "Maximum number of cases");
  search->add_flag("--force", search_force);
  search->add_flag("--json", common.json);

  auto* validate = app.add_subcommand("validate", "Check the ring axioms");
  validate->add_option("--ring", common.ring)->required();
  validate->add_flag("--json", common.json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n" << app.help();
    return 2;
  }
  if (!registry_path.empty()) config.registry_path = registry_path;
  config.output_mode = common.json ? OutputMode::json : OutputMode::text;

  try {
    if (info->parsed()) return run_info(common, config, out);
    if (classify->parsed()) return run_classify(common, element, config, out);
    if (inverse->parsed()) return run_inverse(common, element, variant, config, out);
    if (transfer_cmd->parsed()) return run_transfer(common, transfer, config, out);
    if (verify_cmd->parsed()) return run_verify(verify, config, out);
    if (search->parsed()) {
      return run_search(search_theorem, search_rings, budget, search_force, common.json, config, out);
    }
    if (validate->parsed()) return run_validate(common, config, out);
  } catch (const TheoremViolation& ex) {
    err << "theorem violation: " << ex.what() << '\n';
    return 1;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace finring::cli
