#pragma once

/**
 * @file verifier.hpp
 * @brief Exhaustive and sampled checking of the transfer theorems.
 *
 * A theorem is a quantifier domain (pairs, elements, or idempotent x element)
 * plus a per-case check. Cases whose hypothesis is unmet are counted as
 * "not applicable" and kept apart from checked cases.
 */

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "finring/ring.hpp"
#include "finring/ring_spec.hpp"

namespace finring {

/// Bad theorem name, cap exceeded without force, and similar setup errors.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TheoremId {
  JACOBSON_LEMMA,
  CLINE_D,
  CLINE_GD,
  CLINE_PD,
  STRONGLY_CLEAN_TRANSFER,
  ONE_MINUS_CLEAN,
  PSEUDO_ONE_MINUS,
  CORNER_CLEAN,
  CORNER_PI_REGULAR,
  CORNER_QUASIPOLAR,
  CORNER_PSEUDOPOLAR,
  DECOMP_EQUIV_1_1,
  DECOMP_EQUIV_1_2,
  DECOMP_EQUIV_1_3,
  LEMMA_S_SHARP,
  UNIQUENESS,
  RADICAL_CHAIN,
  // Not part of `all`:
  VARIANT_COINCIDENCE,            // drazin == pseudo == generalized on finite rings
  CORNER_QUASIPOLAR_ANY_E,        // converse asserted without centrality
  CORNER_PSEUDOPOLAR_ANY_E,
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);
/// The seventeen theorem checks run by `--theorem all`.
const std::vector<TheoremId>& standard_theorems();
bool is_corner_theorem(TheoremId id);

struct SampleMode {
  std::uint64_t count;
  std::uint64_t seed;
};

/// Exhaustive when `sample` is empty.
struct RunMode {
  std::optional<SampleMode> sample;
};

struct Failure {
  std::uint64_t case_index;
  std::string witness;
};

struct Observation {
  std::string note;
  std::uint64_t count;
};

struct VerificationReport {
  std::string theorem_id;
  std::string ring;
  RunMode mode;
  std::uint64_t cases_total = 0;
  std::uint64_t cases_checked = 0;
  std::uint64_t cases_not_applicable = 0;
  std::vector<Failure> failures;
  std::vector<Observation> observations;
  std::chrono::duration<double> wall_time{0};

  bool pass() const noexcept { return failures.empty(); }
};

struct VerifyOptions {
  std::size_t pair_cap = 256;   // pair- and element-quantified theorems
  std::size_t corner_cap = 64;  // idempotent x element theorems
  bool force = false;
  BuildOptions build;
};

VerificationReport run_theorem(TheoremId id, const RingPtr& ring, const RunMode& mode = {},
                               const VerifyOptions& options = {});
VerificationReport run_theorem(TheoremId id, const std::string& ring_spec,
                               const RunMode& mode = {}, const VerifyOptions& options = {});

struct SearchResult {
  bool found = false;
  std::uint64_t cases_used = 0;
  std::vector<VerificationReport> reports;  // one per ring visited
  std::optional<Failure> failure;
  std::string failing_ring;
};

/// Runs `id` exhaustively over `rings` in order, stopping at the first
/// failure or after `budget` cases.
SearchResult search_counterexample(TheoremId id, const std::vector<std::string>& rings,
                                   std::uint64_t budget, const VerifyOptions& options = {});

/// RADICAL_CHAIN, UNIQUENESS, DECOMP_EQUIV_*, LEMMA_S_SHARP and
/// VARIANT_COINCIDENCE merged into one report.
VerificationReport consistency_suite(const std::string& ring_spec,
                                     const VerifyOptions& options = {});

/// Report as JSON. Timing is left out unless asked for, so that repeated
/// runs produce identical documents.
nlohmann::json to_json(const VerificationReport& report, bool include_timing = false);

}  // namespace finring
