#pragma once

/**
 * @file inverses.hpp
 * @brief Generalized inverses and decompositions by exhaustive search.
 *
 * Every routine here works straight from the defining equations by scanning
 * the ring. Scans always run to completion so that a second solution (which
 * would contradict uniqueness) raises TheoremViolation instead of being
 * silently ignored.
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finring/ring.hpp"
#include "finring/structure.hpp"

namespace finring {

/// Raised when a computed object fails a property that a theorem guarantees.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Variant { group, drazin, pseudo, generalized };
enum class PolarVariant { pi_regular, quasipolar, pseudopolar };

std::string_view to_string(Variant v);
std::string_view to_string(PolarVariant v);
std::optional<Variant> parse_variant(std::string_view name);

/// pi_regular -> drazin, quasipolar -> generalized, pseudopolar -> pseudo.
Variant matching_variant(PolarVariant v);

struct DrazinResult {
  Variant variant;
  Index inverse;
  unsigned index;               // least k >= 0 with a^k = a^(k+1) b
  Index spectral_idempotent;    // 1 - ab

  friend bool operator==(const DrazinResult&, const DrazinResult&) = default;
};

struct CleanDecomposition {
  Index idempotent;
  Index unit;

  friend auto operator<=>(const CleanDecomposition&, const CleanDecomposition&) = default;
};

struct PolarDecomposition {
  Index regular_part;
  Index radical_part;
  PolarVariant variant;

  friend bool operator==(const PolarDecomposition&, const PolarDecomposition&) = default;
};

/// Which commuting requirement a Drazin scan imposes on b.
enum class Commuting { double_commutant, commutant };

struct Profile {
  bool unit = false;
  bool idempotent = false;
  bool nilpotent = false;
  bool in_jacobson = false;
  bool in_j_sharp = false;
  bool quasinilpotent = false;
  bool group_invertible = false;
  bool drazin_invertible = false;
  bool pseudo_drazin_invertible = false;
  bool generalized_drazin_invertible = false;
  bool strongly_clean = false;
  bool strongly_pi_regular = false;
  bool quasipolar = false;
  bool pseudopolar = false;

  /// (name, value) pairs in a fixed order, for printing.
  std::vector<std::pair<std::string_view, bool>> flags() const;
};

class InverseOracle {
 public:
  explicit InverseOracle(RingPtr ring);

  const FiniteRing& ring() const noexcept { return structure_.ring(); }
  const RingPtr& ring_ptr() const noexcept { return structure_.ring_ptr(); }
  const Structure& structure() const noexcept { return structure_; }
  const CommutantTable& commutants() const noexcept { return commutants_; }

  /// Nil(R), J#(R) or R^qnil for drazin / pseudo / generalized.
  bool in_radical(Index x, Variant v) const;

  /// True iff b satisfies the definition of the v-inverse of a.
  bool satisfies_definition(Index a, Index b, Variant v,
                            Commuting commuting = Commuting::double_commutant) const;

  std::vector<Index> group_inverse_solutions(Index a) const;
  std::vector<Index> drazin_solutions(Index a, Variant v,
                                      Commuting commuting = Commuting::double_commutant) const;

  std::optional<DrazinResult> group_inverse(Index a) const;
  std::optional<DrazinResult> drazin(Index a, Variant v) const;

  /// Wraps b as a DrazinResult for a (index and spectral idempotent).
  DrazinResult make_result(Index a, Index b, Variant v) const;
  unsigned drazin_index(Index a, Index b) const;

  std::vector<CleanDecomposition> strongly_clean_decompositions(Index a) const;
  bool is_clean_decomposition(Index a, const CleanDecomposition& d) const;

  std::optional<PolarDecomposition> polar_decomposition(Index a, PolarVariant v) const;
  /// Empty when d satisfies every decomposition invariant for a; otherwise
  /// names the first violated one.
  std::optional<std::string> polar_violation(Index a, const PolarDecomposition& d) const;
  /// Every decomposition a = s + q of the given variant, found by scanning s.
  std::vector<PolarDecomposition> polar_decompositions_by_search(Index a, PolarVariant v) const;

  /// The inverse s^# carried over to a. Throws std::invalid_argument when d is
  /// not a valid decomposition of a.
  DrazinResult decomposition_to_inverse(Index a, const PolarDecomposition& d) const;

  bool is_strongly_pi_regular(Index a) const;
  bool is_quasipolar(Index a) const;
  bool is_pseudopolar(Index a) const;
  bool is_strongly_clean(Index a) const;

  Profile classify(Index a) const;

 private:
  bool polar_by_definition(Index a, Variant radical) const;

  Structure structure_;
  CommutantTable commutants_;
};

}  // namespace finring
