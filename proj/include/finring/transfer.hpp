#pragma once

/**
 * @file transfer.hpp
 * @brief Constructive transfer formulas between ab and ba, 1-ab and 1-ba,
 *        and between an element and its corner eae.
 *
 * Each routine builds its certificate from the closed-form expression and
 * then checks the certificate against the definitions (and the brute-force
 * oracle in InverseOracle). A failed check raises TheoremViolation.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finring/inverses.hpp"

namespace finring {

struct NamedElement {
  std::string name;
  Index value;
};

/// Inputs and constructed outputs of one transfer, for reporting.
struct TransferWitness {
  std::string formula;
  std::vector<NamedElement> inputs;
  std::vector<NamedElement> outputs;
  std::optional<unsigned> index;
};

/// (1 + ba)^-1 = 1 - b (1 + ab)^-1 a, when 1 + ab is a unit.
std::optional<Index> jacobson_inverse(const Structure& s, Index a, Index b);

/// b ((ab)^inv)^2 a as the v-inverse of ba, checked against the oracle.
/// Absent iff ab has no v-inverse.
std::optional<DrazinResult> cline(const InverseOracle& oracle, Index a, Index b, Variant v);

struct CleanTransfer {
  Index f;  // b u^-1 (1-e) a
  CleanDecomposition result;
};

/// Turns a strongly clean decomposition ab = e + u into one of ba.
/// Throws std::invalid_argument when d is not a decomposition of ab.
CleanTransfer strongly_clean_transfer(const InverseOracle& oracle, Index a, Index b,
                                      const CleanDecomposition& d);

/// Same, for 1 - ab = e + u to 1 - ba, via x -> 1 - x.
CleanTransfer one_minus_clean_transfer(const InverseOracle& oracle, Index a, Index b,
                                       const CleanDecomposition& d);

struct PseudoTransfer {
  Index alpha;          // 1 - ab
  Index alpha_inverse;  // alpha^pD
  Index e;              // 1 - alpha^pD alpha
  Index u;              // 1 - alpha e
  Index f;              // b e u^-1 a, spectral idempotent of beta
  Index beta;           // 1 - ba
  Index beta_inverse;   // (1 - f) + b alpha^pD a
  unsigned index;       // shared index k

  TransferWitness witness(Index a, Index b) const;
};

/// Pseudo-Drazin inverse of 1 - ba from that of 1 - ab. Absent iff 1 - ab
/// is not pseudo-Drazin invertible.
std::optional<PseudoTransfer> pseudo_one_minus_transfer(const InverseOracle& oracle, Index a,
                                                        Index b);

enum class CornerProperty { strongly_clean, strongly_pi_regular, quasipolar, pseudopolar };

std::string_view to_string(CornerProperty p);
bool holds(const InverseOracle& oracle, Index x, CornerProperty p);

struct CornerReport {
  CornerProperty property = CornerProperty::strongly_clean;
  Index e = 0;
  Index a = 0;
  bool p1 = false;  // property(ae + 1 - e) in R
  bool p2 = false;  // property(ea + 1 - e) in R
  bool p3 = false;  // property(eae) in eRe
  bool central = false;
  std::vector<std::string> checked;   // implications that were asserted
  std::vector<std::string> failures;  // asserted implications that failed
  bool converse_not_claimed = false;  // P3 and not P1 with e not central

  bool ok() const noexcept { return failures.empty(); }
};

/// Compares the property for ae+1-e, ea+1-e (in R) and eae (in eRe).
/// `corner` must be the oracle of build_corner(parent ring, e).
/// With `require_centrality` cleared the quasipolar/pseudopolar converse is
/// asserted for every e; the standard statement keeps it set.
CornerReport corner_equivalence(const InverseOracle& parent, const InverseOracle& corner, Index e,
                                Index a, CornerProperty property, bool require_centrality = true);

}  // namespace finring
