#pragma once

#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "finring/ring.hpp"

namespace finring {

using ElementSet = boost::dynamic_bitset<>;

/// Sorted element indices of a set.
std::vector<Index> members(const ElementSet& set);

/// Memoized structural subsets of one ring: U(R), idempotents, Nil(R), J(R),
/// J#(R) and R^qnil. Computed eagerly in the constructor, immutable after.
class Structure {
 public:
  explicit Structure(RingPtr ring);

  const FiniteRing& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }

  bool is_unit(Index x) const { return inverse_[x].has_value(); }
  /// Two-sided inverse, if x is a unit.
  std::optional<Index> inverse(Index x) const { return inverse_[x]; }
  const std::vector<Index>& units() const noexcept { return units_; }

  bool is_idempotent(Index x) const { return idempotent_set_[x]; }
  const std::vector<Index>& idempotents() const noexcept { return idempotents_; }

  /// Least m >= 1 with x^m = 0.
  std::optional<unsigned> nilpotency_index(Index x) const { return nilpotency_[x]; }
  bool is_nilpotent(Index x) const { return nilpotency_[x].has_value(); }

  bool in_jacobson(Index x) const { return jacobson_[x]; }
  const ElementSet& jacobson() const noexcept { return jacobson_; }

  /// Least m >= 1 with x^m in J(R).
  std::optional<unsigned> j_sharp_index(Index x) const { return j_sharp_[x]; }
  bool in_j_sharp(Index x) const { return j_sharp_[x].has_value(); }

  bool is_quasinilpotent(Index x) const { return qnil_[x]; }
  const ElementSet& qnil() const noexcept { return qnil_; }

 private:
  RingPtr ring_;
  std::vector<std::optional<Index>> inverse_;
  std::vector<Index> units_;
  ElementSet idempotent_set_;
  std::vector<Index> idempotents_;
  std::vector<std::optional<unsigned>> nilpotency_;
  ElementSet jacobson_;
  std::vector<std::optional<unsigned>> j_sharp_;
  ElementSet qnil_;
};

/// First m in [1, order] with x^m in `target`, scanning the power sequence
/// until it cycles.
std::optional<unsigned> first_power_in(const FiniteRing& r, Index x, const ElementSet& target);

/// comm(a) = {x : xa = ax}.
ElementSet commutant(const FiniteRing& r, Index a);
/// comm^2(a) = {x : xy = yx for all y in comm(a)}.
ElementSet double_commutant(const FiniteRing& r, Index a);
/// depth 1 or 2.
ElementSet commutant(const FiniteRing& r, Index a, int depth);

bool is_central(const FiniteRing& r, Index a);

/// comm(a) and comm^2(a) for every element at once. O(n^3 / 64).
class CommutantTable {
 public:
  explicit CommutantTable(const FiniteRing& r);

  const ElementSet& comm(Index a) const { return comm_[a]; }
  const ElementSet& comm2(Index a) const { return comm2_[a]; }
  bool commute(Index x, Index y) const { return comm_[x][y]; }

 private:
  std::vector<ElementSet> comm_;
  std::vector<ElementSet> comm2_;
};

}  // namespace finring
