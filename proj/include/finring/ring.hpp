#pragma once

/**
 * @file ring.hpp
 * @brief Finite unital rings given by Cayley tables.
 *
 * Every ring is stored as a pair of full order x order tables over dense
 * element indices. Zero is index 0 for every ring this library builds.
 * Rings are immutable once constructed and shared through RingPtr, so the
 * corner / matrix / product constructions can keep their sources alive.
 */

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace finring {

using Index = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 4096;

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

// Errors ---------------------------------------------------------------------

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapExceeded : public RingError {
 public:
  using RingError::RingError;
};

class RingMismatch : public RingError {
 public:
  using RingError::RingError;
};

class NotIdempotent : public RingError {
 public:
  using RingError::RingError;
};

class InvalidRing : public RingError {
 public:
  using RingError::RingError;
};

class ParseError : public RingError {
 public:
  enum class Kind { unparseable, out_of_range };
  ParseError(Kind kind, const std::string& what) : RingError(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// Ring -----------------------------------------------------------------------

enum class RingKind { zmod, matrix, upper_triangular, product, corner, table };

class Element;

class FiniteRing {
 public:
  /// Raw constructor used by the builders. Does not validate the axioms;
  /// callers that accept foreign tables must run validate_ring.
  FiniteRing(RingKind kind, Index order, std::vector<Index> add_table, std::vector<Index> mul_table,
             Index zero, Index one, std::vector<std::string> labels, std::string spec);

  RingKind kind() const noexcept { return kind_; }
  Index order() const noexcept { return order_; }
  Index zero() const noexcept { return zero_; }
  Index one() const noexcept { return one_; }
  const std::string& spec() const noexcept { return spec_; }
  const std::string& label(Index x) const { return labels_.at(x); }

  Index add(Index x, Index y) const noexcept { return add_[std::size_t(x) * order_ + y]; }
  Index mul(Index x, Index y) const noexcept { return mul_[std::size_t(x) * order_ + y]; }
  Index neg(Index x) const noexcept { return neg_[x]; }
  Index sub(Index x, Index y) const noexcept { return add(x, neg(y)); }
  Index pow(Index x, std::uint64_t n) const noexcept;

  std::span<const Index> add_table() const noexcept { return add_; }
  std::span<const Index> mul_table() const noexcept { return mul_; }

  Element element(Index x) const;
  bool contains(Index x) const noexcept { return x < order_; }

  // Construction details used by the element grammar.
  unsigned dimension() const noexcept { return dim_; }
  const RingPtr& base() const noexcept { return base_; }
  const RingPtr& second() const noexcept { return second_; }
  /// Corner rings: the parent ring and the sorted representatives in it.
  const RingPtr& parent() const noexcept { return base_; }
  std::span<const Index> injection() const noexcept { return injection_; }
  Index inject(Index x) const { return injection_.at(x); }
  /// Inverse of the injection; nullopt when y is not in the corner carrier.
  std::optional<Index> corner_index(Index y) const;

 private:
  friend RingPtr build_matrix_ring(const RingPtr&, unsigned, std::size_t);
  friend RingPtr build_upper_triangular(const RingPtr&, unsigned, std::size_t);
  friend RingPtr build_product(const RingPtr&, const RingPtr&, std::size_t);
  friend RingPtr build_corner(const RingPtr&, Index);

  RingKind kind_;
  Index order_;
  std::vector<Index> add_;
  std::vector<Index> mul_;
  std::vector<Index> neg_;
  Index zero_;
  Index one_;
  std::vector<std::string> labels_;
  std::string spec_;

  unsigned dim_ = 0;
  RingPtr base_;
  RingPtr second_;
  std::vector<Index> injection_;
};

/// An element bound to its ring. Arithmetic between elements of different
/// rings throws RingMismatch.
class Element {
 public:
  Element(const FiniteRing& ring, Index index);

  const FiniteRing& ring() const noexcept { return *ring_; }
  Index index() const noexcept { return index_; }
  std::string str() const { return ring_->label(index_); }

  Element pow(std::int64_t n) const;

  friend Element operator+(const Element& x, const Element& y);
  friend Element operator-(const Element& x, const Element& y);
  friend Element operator*(const Element& x, const Element& y);
  friend Element operator-(const Element& x);
  friend bool operator==(const Element& x, const Element& y) noexcept {
    return x.ring_ == y.ring_ && x.index_ == y.index_;
  }

 private:
  const FiniteRing* ring_;
  Index index_;
};

// Builders -------------------------------------------------------------------

RingPtr build_zmod(Index n, std::size_t order_cap = kDefaultOrderCap);
RingPtr build_matrix_ring(const RingPtr& base, unsigned k, std::size_t order_cap = kDefaultOrderCap);
RingPtr build_upper_triangular(const RingPtr& base, unsigned k,
                               std::size_t order_cap = kDefaultOrderCap);
RingPtr build_product(const RingPtr& r1, const RingPtr& r2, std::size_t order_cap = kDefaultOrderCap);
/// The corner ring eRe. Validated after construction.
RingPtr build_corner(const RingPtr& r, Index e);

/// Ring from raw tables (zero is index 0). Validated unless `validate` is false.
RingPtr build_table_ring(Index order, std::vector<Index> add, std::vector<Index> mul, Index one,
                         std::string spec, bool validate = true);

// Validation -----------------------------------------------------------------

struct ValidationReport {
  bool valid = true;
  std::string failure;                       // which axiom failed
  std::vector<Index> witness;                // offending elements, if any
};

ValidationReport validate_ring(const FiniteRing& r);

// Elements -------------------------------------------------------------------

Index parse_element(const FiniteRing& r, std::string_view text);
std::string format_element(const FiniteRing& r, Index x);

}  // namespace finring
