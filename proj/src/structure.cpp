#include "finring/structure.hpp"

namespace finring {

std::vector<Index> members(const ElementSet& set) {
  std::vector<Index> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) out.push_back(Index(i));
  return out;
}

std::optional<unsigned> first_power_in(const FiniteRing& r, Index x, const ElementSet& target) {
  // The power sequence x, x^2, ... is eventually periodic; once a power
  // repeats no new element can appear.
  ElementSet seen(r.order());
  Index p = x;
  for (unsigned m = 1; m <= r.order(); ++m) {
    if (target[p]) return m;
    if (seen[p]) return std::nullopt;
    seen.set(p);
    p = r.mul(p, x);
  }
  return std::nullopt;
}

Structure::Structure(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("Structure: null ring");
  const FiniteRing& r = *ring_;
  const Index n = r.order();

  inverse_.assign(n, std::nullopt);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (r.mul(x, y) == r.one() && r.mul(y, x) == r.one()) {
        inverse_[x] = y;
        units_.push_back(x);
        break;
      }
    }
  }

  idempotent_set_.resize(n);
  for (Index x = 0; x < n; ++x) {
    if (r.mul(x, x) == x) {
      idempotent_set_.set(x);
      idempotents_.push_back(x);
    }
  }

  ElementSet zero_set(n);
  zero_set.set(r.zero());
  nilpotency_.resize(n);
  for (Index x = 0; x < n; ++x) nilpotency_[x] = first_power_in(r, x, zero_set);

  // x in J(R) iff 1 - yx is a unit for every y.
  jacobson_.resize(n);
  for (Index x = 0; x < n; ++x) {
    bool radical = true;
    for (Index y = 0; y < n && radical; ++y) radical = is_unit(r.sub(r.one(), r.mul(y, x)));
    if (radical) jacobson_.set(x);
  }

  j_sharp_.resize(n);
  for (Index x = 0; x < n; ++x) j_sharp_[x] = first_power_in(r, x, jacobson_);

  // a in R^qnil iff 1 + ax is a unit for every x commuting with a.
  qnil_.resize(n);
  for (Index a = 0; a < n; ++a) {
    bool quasi = true;
    for (Index x = 0; x < n && quasi; ++x) {
      if (r.mul(a, x) != r.mul(x, a)) continue;
      quasi = is_unit(r.add(r.one(), r.mul(a, x)));
    }
    if (quasi) qnil_.set(a);
  }
}

ElementSet commutant(const FiniteRing& r, Index a) {
  ElementSet out(r.order());
  for (Index x = 0; x < r.order(); ++x)
    if (r.mul(x, a) == r.mul(a, x)) out.set(x);
  return out;
}

ElementSet double_commutant(const FiniteRing& r, Index a) {
  const ElementSet first = commutant(r, a);
  const auto centralizers = members(first);
  ElementSet out(r.order());
  for (Index x = 0; x < r.order(); ++x) {
    bool commutes = true;
    for (Index y : centralizers) {
      if (r.mul(x, y) != r.mul(y, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.set(x);
  }
  return out;
}

ElementSet commutant(const FiniteRing& r, Index a, int depth) {
  if (depth == 1) return commutant(r, a);
  if (depth == 2) return double_commutant(r, a);
  throw std::invalid_argument("commutant depth must be 1 or 2");
}

bool is_central(const FiniteRing& r, Index a) { return commutant(r, a).all(); }

CommutantTable::CommutantTable(const FiniteRing& r) {
  const Index n = r.order();
  comm_.assign(n, ElementSet(n));
  for (Index x = 0; x < n; ++x) {
    for (Index y = x; y < n; ++y) {
      if (r.mul(x, y) == r.mul(y, x)) {
        comm_[x].set(y);
        comm_[y].set(x);
      }
    }
  }
  // comm^2(a) is the intersection of comm(y) over y in comm(a).
  comm2_.assign(n, ElementSet(n));
  for (Index a = 0; a < n; ++a) {
    ElementSet acc(n);
    acc.set();
    for (auto y = comm_[a].find_first(); y != ElementSet::npos; y = comm_[a].find_next(y)) {
      acc &= comm_[y];
    }
    comm2_[a] = std::move(acc);
  }
}

}  // namespace finring
