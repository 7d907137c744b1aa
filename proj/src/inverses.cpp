#include "finring/inverses.hpp"

namespace finring {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::group: return "group";
    case Variant::drazin: return "drazin";
    case Variant::pseudo: return "pseudo";
    case Variant::generalized: return "generalized";
  }
  return "?";
}

std::string_view to_string(PolarVariant v) {
  switch (v) {
    case PolarVariant::pi_regular: return "pi_regular";
    case PolarVariant::quasipolar: return "quasipolar";
    case PolarVariant::pseudopolar: return "pseudopolar";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
  for (auto v : {Variant::group, Variant::drazin, Variant::pseudo, Variant::generalized}) {
    if (to_string(v) == name) return v;
  }
  return std::nullopt;
}

Variant matching_variant(PolarVariant v) {
  switch (v) {
    case PolarVariant::pi_regular: return Variant::drazin;
    case PolarVariant::quasipolar: return Variant::generalized;
    case PolarVariant::pseudopolar: return Variant::pseudo;
  }
  return Variant::drazin;
}

std::vector<std::pair<std::string_view, bool>> Profile::flags() const {
  return {
      {"unit", unit},
      {"idempotent", idempotent},
      {"nilpotent", nilpotent},
      {"in_jacobson", in_jacobson},
      {"in_j_sharp", in_j_sharp},
      {"quasinilpotent", quasinilpotent},
      {"group_invertible", group_invertible},
      {"drazin_invertible", drazin_invertible},
      {"pseudo_drazin_invertible", pseudo_drazin_invertible},
      {"generalized_drazin_invertible", generalized_drazin_invertible},
      {"strongly_clean", strongly_clean},
      {"strongly_pi_regular", strongly_pi_regular},
      {"quasipolar", quasipolar},
      {"pseudopolar", pseudopolar},
  };
}

InverseOracle::InverseOracle(RingPtr ring)
    : structure_(std::move(ring)), commutants_(structure_.ring()) {}

bool InverseOracle::in_radical(Index x, Variant v) const {
  switch (v) {
    case Variant::drazin: return structure_.is_nilpotent(x);
    case Variant::pseudo: return structure_.in_j_sharp(x);
    case Variant::generalized: return structure_.is_quasinilpotent(x);
    case Variant::group: return x == ring().zero();
  }
  return false;
}

bool InverseOracle::satisfies_definition(Index a, Index b, Variant v, Commuting commuting) const {
  const FiniteRing& r = ring();
  if (r.mul(a, r.mul(b, b)) != b) return false;
  if (v == Variant::group) {
    return commutants_.commute(a, b) && r.mul(r.mul(a, a), b) == a;
  }
  const bool commutes = commuting == Commuting::double_commutant ? commutants_.comm2(a)[b]
                                                                 : commutants_.commute(a, b);
  if (!commutes) return false;
  return in_radical(r.sub(r.mul(r.mul(a, a), b), a), v);
}

std::vector<Index> InverseOracle::group_inverse_solutions(Index a) const {
  return drazin_solutions(a, Variant::group);
}

std::vector<Index> InverseOracle::drazin_solutions(Index a, Variant v, Commuting commuting) const {
  std::vector<Index> out;
  for (Index b = 0; b < ring().order(); ++b)
    if (satisfies_definition(a, b, v, commuting)) out.push_back(b);
  return out;
}

unsigned InverseOracle::drazin_index(Index a, Index b) const {
  const FiniteRing& r = ring();
  Index power = r.one();  // a^k
  for (unsigned k = 0; k <= r.order() + 1; ++k) {
    const Index next = r.mul(power, a);  // a^(k+1)
    if (power == r.mul(next, b)) return k;
    power = next;
  }
  throw TheoremViolation("no Drazin index for " + r.label(a) + " with inverse " + r.label(b));
}

DrazinResult InverseOracle::make_result(Index a, Index b, Variant v) const {
  const FiniteRing& r = ring();
  return DrazinResult{v, b, drazin_index(a, b), r.sub(r.one(), r.mul(a, b))};
}

std::optional<DrazinResult> InverseOracle::group_inverse(Index a) const {
  return drazin(a, Variant::group);
}

std::optional<DrazinResult> InverseOracle::drazin(Index a, Variant v) const {
  const auto solutions = drazin_solutions(a, v);
  if (solutions.empty()) return std::nullopt;
  if (solutions.size() > 1) {
    throw TheoremViolation(std::string(to_string(v)) + " inverse of " + ring().label(a) +
                           " is not unique in " + ring().spec());
  }
  return make_result(a, solutions.front(), v);
}

bool InverseOracle::is_clean_decomposition(Index a, const CleanDecomposition& d) const {
  const FiniteRing& r = ring();
  return structure_.is_idempotent(d.idempotent) && commutants_.commute(d.idempotent, a) &&
         structure_.is_unit(d.unit) && r.add(d.idempotent, d.unit) == a;
}

std::vector<CleanDecomposition> InverseOracle::strongly_clean_decompositions(Index a) const {
  std::vector<CleanDecomposition> out;
  for (Index e : structure_.idempotents()) {
    CleanDecomposition d{e, ring().sub(a, e)};
    if (is_clean_decomposition(a, d)) out.push_back(d);
  }
  return out;
}

bool InverseOracle::is_strongly_clean(Index a) const {
  return !strongly_clean_decompositions(a).empty();
}

std::optional<std::string> InverseOracle::polar_violation(Index a,
                                                          const PolarDecomposition& d) const {
  const FiniteRing& r = ring();
  const Index s = d.regular_part, q = d.radical_part;
  if (r.add(s, q) != a) return "a != s + q";
  if (r.mul(s, q) != r.zero() || r.mul(q, s) != r.zero()) return "sq or qs is nonzero";
  if (group_inverse_solutions(s).empty()) return "s is not strongly regular";
  if (!in_radical(q, matching_variant(d.variant))) return "radical part outside its radical set";
  if (d.variant != PolarVariant::pi_regular && !commutants_.comm2(a)[s]) {
    return "s is not in comm^2(a)";
  }
  return std::nullopt;
}

std::optional<PolarDecomposition> InverseOracle::polar_decomposition(Index a,
                                                                     PolarVariant v) const {
  const auto inverse = drazin(a, matching_variant(v));
  if (!inverse) return std::nullopt;
  const FiniteRing& r = ring();
  const Index s = r.mul(r.mul(a, a), inverse->inverse);
  PolarDecomposition d{s, r.sub(a, s), v};
  if (auto why = polar_violation(a, d)) {
    throw TheoremViolation("decomposition built from the " +
                           std::string(to_string(matching_variant(v))) + " inverse of " +
                           r.label(a) + " is invalid: " + *why);
  }
  return d;
}

std::vector<PolarDecomposition> InverseOracle::polar_decompositions_by_search(
    Index a, PolarVariant v) const {
  std::vector<PolarDecomposition> out;
  for (Index s = 0; s < ring().order(); ++s) {
    PolarDecomposition d{s, ring().sub(a, s), v};
    if (!polar_violation(a, d)) out.push_back(d);
  }
  return out;
}

DrazinResult InverseOracle::decomposition_to_inverse(Index a, const PolarDecomposition& d) const {
  if (auto why = polar_violation(a, d)) {
    throw std::invalid_argument("not a " + std::string(to_string(d.variant)) +
                                " decomposition of " + ring().label(a) + ": " + *why);
  }
  const auto sharp = group_inverse(d.regular_part);
  const Variant v = matching_variant(d.variant);
  DrazinResult result = make_result(a, sharp->inverse, v);
  const auto oracle = drazin(a, v);
  if (!oracle || oracle->inverse != result.inverse) {
    throw TheoremViolation("s# = " + ring().label(result.inverse) + " is not the " +
                           std::string(to_string(v)) + " inverse of " + ring().label(a));
  }
  return result;
}

bool InverseOracle::is_strongly_pi_regular(Index a) const {
  // a^n in a^(n+1) R and a^n in R a^(n+1), each by enumeration.
  const FiniteRing& r = ring();
  Index power = a;  // a^n
  for (unsigned n = 1; n <= r.order() + 1; ++n) {
    const Index next = r.mul(power, a);
    bool right = false, left = false;
    for (Index x = 0; x < r.order() && !(right && left); ++x) {
      right = right || r.mul(next, x) == power;
      left = left || r.mul(x, next) == power;
    }
    if (right && left) return true;
    power = next;
  }
  return false;
}

bool InverseOracle::polar_by_definition(Index a, Variant radical) const {
  // p^2 = p in comm^2(a), a + p a unit, ap in the radical set.
  const FiniteRing& r = ring();
  for (Index p : structure_.idempotents()) {
    if (!commutants_.comm2(a)[p]) continue;
    if (!structure_.is_unit(r.add(a, p))) continue;
    if (in_radical(r.mul(a, p), radical)) return true;
  }
  return false;
}

bool InverseOracle::is_quasipolar(Index a) const {
  return polar_by_definition(a, Variant::generalized);
}

bool InverseOracle::is_pseudopolar(Index a) const {
  return polar_by_definition(a, Variant::pseudo);
}

Profile InverseOracle::classify(Index a) const {
  Profile p;
  p.unit = structure_.is_unit(a);
  p.idempotent = structure_.is_idempotent(a);
  p.nilpotent = structure_.is_nilpotent(a);
  p.in_jacobson = structure_.in_jacobson(a);
  p.in_j_sharp = structure_.in_j_sharp(a);
  p.quasinilpotent = structure_.is_quasinilpotent(a);
  p.group_invertible = !group_inverse_solutions(a).empty();
  p.drazin_invertible = !drazin_solutions(a, Variant::drazin).empty();
  p.pseudo_drazin_invertible = !drazin_solutions(a, Variant::pseudo).empty();
  p.generalized_drazin_invertible = !drazin_solutions(a, Variant::generalized).empty();
  p.strongly_clean = is_strongly_clean(a);
  p.strongly_pi_regular = is_strongly_pi_regular(a);
  p.quasipolar = is_quasipolar(a);
  p.pseudopolar = is_pseudopolar(a);
  return p;
}

}  // namespace finring
