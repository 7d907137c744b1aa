#include "finring/transfer.hpp"

namespace finring {

namespace {

[[noreturn]] void violation(const FiniteRing& r, const std::string& what) {
  throw TheoremViolation(what + " in " + r.spec());
}

}  // namespace

std::optional<Index> jacobson_inverse(const Structure& s, Index a, Index b) {
  const FiniteRing& r = s.ring();
  const auto inv = s.inverse(r.add(r.one(), r.mul(a, b)));
  if (!inv) return std::nullopt;
  const Index candidate = r.sub(r.one(), r.mul(r.mul(b, *inv), a));
  const Index target = r.add(r.one(), r.mul(b, a));
  if (r.mul(candidate, target) != r.one() || r.mul(target, candidate) != r.one()) {
    violation(r, "1 - b(1+ab)^-1 a is not the inverse of 1 + ba for a=" + r.label(a) +
                     ", b=" + r.label(b));
  }
  return candidate;
}

std::optional<DrazinResult> cline(const InverseOracle& oracle, Index a, Index b, Variant v) {
  const FiniteRing& r = oracle.ring();
  const auto ab_inverse = oracle.drazin(r.mul(a, b), v);
  if (!ab_inverse) return std::nullopt;
  const Index x = ab_inverse->inverse;
  const Index candidate = r.mul(r.mul(b, r.mul(x, x)), a);
  const Index ba = r.mul(b, a);
  const std::string where = " for a=" + r.label(a) + ", b=" + r.label(b) + " (" +
                            std::string(to_string(v)) + ")";
  if (!oracle.satisfies_definition(ba, candidate, v)) {
    violation(r, "b((ab)^inv)^2 a = " + r.label(candidate) + " fails the definition" + where);
  }
  const auto ba_inverse = oracle.drazin(ba, v);
  if (!ba_inverse || ba_inverse->inverse != candidate) {
    violation(r, "b((ab)^inv)^2 a differs from the scanned inverse of ba" + where);
  }
  return oracle.make_result(ba, candidate, v);
}

CleanTransfer strongly_clean_transfer(const InverseOracle& oracle, Index a, Index b,
                                      const CleanDecomposition& d) {
  const FiniteRing& r = oracle.ring();
  const Structure& st = oracle.structure();
  const Index ab = r.mul(a, b);
  if (!oracle.is_clean_decomposition(ab, d)) {
    throw std::invalid_argument("(" + r.label(d.idempotent) + ", " + r.label(d.unit) +
                                ") is not a strongly clean decomposition of ab = " + r.label(ab));
  }
  const Index u_inv = *st.inverse(d.unit);
  const Index f = r.mul(r.mul(r.mul(b, u_inv), r.sub(r.one(), d.idempotent)), a);
  const Index g = r.sub(r.one(), f);
  const Index ba = r.mul(b, a);
  const Index v = r.sub(ba, g);
  const std::string where = " for a=" + r.label(a) + ", b=" + r.label(b) + ", e=" +
                            r.label(d.idempotent);
  if (r.mul(g, g) != g) violation(r, "g = 1 - f is not idempotent" + where);
  if (r.mul(g, ba) != r.mul(ba, g)) violation(r, "g does not commute with ba" + where);
  if (!st.is_unit(v)) violation(r, "v = ba - g is not a unit" + where);
  if (r.add(g, v) != ba) violation(r, "ba != g + v" + where);
  CleanDecomposition out{g, v};
  if (!oracle.is_clean_decomposition(ba, out)) violation(r, "(g, v) rejected by oracle" + where);
  return {f, out};
}

CleanTransfer one_minus_clean_transfer(const InverseOracle& oracle, Index a, Index b,
                                       const CleanDecomposition& d) {
  const FiniteRing& r = oracle.ring();
  const Index alpha = r.sub(r.one(), r.mul(a, b));
  if (!oracle.is_clean_decomposition(alpha, d)) {
    throw std::invalid_argument("(" + r.label(d.idempotent) + ", " + r.label(d.unit) +
                                ") is not a strongly clean decomposition of 1 - ab = " +
                                r.label(alpha));
  }
  // 1 - ab = e + u  gives  ab = (1 - e) + (-u).
  const CleanDecomposition for_ab{r.sub(r.one(), d.idempotent), r.neg(d.unit)};
  CleanTransfer inner = strongly_clean_transfer(oracle, a, b, for_ab);
  const CleanDecomposition out{r.sub(r.one(), inner.result.idempotent), r.neg(inner.result.unit)};
  const Index beta = r.sub(r.one(), r.mul(b, a));
  if (!oracle.is_clean_decomposition(beta, out)) {
    violation(r, "transferred decomposition of 1 - ba is invalid for a=" + r.label(a) +
                     ", b=" + r.label(b));
  }
  return {inner.f, out};
}

TransferWitness PseudoTransfer::witness(Index a, Index b) const {
  return TransferWitness{
      "pseudo-one-minus",
      {{"a", a}, {"b", b}, {"alpha", alpha}, {"alpha_pD", alpha_inverse}},
      {{"e", e}, {"u", u}, {"f", f}, {"beta", beta}, {"beta_pD", beta_inverse}},
      index,
  };
}

std::optional<PseudoTransfer> pseudo_one_minus_transfer(const InverseOracle& oracle, Index a,
                                                        Index b) {
  const FiniteRing& r = oracle.ring();
  const Structure& st = oracle.structure();
  const Index one = r.one();
  const Index alpha = r.sub(one, r.mul(a, b));
  const auto alpha_pd = oracle.drazin(alpha, Variant::pseudo);
  if (!alpha_pd) return std::nullopt;

  PseudoTransfer t{};
  t.alpha = alpha;
  t.alpha_inverse = alpha_pd->inverse;
  t.index = alpha_pd->index;
  t.e = r.sub(one, r.mul(t.alpha_inverse, alpha));
  t.u = r.sub(one, r.mul(alpha, t.e));
  const std::string where = " for a=" + r.label(a) + ", b=" + r.label(b);
  const auto u_inv = st.inverse(t.u);
  if (!u_inv) violation(r, "u = 1 - alpha e is not a unit" + where);
  t.f = r.mul(r.mul(r.mul(b, t.e), *u_inv), a);
  t.beta = r.sub(one, r.mul(b, a));
  t.beta_inverse = r.add(r.sub(one, t.f), r.mul(r.mul(b, t.alpha_inverse), a));

  if (r.mul(t.f, t.f) != t.f) violation(r, "f = beu^-1 a is not idempotent" + where);
  if (!oracle.commutants().comm2(t.beta)[t.f]) violation(r, "f is not in comm^2(beta)" + where);
  if (!st.in_jacobson(r.mul(r.pow(t.beta, t.index), t.f))) {
    violation(r, "beta^k f is not in J(R)" + where);
  }
  if (!st.is_unit(r.add(t.beta, t.f))) violation(r, "beta + f is not a unit" + where);
  const auto beta_pd = oracle.drazin(t.beta, Variant::pseudo);
  if (!beta_pd) violation(r, "beta has no pseudo-Drazin inverse" + where);
  if (beta_pd->inverse != t.beta_inverse) {
    violation(r, "formula gives " + r.label(t.beta_inverse) + " but (1-ba)^pD = " +
                     r.label(beta_pd->inverse) + where);
  }
  if (beta_pd->spectral_idempotent != t.f) {
    violation(r, "spectral idempotent of beta differs from beu^-1 a" + where);
  }
  if (beta_pd->index != t.index) {
    violation(r, "index of beta (" + std::to_string(beta_pd->index) + ") differs from index of alpha (" +
                     std::to_string(t.index) + ")" + where);
  }
  return t;
}

std::string_view to_string(CornerProperty p) {
  switch (p) {
    case CornerProperty::strongly_clean: return "strongly_clean";
    case CornerProperty::strongly_pi_regular: return "strongly_pi_regular";
    case CornerProperty::quasipolar: return "quasipolar";
    case CornerProperty::pseudopolar: return "pseudopolar";
  }
  return "?";
}

bool holds(const InverseOracle& oracle, Index x, CornerProperty p) {
  switch (p) {
    case CornerProperty::strongly_clean: return oracle.is_strongly_clean(x);
    case CornerProperty::strongly_pi_regular: return oracle.is_strongly_pi_regular(x);
    case CornerProperty::quasipolar: return oracle.is_quasipolar(x);
    case CornerProperty::pseudopolar: return oracle.is_pseudopolar(x);
  }
  return false;
}

CornerReport corner_equivalence(const InverseOracle& parent, const InverseOracle& corner, Index e,
                                Index a, CornerProperty property, bool require_centrality) {
  const FiniteRing& r = parent.ring();
  if (r.mul(e, e) != e) throw NotIdempotent(r.label(e) + " is not idempotent in " + r.spec());
  const FiniteRing& c = corner.ring();
  if (c.kind() != RingKind::corner || c.parent().get() != &r || c.inject(c.one()) != e) {
    throw std::invalid_argument("corner oracle is not the corner of " + r.label(e) + " in " +
                                r.spec());
  }

  CornerReport rep;
  rep.property = property;
  rep.e = e;
  rep.a = a;
  const Index one_minus_e = r.sub(r.one(), e);
  const Index x1 = r.add(r.mul(a, e), one_minus_e);
  const Index x2 = r.add(r.mul(e, a), one_minus_e);
  const Index eae = *c.corner_index(r.mul(r.mul(e, a), e));
  rep.p1 = holds(parent, x1, property);
  rep.p2 = holds(parent, x2, property);
  rep.p3 = holds(corner, eae, property);
  rep.central = is_central(r, e);

  auto check = [&](bool premise, bool conclusion, const char* name) {
    rep.checked.emplace_back(name);
    if (premise && !conclusion) rep.failures.emplace_back(name);
  };
  check(rep.p1, rep.p2, "P1=>P2");
  check(rep.p2, rep.p1, "P2=>P1");
  check(rep.p1, rep.p3, "P1=>P3");
  const bool full_equivalence = property == CornerProperty::strongly_clean ||
                                property == CornerProperty::strongly_pi_regular;
  if (full_equivalence || rep.central || !require_centrality) {
    check(rep.p3, rep.p1, "P3=>P1");
  } else if (rep.p3 && !rep.p1) {
    rep.converse_not_claimed = true;
  }
  return rep;
}

}  // namespace finring
