#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "tlsig/alexander.hpp"
#include "tlsig/circleroots.hpp"
#include "tlsig/hermitian.hpp"

namespace tlsig {

struct ArcValue {
  CircleArc arc;
  InertiaTriple inertia;

  int signature() const { return inertia.signature(); }
  int nullity() const { return inertia.nullity(); }
};

/// Tristram-Levine signature on every root-free arc of the upper half circle.
struct SignatureProfile {
  AlexanderPolynomial alexander;
  CircleRootSet roots;
  /// Ordered from z = 1 toward z = -1.
  std::vector<ArcValue> arcs;
  /// Present when Delta(-1) != 0.
  std::optional<InertiaTriple> value_at_minus1;
  /// Value on the arc adjacent to z = 1.
  int sigma_one = 0;
};

/// Eigenvalue-one Hodge number aggregates.
struct HodgeAggregates {
  /// sum over k, u of k * p^k_1(u): the (t-1)-multiplicity of Delta.
  int weighted_sum = 0;
  /// sum over k, u of p^k_1(u): nullity(S - S^T).
  int count_sum = 0;
  int p11_plus = 0;
  int p11_minus = 0;
  /// p11_plus / p11_minus are meaningful only when resolved.
  bool resolved = false;
};

enum class Verdict { confirmed, hypothesis_violated, counterexample };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::confirmed:
      return "confirmed";
    case Verdict::hypothesis_violated:
      return "hypothesis_violated";
    case Verdict::counterexample:
      return "counterexample";
  }
  return "?";
}

struct Hypothesis {
  bool delta_nonzero = false;
  int t1_multiplicity = 0;
  int components = 1;
  /// nullity(S - S^T) = r - 1, as for any Seifert matrix of an r-component link.
  bool consistent = true;
  /// Delta nonzero, (t-1)^r does not divide Delta, and the matrix is consistent.
  bool holds = false;
};

/// The chain of equal quantities behind the limit-signature theorem.
struct TheoremReport {
  std::optional<int> linking_signature;        // (a)
  std::optional<int> small_linking_signature;  // (b)
  int restricted_signature = 0;                // (c) = (d) on the given matrix
  std::optional<int> hodge_difference;         // (e) p11_plus - p11_minus
  std::optional<int> sigma_one;                // (f)
  Hypothesis hypothesis;
  Verdict verdict = Verdict::hypothesis_violated;
  std::vector<std::string> warnings;
};

inline SignatureProfile signature_profile(const SeifertMatrix& s) {
  SignatureProfile prof;
  prof.alexander = alexander_poly(s);
  if (prof.alexander.is_zero)
    throw ZeroAlexanderError("Alexander polynomial vanishes; signature limit not certified");
  prof.roots = unit_circle_roots(prof.alexander.poly);
  for (auto& arc : arcs(prof.roots)) {
    InertiaTriple in = signature(levine_tristram_matrix(s, arc.sample_z));
    prof.arcs.push_back({std::move(arc), in});
  }
  if (prof.roots.root_at_minus1 == 0)
    prof.value_at_minus1 = signature(levine_tristram_matrix(s, GaussianRational(-1)));
  prof.sigma_one = prof.arcs.front().signature();
  return prof;
}

inline int sigma_one(const SeifertMatrix& s) { return signature_profile(s).sigma_one; }

inline HodgeAggregates hodge_aggregates(const SeifertMatrix& s, int r) {
  AlexanderPolynomial a = alexander_poly(s);
  if (a.is_zero) throw ZeroAlexanderError("Hodge aggregates need a nonzero Alexander polynomial");
  HodgeAggregates h;
  h.weighted_sum = a.t1_multiplicity;
  h.count_sum = static_cast<int>(nullity(antisymmetric_part(s)));
  // All p^k_1 with k > 1 vanish exactly when the two sums agree.
  if (!hypothesis_holds(a, r) || h.weighted_sum != h.count_sum) return h;
  InertiaTriple rs = restricted_signature(s);
  if (rs.zero != 0) return h;
  h.p11_plus = rs.positive;
  h.p11_minus = rs.negative;
  h.resolved = true;
  return h;
}

inline HodgeAggregates hodge_aggregates(const SeifertMatrix& s) {
  return hodge_aggregates(s, s.components());
}

inline TheoremReport check_theorem(const SeifertMatrix& s, int r,
                                   const std::optional<LinkingNumbers>& lk) {
  TheoremReport rep;
  if (auto w = SeifertMatrix(s.entries(), r).consistency_warning()) {
    rep.warnings.push_back(*w);
    rep.hypothesis.consistent = false;
  }

  AlexanderPolynomial a = alexander_poly(s);
  rep.hypothesis.delta_nonzero = !a.is_zero;
  rep.hypothesis.t1_multiplicity = a.t1_multiplicity;
  rep.hypothesis.components = r;
  rep.hypothesis.holds = rep.hypothesis.consistent && hypothesis_holds(a, r);

  if (lk) {
    LinkingMatrix am = linking_matrix(*lk, r);
    rep.linking_signature = signature(am.entries).signature();
    rep.small_linking_signature = signature(small_linking_matrix(am).entries).signature();
  }
  rep.restricted_signature = restricted_signature(s).signature();
  if (!a.is_zero) {
    HodgeAggregates h = hodge_aggregates(s, r);
    if (h.resolved) rep.hodge_difference = h.p11_plus - h.p11_minus;
    rep.sigma_one = sigma_one(s);
  } else {
    rep.warnings.push_back("Alexander polynomial is zero; sigma^1 not certified");
  }

  if (!rep.hypothesis.holds) {
    rep.verdict = Verdict::hypothesis_violated;
    return rep;
  }
  std::vector<int> values{rep.restricted_signature};
  for (const auto& v : {rep.linking_signature, rep.small_linking_signature, rep.hodge_difference,
                        rep.sigma_one})
    if (v) values.push_back(*v);
  bool equal = true;
  for (int v : values) equal = equal && v == values.front();
  // Under the hypothesis the Hodge difference must exist; its absence means
  // the eigenvalue-one part was not a sum of one-dimensional blocks.
  if (!rep.hodge_difference) equal = false;
  rep.verdict = equal ? Verdict::confirmed : Verdict::counterexample;
  return rep;
}

inline TheoremReport check_theorem(const SeifertMatrix& s,
                                   const std::optional<LinkingNumbers>& lk = std::nullopt) {
  return check_theorem(s, s.components(), lk);
}

/// |sigma^1| <= r - 1.
inline bool gl_bound_check(const SeifertMatrix& s, int r) {
  return std::abs(sigma_one(s)) <= r - 1;
}

inline bool gl_bound_check(const SeifertMatrix& s) { return gl_bound_check(s, s.components()); }

}  // namespace tlsig
