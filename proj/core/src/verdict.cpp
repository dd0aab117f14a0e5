#include "dehnhom/verdict.hpp"

#include <numeric>

#include "dehnhom/error.hpp"
#include "dehnhom/number_theory.hpp"

namespace dehnhom {

std::string_view to_string(AmbientGeometry a) {
  switch (a) {
    case AmbientGeometry::lens: return "lens";
    case AmbientGeometry::spherical: return "spherical";
    case AmbientGeometry::non_hyperbolic_other: return "non_hyperbolic_other";
    case AmbientGeometry::hyperbolic: return "hyperbolic";
    case AmbientGeometry::unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(KnotGeometry k) {
  switch (k) {
    case KnotGeometry::hyperbolic: return "hyperbolic";
    case KnotGeometry::seifert_fibered_exterior: return "seifert_fibered_exterior";
    case KnotGeometry::non_hyperbolic_other: return "non_hyperbolic_other";
    case KnotGeometry::unknown: return "unknown";
  }
  return "unknown";
}

AmbientGeometry parse_ambient(std::string_view text) {
  for (auto a : {AmbientGeometry::lens, AmbientGeometry::spherical,
                 AmbientGeometry::non_hyperbolic_other, AmbientGeometry::hyperbolic,
                 AmbientGeometry::unknown}) {
    if (to_string(a) == text) return a;
  }
  throw Error("unknown ambient geometry '" + std::string(text) + "'");
}

KnotGeometry parse_knot_geometry(std::string_view text) {
  for (auto k : {KnotGeometry::hyperbolic, KnotGeometry::seifert_fibered_exterior,
                 KnotGeometry::non_hyperbolic_other, KnotGeometry::unknown}) {
    if (to_string(k) == text) return k;
  }
  throw Error("unknown knot geometry '" + std::string(text) + "'");
}

std::string_view to_string(Outcome o) {
  return o == Outcome::determined ? "determined" : "inconclusive";
}

void DecisionContext::validate() const {
  if (p < 2) throw Error("p must be at least 2");
  if (p_is_prime && !is_prime(p)) {
    throw Error("inconsistent context: p = " + std::to_string(p) + " asserted prime");
  }
  if (lens_q.has_value() != (ambient == AmbientGeometry::lens)) {
    throw Error("inconsistent context: lens q is given exactly when the ambient is a lens space");
  }
  if (lens_q && std::gcd(p, *lens_q) != 1) {
    throw Error("inconsistent context: gcd(p, lens q) must be 1");
  }
}

namespace {

bool non_hyperbolic(AmbientGeometry a) {
  return a == AmbientGeometry::lens || a == AmbientGeometry::spherical ||
         a == AmbientGeometry::non_hyperbolic_other;
}

bool knot_class_nontrivial(HomologyClass c) {
  return c == HomologyClass::generator || c == HomologyClass::not_null_homologous;
}

std::int64_t largest_prime_factor(std::int64_t p) { return prime_factors(p).back(); }

}  // namespace

Verdict decide_determined(const DecisionContext& ctx) {
  ctx.validate();
  Verdict v;
  const auto p = ctx.p;
  const std::string ps = std::to_string(p);
  const bool hyperbolic_knot = ctx.knot_geometry == KnotGeometry::hyperbolic;
  const bool generator = ctx.homology_class == HomologyClass::generator;

  // R1: generator class in a lens space.
  if (ctx.ambient == AmbientGeometry::lens && generator) {
    const auto r = radical(p);
    v.certificates.push_back(
        {"R1",
         "Generator class in a lens space: every prime factor of p divides the slope distance; "
         "a non-Seifert exterior has distance at most 1 between cyclic fillings (Cyclic Surgery "
         "Theorem, Culler-Gordon-Luecke-Shalen); Seifert exteriors are covered by Rong.",
         r, 1,
         "radical(" + ps + ") = " + std::to_string(r) +
             " divides the distance, which is at most 1, so the distance is 0"});
  }

  // R2: every knot in L(4,q).
  if (ctx.ambient == AmbientGeometry::lens && p == 4) {
    v.certificates.push_back(
        {"R2",
         "Knots in L(4,q), q odd: an integral filling with H1 = Z/4 needs n odd while the "
         "determinant condition forces n even; non-integral fillings are excluded by the Cyclic "
         "Surgery Theorem, Seifert exteriors by Rong, null-homologous knots by Gainullin.",
         std::nullopt, std::nullopt,
         "parity obstruction: no integral filling of a non-null-homologous knot in L(4," +
             std::to_string(*ctx.lens_q) + ") returns H1 = Z/4"});
  }

  // R3: prime p > 8, hyperbolic knot, non-hyperbolic ambient.
  if (non_hyperbolic(ctx.ambient) && hyperbolic_knot && ctx.p_is_prime && p > 8 &&
      knot_class_nontrivial(ctx.homology_class)) {
    v.certificates.push_back(
        {"R3",
         "Prime p with p not dividing w: p divides the slope distance; exceptional fillings of a "
         "hyperbolic knot are at distance at most 8 (Lackenby-Meyerhoff).",
         p, 8, ps + " divides the distance, which is at most 8, so the distance is 0"});
  }

  // R4: spherical ambient (lens spaces included), generator, prime factor >= 7.
  const bool spherical = ctx.ambient == AmbientGeometry::spherical ||
                         ctx.ambient == AmbientGeometry::lens;
  if (spherical && hyperbolic_knot && generator && largest_prime_factor(p) >= 7) {
    const auto f = largest_prime_factor(p);
    v.certificates.push_back(
        {"R4",
         "Generator class: every prime factor of p divides the slope distance; a hyperbolic knot "
         "with a spherical filling has distance at most 5 (Boyer-Zhang).",
         f, 5,
         "prime factor " + std::to_string(f) + " of " + ps +
             " divides the distance, which is at most 5, so the distance is 0"});
  }

  // R5: non-hyperbolic ambient, generator, prime factor >= 11.
  if (non_hyperbolic(ctx.ambient) && hyperbolic_knot && generator &&
      largest_prime_factor(p) >= 11) {
    const auto f = largest_prime_factor(p);
    v.certificates.push_back(
        {"R5",
         "Generator class: every prime factor of p divides the slope distance; exceptional "
         "fillings of a hyperbolic knot are at distance at most 8 (Lackenby-Meyerhoff).",
         f, 8,
         "prime factor " + std::to_string(f) + " of " + ps +
             " divides the distance, which is at most 8, so the distance is 0"});
  }

  // R6: imported result for non-hyperbolic knots in lens spaces.
  if (ctx.ambient == AmbientGeometry::lens &&
      (ctx.knot_geometry == KnotGeometry::seifert_fibered_exterior ||
       ctx.knot_geometry == KnotGeometry::non_hyperbolic_other)) {
    v.certificates.push_back(
        {"R6",
         "Imported result (Rong; Matignon): non-hyperbolic knots in lens spaces whose exterior "
         "is not a solid torus are determined by their complements.",
         std::nullopt, std::nullopt, "imported, not derived by this library"});
  }

  // R7: imported result for null-homologous knots in L-spaces.
  if (ctx.homology_class == HomologyClass::null_homologous &&
      ctx.ambient_is_l_space.value_or(false)) {
    v.certificates.push_back(
        {"R7",
         "Imported result (Gainullin): null-homologous knots in L-spaces are determined by their "
         "complements.",
         std::nullopt, std::nullopt, "imported, not derived by this library"});
  }

  v.outcome = v.certificates.empty() ? Outcome::inconclusive : Outcome::determined;
  return v;
}

}  // namespace dehnhom
