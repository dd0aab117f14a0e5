#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dehnhom/surgery.hpp"

namespace dehnhom {

enum class AmbientGeometry { lens, spherical, non_hyperbolic_other, hyperbolic, unknown };
enum class KnotGeometry { hyperbolic, seifert_fibered_exterior, non_hyperbolic_other, unknown };

std::string_view to_string(AmbientGeometry a);
std::string_view to_string(KnotGeometry k);
AmbientGeometry parse_ambient(std::string_view text);
KnotGeometry parse_knot_geometry(std::string_view text);

// User-asserted facts about a knot K in a homology lens space M with
// H1(M) = Z/p. Nothing here is inferred; an unknown flag never satisfies a
// premise.
struct DecisionContext {
  std::int64_t p = 0;
  bool p_is_prime = false;
  AmbientGeometry ambient = AmbientGeometry::unknown;
  KnotGeometry knot_geometry = KnotGeometry::unknown;
  HomologyClass homology_class = HomologyClass::unknown;
  std::optional<bool> ambient_is_l_space;
  std::optional<std::int64_t> lens_q;  // present exactly when ambient == lens

  // Throws Error if p < 2, if p is asserted prime but is not, or if lens_q
  // is inconsistent with the ambient geometry.
  void validate() const;
};

struct Certificate {
  std::string rule_id;
  std::string citation;
  std::optional<std::int64_t> delta_divisor;
  std::optional<std::int64_t> delta_bound;
  std::string narrative;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

enum class Outcome { determined, inconclusive };
std::string_view to_string(Outcome o);

struct Verdict {
  Outcome outcome = Outcome::inconclusive;
  std::vector<Certificate> certificates;
};

// Evaluates every rule of the fixed table R1..R7 in order; each rule whose
// premises hold contributes one certificate. The knot is determined by its
// complement iff at least one rule fires.
Verdict decide_determined(const DecisionContext& ctx);

}  // namespace dehnhom
