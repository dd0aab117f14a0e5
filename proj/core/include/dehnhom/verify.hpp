#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace dehnhom {

struct IntRange {
  std::int64_t lo;
  std::int64_t hi;

  [[nodiscard]] bool empty() const { return lo > hi; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

enum class WExclusion {
  none,
  multiples_of_p,  // keep w with p not dividing w (not null-homologous)
  non_coprime,     // keep w with gcd(w, p) = 1 (generator class)
};

std::string_view to_string(WExclusion e);

// A finite sweep over (p, q, w, n, n'). Every coefficient pair is visited,
// primitive or not; reports count the primitive ones (genuine slopes) under
// the counters "primitive_slopes" and "primitive_zp_fillings". w = 0 and
// (n, n') = (0, 0) are always skipped.
struct ParameterBox {
  std::vector<std::int64_t> p_values;
  // Explicit q values; empty means every q in [1, p-1] coprime to p.
  std::vector<std::int64_t> q_values;
  IntRange w{1, 1};
  // When set, the upper end of the w range is w_hi_times_p * p.
  std::optional<std::int64_t> w_hi_times_p;
  WExclusion w_exclusion = WExclusion::multiples_of_p;
  IntRange n{0, 0};
  IntRange nprime{1, 1};

  [[nodiscard]] std::vector<std::int64_t> q_for(std::int64_t p) const;
  [[nodiscard]] IntRange w_for(std::int64_t p) const;
  [[nodiscard]] bool keeps_w(std::int64_t w, std::int64_t p) const;
  // Canonical JSON description, embedded in reports.
  [[nodiscard]] nlohmann::json describe() const;
};

// Parses one box from its JSON form:
//   "p":      [2, 3, 5] | {"range": [lo, hi]} | {"primes_up_to": P}
//   "q":      "coprime_residues" | [q, ...] | {"odd_range": [lo, hi]}
//   "w":      {"range": [lo, hi]} | {"lo": lo, "hi_times_p": k},
//             plus "exclude": "none" | "multiples_of_p" | "non_coprime"
//   "n":      [lo, hi]
//   "nprime": [lo, hi]
ParameterBox parse_box(const nlohmann::json& j);

// The named boxes used by the acceptance suite and as CLI defaults.
struct BoxConfig {
  ParameterBox meridian;
  ParameterBox theorem_i;
  ParameterBox theorem_ii;
  ParameterBox l4q;
  ParameterBox criteria;
  std::int64_t linalg_entry_bound = 10;
  std::size_t counterexample_cap = 100;
};

BoxConfig parse_box_config(const nlohmann::json& j);
BoxConfig load_box_config(const std::filesystem::path& path);

struct Counterexample {
  std::vector<std::int64_t> tuple;
  std::string reason;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
  friend auto operator<=>(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  std::string theorem;
  nlohmann::json box;
  std::vector<std::string> tuple_fields;
  std::uint64_t cases_examined = 0;
  std::uint64_t zp_fillings_found = 0;
  // At most the configured cap, sorted by tuple.
  std::vector<Counterexample> counterexamples;
  std::uint64_t counterexample_total = 0;
  // Further exact counts specific to one verifier.
  std::map<std::string, std::uint64_t> counters;
  std::int64_t elapsed_ms = 0;

  [[nodiscard]] bool passed() const { return counterexample_total == 0; }
};

struct VerifyOptions {
  unsigned parallelism = 1;
  std::size_t counterexample_cap = 100;
};

// Every Z/p filling with p prime and p not dividing w has p | n'.
VerificationReport verify_theorem_i(const ParameterBox& box, const VerifyOptions& opts = {});
// Every Z/p filling with gcd(w, p) = 1 has radical(p) | n'.
VerificationReport verify_theorem_ii(const ParameterBox& box, const VerifyOptions& opts = {});
// No integral filling in L(4,q) with 4 not dividing w has H1 = Z/4; where
// |det| = 4, w = 2 (mod 4) and n is even. Counter "det_order_cases".
VerificationReport verify_l4q(const ParameterBox& box, const VerifyOptions& opts = {});
// Smith cokernel equals the 2x2 closed form on every non-singular matrix with
// entries in [-entry_bound, entry_bound]. Counter "agreements".
VerificationReport verify_linalg_oracle(std::int64_t entry_bound, const VerifyOptions& opts = {});
// The meridian filling 1/0 gives back H1 = Z/p. n and n' are ignored.
VerificationReport verify_meridian_identity(const ParameterBox& box,
                                            const VerifyOptions& opts = {});
// Smith route and determinant-plus-onto-map route agree on "H1 = Z/p".
// Counter "agreements".
VerificationReport verify_criterion_equivalence(const ParameterBox& box,
                                                const VerifyOptions& opts = {});

}  // namespace dehnhom
