#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dehnhom/int_matrix.hpp"

namespace dehnhom {

// Finitely generated abelian group Z^free_rank + Z/d1 + ... + Z/dk in
// invariant-factor form: every d_i >= 2 and d_i divides d_{i+1}.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  // Builds the normal form from a Smith diagonal. `diagonal` must be
  // non-negative with the divisibility chain; zeros count towards the free
  // rank and units are dropped.
  static AbelianGroup from_smith_diagonal(std::vector<Integer> diagonal,
                                          std::size_t generator_count);
  // Validates and stores an already-normalized invariant factor list.
  static AbelianGroup from_invariant_factors(std::vector<Integer> torsion,
                                             std::size_t free_rank = 0);
  static AbelianGroup cyclic(const Integer& order);

  [[nodiscard]] const std::vector<Integer>& torsion() const { return torsion_; }
  [[nodiscard]] std::size_t free_rank() const { return free_rank_; }
  [[nodiscard]] bool is_finite() const { return free_rank_ == 0; }
  // Product of the torsion factors; 0 when the group is infinite.
  [[nodiscard]] Integer order() const;
  [[nodiscard]] bool is_cyclic_of_order(const Integer& n) const;
  [[nodiscard]] bool is_cyclic_of_order(std::int64_t n) const;

  // "0", "Z", "Z/2 + Z/2", "Z^2 + Z/6".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<Integer> torsion_;
  std::size_t free_rank_ = 0;
};

}  // namespace dehnhom
