#include "dehnhom/abelian_group.hpp"

#include "dehnhom/error.hpp"

namespace dehnhom {

AbelianGroup AbelianGroup::from_smith_diagonal(std::vector<Integer> diagonal,
                                               std::size_t generator_count) {
  if (diagonal.size() > generator_count) throw Error("more diagonal entries than generators");
  AbelianGroup g;
  std::size_t rank = 0;
  for (auto& d : diagonal) {
    if (sgn(d) < 0) throw Error("Smith diagonal entries must be non-negative");
    if (sgn(d) == 0) continue;
    ++rank;
    if (d != 1) g.torsion_.push_back(std::move(d));
  }
  g.free_rank_ = generator_count - rank;
  for (std::size_t i = 1; i < g.torsion_.size(); ++i) {
    if (!mpz_divisible_p(g.torsion_[i].get_mpz_t(), g.torsion_[i - 1].get_mpz_t())) {
      throw Error("Smith diagonal violates the divisibility chain");
    }
  }
  return g;
}

AbelianGroup AbelianGroup::from_invariant_factors(std::vector<Integer> torsion,
                                                  std::size_t free_rank) {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2) throw Error("invariant factors must be at least 2");
    if (i > 0 && !mpz_divisible_p(torsion[i].get_mpz_t(), torsion[i - 1].get_mpz_t())) {
      throw Error("invariant factors must form a divisibility chain");
    }
  }
  AbelianGroup g;
  g.torsion_ = std::move(torsion);
  g.free_rank_ = free_rank;
  return g;
}

AbelianGroup AbelianGroup::cyclic(const Integer& order) {
  if (sgn(order) <= 0) throw Error("cyclic group order must be positive");
  if (order == 1) return {};
  return from_invariant_factors({order});
}

Integer AbelianGroup::order() const {
  if (free_rank_ != 0) return 0;
  Integer n = 1;
  for (const auto& d : torsion_) n *= d;
  return n;
}

bool AbelianGroup::is_cyclic_of_order(const Integer& n) const {
  if (free_rank_ != 0) return false;
  if (n == 1) return torsion_.empty();
  return torsion_.size() == 1 && torsion_[0] == n;
}

bool AbelianGroup::is_cyclic_of_order(std::int64_t n) const {
  if (free_rank_ != 0) return false;
  if (n == 1) return torsion_.empty();
  return torsion_.size() == 1 && torsion_[0].fits_slong_p() && torsion_[0].get_si() == n;
}

std::string AbelianGroup::to_string() const {
  std::string out;
  auto append = [&out](const std::string& term) {
    if (!out.empty()) out += " + ";
    out += term;
  };
  if (free_rank_ == 1) append("Z");
  if (free_rank_ > 1) append("Z^" + std::to_string(free_rank_));
  for (const auto& d : torsion_) append("Z/" + d.get_str());
  return out.empty() ? "0" : out;
}

}  // namespace dehnhom
