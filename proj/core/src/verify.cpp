#include "dehnhom/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>

#include "dehnhom/error.hpp"
#include "dehnhom/number_theory.hpp"
#include "dehnhom/obstruction.hpp"
#include "dehnhom/smith.hpp"
#include "dehnhom/surgery.hpp"

namespace dehnhom {
namespace {

const std::vector<std::string> kSurgeryFields{"p", "q", "w", "n", "nprime"};

// Result of one independent work item. Counterexamples are produced in tuple
// order, so keeping the first `cap` of each item is enough to recover the
// first `cap` overall.
struct Partial {
  std::uint64_t cases = 0;
  std::uint64_t found = 0;
  std::uint64_t failures = 0;
  std::vector<Counterexample> counterexamples;
  std::uint64_t primitive_cases = 0;
  std::uint64_t primitive_found = 0;
  std::map<std::string, std::uint64_t> counters;
  std::size_t cap = 0;

  // Counts one examined filling; returns zp for chaining.
  bool examine(const SurgeryParams& s, bool zp) {
    ++cases;
    const bool primitive = s.is_primitive();
    primitive_cases += primitive;
    if (zp) {
      ++found;
      primitive_found += primitive;
    }
    return zp;
  }

  void fail(std::vector<std::int64_t> tuple, std::string reason) {
    ++failures;
    if (counterexamples.size() < cap) counterexamples.push_back({std::move(tuple), std::move(reason)});
  }
};

// Runs `work(i, partial)` for i in [0, item_count) on `parallelism` threads
// and merges deterministically.
void run_items(std::size_t item_count, const VerifyOptions& opts,
               const std::function<void(std::size_t, Partial&)>& work, VerificationReport& report) {
  std::vector<Partial> partials(item_count);
  for (auto& p : partials) p.cap = opts.counterexample_cap;
  std::uint64_t primitive_cases = 0;
  std::uint64_t primitive_found = 0;

  const unsigned threads =
      std::max(1u, std::min<unsigned>(opts.parallelism, static_cast<unsigned>(item_count)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= item_count) return;
      try {
        work(i, partials[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  for (auto& part : partials) {
    report.cases_examined += part.cases;
    report.zp_fillings_found += part.found;
    report.counterexample_total += part.failures;
    for (auto& [k, v] : part.counters) report.counters[k] += v;
    primitive_cases += part.primitive_cases;
    primitive_found += part.primitive_found;
    for (auto& c : part.counterexamples) report.counterexamples.push_back(std::move(c));
  }
  if (primitive_cases > 0) {
    report.counters["primitive_slopes"] = primitive_cases;
    report.counters["primitive_zp_fillings"] = primitive_found;
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end());
  if (report.counterexamples.size() > opts.counterexample_cap) {
    report.counterexamples.resize(opts.counterexample_cap);
  }
}

class Stopwatch {
 public:
  [[nodiscard]] std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void check_common(const ParameterBox& box) {
  if (box.p_values.empty()) throw Error("malformed box: no p values");
  if (box.n.empty() || box.nprime.empty()) throw Error("malformed box: empty n or n' range");
  for (auto p : box.p_values) {
    if (p < 2) throw Error("malformed box: p must be at least 2");
    if (box.w_for(p).empty()) throw Error("malformed box: empty w range");
    for (auto q : box.q_for(p)) {
      if (std::gcd(p, q) != 1) {
        throw Error("malformed box: q = " + std::to_string(q) + " is not coprime to p = " +
                    std::to_string(p));
      }
    }
  }
}

struct PQ {
  std::int64_t p;
  std::int64_t q;
};

std::vector<PQ> pq_items(const ParameterBox& box) {
  std::vector<PQ> items;
  for (auto p : box.p_values) {
    for (auto q : box.q_for(p)) items.push_back({p, q});
  }
  return items;
}

// Calls visit(params) for every coefficient pair (n, n') != (0, 0) and kept w
// at fixed (p, q).
template <typename Visit>
void for_each_filling(const ParameterBox& box, const PQ& pq, Visit&& visit) {
  const IntRange wr = box.w_for(pq.p);
  for (auto w = wr.lo; w <= wr.hi; ++w) {
    if (!box.keeps_w(w, pq.p)) continue;
    for (auto n = box.n.lo; n <= box.n.hi; ++n) {
      for (auto np = box.nprime.lo; np <= box.nprime.hi; ++np) {
        if (n == 0 && np == 0) continue;
        visit(SurgeryParams(pq.p, pq.q, w, n, np));
      }
    }
  }
}

std::vector<std::int64_t> tuple_of(const SurgeryParams& s) {
  return {s.p, s.q, s.w, s.n, s.nprime};
}

VerificationReport start_report(std::string theorem, const ParameterBox& box) {
  VerificationReport r;
  r.theorem = std::move(theorem);
  r.box = box.describe();
  r.tuple_fields = kSurgeryFields;
  return r;
}

}  // namespace

VerificationReport verify_theorem_i(const ParameterBox& box, const VerifyOptions& opts) {
  Stopwatch clock;
  check_common(box);
  for (auto p : box.p_values) {
    if (!is_prime(p)) throw Error("malformed box: theorem i needs prime p, got " + std::to_string(p));
  }
  if (box.w_exclusion != WExclusion::multiples_of_p) {
    throw Error("malformed box: theorem i excludes exactly the multiples of p from w");
  }
  if (box.nprime.lo < 1) throw Error("malformed box: n' must be positive");

  auto report = start_report("i", box);
  const auto items = pq_items(box);
  run_items(items.size(), opts, [&](std::size_t i, Partial& part) {
    for_each_filling(box, items[i], [&](const SurgeryParams& s) {
      if (!part.examine(s, zp_filling_possible(s))) return;
      if (s.nprime % s.p != 0) part.fail(tuple_of(s), "p does not divide n'");
    });
  }, report);
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_theorem_ii(const ParameterBox& box, const VerifyOptions& opts) {
  Stopwatch clock;
  check_common(box);
  if (box.w_exclusion != WExclusion::non_coprime) {
    throw Error("malformed box: theorem ii keeps exactly the w coprime to p");
  }
  if (box.nprime.lo < 1) throw Error("malformed box: n' must be positive");

  auto report = start_report("ii", box);
  const auto items = pq_items(box);
  run_items(items.size(), opts, [&](std::size_t i, Partial& part) {
    const std::int64_t rad = radical(items[i].p);
    for_each_filling(box, items[i], [&](const SurgeryParams& s) {
      if (!part.examine(s, zp_filling_possible(s))) return;
      if (s.nprime % rad != 0) part.fail(tuple_of(s), "radical(p) does not divide n'");
    });
  }, report);
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_l4q(const ParameterBox& box, const VerifyOptions& opts) {
  Stopwatch clock;
  check_common(box);
  if (box.p_values != std::vector<std::int64_t>{4}) throw Error("malformed box: l4q needs p = 4 only");
  if (box.nprime != IntRange{1, 1}) throw Error("malformed box: l4q needs n' = 1 only");
  if (box.w_exclusion != WExclusion::multiples_of_p) {
    throw Error("malformed box: l4q excludes exactly the multiples of 4 from w");
  }
  for (auto q : box.q_for(4)) {
    if (q % 2 == 0) throw Error("malformed box: l4q needs odd q");
  }

  auto report = start_report("l4q", box);
  report.counters["det_order_cases"] = 0;
  const auto items = pq_items(box);
  run_items(items.size(), opts, [&](std::size_t i, Partial& part) {
    std::uint64_t det_cases = 0;
    for_each_filling(box, items[i], [&](const SurgeryParams& s) {
      if (part.examine(s, zp_filling_possible(s))) part.fail(tuple_of(s), "H1 is Z/4");
      if (abs(filling_determinant(s)) != 4) return;
      ++det_cases;
      if (mod(s.w, 4) != 2) part.fail(tuple_of(s), "|det| = 4 but w is not 2 mod 4");
      if (s.n % 2 != 0) part.fail(tuple_of(s), "|det| = 4 but n is odd");
    });
    part.counters["det_order_cases"] = det_cases;
  }, report);
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_linalg_oracle(std::int64_t entry_bound, const VerifyOptions& opts) {
  Stopwatch clock;
  if (entry_bound < 1) throw Error("entry bound must be at least 1");
  VerificationReport report;
  report.theorem = "linalg";
  report.box = {{"entry_bound", entry_bound}};
  report.tuple_fields = {"a11", "a12", "a21", "a22"};
  report.counters["agreements"] = 0;

  const auto width = static_cast<std::size_t>(2 * entry_bound + 1);
  run_items(width, opts, [&](std::size_t i, Partial& part) {
    const std::int64_t a = static_cast<std::int64_t>(i) - entry_bound;
    std::uint64_t agreements = 0;
    for (auto b = -entry_bound; b <= entry_bound; ++b) {
      for (auto c = -entry_bound; c <= entry_bound; ++c) {
        for (auto d = -entry_bound; d <= entry_bound; ++d) {
          if (a * d - b * c == 0) continue;
          ++part.cases;
          IntMatrix m{{static_cast<long>(a), static_cast<long>(b)},
                      {static_cast<long>(c), static_cast<long>(d)}};
          if (cokernel(m) == cokernel_2x2_oracle(m)) {
            ++agreements;
          } else {
            part.fail({a, b, c, d}, "Smith cokernel differs from closed form");
          }
        }
      }
    }
    part.counters["agreements"] = agreements;
  }, report);
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_meridian_identity(const ParameterBox& box, const VerifyOptions& opts) {
  Stopwatch clock;
  check_common(box);
  auto report = start_report("meridian", box);
  const auto items = pq_items(box);
  run_items(items.size(), opts, [&](std::size_t i, Partial& part) {
    const auto [p, q] = items[i];
    const IntRange wr = box.w_for(p);
    for (auto w = wr.lo; w <= wr.hi; ++w) {
      if (!box.keeps_w(w, p)) continue;
      SurgeryParams s(p, q, w, Slope::meridian());
      ++part.cases;
      if (surgered_homology(s).is_cyclic_of_order(Integer(static_cast<long>(p)))) {
        ++part.found;
      } else {
        part.fail(tuple_of(s), "meridian filling is not Z/p");
      }
    }
  }, report);
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_criterion_equivalence(const ParameterBox& box,
                                                const VerifyOptions& opts) {
  Stopwatch clock;
  check_common(box);
  auto report = start_report("criteria", box);
  report.counters["agreements"] = 0;
  const auto items = pq_items(box);
  run_items(items.size(), opts, [&](std::size_t i, Partial& part) {
    std::uint64_t agreements = 0;
    for_each_filling(box, items[i], [&](const SurgeryParams& s) {
      const bool by_smith = part.examine(s, zp_filling_possible(s));
      const bool by_congruences = zp_filling_by_congruences(s);
      if (by_smith == by_congruences) {
        ++agreements;
      } else {
        part.fail(tuple_of(s), by_smith ? "Smith says Z/p, congruences disagree"
                                        : "congruences say Z/p, Smith disagrees");
      }
    });
    part.counters["agreements"] = agreements;
  }, report);
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

}  // namespace dehnhom
