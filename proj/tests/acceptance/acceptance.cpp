// Runs every acceptance criterion on the configured default boxes and prints
// one PASS/FAIL line per criterion. Exit status is 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dehnhom/error.hpp"
#include "dehnhom/serialize.hpp"
#include "dehnhom/smith.hpp"
#include "dehnhom/surgery.hpp"
#include "dehnhom/verdict.hpp"
#include "dehnhom/verify.hpp"

using namespace dehnhom;

namespace {

struct Result {
  bool pass;
  std::string detail;
};

std::string summary(const VerificationReport& r) {
  std::ostringstream s;
  s << "cases=" << r.cases_examined << " zp_fillings=" << r.zp_fillings_found
    << " counterexamples=" << r.counterexample_total;
  for (const auto& [k, v] : r.counters) s << ' ' << k << '=' << v;
  return s.str();
}

Result sweep(const VerificationReport& r, bool need_witnesses) {
  return {r.passed() && (!need_witnesses || r.zp_fillings_found > 0), summary(r)};
}

unsigned jobs_from_env() {
  if (const char* v = std::getenv("DEHNHOM_JOBS")) {
    const int j = std::atoi(v);
    if (j >= 1) return static_cast<unsigned>(j);
  }
  return 1;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Result spot_values() {
  struct Spot {
    SurgeryParams params;
    AbelianGroup expected;
  };
  const Spot spots[] = {
      {SurgeryParams(4, 1, 2, Slope(0, 1)),
       AbelianGroup::from_invariant_factors({Integer(2), Integer(2)})},
      {SurgeryParams(5, 1, 1, 0, 5), AbelianGroup::cyclic(Integer(5))},
  };
  std::string detail;
  bool ok = true;
  for (const auto& s : spots) {
    const auto got = surgered_homology(s.params);
    const auto closed = cokernel_2x2_oracle(presentation_matrix(s.params));
    ok = ok && got == s.expected && closed == s.expected;
    if (!detail.empty()) detail += ", ";
    detail += got.to_string();
  }
  return {ok, detail};
}

Result verdict_fixtures() {
  auto ctx = [](std::int64_t p, bool prime, AmbientGeometry a, KnotGeometry k, HomologyClass c,
                std::optional<std::int64_t> lens_q) {
    DecisionContext d;
    d.p = p;
    d.p_is_prime = prime;
    d.ambient = a;
    d.knot_geometry = k;
    d.homology_class = c;
    d.lens_q = lens_q;
    return d;
  };
  struct Case {
    const char* golden;
    DecisionContext ctx;
    dehnhom::Outcome outcome;
    const char* rule;
  };
  const Case cases[] = {
      {"decide_lens_generator.json",
       ctx(12, false, AmbientGeometry::lens, KnotGeometry::unknown, HomologyClass::generator, 5),
       dehnhom::Outcome::determined, "R1"},
      {"decide_r3_p11.json",
       ctx(11, true, AmbientGeometry::non_hyperbolic_other, KnotGeometry::hyperbolic,
           HomologyClass::not_null_homologous, std::nullopt),
       dehnhom::Outcome::determined, "R3"},
      {"decide_r3_p7.json",
       ctx(7, true, AmbientGeometry::non_hyperbolic_other, KnotGeometry::hyperbolic,
           HomologyClass::not_null_homologous, std::nullopt),
       dehnhom::Outcome::inconclusive, nullptr},
      {"decide_lens_4.json",
       ctx(4, false, AmbientGeometry::lens, KnotGeometry::unknown, HomologyClass::unknown, 1),
       dehnhom::Outcome::determined, "R2"},
  };
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    const auto v = decide_determined(c.ctx);
    bool match = v.outcome == c.outcome &&
                 emit_json(to_json(v)) == read_file(std::filesystem::path(DEHNHOM_GOLDEN_DIR) / c.golden);
    if (c.rule) match = match && !v.certificates.empty() && v.certificates[0].rule_id == c.rule;
    if (c.rule && std::string(c.rule) == "R3") {
      match = match && v.certificates[0].delta_divisor == 11 && v.certificates[0].delta_bound == 8;
    }
    ok = ok && match;
    if (!detail.empty()) detail += ", ";
    detail += std::string(c.golden) + (match ? " ok" : " MISMATCH");
  }
  return {ok, detail};
}

}  // namespace

int main() {
  const auto cfg = load_box_config(DEHNHOM_DEFAULT_CONFIG);
  VerifyOptions opts;
  opts.parallelism = jobs_from_env();
  opts.counterexample_cap = cfg.counterexample_cap;

  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"1 meridian identity",
       [&] { return sweep(verify_meridian_identity(cfg.meridian, opts), true); }},
      {"2 prime p divides n'", [&] { return sweep(verify_theorem_i(cfg.theorem_i, opts), true); }},
      {"3 radical(p) divides n'",
       [&] { return sweep(verify_theorem_ii(cfg.theorem_ii, opts), true); }},
      {"4 no Z/4 filling in L(4,q)",
       [&] {
         const auto r = verify_l4q(cfg.l4q, opts);
         return Result{r.passed() && r.counters.at("det_order_cases") > 0, summary(r)};
       }},
      {"5 spot values", spot_values},
      {"6 Smith vs closed form",
       [&] {
         const auto r = verify_linalg_oracle(cfg.linalg_entry_bound, opts);
         return Result{r.passed() && r.counters.at("agreements") == r.cases_examined &&
                            r.cases_examined > 0,
                        summary(r)};
       }},
      {"7 criterion equivalence",
       [&] {
         const auto r = verify_criterion_equivalence(cfg.criteria, opts);
         return Result{r.passed() && r.counters.at("agreements") == r.cases_examined, summary(r)};
       }},
      {"8 verdict fixtures", verdict_fixtures},
      {"9 determinism across parallelism",
       [&] {
         const auto one = emit_json(to_json(verify_theorem_i(cfg.theorem_i, {1, 100}), false));
         const auto eight = emit_json(to_json(verify_theorem_i(cfg.theorem_i, {8, 100}), false));
         return Result{one == eight, std::to_string(one.size()) + " bytes"};
       }},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::printf("%s criterion %s (%lld ms): %s\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                static_cast<long long>(ms), o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
