#include <doctest.h>

#include <nlohmann/json.hpp>

#include "dehnhom/error.hpp"
#include "dehnhom/serialize.hpp"
#include "dehnhom/verify.hpp"

using namespace dehnhom;
using nlohmann::json;

namespace {

ParameterBox small_prime_box() {
  return parse_box(json::parse(R"({
    "p": [2, 3, 5, 7], "q": "coprime_residues",
    "w": {"lo": 1, "hi_times_p": 2, "exclude": "multiples_of_p"},
    "n": [-12, 12], "nprime": [1, 12]})"));
}

}  // namespace

TEST_CASE("box parsing") {
  const auto box = small_prime_box();
  CHECK(box.p_values == std::vector<std::int64_t>{2, 3, 5, 7});
  CHECK(box.q_for(5) == std::vector<std::int64_t>{1, 2, 3, 4});
  CHECK(box.w_for(7).hi == 14);
  CHECK_FALSE(box.keeps_w(7, 7));
  CHECK_FALSE(box.keeps_w(0, 7));
  CHECK(box.keeps_w(6, 7));

  const auto ranged = parse_box(json::parse(R"({
    "p": {"range": [2, 6]}, "q": {"odd_range": [-3, 3]},
    "w": {"range": [-4, 4], "exclude": "non_coprime"}, "n": [0, 1], "nprime": [1, 2]})"));
  CHECK(ranged.p_values == std::vector<std::int64_t>{2, 3, 4, 5, 6});
  CHECK(ranged.q_values == std::vector<std::int64_t>{-3, -1, 1, 3});
  CHECK_FALSE(ranged.keeps_w(2, 6));
  CHECK(ranged.keeps_w(-1, 6));

  CHECK(parse_box(json::parse(R"({"p": {"primes_up_to": 10}, "w": {"range": [1, 1]}})")).p_values ==
        std::vector<std::int64_t>{2, 3, 5, 7});
}

TEST_CASE("malformed boxes are rejected") {
  CHECK_THROWS_AS(parse_box(json::parse(R"({"q": "coprime_residues"})")), Error);
  CHECK_THROWS_AS(parse_box(json::parse(R"({"p": "seven", "w": {"range": [1, 2]}})")), Error);
  CHECK_THROWS_AS(parse_box(json::parse(R"({"p": [5], "w": {"range": [1, 2]}, "n": [3]})")),
                  Error);
  CHECK_THROWS_AS(
      parse_box(json::parse(R"({"p": [5], "w": {"range": [1, 2], "exclude": "odd"}})")), Error);

  auto box = small_prime_box();
  box.p_values = {4};
  CHECK_THROWS_WITH_AS(verify_theorem_i(box), doctest::Contains("malformed box"), Error);
  box = small_prime_box();
  box.q_values = {5};
  CHECK_THROWS_AS(verify_theorem_i(box), Error);
  box = small_prime_box();
  box.n = {3, 1};
  CHECK_THROWS_AS(verify_theorem_i(box), Error);
  box = small_prime_box();
  CHECK_THROWS_AS(verify_theorem_ii(box), Error);
  CHECK_THROWS_AS(verify_l4q(box), Error);
  CHECK_THROWS_AS(verify_linalg_oracle(0), Error);
}

TEST_CASE("theorem i on a small box") {
  const auto r = verify_theorem_i(small_prime_box());
  CHECK(r.passed());
  CHECK(r.theorem == "i");
  CHECK(r.cases_examined > 0);
  CHECK(r.zp_fillings_found > 0);
  CHECK(r.counters.at("primitive_zp_fillings") <= r.zp_fillings_found);
  CHECK(r.counters.at("primitive_slopes") <= r.cases_examined);
}

TEST_CASE("vacuous box examines nothing") {
  auto box = small_prime_box();
  box.p_values = {5};
  box.w_hi_times_p.reset();
  box.w = {5, 5};
  const auto r = verify_theorem_i(box);
  CHECK(r.cases_examined == 0);
  CHECK(r.zp_fillings_found == 0);
  CHECK(r.passed());
}

TEST_CASE("the non-primitive pair (0, 5) counts as a Z/5 filling") {
  ParameterBox box;
  box.p_values = {5};
  box.q_values = {1};
  box.w = {1, 1};
  box.n = {0, 0};
  box.nprime = {5, 5};
  const auto r = verify_theorem_i(box);
  CHECK(r.cases_examined == 1);
  CHECK(r.zp_fillings_found == 1);
  CHECK(r.counters.count("primitive_slopes") == 0);
}

TEST_CASE("shifting q by p does not change the outcome") {
  auto box = small_prime_box();
  box.p_values = {7};
  box.q_values = {1, 2, 3};
  const auto a = verify_theorem_i(box);
  box.q_values = {8, 9, 10};
  const auto b = verify_theorem_i(box);
  // The shift re-frames n by n'w^2, so Z/p counts inside a finite n range
  // may differ; the verdict and the number of cases may not.
  CHECK(a.cases_examined == b.cases_examined);
  CHECK(a.passed());
  CHECK(b.passed());
  for (const auto& [theorem, run] :
       std::vector<std::pair<const char*, VerificationReport (*)(const ParameterBox&,
                                                                 const VerifyOptions&)>>{
           {"ii", verify_theorem_ii}, {"criteria", verify_criterion_equivalence}}) {
    CAPTURE(theorem);
    auto shifted = small_prime_box();
    if (std::string(theorem) == "ii") shifted.w_exclusion = WExclusion::non_coprime;
    auto plain = shifted;
    plain.p_values = {9};
    plain.q_values = {1, 2, 4};
    shifted.p_values = {9};
    shifted.q_values = {10, 11, 13};
    CHECK(run(plain, {}).passed() == run(shifted, {}).passed());
  }
}

TEST_CASE("theorem ii, l4q, meridian, criteria and linalg on small boxes") {
  auto box = small_prime_box();
  box.p_values = {2, 4, 6, 8, 9, 12};
  box.w_exclusion = WExclusion::non_coprime;
  const auto ii = verify_theorem_ii(box);
  CHECK(ii.passed());
  CHECK(ii.zp_fillings_found > 0);

  const auto l4 = verify_l4q(parse_box(json::parse(R"({
    "p": [4], "q": {"odd_range": [-7, 7]}, "w": {"range": [-10, 10], "exclude": "multiples_of_p"},
    "n": [-60, 60], "nprime": [1, 1]})")));
  CHECK(l4.passed());
  CHECK(l4.zp_fillings_found == 0);
  CHECK(l4.counters.at("det_order_cases") > 0);

  const auto mer = verify_meridian_identity(small_prime_box());
  CHECK(mer.passed());
  CHECK(mer.cases_examined == mer.zp_fillings_found);

  const auto crit = verify_criterion_equivalence(small_prime_box());
  CHECK(crit.passed());
  CHECK(crit.counters.at("agreements") == crit.cases_examined);

  const auto lin = verify_linalg_oracle(3);
  CHECK(lin.passed());
  CHECK(lin.counters.at("agreements") == lin.cases_examined);
  CHECK(lin.cases_examined > 0);
}

TEST_CASE("reports do not depend on parallelism") {
  const auto box = small_prime_box();
  const auto one = emit_json(to_json(verify_theorem_i(box, {1, 100}), false));
  for (unsigned jobs : {2u, 3u, 8u}) {
    CHECK(emit_json(to_json(verify_theorem_i(box, {jobs, 100}), false)) == one);
  }
}

TEST_CASE("report serialization with counterexamples") {
  // No valid box produces counterexamples, so build the report by hand.
  VerificationReport r;
  r.theorem = "i";
  r.tuple_fields = {"p", "q", "w", "n", "nprime"};
  r.counterexamples = {{{2, 1, 1, 0, 1}, "x"}};
  r.counterexample_total = 5;
  CHECK_FALSE(r.passed());
  const auto j = to_json(r, false);
  CHECK(j.at("counterexamples").size() == 1);
  CHECK(j.at("counterexamples")[0].at("nprime") == 1);
  CHECK(j.at("counterexample_total") == 5);
  CHECK(j.at("passed") == false);
  CHECK_FALSE(j.contains("elapsed_ms"));
  CHECK(to_json(r, true).contains("elapsed_ms"));
}

TEST_CASE("default config parses") {
  const auto cfg = load_box_config(DEHNHOM_TEST_CONFIG);
  CHECK(cfg.theorem_i.p_values.back() == 31);
  CHECK(cfg.theorem_ii.w_exclusion == WExclusion::non_coprime);
  CHECK(cfg.l4q.p_values == std::vector<std::int64_t>{4});
  CHECK(cfg.linalg_entry_bound == 10);
  CHECK(cfg.counterexample_cap == 100);
  CHECK_THROWS_AS(load_box_config("/nonexistent/boxes.json"), Error);
  CHECK_THROWS_AS(parse_box_config(json::parse("{}")), Error);
  CHECK_THROWS_AS(parse_box_config(json::parse(R"({"meridian": 3})")), Error);
}
