#include <fstream>
#include <numeric>

#include "dehnhom/error.hpp"
#include "dehnhom/number_theory.hpp"
#include "dehnhom/verify.hpp"

namespace dehnhom {

using nlohmann::json;

std::string_view to_string(WExclusion e) {
  switch (e) {
    case WExclusion::none: return "none";
    case WExclusion::multiples_of_p: return "multiples_of_p";
    case WExclusion::non_coprime: return "non_coprime";
  }
  return "none";
}

std::vector<std::int64_t> ParameterBox::q_for(std::int64_t p) const {
  if (!q_values.empty()) return q_values;
  std::vector<std::int64_t> qs;
  for (std::int64_t q = 1; q < p; ++q) {
    if (std::gcd(p, q) == 1) qs.push_back(q);
  }
  return qs;
}

IntRange ParameterBox::w_for(std::int64_t p) const {
  if (w_hi_times_p) return {w.lo, *w_hi_times_p * p};
  return w;
}

bool ParameterBox::keeps_w(std::int64_t w_value, std::int64_t p) const {
  if (w_value == 0) return false;
  switch (w_exclusion) {
    case WExclusion::none: return true;
    case WExclusion::multiples_of_p: return w_value % p != 0;
    case WExclusion::non_coprime: return std::gcd(w_value, p) == 1;
  }
  return false;
}

json ParameterBox::describe() const {
  json j;
  j["p"] = p_values;
  if (q_values.empty()) {
    j["q"] = "coprime_residues";
  } else {
    j["q"] = q_values;
  }
  json wj;
  wj["lo"] = w.lo;
  if (w_hi_times_p) {
    wj["hi_times_p"] = *w_hi_times_p;
  } else {
    wj["hi"] = w.hi;
  }
  wj["exclude"] = std::string(to_string(w_exclusion));
  j["w"] = wj;
  j["n"] = {n.lo, n.hi};
  j["nprime"] = {nprime.lo, nprime.hi};
  return j;
}

namespace {

IntRange parse_range(const json& j, std::string_view what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw Error("box field '" + std::string(what) + "' must be [lo, hi]");
  }
  IntRange r{j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
  if (r.empty()) throw Error("box field '" + std::string(what) + "' is an empty range");
  return r;
}

std::vector<std::int64_t> parse_int_list(const json& j, std::string_view what) {
  std::vector<std::int64_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error("box field '" + std::string(what) + "' must hold integers");
    out.push_back(v.get<std::int64_t>());
  }
  if (out.empty()) throw Error("box field '" + std::string(what) + "' is empty");
  return out;
}

WExclusion parse_exclusion(const std::string& s) {
  for (auto e : {WExclusion::none, WExclusion::multiples_of_p, WExclusion::non_coprime}) {
    if (to_string(e) == s) return e;
  }
  throw Error("unknown w exclusion '" + s + "'");
}

ParameterBox parse_box_fields(const json& j) {
  if (!j.is_object()) throw Error("box must be a JSON object");
  ParameterBox box;

  const json& pj = j.at("p");
  if (pj.is_array()) {
    box.p_values = parse_int_list(pj, "p");
  } else if (pj.contains("range")) {
    auto r = parse_range(pj.at("range"), "p.range");
    for (auto p = r.lo; p <= r.hi; ++p) box.p_values.push_back(p);
  } else if (pj.contains("primes_up_to")) {
    box.p_values = primes_up_to(pj.at("primes_up_to").get<std::int64_t>());
  } else {
    throw Error("box field 'p' must be a list, a range or primes_up_to");
  }
  for (auto p : box.p_values) {
    if (p < 2) throw Error("box p values must be at least 2");
  }

  if (j.contains("q")) {
    const json& qj = j.at("q");
    if (qj.is_string()) {
      if (qj.get<std::string>() != "coprime_residues") throw Error("unknown q policy");
    } else if (qj.is_array()) {
      box.q_values = parse_int_list(qj, "q");
    } else if (qj.contains("odd_range")) {
      auto r = parse_range(qj.at("odd_range"), "q.odd_range");
      for (auto q = r.lo; q <= r.hi; ++q) {
        if (q % 2 != 0) box.q_values.push_back(q);
      }
      if (box.q_values.empty()) throw Error("box q odd_range holds no odd values");
    } else {
      throw Error("box field 'q' must be coprime_residues, a list or odd_range");
    }
  }

  const json& wj = j.at("w");
  if (wj.contains("range")) {
    box.w = parse_range(wj.at("range"), "w.range");
  } else {
    box.w = {wj.at("lo").get<std::int64_t>(), wj.at("lo").get<std::int64_t>()};
    box.w_hi_times_p = wj.at("hi_times_p").get<std::int64_t>();
    for (auto p : box.p_values) {
      if (box.w_for(p).empty()) throw Error("box w range is empty for p = " + std::to_string(p));
    }
  }
  box.w_exclusion = parse_exclusion(wj.value("exclude", std::string("multiples_of_p")));

  if (j.contains("n")) box.n = parse_range(j.at("n"), "n");
  if (j.contains("nprime")) box.nprime = parse_range(j.at("nprime"), "nprime");
  return box;
}

}  // namespace

ParameterBox parse_box(const json& j) {
  try {
    return parse_box_fields(j);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed box: ") + e.what());
  }
}

BoxConfig parse_box_config(const json& j) try {
  BoxConfig cfg;
  cfg.meridian = parse_box(j.at("meridian"));
  cfg.theorem_i = parse_box(j.at("theorem_i"));
  cfg.theorem_ii = parse_box(j.at("theorem_ii"));
  cfg.l4q = parse_box(j.at("l4q"));
  cfg.criteria = j.contains("criteria") ? parse_box(j.at("criteria")) : cfg.theorem_i;
  if (j.contains("linalg")) cfg.linalg_entry_bound = j.at("linalg").at("entry_bound").get<std::int64_t>();
  if (j.contains("counterexample_cap")) cfg.counterexample_cap = j.at("counterexample_cap").get<std::size_t>();
  return cfg;
} catch (const json::exception& e) {
  throw Error(std::string("malformed box config: ") + e.what());
}

BoxConfig load_box_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open box config '" + path.string() + "'");
  json j;
  try {
    j = json::parse(in);
    return parse_box_config(j);
  } catch (const json::exception& e) {
    throw Error("malformed box config '" + path.string() + "': " + e.what());
  }
}

}  // namespace dehnhom
