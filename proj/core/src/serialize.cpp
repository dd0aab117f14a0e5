#include "dehnhom/serialize.hpp"

#include <sstream>

namespace dehnhom {

using nlohmann::json;

json to_json(const Integer& value) {
  if (value.fits_slong_p()) return static_cast<std::int64_t>(value.get_si());
  return value.get_str();
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const AbelianGroup& g) {
  json factors = json::array();
  for (const auto& d : g.torsion()) factors.push_back(to_json(d));
  return {{"free_rank", g.free_rank()}, {"invariant_factors", std::move(factors)}};
}

json to_json(const SmithDecomposition& snf) {
  return {{"U", to_json(snf.U)}, {"D", to_json(snf.D)}, {"V", to_json(snf.V)}};
}

json to_json(const Certificate& c) {
  json j{{"rule", c.rule_id}, {"citation", c.citation}, {"narrative", c.narrative}};
  j["delta_divisor"] = c.delta_divisor ? json(*c.delta_divisor) : json(nullptr);
  j["delta_bound"] = c.delta_bound ? json(*c.delta_bound) : json(nullptr);
  return j;
}

json to_json(const Verdict& v) {
  json certs = json::array();
  for (const auto& c : v.certificates) certs.push_back(to_json(c));
  return {{"outcome", std::string(to_string(v.outcome))}, {"certificates", std::move(certs)}};
}

json to_json(const L4qObstruction& r) {
  return {{"q", r.q},
          {"w", r.w},
          {"n", r.n},
          {"w_mod_4", r.w_mod_4},
          {"integral_candidate", r.integral_candidate},
          {"n_forced_even", r.n_forced_even},
          {"z4_alpha", r.z4_alpha},
          {"z4_requires_n_odd", r.z4_requires_n_odd},
          {"reason", std::string(to_string(r.reason))},
          {"obstructed", r.obstructed},
          {"homology", to_json(r.homology)},
          {"onto_z4_maps", r.onto_z4_maps}};
}

json to_json(const VerificationReport& r, bool include_timing) {
  json ces = json::array();
  for (const auto& c : r.counterexamples) {
    json entry;
    for (std::size_t i = 0; i < r.tuple_fields.size() && i < c.tuple.size(); ++i) {
      entry[r.tuple_fields[i]] = c.tuple[i];
    }
    entry["reason"] = c.reason;
    ces.push_back(std::move(entry));
  }
  json j{{"theorem", r.theorem},
         {"box", r.box},
         {"cases_examined", r.cases_examined},
         {"zp_fillings_found", r.zp_fillings_found},
         {"counterexamples", std::move(ces)},
         {"counterexample_total", r.counterexample_total},
         {"counters", r.counters},
         {"passed", r.passed()}};
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::string emit_json(const json& j) { return j.dump() + "\n"; }

std::string report_tsv(const VerificationReport& r) {
  std::ostringstream out;
  out << "theorem";
  for (const auto& f : r.tuple_fields) out << '\t' << f;
  out << "\treason\n";
  for (const auto& c : r.counterexamples) {
    out << r.theorem;
    for (auto v : c.tuple) out << '\t' << v;
    out << '\t' << c.reason << '\n';
  }
  return out.str();
}

namespace {

std::string optional_cell(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

}  // namespace

std::string verdict_tsv(const Verdict& v) {
  std::ostringstream out;
  out << "rule\tcitation\tdelta_divisor\tdelta_bound\toutcome\n";
  for (const auto& c : v.certificates) {
    out << c.rule_id << '\t' << c.citation << '\t' << optional_cell(c.delta_divisor) << '\t'
        << optional_cell(c.delta_bound) << '\t' << to_string(v.outcome) << '\n';
  }
  return out.str();
}

std::string group_tsv(const AbelianGroup& g, bool include_is_zp, bool is_zp) {
  std::ostringstream out;
  out << "invariant_factors\tfree_rank";
  if (include_is_zp) out << "\tis_Zp";
  out << '\n';
  for (std::size_t i = 0; i < g.torsion().size(); ++i) {
    if (i) out << ',';
    out << g.torsion()[i].get_str();
  }
  out << '\t' << g.free_rank();
  if (include_is_zp) out << '\t' << (is_zp ? "true" : "false");
  out << '\n';
  return out.str();
}

}  // namespace dehnhom
