#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "dehnhom/abelian_group.hpp"
#include "dehnhom/int_matrix.hpp"
#include "dehnhom/obstruction.hpp"
#include "dehnhom/smith.hpp"
#include "dehnhom/verdict.hpp"
#include "dehnhom/verify.hpp"

namespace dehnhom {

// Integers that fit in 64 bits become JSON numbers, larger ones decimal
// strings, so no precision is lost.
nlohmann::json to_json(const Integer& value);
nlohmann::json to_json(const IntMatrix& m);
// {"free_rank": r, "invariant_factors": [...]}
nlohmann::json to_json(const AbelianGroup& g);
nlohmann::json to_json(const SmithDecomposition& snf);
nlohmann::json to_json(const Certificate& c);
// {"certificates": [...], "outcome": "..."}; certificates in rule-table order.
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const L4qObstruction& r);
// {theorem, box, cases_examined, zp_fillings_found, counterexamples[],
//  counterexample_total, counters, passed, elapsed_ms}. The wall time is the
// only field that varies between identical runs; leave it out with
// include_timing = false.
nlohmann::json to_json(const VerificationReport& r, bool include_timing = true);

// Compact, key-sorted, newline-terminated.
std::string emit_json(const nlohmann::json& j);

// One row per counterexample under a fixed header.
std::string report_tsv(const VerificationReport& r);
// One row per certificate: rule, citation, divisor, bound, outcome.
std::string verdict_tsv(const Verdict& v);
std::string group_tsv(const AbelianGroup& g, bool include_is_zp, bool is_zp);

}  // namespace dehnhom
