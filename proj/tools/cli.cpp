#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "dehnhom/error.hpp"
#include "dehnhom/number_theory.hpp"
#include "dehnhom/obstruction.hpp"
#include "dehnhom/serialize.hpp"
#include "dehnhom/smith.hpp"
#include "dehnhom/surgery.hpp"
#include "dehnhom/verdict.hpp"
#include "dehnhom/verify.hpp"

namespace dehnhom::cli {
namespace {

using nlohmann::json;

enum class Format { json, tsv };

struct SurgeryFlags {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t w = 0;
  std::string slope;

  void add_to(CLI::App* cmd, bool with_slope) {
    cmd->add_option("--p", p, "order of H1(M)")->required();
    cmd->add_option("--q", q, "surgery coefficient, coprime to p")->required();
    cmd->add_option("--w", w, "linking number of K with K0")->required();
    if (with_slope) cmd->add_option("--slope", slope, "filling slope n/n'")->required();
  }
  [[nodiscard]] SurgeryParams params() const { return SurgeryParams(p, q, w, parse_slope(slope)); }
};

void add_format(CLI::App* cmd, Format& format) {
  cmd->add_option("--format", format, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"json", Format::json}, {"tsv", Format::tsv}}));
}

std::string bool_cell(bool b) { return b ? "true" : "false"; }

std::string factors_cell(const AbelianGroup& g) {
  std::string s;
  for (std::size_t i = 0; i < g.torsion().size(); ++i) {
    if (i) s += ',';
    s += g.torsion()[i].get_str();
  }
  return s;
}

unsigned parallelism_from_env() {
  if (const char* v = std::getenv("DEHNHOM_JOBS")) {
    try {
      const int jobs = std::stoi(v);
      if (jobs >= 1) return static_cast<unsigned>(jobs);
    } catch (const std::exception&) {
    }
    throw Error(std::string("DEHNHOM_JOBS must be a positive integer, got '") + v + "'");
  }
  return 1;
}

std::filesystem::path default_config_path() {
  if (const char* v = std::getenv("DEHNHOM_CONFIG")) return v;
  return DEHNHOM_DEFAULT_CONFIG;
}

struct VerifyFlags {
  std::string theorem;
  std::string config;
  std::optional<std::int64_t> p_max;
  std::optional<std::int64_t> q_max;
  std::optional<std::int64_t> w_max;
  std::optional<std::int64_t> n_max;
  std::optional<std::int64_t> nprime_max;
  std::optional<std::int64_t> entry_bound;
  std::optional<unsigned> jobs;
  std::optional<std::size_t> cap;
  bool no_timing = false;
};

// Applies the command-line overrides to the configured box for `theorem`.
ParameterBox override_box(ParameterBox box, const VerifyFlags& f, const std::string& theorem) {
  if (f.p_max) {
    if (theorem == "l4q") throw Error("--p-max does not apply to l4q (p is 4)");
    box.p_values = theorem == "i" ? primes_up_to(*f.p_max) : std::vector<std::int64_t>{};
    if (theorem != "i") {
      for (std::int64_t p = 2; p <= *f.p_max; ++p) box.p_values.push_back(p);
    }
    if (box.p_values.empty()) throw Error("--p-max leaves no p values");
  }
  if (f.q_max) {
    if (theorem != "l4q") throw Error("--q-max applies to l4q only");
    box.q_values.clear();
    for (auto q = -*f.q_max; q <= *f.q_max; ++q) {
      if (q % 2 != 0) box.q_values.push_back(q);
    }
    if (box.q_values.empty()) throw Error("--q-max leaves no odd q values");
  }
  if (f.w_max) {
    box.w_hi_times_p.reset();
    box.w = theorem == "l4q" ? IntRange{-*f.w_max, *f.w_max} : IntRange{1, *f.w_max};
  }
  if (f.n_max) box.n = {-*f.n_max, *f.n_max};
  if (f.nprime_max) {
    if (theorem == "l4q") throw Error("--nprime-max does not apply to l4q (n' is 1)");
    box.nprime = {1, *f.nprime_max};
  }
  return box;
}

int run_verify(const VerifyFlags& f, Format format, std::ostream& out) {
  const auto cfg = load_box_config(f.config.empty() ? default_config_path() : std::filesystem::path(f.config));
  VerifyOptions opts;
  opts.parallelism = f.jobs ? *f.jobs : parallelism_from_env();
  if (opts.parallelism == 0) throw Error("--jobs must be positive");
  opts.counterexample_cap = f.cap ? *f.cap : cfg.counterexample_cap;

  VerificationReport report;
  const auto& t = f.theorem;
  if (t == "linalg") {
    report = verify_linalg_oracle(f.entry_bound ? *f.entry_bound : cfg.linalg_entry_bound, opts);
  } else {
    if (f.entry_bound) throw Error("--entry-bound applies to linalg only");
    if (t == "meridian") report = verify_meridian_identity(override_box(cfg.meridian, f, t), opts);
    if (t == "i") report = verify_theorem_i(override_box(cfg.theorem_i, f, t), opts);
    if (t == "ii") report = verify_theorem_ii(override_box(cfg.theorem_ii, f, t), opts);
    if (t == "l4q") report = verify_l4q(override_box(cfg.l4q, f, t), opts);
    if (t == "criteria") {
      report = verify_criterion_equivalence(override_box(cfg.criteria, f, t), opts);
    }
  }
  if (format == Format::json) {
    out << emit_json(to_json(report, !f.no_timing));
  } else {
    out << report_tsv(report);
  }
  return report.passed() ? kSuccess : kCounterexamples;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact homology calculus for Dehn fillings of knots in homology lens spaces"};
  app.require_subcommand(1);
  Format format = Format::json;

  SurgeryFlags homology_flags;
  auto* homology = app.add_subcommand("homology", "H1 of the filled manifold");
  homology_flags.add_to(homology, true);
  add_format(homology, format);

  std::string matrix_text;
  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("--matrix", matrix_text, "rows separated by ';', entries by ','")->required();
  add_format(snf, format);

  std::string s1_text, s2_text;
  auto* distance = app.add_subcommand("distance", "distance between two slopes");
  distance->add_option("--s1", s1_text)->required();
  distance->add_option("--s2", s2_text)->required();
  add_format(distance, format);

  SurgeryFlags phi_flags;
  bool alpha_normalized = false;
  auto* phi = app.add_subcommand("phi", "onto maps H1 -> Z/p as (alpha, beta)");
  phi_flags.add_to(phi, true);
  phi->add_flag("--alpha-normalized", alpha_normalized,
                "keep only solutions with gcd(alpha, beta) = 1 normalization");
  add_format(phi, format);

  SurgeryFlags divisor_flags;
  std::string divisor_class;
  auto* divisor = app.add_subcommand("divisor", "guaranteed divisor of the slope distance");
  divisor_flags.add_to(divisor, false);
  divisor->add_option("--class", divisor_class, "homology class of the knot")->required();
  add_format(divisor, format);

  std::string ambient_text, knot_text, class_text = "unknown";
  std::int64_t decide_p = 0;
  bool decide_prime = false;
  std::optional<bool> l_space;
  std::optional<std::int64_t> lens_q;
  auto* decide = app.add_subcommand("decide", "determined-by-complement verdict");
  decide->add_option("--ambient", ambient_text)->required();
  decide->add_option("--knot", knot_text)->required();
  decide->add_option("--class", class_text);
  decide->add_option("--p", decide_p)->required();
  decide->add_flag("--prime", decide_prime, "assert that p is prime");
  decide->add_option("--l-space", l_space, "assert whether M is an L-space (true/false)");
  decide->add_option("--lens-q", lens_q, "q of the lens space L(p,q)");
  add_format(decide, format);

  std::int64_t l4q_q = 0, l4q_w = 0, l4q_n = 0;
  auto* l4q = app.add_subcommand("l4q", "parity obstruction for integral fillings in L(4,q)");
  l4q->add_option("--q", l4q_q)->required();
  l4q->add_option("--w", l4q_w)->required();
  l4q->add_option("--n", l4q_n)->required();
  add_format(l4q, format);

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "exhaustive sweep over a parameter box");
  verify->add_option("--theorem", vf.theorem)
      ->required()
      ->check(CLI::IsMember({"meridian", "i", "ii", "l4q", "linalg", "criteria"}));
  verify->add_option("--config", vf.config, "box configuration file");
  verify->add_option("--p-max", vf.p_max);
  verify->add_option("--q-max", vf.q_max);
  verify->add_option("--w-max", vf.w_max);
  verify->add_option("--n-max", vf.n_max);
  verify->add_option("--nprime-max", vf.nprime_max);
  verify->add_option("--entry-bound", vf.entry_bound);
  verify->add_option("--jobs", vf.jobs, "parallelism degree (default: $DEHNHOM_JOBS or 1)");
  verify->add_option("--cap", vf.cap, "maximum counterexamples listed");
  verify->add_flag("--no-timing", vf.no_timing, "omit elapsed_ms from the report");
  add_format(verify, format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (homology->parsed()) {
      const auto params = homology_flags.params();
      const auto group = surgered_homology(params);
      const bool is_zp = group.is_cyclic_of_order(params.p);
      if (format == Format::json) {
        auto j = to_json(group);
        j["is_Zp"] = is_zp;
        out << emit_json(j);
      } else {
        out << group_tsv(group, true, is_zp);
      }
    } else if (snf->parsed()) {
      const auto m = parse_matrix(matrix_text);
      const auto d = smith_normal_form(m);
      const auto group = cokernel(m);
      if (format == Format::json) {
        auto j = to_json(d);
        j["cokernel"] = to_json(group);
        if (m.is_square()) j["determinant"] = to_json(determinant(m));
        out << emit_json(j);
      } else {
        out << "U\tD\tV\tinvariant_factors\tfree_rank\n"
            << format_matrix(d.U) << '\t' << format_matrix(d.D) << '\t' << format_matrix(d.V)
            << '\t' << factors_cell(group) << '\t' << group.free_rank() << '\n';
      }
    } else if (distance->parsed()) {
      const auto d = slope_distance(parse_slope(s1_text), parse_slope(s2_text));
      if (format == Format::json) {
        out << emit_json(json{{"distance", to_json(d)}});
      } else {
        out << "distance\n" << d.get_str() << '\n';
      }
    } else if (phi->parsed()) {
      const auto sols = phi_solutions(phi_flags.params(), alpha_normalized);
      if (format == Format::json) {
        json list = json::array();
        for (const auto& s : sols) list.push_back({s.alpha, s.beta});
        out << emit_json(json{{"count", sols.size()}, {"solutions", list}});
      } else {
        out << "alpha\tbeta\n";
        for (const auto& s : sols) out << s.alpha << '\t' << s.beta << '\n';
      }
    } else if (divisor->parsed()) {
      const auto d = guaranteed_delta_divisor(divisor_flags.p, divisor_flags.q, divisor_flags.w,
                                              parse_homology_class(divisor_class));
      if (format == Format::json) {
        out << emit_json(json{{"divisor", d}});
      } else {
        out << "divisor\n" << d << '\n';
      }
    } else if (decide->parsed()) {
      DecisionContext ctx;
      ctx.p = decide_p;
      ctx.p_is_prime = decide_prime;
      ctx.ambient = parse_ambient(ambient_text);
      ctx.knot_geometry = parse_knot_geometry(knot_text);
      ctx.homology_class = parse_homology_class(class_text);
      ctx.ambient_is_l_space = l_space;
      ctx.lens_q = lens_q;
      const auto verdict = decide_determined(ctx);
      out << (format == Format::json ? emit_json(to_json(verdict)) : verdict_tsv(verdict));
    } else if (l4q->parsed()) {
      const auto r = l4q_obstruction(l4q_q, l4q_w, l4q_n);
      if (format == Format::json) {
        out << emit_json(to_json(r));
      } else {
        out << "q\tw\tn\treason\tobstructed\tinvariant_factors\tfree_rank\n"
            << r.q << '\t' << r.w << '\t' << r.n << '\t' << to_string(r.reason) << '\t'
            << bool_cell(r.obstructed) << '\t' << factors_cell(r.homology) << '\t'
            << r.homology.free_rank() << '\n';
      }
    } else if (verify->parsed()) {
      return run_verify(vf, format, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kSuccess;
}

}  // namespace dehnhom::cli
