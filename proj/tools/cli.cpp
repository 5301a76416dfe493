#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ostream>
#include <sstream>

#include "curvenbhd/cosmall.hpp"
#include "curvenbhd/curves.hpp"
#include "curvenbhd/literals.hpp"
#include "curvenbhd/serialize.hpp"
#include "curvenbhd/table.hpp"

namespace curvenbhd::cli {
namespace {

DynkinType resolve_type(const QueryConfig& c) {
  if (c.type.empty()) throw InputError("--type is required");
  const bool has_digits = c.type.find_first_of("0123456789") != std::string::npos;
  if (has_digits) {
    DynkinType t = DynkinType::parse(c.type);
    if (c.rank && *c.rank != t.rank) {
      throw InputError("--rank " + std::to_string(*c.rank) + " contradicts type literal " + c.type);
    }
    return t;
  }
  if (!c.rank) throw InputError("type literal '" + c.type + "' has no rank; pass e.g. B4 or --rank");
  return DynkinType::parse(c.type + std::to_string(*c.rank));
}

Root resolve_root(const RootSystem& rs, const std::string& literal) {
  Root r{parse_coeffs(literal, "root")};
  if (r.rank() != rs.rank()) {
    throw InputError("root '" + literal + "' has " + std::to_string(r.rank()) + " coefficients, " +
                     rs.dynkin().name() + " needs " + std::to_string(rs.rank()));
  }
  if (!rs.contains(r.coeffs)) throw InputError("root '" + literal + "' is not a root of " + rs.dynkin().name());
  if (!r.is_positive()) throw InputError("root '" + literal + "' is not a positive root");
  return r;
}

WeylElement resolve_word(const RootSystem& rs, const std::string& literal) {
  const Word word = parse_word(literal);
  for (int i : word) {
    if (i > rs.rank()) {
      throw InputError("word '" + literal + "': letter " + std::to_string(i) + " exceeds rank " +
                       std::to_string(rs.rank()));
    }
  }
  return from_word(rs, word);
}

Degree resolve_degree(const RootSystem& rs, const std::string& literal, const ParabolicSubset& p) {
  if (literal.find_first_not_of(" \t") == std::string::npos) return Degree::zero(rs, p);
  Degree d(rs.dynkin(), p, parse_coeffs(literal, "degree"));
  if (!d.is_effective()) throw InputError("degree '" + literal + "' is not effective");
  return d;
}

std::string braces(const std::vector<int>& xs) {
  std::string s = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + std::to_string(xs[k]);
  return s + "}";
}

std::string show_root(const Root& r) { return format_coeffs(r.coeffs) + " (" + format_simple_expansion(r.coeffs) + ")"; }

std::string show_roots(const std::vector<Root>& roots) {
  if (roots.empty()) return "()";
  std::string s;
  for (std::size_t k = 0; k < roots.size(); ++k) s += (k ? ", " : "") + format_simple_expansion(roots[k].coeffs);
  return s;
}

std::string show_word(const Word& w) { return "[" + format_word(w) + "]"; }

void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int cmd_cosmall(const QueryConfig& config, std::ostream& out) {
  const RootSystem rs(resolve_type(config));
  const ParabolicSubset p = parse_parabolic(config.parabolic, rs.rank());
  const Root alpha = resolve_root(rs, config.root);
  const CosmallReport r = cosmall_report(rs, alpha, p);
  if (config.format == Format::Json) {
    emit_json(out, r);
    return kExitOk;
  }
  out << "type: " << r.dynkin.name() << '\n'
      << "parabolic: " << braces(r.parabolic.members()) << '\n'
      << "root: " << show_root(r.root) << '\n'
      << "delta_set: " << braces(r.delta_set) << '\n'
      << "cosmall: " << (r.is_cosmall ? "true" : "false");
  if (r.cosmall_witness) out << " (witness " << show_root(*r.cosmall_witness) << ")";
  out << '\n' << "P-cosmall: ";
  if (!r.is_P_cosmall) {
    out << "n/a (root lies in R+_P)";
  } else {
    out << (*r.is_P_cosmall ? "true" : "false");
    if (r.P_cosmall_witness) out << " (witness " << show_root(*r.P_cosmall_witness) << ")";
  }
  out << '\n';
  return kExitOk;
}

int cmd_curve_nbhd(const QueryConfig& config, std::ostream& out) {
  const RootSystem rs(resolve_type(config));
  const ParabolicSubset p = parse_parabolic(config.parabolic, rs.rank());
  const WeylElement w = resolve_word(rs, config.words.empty() ? std::string{} : config.words.front());
  const Degree d = resolve_degree(rs, config.degree, p);
  const CurveReport r = curve_report(rs, w, d, p);
  if (config.format == Format::Json) {
    emit_json(out, r);
    return kExitOk;
  }
  out << "type: " << r.dynkin.name() << '\n'
      << "parabolic: " << braces(r.parabolic.members()) << '\n'
      << "w: " << show_word(r.w) << '\n'
      << "degree: " << format_coeffs(r.degree) << '\n'
      << "greedy: " << show_roots(r.greedy) << '\n'
      << "z: " << show_word(r.z_word) << " (length " << r.z_word.size() << ")\n"
      << "neighborhood: X(" << show_word(r.rep_word) << ") (length " << r.rep_length << ")\n";
  return kExitOk;
}

int cmd_greedy(const QueryConfig& config, std::ostream& out) {
  const RootSystem rs(resolve_type(config));
  const ParabolicSubset p = parse_parabolic(config.parabolic, rs.rank());
  const Degree d = resolve_degree(rs, config.degree, p);
  const GreedyReport r = greedy_report(rs, d, p);
  if (config.format == Format::Json) {
    emit_json(out, r);
    return kExitOk;
  }
  out << "type: " << r.dynkin.name() << '\n'
      << "parabolic: " << braces(r.parabolic.members()) << '\n'
      << "degree: " << format_coeffs(r.degree) << '\n'
      << "maximal roots: " << show_roots(r.maximal_roots) << '\n'
      << "greedy: " << show_roots(r.parts) << '\n'
      << "residual: " << format_coeffs(r.residual) << '\n';
  return kExitOk;
}

int cmd_hecke(const QueryConfig& config, std::ostream& out) {
  const RootSystem rs(resolve_type(config));
  if (config.words.size() != 2) throw InputError("hecke needs --word twice: u then v");
  const WeylElement u = resolve_word(rs, config.words[0]);
  const WeylElement v = resolve_word(rs, config.words[1]);
  const HeckeReport r = hecke_report(rs, u, v);
  if (config.format == Format::Json) {
    emit_json(out, r);
    return kExitOk;
  }
  out << "type: " << r.dynkin.name() << '\n'
      << "u: " << show_word(r.u) << '\n'
      << "v: " << show_word(r.v) << '\n'
      << "u.v: " << show_word(r.product) << " (length " << r.length << ")\n";
  return kExitOk;
}

int cmd_table(const QueryConfig& config, std::ostream& out) {
  const CosmallTable table = emit_table(resolve_type(config));
  if (config.format == Format::Json) emit_json(out, table);
  else out << render_text(table);
  return kExitOk;
}

int cmd_verify(const QueryConfig& config, std::ostream& out) {
  if (config.max_rank < 2) throw InputError("--max-rank must be at least 2");
  SweepOptions options;
  options.max_rank = config.max_rank;
  options.exhaustive_rank = config.exhaustive_rank;
  options.seed = config.seed;
  options.samples = config.samples;
  const auto suites = config.suites.empty() ? suite_names() : config.suites;

  bool all_passed = true;
  nlohmann::json report = nlohmann::json::array();
  for (const auto& name : suites) {
    const auto start = std::chrono::steady_clock::now();
    const SweepResult r = run_suite(name, options);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_passed = all_passed && r.passed();
    if (config.format == Format::Json) {
      report.push_back({{"suite", r.suite}, {"cases", r.cases}, {"passed", r.passed()}, {"failures", r.failures},
                        {"seconds", secs}});
      continue;
    }
    std::ostringstream line;
    line << (r.passed() ? "PASS " : "FAIL ") << r.suite << " (" << r.cases << " cases, " << std::fixed
         << std::setprecision(2) << secs << " s)";
    out << line.str() << '\n';
    for (const auto& f : r.failures) out << "  counterexample: " << f << '\n';
  }
  if (config.format == Format::Json) {
    emit_json(out, nlohmann::json{{"max_rank", config.max_rank}, {"seed", config.seed}, {"passed", all_passed},
                                  {"suites", report}});
  }
  return all_passed ? kExitOk : kExitCounterexample;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curve neighborhoods of Schubert varieties and cosmall roots"};
  app.require_subcommand(1);
  QueryConfig config;
  std::string format = "text";

  auto add_common = [&](CLI::App* sub, bool needs_type) {
    auto* t = sub->add_option("--type", config.type, "Dynkin type, e.g. B4 (A is indexed by its number of simple roots)");
    if (needs_type) t->required();
    sub->add_option("--rank", config.rank, "Rank, when --type is a bare family letter");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* cosmall = app.add_subcommand("cosmall", "Classify a positive root as cosmall / P-cosmall");
  add_common(cosmall, true);
  cosmall->add_option("--root", config.root, "Root over the simple roots, e.g. 1,2")->required();
  cosmall->add_option("--parabolic", config.parabolic, "Simple indices in Delta_P, e.g. 1,3");

  auto* curve = app.add_subcommand("curve-nbhd", "Curve neighborhood of X(w) in degree d");
  add_common(curve, true);
  curve->add_option("--word", config.words, "w as simple indices, e.g. \"1 2 1\"")->expected(0, 1);
  curve->add_option("--degree", config.degree, "Degree over the simple coroots outside Delta_P");
  curve->add_option("--parabolic", config.parabolic, "Simple indices in Delta_P");

  auto* greedy = app.add_subcommand("greedy", "Maximal roots and greedy decomposition of a degree");
  add_common(greedy, true);
  greedy->add_option("--degree", config.degree, "Degree over the simple coroots outside Delta_P")->required();
  greedy->add_option("--parabolic", config.parabolic, "Simple indices in Delta_P");

  auto* hecke = app.add_subcommand("hecke", "Hecke product u.v");
  add_common(hecke, true);
  hecke->add_option("--word", config.words, "Give twice: u, then v")->required()->expected(1)->multi_option_policy(
      CLI::MultiOptionPolicy::TakeAll);

  auto* table = app.add_subcommand("table", "Cosmall roots with Delta(alpha) for a classical type");
  add_common(table, true);

  auto* verify = app.add_subcommand("verify", "Exhaustive and sampled consistency sweeps");
  add_common(verify, false);
  verify->add_option("--max-rank", config.max_rank, "Largest rank swept");
  verify->add_option("--exhaustive-rank", config.exhaustive_rank, "Largest rank swept exhaustively where sampling applies");
  verify->add_option("--suite", config.suites, "Suite to run (repeatable); default all")
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", config.seed, "Seed for sampled checks");
  verify->add_option("--samples", config.samples, "Samples per type for sampled checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }
  config.format = format == "json" ? Format::Json : Format::Text;

  try {
    if (*cosmall) return cmd_cosmall(config, out);
    if (*curve) return cmd_curve_nbhd(config, out);
    if (*greedy) return cmd_greedy(config, out);
    if (*hecke) return cmd_hecke(config, out);
    if (*table) return cmd_table(config, out);
    if (*verify) return cmd_verify(config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace curvenbhd::cli
