#ifndef LND_TOOLS_CLI_HPP
#define LND_TOOLS_CLI_HPP

// Command-line front end. Every subcommand parses its flags, calls into the
// library and formats the result; exit codes are 0 (success / all checks
// passed), 1 (a verification failed) and 2 (usage or input error).

#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lnd/io.hpp"
#include "lnd/lnd.hpp"

namespace lnd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Input error tied to a command-line flag.
class FlagError : public Error {
 public:
  FlagError(const std::string& flag, const std::string& message) : Error(flag + ": " + message) {}
};

namespace detail {

struct Options {
  std::string output = "text";
  std::string ring, weights, derivation, poly, point, param = "r", by, order = "grevlex", mode = "ideal", loc, slice;
  std::vector<std::string> gens, candidates;
  unsigned times = 1, rounds = 3, slice_power = 0, clearing_bound = 16;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
};

/// Parses a polynomial flag, turning grammar errors into a positioned
/// message that names the flag.
inline Polynomial poly_arg(const std::string& flag, const std::string& text, const Ring& ring) {
  try {
    return parse_polynomial(text, ring);
  } catch (const ParseError& e) {
    throw FlagError(flag, e.message() + " at position " + std::to_string(e.position()) + "\n  " + text + "\n  " +
                              std::string(e.position(), ' ') + "^");
  }
}

inline std::vector<Polynomial> poly_list(const std::string& flag, const std::vector<std::string>& texts,
                                         const Ring& ring) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(poly_arg(flag, t, ring));
  return out;
}

inline Ring ring_arg(const Options& o) {
  if (o.ring.empty()) throw FlagError("--ring", "required");
  return parse_ring(o.ring, o.weights);
}

inline NamedDerivation derivation_arg(const Options& o) {
  if (o.derivation.empty()) throw FlagError("--derivation", "required");
  NamedDerivation nd = load_derivation(o.derivation);
  if (!o.ring.empty()) {
    const Ring declared = parse_ring(o.ring, o.weights);
    if (declared.variables() != nd.derivation.ring().variables())
      throw FlagError("--ring", "does not match the derivation's ring " + nd.derivation.ring().to_string());
  }
  return nd;
}

/// Slice from --slice/--slice-power over --loc, or the builtin's default.
inline std::pair<std::size_t, Slice> slice_arg(const Options& o, const NamedDerivation& nd) {
  const Derivation& d = nd.derivation;
  std::size_t loc;
  if (!o.loc.empty()) {
    auto idx = d.ring().find(o.loc);
    if (!idx) throw FlagError("--loc", "unknown variable '" + o.loc + "'");
    loc = *idx;
  } else if (nd.slice && !nd.slice->is_polynomial()) {
    loc = nd.slice->denom_var();
  } else {
    throw FlagError("--loc", "required");
  }
  if (!o.slice.empty()) {
    LaurentElement sigma(poly_arg("--slice", o.slice, d.ring()), loc, o.slice_power);
    return {loc, Slice::make(d, sigma)};
  }
  if (nd.slice && nd.slice->denom_var() == loc) return {loc, Slice::make(d, *nd.slice)};
  throw FlagError("--slice", "required for this derivation and localization variable");
}

inline json poly_list_json(const std::vector<Polynomial>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(print_canonical(p));
  return a;
}

inline std::string point_text(const Point& p) { return p.to_string(); }

}  // namespace detail

/// Runs the tool on `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  Options o;
  CLI::App app{"lnd: exact computations with locally nilpotent derivations"};
  app.require_subcommand(1);
  app.add_option("--output", o.output, "Output mode")->check(CLI::IsMember({"text", "json"}));

  auto ring_opts = [&](CLI::App* c, bool required) {
    auto* r = c->add_option("--ring", o.ring, "Comma-separated variables, e.g. \"x,s,t,u,v\"");
    if (required) r->required();
    c->add_option("--weights", o.weights, "Comma-separated positive weights");
  };
  auto deriv_opt = [&](CLI::App* c) {
    c->add_option("--derivation", o.derivation, "builtin:D|Delta|DeltaPrime or JSON file")->required();
    ring_opts(c, false);
  };
  auto slice_opts = [&](CLI::App* c) {
    c->add_option("--loc", o.loc, "Localization variable");
    c->add_option("--slice", o.slice, "Slice numerator (denominator is loc^power)");
    c->add_option("--slice-power", o.slice_power, "Power of loc in the slice denominator");
    c->add_option("--clearing-bound", o.clearing_bound, "Max power of loc tried when clearing denominators");
  };

  auto* eval = app.add_subcommand("eval", "Evaluate a polynomial at a point");
  ring_opts(eval, true);
  eval->add_option("--poly", o.poly)->required();
  eval->add_option("--point", o.point, "Comma-separated rationals")->required();

  auto* derive = app.add_subcommand("derive", "Apply a derivation (k times)");
  deriv_opt(derive);
  derive->add_option("--poly", o.poly)->required();
  derive->add_option("--times", o.times, "Number of applications");

  auto* exp = app.add_subcommand("exp", "Exponential map mu_r(f)");
  deriv_opt(exp);
  exp->add_option("--poly", o.poly)->required();
  exp->add_option("--param", o.param, "Parameter name");

  auto* act = app.add_subcommand("act", "Flow a point along its orbit");
  deriv_opt(act);
  act->add_option("--point", o.point)->required();
  act->add_option("--by", o.by, "Group parameter a")->required();

  auto* inv = app.add_subcommand("invariant", "Test d(f) = 0");
  deriv_opt(inv);
  inv->add_option("--poly", o.poly)->required();

  auto* gb = app.add_subcommand("groebner", "Reduced Groebner basis");
  ring_opts(gb, true);
  gb->add_option("--gen", o.gens, "Generator (repeatable)")->required();
  gb->add_option("--order", o.order, "lex|grlex|grevlex|block:k");

  auto* rel = app.add_subcommand("relations", "Relation ideal of images");
  ring_opts(rel, true);
  rel->add_option("--image", o.gens, "Image (repeatable)")->required();

  auto* mem = app.add_subcommand("member", "Ideal or subalgebra membership");
  ring_opts(mem, true);
  mem->add_option("--poly", o.poly)->required();
  mem->add_option("--gen", o.gens, "Generator (repeatable)")->required();
  mem->add_option("--mode", o.mode)->check(CLI::IsMember({"ideal", "subalgebra"}));

  auto* kc = app.add_subcommand("kernel-check", "Check that candidates generate the kernel");
  deriv_opt(kc);
  kc->add_option("--candidate", o.candidates, "Candidate generator (repeatable)")->required();
  slice_opts(kc);

  auto* kcomp = app.add_subcommand("kernel-compute", "Iterate the kernel check");
  deriv_opt(kcomp);
  kcomp->add_option("--rounds", o.rounds, "Maximum rounds");
  slice_opts(kcomp);

  auto* paper = app.add_subcommand("paper", "Built-in verification suites");
  paper->require_subcommand(1);
  auto* verify = paper->add_subcommand("verify", "Replay every symbolic identity");
  auto* random = paper->add_subcommand("random", "Randomized point-level checks");
  random->add_option("--seed", o.seed);
  random->add_option("--samples", o.samples)->check(CLI::PositiveNumber);

  std::vector<std::string> storage{"lnd"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const bool as_json = o.output == "json";
  auto emit = [&](const json& j, const std::string& text) {
    if (as_json) out << j.dump(2) << "\n";
    else out << text;
  };

  try {
    if (*eval) {
      const Ring ring = ring_arg(o);
      const Rational v = evaluate(poly_arg("--poly", o.poly, ring), parse_point(o.point, ring));
      emit(json{{"value", v.to_string()}}, v.to_string() + "\n");
    } else if (*derive) {
      const auto nd = derivation_arg(o);
      const Polynomial r = apply_iter(nd.derivation, poly_arg("--poly", o.poly, nd.derivation.ring()), o.times);
      emit(json{{"result", print_canonical(r)}, {"times", o.times}}, print_canonical(r) + "\n");
    } else if (*exp) {
      const auto nd = derivation_arg(o);
      const ExtendedRing ext = ExtendedRing::make(nd.derivation.ring(), o.param);
      const Polynomial mu = exponential(nd.derivation, poly_arg("--poly", o.poly, nd.derivation.ring()), ext);
      const std::string text = print_by_parameter(mu, ext.param);
      emit(json{{"result", text}, {"param", o.param}}, text + "\n");
    } else if (*act) {
      const auto nd = derivation_arg(o);
      const Point q = orbit_point(nd.derivation, parse_rational(o.by), parse_point(o.point, nd.derivation.ring()));
      json coords = json::array();
      for (const auto& c : q.coordinates) coords.push_back(c.to_string());
      emit(json{{"point", coords}}, point_text(q) + "\n");
    } else if (*inv) {
      const auto nd = derivation_arg(o);
      const Polynomial f = poly_arg("--poly", o.poly, nd.derivation.ring());
      const Polynomial df = apply(nd.derivation, f);
      emit(json{{"invariant", df.is_zero()}, {"image", print_canonical(df)}},
           df.is_zero() ? "true\n" : "false: d(f) = " + print_canonical(df) + "\n");
      if (!df.is_zero()) return kExitFailed;
    } else if (*gb) {
      const Ring ring = ring_arg(o);
      const GroebnerBasis basis = buchberger(poly_list("--gen", o.gens, ring), MonomialOrder::from_string(o.order));
      std::string text;
      for (const auto& g : basis.generators()) text += print_canonical(g) + "\n";
      emit(json{{"order", basis.order().to_string()}, {"basis", poly_list_json(basis.generators())}}, text);
    } else if (*rel) {
      const Ring ring = ring_arg(o);
      const RelationIdeal ideal = relation_ideal(poly_list("--image", o.gens, ring));
      std::string text;
      for (const auto& g : ideal.generators) text += print_canonical(g) + "\n";
      if (ideal.generators.empty()) text = "0\n";
      emit(json{{"presentation", ideal.presentation.variables()}, {"generators", poly_list_json(ideal.generators)}},
           text);
    } else if (*mem) {
      const Ring ring = ring_arg(o);
      const Polynomial f = poly_arg("--poly", o.poly, ring);
      const auto gens = poly_list("--gen", o.gens, ring);
      if (o.mode == "ideal") {
        const bool in = ideal_membership(f, gens);
        emit(json{{"mode", "ideal"}, {"member", in}}, in ? "member\n" : "not member\n");
      } else {
        const auto rep = subalgebra_membership(f, gens);
        json j{{"mode", "subalgebra"}, {"member", rep.has_value()}};
        if (rep) j["representation"] = print_canonical(*rep);
        emit(j, rep ? print_canonical(*rep) + "\n" : "not member\n");
      }
    } else if (*kc) {
      const auto nd = derivation_arg(o);
      const auto [loc, slice] = slice_arg(o, nd);
      KernelOptions kopts;
      kopts.clearing_bound = o.clearing_bound;
      const auto outcome = kernel_check(nd.derivation, poly_list("--candidate", o.candidates, nd.derivation.ring()),
                                        loc, slice, kopts);
      std::string text = to_string(outcome.status) + "\n";
      json steps = json::array();
      for (const auto& s : outcome.transcript) {
        text += "  relation " + print_canonical(s.relation) + " -> " + print_canonical(s.reduced) + " : " +
                (s.member() ? "member " + print_canonical(*s.representation) : "not member") + "\n";
        json step{{"relation", print_canonical(s.relation)}, {"reduced", print_canonical(s.reduced)},
                  {"member", s.member()}};
        if (s.member()) step["representation"] = print_canonical(*s.representation);
        steps.push_back(step);
      }
      for (const auto& e : outcome.new_elements) text += "  new " + print_canonical(e) + "\n";
      if (!outcome.note.empty()) text += "  note: " + outcome.note + "\n";
      emit(json{{"status", to_string(outcome.status)}, {"transcript", steps},
                {"new_elements", poly_list_json(outcome.new_elements)}, {"note", outcome.note}},
           text);
    } else if (*kcomp) {
      const auto nd = derivation_arg(o);
      const auto [loc, slice] = slice_arg(o, nd);
      KernelOptions kopts;
      kopts.clearing_bound = o.clearing_bound;
      const auto result = kernel_compute(nd.derivation, loc, slice, o.rounds, kopts);
      if (const auto* s = std::get_if<Stabilized>(&result)) {
        std::string text = "Stabilized in round " + std::to_string(s->rounds) + "\n";
        for (const auto& g : s->generators) text += "  " + print_canonical(g) + "\n";
        emit(json{{"status", "Stabilized"}, {"rounds", s->rounds}, {"generators", poly_list_json(s->generators)}},
             text);
      } else {
        const auto& n = std::get<NonStabilized>(result);
        std::string text = "NonStabilized after " + std::to_string(n.adjoined.size()) + " rounds\n  generator counts:";
        for (auto c : n.generator_counts) text += " " + std::to_string(c);
        text += "\n";
        json rounds = json::array();
        for (std::size_t r = 0; r < n.adjoined.size(); ++r) {
          text += "  round " + std::to_string(r + 1) + ":\n";
          for (const auto& e : n.adjoined[r]) text += "    " + print_canonical(e) + "\n";
          rounds.push_back(poly_list_json(n.adjoined[r]));
        }
        emit(json{{"status", "NonStabilized"}, {"generator_counts", n.generator_counts}, {"adjoined", rounds}}, text);
      }
    } else if (*paper) {
      const PaperContext ctx = builtin_context();
      const VerificationReport report = *verify ? verify_paper(ctx) : random_suite(ctx, o.seed, o.samples);
      const std::string summary = std::to_string(report.passed_count()) + "/" + std::to_string(report.checks.size()) +
                                  " checks passed\n";
      emit(report_to_json(report), report.to_text() + summary);
      return report.all_passed() ? kExitOk : kExitFailed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace lnd::cli

#endif  // LND_TOOLS_CLI_HPP
