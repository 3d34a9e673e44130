// submodal.cpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end: evaluation, theta operators, sentence builders,
// normal forms, equivalence sweeps, the universal-consequence sieve, and
// the scripted demos. Exit codes: 0 verified/true, 1 refuted/false,
// 2 exhausted-without-decision, 3 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "submodal/builders.hpp"
#include "submodal/classify.hpp"
#include "submodal/corpus.hpp"
#include "submodal/enumerate.hpp"
#include "submodal/modal.hpp"
#include "submodal/parse.hpp"
#include "submodal/render.hpp"
#include "submodal/report.hpp"
#include "submodal/transforms.hpp"
#include "submodal/verify.hpp"

namespace {

using namespace submodal;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Common {
  std::string sig_path;
  bool json = false;
  int jobs = 1;

  Signature signature() const {
    if (sig_path.empty())
      throw std::runtime_error("--sig FILE.sig is required for this command");
    try {
      return parse_signature(read_file(sig_path));
    } catch (const ParseError& e) {
      throw std::runtime_error(sig_path + ": " + e.what());
    }
  }
};

Formula load_formula(const std::string& path, const Signature& sig) {
  try {
    return parse_formula(read_file(path), sig);
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

FiniteModel load_model(const std::string& path, const Signature& sig) {
  try {
    return parse_model(read_file(path), sig);
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void add_common(CLI::App* cmd, Common& common, bool needs_sig = true) {
  if (needs_sig)
    cmd->add_option("--sig", common.sig_path, "signature file (.sig)");
  cmd->add_flag("--json", common.json, "machine-readable report");
  cmd->add_option("--jobs", common.jobs, "worker threads")
      ->check(CLI::Range(1, 64));
}

int emit_bool(const Common& common, const std::string& claim, bool value,
              const nlohmann::ordered_json& details) {
  if (common.json) {
    Report rep;
    rep.claim = claim;
    rep.verdict = value ? Verdict::Verified : Verdict::Refuted;
    rep.details = details;
    std::cout << rep.json_text();
  } else {
    std::cout << (value ? "true" : "false") << "\n";
  }
  return value ? 0 : 1;
}

int emit_formula(const Common& common, const Formula& f) {
  if (common.json) {
    nlohmann::ordered_json j;
    j["formula"] = render_formula(f);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << render_formula(f) << "\n";
  }
  return 0;
}

int emit_report(const Common& common, const Report& rep) {
  if (common.json)
    std::cout << rep.json_text();
  else
    std::cout << rep.text();
  return rep.exit_code();
}

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "submodal: satisfiability in submodels and extensions of finite "
      "first-order structures"};
  app.require_subcommand(1);

  // eval
  Common c_eval;
  std::string eval_mdl, eval_fml;
  auto* cmd_eval = app.add_subcommand("eval", "evaluate a sentence in a model");
  cmd_eval->add_option("model", eval_mdl, "model file (.mdl)")->required();
  cmd_eval->add_option("formula", eval_fml, "formula file (.fml)")->required();
  add_common(cmd_eval, c_eval);

  // theta
  Common c_theta;
  std::string theta_mdl, theta_fml;
  int theta_le = -1, theta_eq = -1, theta_gen = -1;
  auto* cmd_theta =
      app.add_subcommand("theta", "does some submodel satisfy the sentence");
  cmd_theta->add_option("model", theta_mdl)->required();
  cmd_theta->add_option("formula", theta_fml)->required();
  auto* opt_le = cmd_theta->add_option("--le", theta_le, "submodel size <= N");
  auto* opt_eq = cmd_theta->add_option("--eq", theta_eq, "submodel size == N");
  auto* opt_gen =
      cmd_theta->add_option("--gen", theta_gen, "generated by <= N elements");
  opt_le->excludes(opt_eq)->excludes(opt_gen);
  opt_eq->excludes(opt_gen);
  add_common(cmd_theta, c_theta);

  // theta-star
  Common c_star;
  std::string star_mdl, star_fml;
  int star_bound = 0;
  auto* cmd_star = app.add_subcommand(
      "theta-star", "does some extension within the bound satisfy the sentence");
  cmd_star->add_option("model", star_mdl)->required();
  cmd_star->add_option("formula", star_fml)->required();
  cmd_star->add_option("--bound", star_bound, "largest extension size")
      ->required();
  add_common(cmd_star, c_star);

  // build-theta
  Common c_build;
  std::string build_fml;
  int build_n = 0;
  bool build_exact = false, build_monadic = false;
  auto* cmd_build = app.add_subcommand(
      "build-theta", "the sentence expressing bounded submodel satisfiability");
  cmd_build->add_option("formula", build_fml)->required();
  cmd_build->add_option("--n", build_n, "submodel size bound");
  cmd_build->add_flag("--exact", build_exact,
                      "exact cardinality (adds distinctness)");
  cmd_build->add_flag("--monadic", build_monadic,
                      "closed form over a purely monadic signature (no --n)");
  add_common(cmd_build, c_build);

  // relativize
  Common c_rel;
  std::string rel_fml, rel_vars;
  auto* cmd_rel =
      app.add_subcommand("relativize", "restrict quantifiers to a tuple");
  cmd_rel->add_option("formula", rel_fml)->required();
  cmd_rel->add_option("--vars", rel_vars, "comma-separated variables")
      ->required();
  add_common(cmd_rel, c_rel);

  // normalize
  Common c_norm;
  std::string norm_fml;
  auto* cmd_norm = app.add_subcommand(
      "normalize",
      "monadic normal form when monadic-like, negation normal form otherwise");
  cmd_norm->add_option("formula", norm_fml)->required();
  add_common(cmd_norm, c_norm);

  // classify
  Common c_cls;
  std::string cls_fml;
  auto* cmd_cls = app.add_subcommand("classify", "syntactic class read-off");
  cmd_cls->add_option("formula", cls_fml)->required();
  add_common(cmd_cls, c_cls);

  // equiv
  Common c_equiv;
  std::string equiv_a, equiv_b;
  int equiv_n = 0;
  auto* cmd_equiv = app.add_subcommand(
      "equiv", "do two sentences agree on all models up to a size");
  cmd_equiv->add_option("first", equiv_a)->required();
  cmd_equiv->add_option("second", equiv_b)->required();
  cmd_equiv->add_option("--max-size", equiv_n, "largest universe")->required();
  add_common(cmd_equiv, c_equiv);

  // witness-scan
  Common c_scan;
  std::string scan_fml;
  int scan_n = 0;
  auto* cmd_scan = app.add_subcommand(
      "witness-scan", "least submodel size that preserves satisfaction");
  cmd_scan->add_option("formula", scan_fml)->required();
  cmd_scan->add_option("--max-size", scan_n, "largest universe")->required();
  add_common(cmd_scan, c_scan);

  // sieve
  Common c_sieve;
  std::string sieve_fml;
  int sieve_budget = 0, sieve_n = 0;
  auto* cmd_sieve = app.add_subcommand(
      "sieve", "universal consequences within a syntactic budget");
  cmd_sieve->add_option("formula", sieve_fml)->required();
  cmd_sieve->add_option("--budget", sieve_budget, "variables and literals")
      ->required();
  cmd_sieve->add_option("--max-size", sieve_n, "largest universe")->required();
  add_common(cmd_sieve, c_sieve);

  // demo
  Common c_demo;
  std::string demo_name;
  auto* cmd_demo =
      app.add_subcommand("demo", "scripted finite-scale verification");
  cmd_demo->add_option("name", demo_name,
                       "maltsev | quasigroup | abelian | wellfounded | "
                       "density | theorem1")
      ->required();
  add_common(cmd_demo, c_demo, /*needs_sig=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (*cmd_eval) {
      Signature sig = c_eval.signature();
      FiniteModel m = load_model(eval_mdl, sig);
      Formula f = load_formula(eval_fml, sig);
      bool v = evaluate(m, f);
      return emit_bool(c_eval, "sentence holds in the model", v,
                       {{"formula", render_formula(f)}});
    }
    if (*cmd_theta) {
      Signature sig = c_theta.signature();
      FiniteModel m = load_model(theta_mdl, sig);
      Formula f = load_formula(theta_fml, sig);
      bool v;
      nlohmann::ordered_json details{{"formula", render_formula(f)}};
      if (opt_le->count()) {
        v = theta_le_sem(m, f, theta_le);
        details["bound"] = {{"kind", "le"}, {"n", theta_le}};
      } else if (opt_eq->count()) {
        v = theta_eq_sem(m, f, theta_eq);
        details["bound"] = {{"kind", "eq"}, {"n", theta_eq}};
      } else if (opt_gen->count()) {
        v = theta_gen_sem(m, f, theta_gen);
        details["bound"] = {{"kind", "gen"}, {"n", theta_gen}};
      } else {
        v = theta_sem(m, f);
        details["bound"] = nullptr;
      }
      return emit_bool(c_theta, "some submodel satisfies the sentence", v,
                       details);
    }
    if (*cmd_star) {
      Signature sig = c_star.signature();
      FiniteModel m = load_model(star_mdl, sig);
      Formula f = load_formula(star_fml, sig);
      bool v = theta_star_sem(m, f, star_bound);
      return emit_bool(
          c_star, "some extension within the bound satisfies the sentence", v,
          {{"formula", render_formula(f)}, {"bound", star_bound}});
    }
    if (*cmd_build) {
      Signature sig = c_build.signature();
      Formula f = load_formula(build_fml, sig);
      if (build_monadic) {
        return emit_formula(c_build, build_theta_monadic(f, sig));
      }
      if (build_n < 1)
        throw std::runtime_error("--n N (>= 1) is required without --monadic");
      Formula out = build_exact ? build_theta_eq(f, sig, build_n)
                                : build_theta_le(f, sig, build_n);
      return emit_formula(c_build, out);
    }
    if (*cmd_rel) {
      Signature sig = c_rel.signature();
      Formula f = load_formula(rel_fml, sig);
      auto vars = split_names(rel_vars);
      return emit_formula(c_rel, relativize(f, vars));
    }
    if (*cmd_norm) {
      Signature sig = c_norm.signature();
      Formula f = load_formula(norm_fml, sig);
      Formula out =
          classify(f).is_monadic_like ? normalize_monadic(f) : nnf(f);
      return emit_formula(c_norm, out);
    }
    if (*cmd_cls) {
      Signature sig = c_cls.signature();
      Formula f = load_formula(cls_fml, sig);
      Classification cl = classify(f);
      nlohmann::ordered_json j;
      j["is_open"] = cl.is_open;
      j["is_existential"] = cl.is_existential;
      j["is_universal"] = cl.is_universal;
      j["is_sigma2"] = cl.is_sigma2;
      j["is_ea_combination"] = cl.is_ea_combination;
      j["is_monadic_like"] = cl.is_monadic_like;
      j["uses_equality"] = cl.uses_equality;
      j["existential_width"] = cl.existential_width;
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (*cmd_equiv) {
      Signature sig = c_equiv.signature();
      Formula a = load_formula(equiv_a, sig);
      Formula b = load_formula(equiv_b, sig);
      return emit_report(c_equiv,
                         check_equiv(a, b, sig, equiv_n, c_equiv.jobs));
    }
    if (*cmd_scan) {
      Signature sig = c_scan.signature();
      Formula f = load_formula(scan_fml, sig);
      return emit_report(c_scan, witness_bound_scan(f, sig, scan_n));
    }
    if (*cmd_sieve) {
      Signature sig = c_sieve.signature();
      Formula f = load_formula(sieve_fml, sig);
      SieveResult r = universal_consequence_sieve(f, sig, sieve_budget,
                                                  sieve_n, c_sieve.jobs);
      return emit_report(c_sieve, r.report);
    }
    if (*cmd_demo) {
      return emit_report(c_demo, demo(demo_name));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
