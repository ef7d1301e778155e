// Command-line front end: validation, construction, classification,
// formula/oracle comparison, and reproduction of the reference tables.
//
// Exit codes: 0 success (or capable), 1 negative result (not capable,
// invalid algebra, failed reproduction), 2 undecided, 3 input errors,
// 4 oracle limit exceeded, 5 internal errors.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "superlie/superlie.hpp"

using namespace superlie;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitInput = 3;
constexpr int kExitLimit = 4;
constexpr int kExitInternal = 5;

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Options {
  bool json = false;
  OracleLimits limits;
};

struct InputAlgebra {
  LieSuperalgebra algebra;
  std::string kind;  // "file" or "expression"
  std::string source;
  std::string digest;
};

InputAlgebra load_algebra(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    std::string bytes = detail::file_contents(arg);
    return {read_algebra_json(bytes), "file", arg, fnv1a_digest(bytes)};
  }
  return {construct_expression(arg), "expression", arg, fnv1a_digest(arg)};
}

// Canonical presentation with an optional truncation override. The class of
// the algebra is known here, so a bound that would truncate away information
// is rejected instead of silently miscomputing.
FreePresentation presentation_with_bound(const LieSuperalgebra& L, int class_bound) {
  FreePresentation p = presentation_of(L);
  if (class_bound > 0) {
    if (class_bound < p.class_bound)
      throw DomainError("class bound " + std::to_string(class_bound) +
                        " is below nilpotency class + 1 = " + std::to_string(p.class_bound));
    p.class_bound = class_bound;
  }
  return p;
}

std::string describe(const InputAlgebra& in) {
  std::string name = in.algebra.name().empty() ? in.source : in.algebra.name();
  return name + "  dim " + in.algebra.sdim().to_string();
}

void emit(const Options& opt, const ordered_json& report, const std::string& text) {
  if (opt.json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
}

ordered_json report_header(const std::string& command, const InputAlgebra& in) {
  ordered_json j;
  j["command"] = command;
  j["input"] = {{"kind", in.kind}, {"source", in.source}, {"digest", in.digest}};
  return j;
}

// ---------------------------------------------------------------------------

int cmd_validate(const Options& opt, const std::string& input) {
  InputAlgebra in = load_algebra(input);
  ValidationReport rep = validate(in.algebra);

  ordered_json j = report_header("validate", in);
  j["dim_even"] = in.algebra.even_dim();
  j["dim_odd"] = in.algebra.dim() - in.algebra.even_dim();
  j["valid"] = rep.ok();
  auto issues = ordered_json::array();
  std::string text = "command: validate\ninput: " + describe(in) + "  digest " + in.digest +
                     "\n";
  for (const auto& issue : rep.issues) {
    ordered_json ji;
    ji["message"] = issue.message;
    std::string residual;
    for (const auto& [k, c] : issue.residual.terms()) {
      if (!residual.empty()) residual += " + ";
      residual += to_string(c) + "*" + in.algebra.label(k);
    }
    ji["residual"] = residual;
    issues.push_back(ji);
    text += "violation: " + issue.message +
            (residual.empty() ? std::string{} : "  residual " + residual) + "\n";
  }
  j["issues"] = issues;
  text += rep.ok() ? "result: valid\n"
                   : "result: invalid (" + std::to_string(rep.issues.size()) + " issues)\n";
  emit(opt, j, text);
  return rep.ok() ? kExitOk : kExitNegative;
}

int cmd_construct(const std::string& expr, const std::string& out_path) {
  LieSuperalgebra L = construct_expression(expr);
  std::string payload = write_algebra_json(L);
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + out_path + "'");
    out << payload;
  }
  return kExitOk;
}

int cmd_recognize(const Options& opt, const std::string& input) {
  InputAlgebra in = load_algebra(input);
  FamilyDescriptor d = recognize(in.algebra);

  ordered_json j = report_header("recognize", in);
  j["dim"] = in.algebra.sdim().to_string();
  j["family"] = d.to_string();
  j["recognized"] = d.kind != FamilyDescriptor::Kind::unrecognized;
  if (d.kind != FamilyDescriptor::Kind::unrecognized) {
    j["parameters"] = {{"m", d.m}, {"n", d.n}, {"r", d.r}, {"s", d.s}};
  } else {
    j["reason"] = d.reason;
  }
  std::string text = "command: recognize\ninput: " + describe(in) + "  digest " + in.digest +
                     "\nfamily: " + d.to_string() + "\n";
  emit(opt, j, text);
  return kExitOk;
}

int cmd_capable(const Options& opt, const std::string& input, bool with_oracle,
                int class_bound) {
  InputAlgebra in = load_algebra(input);
  CapabilityVerdict verdict = is_capable(in.algebra);

  ordered_json j = report_header("capable", in);
  j["dim"] = in.algebra.sdim().to_string();
  j["family"] = verdict.family.to_string();
  j["verdict"] = to_string(verdict.status);
  j["rule"] = std::string(verdict.rule);
  if (verdict.epicenter_dim) j["epicenter"] = verdict.epicenter_dim->to_string();
  if (!verdict.note.empty()) j["note"] = verdict.note;

  std::string text = "command: capable\ninput: " + describe(in) + "  digest " + in.digest +
                     "\nfamily: " + verdict.family.to_string() + "\nverdict: " +
                     to_string(verdict.status) + "   [" + std::string(verdict.rule) + "]\n";
  if (verdict.epicenter_dim) text += "epicenter: " + verdict.epicenter_dim->to_string() + "\n";
  if (!verdict.note.empty()) text += "note: " + verdict.note + "\n";

  Capability status = verdict.status;
  if (with_oracle) {
    FreePresentation p = presentation_with_bound(in.algebra, class_bound);
    OracleRun run = run_presentation(p, opt.limits);
    Capability oracle_status =
        run.epicenter == SuperDim{0, 0} ? Capability::capable : Capability::not_capable;
    ordered_json jo;
    jo["epicenter"] = run.epicenter.to_string();
    jo["rule"] = std::string(rules::epicenter_oracle_rule);
    jo["class_bound"] = p.class_bound;
    jo["verdict"] = to_string(oracle_status);
    if (verdict.status != Capability::undecided)
      jo["agrees_with_table"] = oracle_status == verdict.status;
    j["oracle"] = jo;
    text += "oracle epicenter: " + run.epicenter.to_string() + "  class-bound " +
            std::to_string(p.class_bound) + "   [" + std::string(rules::epicenter_oracle_rule) +
            "]\noracle verdict: " + to_string(oracle_status) + "\n";
    if (verdict.status != Capability::undecided) {
      bool agree = oracle_status == verdict.status;
      text += std::string("agreement: ") + (agree ? "yes" : "NO") + "\n";
      if (!agree) throw InternalError("decision table and epicenter oracle disagree");
    }
    status = oracle_status;
  }
  emit(opt, j, text);
  switch (status) {
    case Capability::capable:
      return kExitOk;
    case Capability::not_capable:
      return kExitNegative;
    case Capability::undecided:
      return kExitUndecided;
  }
  return kExitInternal;
}

int cmd_multiplier(const Options& opt, const std::string& input, bool with_oracle,
                   int class_bound) {
  InputAlgebra in = load_algebra(input);
  FamilyDescriptor d = recognize(in.algebra);
  bool recognized = d.kind != FamilyDescriptor::Kind::unrecognized;
  if (!recognized && !with_oracle)
    throw InputError("no closed multiplier formula for " + d.to_string() +
                     "; rerun with --oracle");

  ordered_json j = report_header("multiplier", in);
  j["dim"] = in.algebra.sdim().to_string();
  j["family"] = d.to_string();
  std::string text = "command: multiplier\ninput: " + describe(in) + "  digest " + in.digest +
                     "\nfamily: " + d.to_string() + "\n";

  std::optional<SuperDim> formula_value;
  if (recognized) {
    MultiplierValue mv = multiplier_of_family(d);
    formula_value = mv.value;
    j["formula"] = {{"value", mv.value.to_string()}, {"rule", std::string(mv.rule)}};
    text += "formula multiplier: " + mv.value.to_string() + "   [" + std::string(mv.rule) +
            "]\n";
  }
  if (with_oracle) {
    FreePresentation p = presentation_with_bound(in.algebra, class_bound);
    OracleRun run = run_presentation(p, opt.limits);
    ordered_json jo;
    jo["value"] = run.multiplier.to_string();
    jo["rule"] = "hopf-multiplier-oracle";
    jo["class_bound"] = p.class_bound;
    auto reps = ordered_json::array();
    for (std::size_t i = 0; i < run.multiplier_reps.size(); ++i) reps.push_back(run.rep_string(i));
    jo["representatives"] = reps;
    j["oracle"] = jo;
    text += "oracle multiplier: " + run.multiplier.to_string() + "  class-bound " +
            std::to_string(p.class_bound) + "   [hopf-multiplier-oracle]\n";
    for (std::size_t i = 0; i < run.multiplier_reps.size(); ++i)
      text += "  representative: " + run.rep_string(i) + "\n";
    if (formula_value) {
      bool match = *formula_value == run.multiplier;
      j["match"] = match;
      text += std::string("match: ") + (match ? "true" : "false") + "\n";
    }
  }
  emit(opt, j, text);
  return kExitOk;
}

int cmd_corank(const Options& opt, const std::string& input, bool with_oracle) {
  InputAlgebra in = load_algebra(input);
  if (in.algebra.dim() == 0) throw DomainError("corank of the zero algebra is undefined");
  FamilyDescriptor d = recognize(in.algebra);
  bool recognized = d.kind != FamilyDescriptor::Kind::unrecognized;
  if (!recognized && !with_oracle)
    throw InputError("no closed corank formula for " + d.to_string() + "; rerun with --oracle");

  ordered_json j = report_header("corank", in);
  j["dim"] = in.algebra.sdim().to_string();
  j["family"] = d.to_string();
  j["bound"] = multiplier_bound(in.algebra.sdim().even, in.algebra.sdim().odd);
  std::string text = "command: corank\ninput: " + describe(in) + "  digest " + in.digest +
                     "\nfamily: " + d.to_string() + "\nmultiplier bound: " +
                     std::to_string(multiplier_bound(in.algebra.sdim().even,
                                                     in.algebra.sdim().odd)) +
                     "   [multiplier-bound]\n";
  std::optional<long long> formula_t;
  if (recognized) {
    formula_t = corank_of_family(d);
    j["formula"] = {{"value", *formula_t}, {"rule", std::string(rules::corank_defect)}};
    text += "formula corank: " + std::to_string(*formula_t) + "   [" +
            std::string(rules::corank_defect) + "]\n";
  }
  if (with_oracle) {
    OracleRun run = run_algebra_oracle(in.algebra, opt.limits);
    long long t = corank(in.algebra.sdim(), run.multiplier);
    j["oracle"] = {{"value", t}, {"multiplier", run.multiplier.to_string()},
                   {"rule", "hopf-multiplier-oracle"}};
    text += "oracle corank: " + std::to_string(t) + " (multiplier " +
            run.multiplier.to_string() + ")   [hopf-multiplier-oracle]\n";
    if (formula_t) {
      bool match = *formula_t == t;
      j["match"] = match;
      text += std::string("match: ") + (match ? "true" : "false") + "\n";
    }
  }
  emit(opt, j, text);
  return kExitOk;
}

int cmd_extsq(const Options& opt, const std::string& input, bool with_oracle) {
  InputAlgebra in = load_algebra(input);
  FamilyDescriptor d = recognize(in.algebra);
  bool recognized = d.kind != FamilyDescriptor::Kind::unrecognized;
  if (!recognized && !with_oracle)
    throw InputError("no closed exterior-square formula for " + d.to_string() +
                     "; rerun with --oracle");

  ordered_json j = report_header("extsq", in);
  j["dim"] = in.algebra.sdim().to_string();
  j["family"] = d.to_string();
  std::string text = "command: extsq\ninput: " + describe(in) + "  digest " + in.digest +
                     "\nfamily: " + d.to_string() + "\n";
  std::optional<SuperDim> formula_value;
  if (recognized) {
    formula_value = exterior_square_of_family(d);
    j["formula"] = {{"value", formula_value->to_string()},
                    {"rule", std::string(rules::exterior_square_extension)}};
    text += "formula exterior square: " + formula_value->to_string() + "   [" +
            std::string(rules::exterior_square_extension) + "]\n";
  }
  if (with_oracle) {
    OracleRun run = run_algebra_oracle(in.algebra, opt.limits);
    j["oracle"] = {{"value", run.exterior_square.to_string()},
                   {"rule", "exterior-square-oracle"}};
    text += "oracle exterior square: " + run.exterior_square.to_string() +
            "   [exterior-square-oracle]\n";
    if (formula_value) {
      bool match = *formula_value == run.exterior_square;
      j["match"] = match;
      text += std::string("match: ") + (match ? "true" : "false") + "\n";
    }
  }
  emit(opt, j, text);
  return kExitOk;
}

int cmd_oracle(const Options& opt, const std::string& op, const std::string& path,
               int class_bound, bool stable) {
  std::string bytes = detail::file_contents(path);
  FreePresentation p = read_presentation(bytes);
  if (class_bound > 0) p.class_bound = class_bound;
  OracleRun run = stable ? run_presentation_stable(p, opt.limits)
                         : run_presentation(p, opt.limits);

  ordered_json j;
  j["command"] = "oracle " + op;
  j["input"] = {{"kind", "presentation"}, {"source", path}, {"digest", fnv1a_digest(bytes)}};
  j["class_bound"] = p.class_bound;
  j["presented_dim"] = run.presented_dim.to_string();
  std::string text = "command: oracle " + op + "\ninput: " + path + "  digest " +
                     fnv1a_digest(bytes) + "\nclass-bound: " + std::to_string(p.class_bound) +
                     "\npresented algebra dimension: " + run.presented_dim.to_string() + "\n";
  if (op == "multiplier") {
    j["multiplier"] = run.multiplier.to_string();
    auto reps = ordered_json::array();
    for (std::size_t i = 0; i < run.multiplier_reps.size(); ++i) reps.push_back(run.rep_string(i));
    j["representatives"] = reps;
    text += "multiplier: " + run.multiplier.to_string() + "   [hopf-multiplier-oracle]\n";
    for (std::size_t i = 0; i < run.multiplier_reps.size(); ++i)
      text += "  representative: " + run.rep_string(i) + "\n";
  } else if (op == "extsq") {
    j["exterior_square"] = run.exterior_square.to_string();
    text += "exterior square: " + run.exterior_square.to_string() +
            "   [exterior-square-oracle]\n";
  } else if (op == "epicenter") {
    j["epicenter"] = run.epicenter.to_string();
    j["capable"] = run.epicenter == SuperDim{0, 0};
    text += "epicenter: " + run.epicenter.to_string() + "   [epicenter-oracle]\n";
    text += std::string("capable: ") +
            (run.epicenter == SuperDim{0, 0} ? "true" : "false") + "\n";
  } else {
    throw InputError("unknown oracle operation '" + op +
                     "' (expected multiplier, extsq or epicenter)");
  }
  emit(opt, j, text);
  return kExitOk;
}

int cmd_table(const Options& opt, int k) {
  auto entries = corank_table(k);
  ordered_json j;
  j["command"] = "table";
  j["corank"] = k;
  auto out = ordered_json::array();
  std::string text = "command: table\ncorank " + std::to_string(k) + "   [" +
                     std::string(rules::corank_table_rule) + "]\n";
  bool failed = false;
  for (const auto& e : entries) {
    ordered_json je;
    je["label"] = e.label;
    std::string line = "  " + e.label;
    if (!e.constructible) {
      je["status"] = "not constructible from the available presentations";
      line += "   [opaque label; not constructible]";
    } else if (e.parametric) {
      je["status"] = "parametric family; corank 0 for every member";
      line += "   [parametric]";
    } else {
      long long t = corank_of_family(recognize(construct_expression(e.label)));
      je["computed_corank"] = t;
      if (e.known_divergent) {
        je["status"] = "known-divergent";
        je["listed_corank"] = k;
        line += "   computed corank " + std::to_string(t) + " [known-divergent: listed " +
                std::to_string(k) + "]";
      } else if (t == k) {
        je["status"] = "verified";
        line += "   corank " + std::to_string(t) + " [verified]";
      } else {
        je["status"] = "MISMATCH";
        failed = true;
        line += "   corank " + std::to_string(t) + " [MISMATCH: listed " + std::to_string(k) +
                "]";
      }
    }
    out.push_back(je);
    text += line + "\n";
  }
  j["entries"] = out;
  emit(opt, j, text);
  return failed ? kExitNegative : kExitOk;
}

// ---------------------------------------------------------------------------
// reproduce: recompute every reference value the library implements and
// report ok / known-divergent / FAIL per item.

struct Repro {
  const Options& opt;
  ordered_json items = ordered_json::array();
  int ok = 0, divergent = 0, failed = 0;
  std::string text = {};

  void add(const std::string& block, const std::string& id, const std::string& expected,
           const std::string& computed, bool known_divergent = false,
           const std::string& note = {}) {
    std::string status;
    if (known_divergent) {
      status = "known-divergent";
      ++divergent;
    } else if (expected == computed) {
      status = "ok";
      ++ok;
    } else {
      status = "FAIL";
      ++failed;
    }
    ordered_json j;
    j["block"] = block;
    j["id"] = id;
    j["expected"] = expected;
    j["computed"] = computed;
    j["status"] = status;
    if (!note.empty()) j["note"] = note;
    items.push_back(j);
    text += "[" + block + "] " + id + ": expected " + expected + ", computed " + computed +
            " ... " + status + "\n";
    if (!note.empty()) text += "    note: " + note + "\n";
  }
};

FreePresentation h1_minimal_presentation() {
  FreePresentation p;
  p.generators = {{"x", Parity::even}, {"y", Parity::odd}};
  p.class_bound = 3;
  auto x = BracketTerm::generator(0), y = BracketTerm::generator(1);
  p.relators.push_back(BracketTerm::bracket(y, y));
  p.relators.push_back(BracketTerm::bracket(x, BracketTerm::bracket(x, y)));
  p.relators.push_back(BracketTerm::bracket(y, BracketTerm::bracket(x, y)));
  return p;
}

int cmd_reproduce(const Options& opt) {
  Repro r{opt};

  // Structure of the catalog families.
  auto structure = [&](const std::string& expr, const std::string& expect_dims,
                       const std::string& expect_center, long long expect_class) {
    auto L = construct_expression(expr);
    r.add("structure", expr + " dims", expect_dims, superdim(L).to_string());
    r.add("structure", expr + " center", expect_center, superdim(center(L)).to_string());
    r.add("structure", expr + " class", std::to_string(expect_class),
          std::to_string(nilpotency_class(L).value()));
  };
  structure("H(1,0)", "(3|0)", "(1|0)", 2);
  structure("H(0,1)", "(1|1)", "(1|0)", 2);
  structure("H(2,1)", "(5|1)", "(1|0)", 2);
  structure("H_1", "(1|2)", "(0|1)", 2);
  structure("H_2", "(2|3)", "(0|1)", 2);
  structure("cover_of_H1", "(1|3)", "(0|1)", 3);

  {
    auto h01 = heisenberg_even(0, 1);
    auto q = quotient(h01, derived_subalgebra(h01));
    r.add("structure", "H(0,1)/L' recognized as", "A(0|1)",
          recognize(q.algebra).to_string());
    auto cover = named_example("cover_of_H1");
    auto qz = quotient(cover, center(cover));
    r.add("structure", "cover_of_H1/Z recognized as", "H_1", recognize(qz.algebra).to_string());
  }

  // Multiplier bound and closed forms.
  r.add("bound", "bound(1,0)", "0", std::to_string(multiplier_bound(1, 0)));
  r.add("bound", "bound(0,1)", "1", std::to_string(multiplier_bound(0, 1)));
  r.add("bound", "bound(2,3)", "13", std::to_string(multiplier_bound(2, 3)));

  auto mult = [&](const std::string& id, const MultiplierValue& v, const std::string& expect) {
    r.add("multiplier", id, expect, v.value.to_string());
  };
  mult("A(1|0)", multiplier_abelian(1, 0), "(0|0)");
  mult("A(1|1)", multiplier_abelian(1, 1), "(1|1)");
  mult("A(2|0)", multiplier_abelian(2, 0), "(1|0)");
  mult("H(1,0)", multiplier_heisenberg_even(1, 0), "(2|0)");
  mult("H(0,1)", multiplier_heisenberg_even(0, 1), "(0|0)");
  mult("H(1,1)", multiplier_heisenberg_even(1, 1), "(1|2)");
  mult("H_1", multiplier_heisenberg_odd(1), "(1|1)");
  mult("H_2", multiplier_heisenberg_odd(2), "(4|3)");
  mult("H_3", multiplier_heisenberg_odd(3), "(9|8)");
  mult("H(1,0)+A(1|0)", multiplier_of_family(recognize(construct_expression("H(1,0)+A(1|0)"))),
       "(4|0)");

  {
    // The documented dual reading for H(0,1)+A(1|0).
    const auto& div = known_divergences()[0];
    SuperDim computed =
        multiplier_of_family(recognize(construct_expression("H(0,1)+A(1|0)"))).value;
    SuperDim oracle =
        run_algebra_oracle(construct_expression("H(0,1)+A(1|0)"), r.opt.limits).multiplier;
    r.add("multiplier", "H(0,1)+A(1|0) computed (formula)", "(0|1)", computed.to_string());
    r.add("multiplier", "H(0,1)+A(1|0) computed (oracle)", "(0|1)", oracle.to_string());
    r.add("multiplier", "H(0,1)+A(1|0) recorded alternative reading", div.recorded,
          computed.to_string(), true, div.note);
  }

  // The worked two-generator computation.
  {
    auto res = hopf_multiplier(h1_minimal_presentation(), r.opt.limits);
    std::vector<std::string> words = res.representative_words;
    std::sort(words.begin(), words.end());
    std::string got;
    for (const auto& w : words) got += (got.empty() ? "" : ", ") + w;
    r.add("hopf", "M(H_1) via the minimal presentation", "(1|1)", res.value.to_string());
    r.add("hopf", "M(H_1) representatives", "[x,[x,y]], [y,y]", got);
  }

  // Formula vs oracle on a quick grid.
  for (const char* expr : {"A(1|1)", "A(0|2)", "H(1,0)", "H(0,1)", "H(0,2)", "H_1",
                           "H(0,1)+A(1|0)", "H(1,0)+A(1|0)", "H_1+A(1|0)"}) {
    auto L = construct_expression(expr);
    SuperDim formula = multiplier_of_family(recognize(L)).value;
    SuperDim oracle = run_algebra_oracle(L, r.opt.limits).multiplier;
    r.add("formula-vs-oracle", std::string(expr) + " multiplier", formula.to_string(),
          oracle.to_string());
  }

  // Exterior squares.
  auto ext = [&](const std::string& expr, const std::string& expect) {
    auto L = construct_expression(expr);
    SuperDim formula = exterior_square_of_family(recognize(L));
    SuperDim oracle = run_algebra_oracle(L, r.opt.limits).exterior_square;
    r.add("exterior-square", expr + " formula", expect, formula.to_string());
    r.add("exterior-square", expr + " oracle", expect, oracle.to_string());
  };
  ext("H(1,0)", "(3|0)");
  ext("H(0,1)", "(1|0)");
  ext("H_1", "(1|2)");
  ext("H_2", "(4|4)");

  // Capability verdicts from the decision table.
  auto cap = [&](const std::string& expr, Capability expect) {
    r.add("capability", expr, to_string(expect),
          to_string(is_capable(construct_expression(expr)).status));
  };
  cap("A(1|0)", Capability::not_capable);
  cap("A(0|1)", Capability::capable);
  cap("A(2|0)", Capability::capable);
  cap("A(1|1)", Capability::capable);
  cap("H(1,0)", Capability::capable);
  cap("H(0,1)", Capability::not_capable);
  cap("H(2,0)", Capability::not_capable);
  cap("H(1,1)", Capability::not_capable);
  cap("H(0,2)", Capability::not_capable);
  cap("H_1", Capability::capable);
  cap("H_2", Capability::not_capable);
  cap("H(1,0)+A(1|0)", Capability::capable);
  cap("H(1,0)+A(0|1)", Capability::capable);
  cap("H(0,1)+A(1|0)", Capability::not_capable);
  cap("H_1+A(1|0)", Capability::capable);
  cap("H_2+A(1|0)", Capability::not_capable);

  // Coranks.
  auto crk = [&](const std::string& expr, long long expect) {
    r.add("corank", expr, std::to_string(expect),
          std::to_string(corank_of_family(recognize(construct_expression(expr)))));
  };
  crk("H(1,0)", 1);
  crk("H(0,1)", 2);
  crk("H_1", 3);
  crk("H(2,0)", 5);
  crk("H(1,1)", 4);
  crk("H_2", 6);
  crk("H(1,0)+A(1|0)", 2);
  crk("H_1+A(1|0)", 4);
  r.add("corank", "A(3|2)", "0",
        std::to_string(corank(SuperDim{3, 2}, multiplier_abelian(3, 2).value)));

  // The reference corank table, constructible entries verified.
  for (int k = 1; k <= 4; ++k) {
    for (const auto& e : corank_table(k)) {
      if (!e.constructible) {
        r.add("corank-table", "k=" + std::to_string(k) + " " + e.label,
              "not constructible", "not constructible");
        continue;
      }
      if (e.parametric) continue;
      long long t = corank_of_family(recognize(construct_expression(e.label)));
      if (e.known_divergent) {
        r.add("corank-table", "k=" + std::to_string(k) + " " + e.label, std::to_string(k),
              std::to_string(t), true, known_divergences()[1].note);
      } else {
        r.add("corank-table", "k=" + std::to_string(k) + " " + e.label, std::to_string(k),
              std::to_string(t));
      }
    }
  }

  // Capable algebras of every corank.
  for (long long k = 0; k <= 6; ++k) {
    auto L = capable_algebra_of_corank(k);
    r.add("corank-ladder", "k=" + std::to_string(k) + " (" + recognize(L).to_string() + ")",
          std::to_string(k) + " capable",
          std::to_string(corank_of_family(recognize(L))) + " " +
              to_string(is_capable(L).status));
  }

  ordered_json j;
  j["command"] = "reproduce";
  j["items"] = r.items;
  j["summary"] = {{"ok", r.ok}, {"known_divergent", r.divergent}, {"failed", r.failed}};
  std::string text = "command: reproduce\n" + r.text + "summary: " + std::to_string(r.ok) +
                     " ok, " + std::to_string(r.divergent) + " known-divergent, " +
                     std::to_string(r.failed) + " failed\n";
  emit(opt, j, text);
  return r.failed == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-dimensional Lie superalgebras: multipliers, "
               "exterior squares, capability"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Options opt;
  if (const char* env = std::getenv("SUPERLIE_MAX_GENERATORS"))
    opt.limits.max_generators = std::atoi(env);
  if (const char* env = std::getenv("SUPERLIE_MAX_CLASS"))
    opt.limits.max_class = std::atoi(env);
  app.add_flag("--json", opt.json, "emit machine-readable JSON reports");
  int limit_dim = 0;
  app.add_option("--limit-dim", limit_dim,
                 "cap the oracle generator count (overrides SUPERLIE_MAX_GENERATORS)");

  std::string input, out_path, oracle_op;
  bool with_oracle = false, stable = false;
  int class_bound = 0, table_k = 0;

  auto* validate_cmd = app.add_subcommand("validate", "check the algebra axioms on a file");
  validate_cmd->add_option("input", input, "interchange file or family expression")->required();

  auto* construct_cmd =
      app.add_subcommand("construct", "emit a catalog algebra in the interchange format");
  construct_cmd->add_option("expression", input, "family expression, e.g. 'H(1,0)+A(2|0)'")
      ->required();
  construct_cmd->add_option("-o,--output", out_path, "output file (default: stdout)");

  auto* recognize_cmd =
      app.add_subcommand("recognize", "classify a nilpotent algebra with dim L' <= 1");
  recognize_cmd->add_option("input", input, "interchange file or family expression")->required();

  auto* capable_cmd = app.add_subcommand("capable", "capability verdict with citation");
  capable_cmd->add_option("input", input, "interchange file or family expression")->required();
  capable_cmd->add_flag("--oracle", with_oracle, "also run the epicenter oracle");
  capable_cmd->add_option("--class-bound", class_bound, "override the oracle truncation class");

  auto* multiplier_cmd = app.add_subcommand("multiplier", "multiplier super-dimension");
  multiplier_cmd->add_option("input", input, "interchange file or family expression")->required();
  multiplier_cmd->add_flag("--oracle", with_oracle, "also run the Hopf-formula oracle");
  multiplier_cmd->add_option("--class-bound", class_bound,
                             "override the oracle truncation class");

  auto* corank_cmd = app.add_subcommand("corank", "corank (defect from the universal bound)");
  corank_cmd->add_option("input", input, "interchange file or family expression")->required();
  corank_cmd->add_flag("--oracle", with_oracle, "derive the corank from the oracle multiplier");

  auto* extsq_cmd = app.add_subcommand("extsq", "exterior-square super-dimension");
  extsq_cmd->add_option("input", input, "interchange file or family expression")->required();
  extsq_cmd->add_flag("--oracle", with_oracle, "also run the oracle");

  auto* oracle_cmd =
      app.add_subcommand("oracle", "run the free-presentation oracle on a presentation file");
  oracle_cmd->add_option("operation", oracle_op, "multiplier | extsq | epicenter")->required();
  oracle_cmd->add_option("input", input, "presentation file (s-expression format)")->required();
  oracle_cmd->add_option("--class-bound", class_bound, "override the truncation class");
  oracle_cmd->add_flag("--stable", stable, "recompute at class bound + 1 and require equality");

  auto* table_cmd = app.add_subcommand("table", "reference corank table for 0 <= k <= 4");
  table_cmd->add_option("k", table_k, "corank")->required();

  auto* reproduce_cmd =
      app.add_subcommand("reproduce", "recompute all reference values and report divergences");
  (void)reproduce_cmd;

  CLI11_PARSE(app, argc, argv);
  if (limit_dim > 0) opt.limits.max_generators = limit_dim;

  try {
    if (validate_cmd->parsed()) return cmd_validate(opt, input);
    if (construct_cmd->parsed()) return cmd_construct(input, out_path);
    if (recognize_cmd->parsed()) return cmd_recognize(opt, input);
    if (capable_cmd->parsed()) return cmd_capable(opt, input, with_oracle, class_bound);
    if (multiplier_cmd->parsed()) return cmd_multiplier(opt, input, with_oracle, class_bound);
    if (corank_cmd->parsed()) return cmd_corank(opt, input, with_oracle);
    if (extsq_cmd->parsed()) return cmd_extsq(opt, input, with_oracle);
    if (oracle_cmd->parsed()) return cmd_oracle(opt, oracle_op, input, class_bound, stable);
    if (table_cmd->parsed()) return cmd_table(opt, table_k);
    if (reproduce_cmd->parsed()) return cmd_reproduce(opt);
  } catch (const LimitError& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return kExitLimit;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
