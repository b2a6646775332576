#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "crsing/classify.hpp"
#include "crsing/error.hpp"
#include "crsing/extend.hpp"
#include "crsing/formal.hpp"
#include "crsing/odecrit.hpp"
#include "crsing/polyio.hpp"
#include "crsing/suites.hpp"

namespace crsing::cli {
namespace {

using nlohmann::json;

struct Output {
  std::string command;
  json result = json::object();
  json certificate = json::object();
  std::vector<std::string> lines;
  int code = 0;

  void line(const std::string& s) { lines.push_back(s); }
};

struct Options {
  std::string manifold;
  std::string f;
  std::string g;
  unsigned degree = 1;
  unsigned order = 8;
  std::string dump_matrix;
  bool json = false;

  std::string ode_case = "a";
  std::string p = "0", q = "0", r = "0", s = "0", t = "0", xi = "0";
  std::optional<unsigned> D;

  std::string suite = "all";
  std::optional<unsigned> dmax;
  std::optional<unsigned> samples;
  std::uint64_t seed = 1;
};

Manifold load(const Options& o) {
  if (o.manifold.empty())
    throw Error(ErrorCode::InvalidArgument, "--manifold <file> is required");
  std::ifstream in(o.manifold);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + o.manifold);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_manifold(buf.str());
}

Poly require_poly(const std::string& text, const char* flag, unsigned n) {
  if (text.empty())
    throw Error(ErrorCode::InvalidArgument, std::string(flag) + " is required");
  return parse_poly(text, n);
}

std::string vector_text(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

std::string order_text(unsigned k) {
  return k == kInfiniteOrder ? "infinite" : std::to_string(k);
}

json order_json(unsigned k) {
  return k == kInfiniteOrder ? json("infinite") : json(k);
}

// --- commands ---------------------------------------------------------------

void cmd_rank(const Options& o, Output& out) {
  Manifold m = load(o);
  const auto r = rank_condition(m.quadric());
  out.result["rank"] = r;
  out.certificate["stacked"] = matrix_to_json(m.quadric().A().adjoint().vstack(m.quadric().B()));
  out.line("rank: " + std::to_string(r));
}

void cmd_classify(const Options& o, Output& out) {
  Manifold m = load(o);
  ClassLabel label = classify_quadric(m.quadric());
  out.result["label"] = to_string(label.kind);
  out.result["rank"] = rank_condition(m.quadric());
  out.line("label: " + std::string(to_string(label.kind)));
  if (label.a_squared) {
    out.result["a_squared"] = label.a_squared->get_str();
    out.result["a"] = std::sqrt(label.a_squared->get_d());
    std::ostringstream a;
    a.precision(12);
    a << std::sqrt(label.a_squared->get_d());
    out.line("a^2: " + label.a_squared->get_str() + " (a = " + a.str() + ")");
  }
  if (rank_condition(m.quadric()) == 1) {
    Normalization nz = normalize_rank1(m.quadric());
    out.certificate["T"] = matrix_to_json(nz.T);
    out.certificate["normalized"] = format_poly(nz.normalized.poly());
    out.line("normalized quadric: " + format_poly(nz.normalized.poly()));
  }
}

void cmd_cr_basis(const Options& o, Output& out) {
  Manifold m = load(o);
  CRMatrix x = build_Xd(m.quadric(), o.degree);
  CRSpace sp = cr_homogeneous_basis(m.quadric(), o.degree);
  out.result["degree"] = o.degree;
  out.result["monomials"] = sp.monomials;
  out.result["rank"] = sp.rank;
  out.result["dim"] = sp.dim();
  json basis = json::array();
  for (const auto& b : sp.basis) basis.push_back(format_poly(b));
  out.result["basis"] = basis;
  out.line("degree: " + std::to_string(o.degree));
  out.line("monomials: " + std::to_string(sp.monomials));
  out.line("rank X_d: " + std::to_string(sp.rank));
  out.line("dim CR^d: " + std::to_string(sp.dim()));
  for (const auto& b : sp.basis) out.line("  " + format_poly(b));
  if (!o.dump_matrix.empty()) {
    std::ofstream f(o.dump_matrix);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + o.dump_matrix);
    f << x.to_csv();
    out.certificate["matrix_csv"] = o.dump_matrix;
    out.line("matrix written to " + o.dump_matrix);
  }
}

void cmd_check_cr(const Options& o, Output& out) {
  Manifold m = load(o);
  Poly f = require_poly(o.f, "--f", m.n());
  CRCheck c = is_cr(m, f);
  out.result["is_cr"] = c.is_cr;
  out.result["vacuous"] = c.vacuous;
  out.line(std::string("CR: ") + (c.is_cr ? "yes" : "no"));
  if (c.vacuous)
    out.line("warning: rho is holomorphic; M is a complex manifold and the CR "
             "condition is empty");
  if (c.failing_pair) {
    out.certificate["pair"] = {c.failing_pair->first, c.failing_pair->second};
    out.certificate["defect"] = format_poly(c.defect);
    out.line("L" + std::to_string(c.failing_pair->first) +
             std::to_string(c.failing_pair->second) + " f = " + format_poly(c.defect));
  }
  if (!c.is_cr) {
    out.result["status"] = "NotCR";
    out.code = 1;
  }
}

void counterexample_certificate(const Quadric& q, Output& out) {
  if (rank_condition(q) != 1) return;
  auto cx = counterexample_linear(q);
  out.certificate["v"] = vector_to_json(cx->v);
  out.certificate["h"] = format_poly(cx->h);
  out.line("certificate: v = " + vector_text(cx->v) + ", h = " + format_poly(cx->h) +
           " is CR and has no holomorphic extension");
}

void cmd_extend(const Options& o, Output& out) {
  Manifold m = load(o);
  Poly f = require_poly(o.f, "--f", m.n());
  if (!m.higher_order().is_zero())
    out.line("note: E is ignored; extend works on the quadric model "
             "(use formal-extend for w = Q + E)");
  try {
    ExtensionResult r = extend_polynomial(m.quadric(), f);
    out.result["F"] = format_poly(r.F);
    out.result["unique"] = r.unique;
    out.certificate["residual"] = format_poly(r.residual);
    out.line("F: " + format_poly(r.F));
    out.line(std::string("unique: ") + (r.unique ? "yes" : "no"));
    out.line("residual f - F(z, Q): " + format_poly(r.residual));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoExtension) throw;
    out.result["status"] = "NoExtension";
    out.result["reason"] = e.what();
    if (e.degree()) out.result["degree"] = *e.degree();
    out.line("reason: NoExtension (" + std::string(e.what()) + ")");
    counterexample_certificate(m.quadric(), out);
    out.code = 1;
  }
}

void cmd_formal_extend(const Options& o, Output& out) {
  Manifold m = load(o);
  Poly f = require_poly(o.f, "--f", m.n());
  FormalExtension ext = formal_extend(m, f, o.order);
  out.result["F"] = format_poly(ext.F);
  out.result["order"] = ext.order;
  out.result["unique"] = ext.unique;
  out.result["residual_order"] = order_json(ext.residual_order);
  out.certificate["residual"] = format_poly(ext.residual);
  json stages = json::array();
  for (const auto& st : ext.stages)
    stages.push_back({{"degree", st.degree}, {"F", format_poly(st.F)}, {"unique", st.unique}});
  out.certificate["stages"] = stages;
  out.line("F: " + format_poly(ext.F));
  out.line("order: " + std::to_string(ext.order));
  out.line("residual order: " + order_text(ext.residual_order));
  out.line(std::string("unique: ") + (ext.unique ? "yes" : "no"));
}

void cmd_counterexample(const Options& o, Output& out) {
  Manifold m = load(o);
  auto cx = counterexample_linear(m.quadric());
  if (!cx) {
    out.result["counterexample"] = nullptr;
    out.line("counterexample: none (rank >= 2, every CR polynomial extends)");
    return;
  }
  out.result["v"] = vector_to_json(cx->v);
  out.result["h"] = format_poly(cx->h);
  out.certificate["is_cr"] = cx->is_cr;
  out.certificate["extension_fails"] = cx->extension_fails;
  out.line("v: " + vector_text(cx->v));
  out.line("h: " + format_poly(cx->h));
  out.line(std::string("h is CR: ") + (cx->is_cr ? "yes" : "no"));
  out.line(std::string("extension fails: ") + (cx->extension_fails ? "yes" : "no"));
}

void cmd_cr_image(const Options& o, Output& out) {
  Manifold m = load(o);
  CRImageForm form = classify_cr_image(m);
  out.result["form"] = to_string(form);
  out.result["rank"] = rank_condition(m.quadric());
  out.line("form: " + std::string(to_string(form)));
  if (form == CRImageForm::NotApplicable) {
    out.line("rank [A*; B] >= 2: M is not a CR image");
    out.code = 1;
  }
}

void cmd_flatten_check(const Options& o, Output& out) {
  Manifold m = load(o);
  Poly g = require_poly(o.g, "--g", m.n());
  FirstIntegralReport rep = check_first_integral(m, g, o.order);
  out.result["real_valued"] = rep.real_valued;
  out.result["cr_through_order"] = rep.cr_through_order;
  out.result["quadratic"] = to_string(rep.quadratic);
  if (rep.alpha) out.result["alpha"] = rep.alpha->get_str();
  out.line(std::string("(i) real-valued: ") + (rep.real_valued ? "yes" : "no"));
  out.line(std::string("(ii) CR through order ") + std::to_string(o.order) + ": " +
           (rep.cr_through_order ? "yes" : "no"));
  out.line("(iii) quadratic part: " + std::string(to_string(rep.quadratic)) +
           (rep.alpha ? " (alpha = " + rep.alpha->get_str() + ")" : ""));
  if (!rep.passes()) {
    out.code = 1;
    return;
  }
  FormalExtension ext = flatten_from_first_integral(m, g, o.order);
  out.result["F"] = format_poly(ext.F);
  out.result["residual_order"] = order_json(ext.residual_order);
  out.certificate["residual"] = format_poly(ext.residual);
  out.line("flattening F: " + format_poly(ext.F));
  out.line("residual order: " + order_text(ext.residual_order));
}

void cmd_ode(const Options& o, Output& out) {
  OdeCase c;
  if (o.ode_case == "a") c = OdeCase::A;
  else if (o.ode_case == "b") c = OdeCase::B;
  else if (o.ode_case == "c") c = OdeCase::C;
  else throw Error(ErrorCode::InvalidArgument, "--case must be a, b or c");
  ODEParams x{parse_scalar(o.p), parse_scalar(o.q), parse_scalar(o.r),
              parse_scalar(o.s), parse_scalar(o.t), parse_scalar(o.xi)};
  ODEDecision d = decide(x, c);
  out.result["case"] = to_string(c);
  out.result["verdict"] = to_string(d.verdict);
  out.line("verdict: " + std::string(to_string(d.verdict)));
  if (d.witness) {
    out.result["degree"] = d.degree;
    out.certificate["witness"] = format_eta_poly(*d.witness);
    out.certificate["residual"] = format_eta_poly(ode_residual(x, c, *d.witness));
    out.line("witness zeta: " + format_eta_poly(*d.witness));
  }
  if (o.D) {
    ODEDecision b = brute_force_ode(x, c, *o.D);
    out.result["brute_force"] = to_string(b.verdict);
    out.line("brute force (D=" + std::to_string(*o.D) +
             "): " + std::string(to_string(b.verdict)));
  }
  if (d.verdict == Verdict::NoNonzero) out.code = 1;
}

void cmd_verify(const Options& o, Output& out) {
  std::vector<std::string> names;
  if (o.suite == "all") names = suite_names();
  else names.push_back(o.suite);
  SuiteOptions so{o.dmax, o.samples, o.seed};
  json suites = json::array();
  bool all = true;
  for (const auto& name : names) {
    SuiteReport rep = run_suite(name, so);
    all = all && rep.passed;
    suites.push_back({{"suite", rep.name},
                      {"criterion", rep.criterion},
                      {"passed", rep.passed},
                      {"checks", rep.checks},
                      {"failures", rep.failures},
                      {"rows", rep.details}});
    out.line("== " + rep.name + " (criterion " + std::to_string(rep.criterion) + ")");
    for (const auto& l : rep.lines) out.line(l);
    out.line(std::string(rep.passed ? "PASS" : "FAIL") + " " + rep.name + ": " +
             std::to_string(rep.checks - rep.failures) + "/" +
             std::to_string(rep.checks) + " checks");
  }
  out.result["passed"] = all;
  out.result["suites"] = suites;
  out.certificate["seed"] = o.seed;
  if (!all) out.code = 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact CR extension and classification toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "JSON output");

  std::map<CLI::App*, std::function<void(const Options&, Output&)>> handlers;
  auto sub = [&](const char* name, const char* help, auto fn) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_flag("--json", o.json, "JSON output");
    handlers[s] = fn;
    return s;
  };
  auto with_manifold = [&](CLI::App* s) {
    s->add_option("--manifold", o.manifold, "Manifold JSON file")->required();
    return s;
  };

  with_manifold(sub("rank", "rank of [A*; B]", cmd_rank));
  with_manifold(sub("classify", "exceptional-case label of the quadric", cmd_classify));
  auto* basis = with_manifold(sub("cr-basis", "basis of degree-d CR polynomials", cmd_cr_basis));
  basis->add_option("--degree", o.degree, "Degree d")->required();
  basis->add_option("--dump-matrix", o.dump_matrix, "Write X_d as CSV");
  with_manifold(sub("check-cr", "CR test for f", cmd_check_cr))
      ->add_option("--f", o.f, "Polynomial in z, zb")->required();
  with_manifold(sub("extend", "holomorphic extension on the quadric", cmd_extend))
      ->add_option("--f", o.f, "Polynomial in z, zb")->required();
  auto* fe = with_manifold(sub("formal-extend", "formal extension to order N", cmd_formal_extend));
  fe->add_option("--f", o.f, "Polynomial in z, zb")->required();
  fe->add_option("--order", o.order, "Truncation order N (default 8)");
  with_manifold(sub("counterexample", "non-extendable CR linear function", cmd_counterexample));
  with_manifold(sub("cr-image", "CR-image quadratic form", cmd_cr_image));
  auto* fc = with_manifold(sub("flatten-check", "first integral check and flattening", cmd_flatten_check));
  fc->add_option("--g", o.g, "Candidate first integral")->required();
  fc->add_option("--order", o.order, "Truncation order N (default 8)");
  auto* ode = sub("ode", "polynomial solvability of the ODE families", cmd_ode);
  ode->add_option("--case", o.ode_case, "a, b or c")->required();
  ode->add_option("--p", o.p);
  ode->add_option("--q", o.q);
  ode->add_option("--r", o.r);
  ode->add_option("--s", o.s);
  ode->add_option("--t", o.t);
  ode->add_option("--xi", o.xi);
  ode->add_option("--D", o.D, "Also run the brute-force oracle up to degree D");
  auto* verify = sub("verify", "acceptance suites", cmd_verify);
  verify->add_option("--suite", o.suite, "Suite name or 'all'");
  verify->add_option("--dmax", o.dmax, "Degree bound");
  verify->add_option("--samples", o.samples, "Sample count");
  verify->add_option("--seed", o.seed, "RNG seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Output result;
  result.command = chosen->get_name();
  try {
    handlers.at(chosen)(o, result);
  } catch (const Error& e) {
    result.code = is_mathematical(e.code()) ? 1 : 2;
    result.result["status"] = std::string(to_string(e.code()));
    result.result["message"] = e.what();
    if (e.degree()) result.result["degree"] = *e.degree();
    std::string msg = std::string(to_string(e.code())) + ": " + e.what();
    if (!o.json) (result.code == 1 ? out : err) << msg << "\n";
    if (o.json) {
      json doc{{"command", result.command},
               {"result", result.result},
               {"certificate", result.certificate}};
      out << doc.dump(2) << "\n";
    }
    return result.code;
  }
  if (o.json) {
    json doc{{"command", result.command},
             {"result", result.result},
             {"certificate", result.certificate}};
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& l : result.lines) out << l << "\n";
  }
  return result.code;
}

}  // namespace crsing::cli
