#include "crsing/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "crsing/classify.hpp"
#include "crsing/error.hpp"
#include "crsing/extend.hpp"
#include "crsing/formal.hpp"
#include "crsing/odecrit.hpp"
#include "crsing/polyio.hpp"

namespace crsing {
namespace {

using nlohmann::json;

unsigned long binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  unsigned long r = 1;
  for (unsigned long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

unsigned long cr_dim_n2(unsigned d) { return (d + 2ul) * (d + 2ul) / 4; }

unsigned long block_rank(unsigned j, unsigned d) {
  return d - j + 1 <= j ? (j + 1ul) * (d - j + 1) : j * (d - j + 2ul);
}

const char* tf(bool b) { return b ? "true" : "false"; }

Poly parse(const std::string& text, unsigned n) { return parse_poly(text, n); }

// --- criterion 1 / 2 -------------------------------------------------------

Quadric lemma_quadric(Sampler& s) {
  Matrix a(2, 2);
  a(0, 0) = GaussRational(1);
  a(0, 1) = s.entry(0.3);
  a(1, 1) = s.nonzero();
  return Quadric(a, Matrix(2, 2), Matrix(2, 2));
}

SuiteReport rank_formula_suite(const SuiteOptions& o) {
  SuiteReport rep;
  const unsigned dmax = o.dmax.value_or(8), samples = o.samples.value_or(20);
  Sampler s(o.seed);
  std::vector<Quadric> qs;
  for (unsigned k = 0; k < samples; ++k) qs.push_back(lemma_quadric(s));
  rep.lines.push_back("d  columns  rank  formula  dim  floor((d+2)^2/4)  match");
  for (unsigned d = 1; d <= dmax; ++d) {
    bool all = true;
    std::size_t rank_seen = 0, dim_seen = 0, cols = 0;
    for (const auto& q : qs) {
      CRMatrix x = build_Xd(q, d);
      std::size_t r = rank(x.matrix);
      cols = x.columns.size();
      bool ok = r == rank_formula(d) && cols - r == cr_dim_n2(d) &&
                cols == binomial(d + 3, 3);
      rep.check(ok, "d=" + std::to_string(d) + " rank " + std::to_string(r));
      all = all && ok;
      rank_seen = r;
      dim_seen = cols - r;
    }
    std::ostringstream line;
    line << d << "  " << cols << "  " << rank_seen << "  " << rank_formula(d)
         << "  " << dim_seen << "  " << cr_dim_n2(d) << "  " << tf(all);
    rep.lines.push_back(line.str());
    rep.details.push_back({{"d", d},
                           {"columns", cols},
                           {"rank", rank_seen},
                           {"formula", rank_formula(d)},
                           {"dim", dim_seen},
                           {"expected_dim", cr_dim_n2(d)},
                           {"samples", samples},
                           {"match", all}});
  }
  return rep;
}

SuiteReport block_ranks_suite(const SuiteOptions& o) {
  SuiteReport rep;
  const unsigned dmax = o.dmax.value_or(8), samples = o.samples.value_or(20);
  Sampler s(o.seed);
  std::vector<Quadric> qs;
  for (unsigned k = 0; k < samples; ++k) qs.push_back(lemma_quadric(s));
  rep.lines.push_back("d  block ranks r(1..d,d)  sum  rank(X_d)  match");
  for (unsigned d = 1; d <= dmax; ++d) {
    bool all = true;
    unsigned long oracle_sum = 0;
    std::vector<unsigned long> oracle;
    for (unsigned j = 1; j <= d; ++j) {
      oracle.push_back(block_rank(j, d));
      oracle_sum += oracle.back();
    }
    std::size_t total = 0;
    for (const auto& q : qs) {
      CRMatrix x = build_Xd(q, d);
      total = rank(x.matrix);
      bool ok = total == oracle_sum;
      for (unsigned j = 1; j <= d; ++j) {
        std::vector<std::size_t> rows, cols;
        for (std::size_t c = 0; c < x.columns.size(); ++c) {
          if (x.columns[c].zb_degree() == j) cols.push_back(c);
          if (x.columns[c].zb_degree() == j - 1) rows.push_back(x.row_index(0, c));
        }
        ok = ok && rank(x.matrix.submatrix(rows, cols)) == oracle[j - 1];
      }
      rep.check(ok, "d=" + std::to_string(d) + " block ranks");
      all = all && ok;
    }
    std::ostringstream line;
    line << d << "  ";
    for (std::size_t j = 0; j < oracle.size(); ++j)
      line << (j ? "," : "") << oracle[j];
    line << "  " << oracle_sum << "  " << total << "  " << tf(all);
    rep.lines.push_back(line.str());
    rep.details.push_back({{"d", d},
                           {"block_ranks", oracle},
                           {"sum", oracle_sum},
                           {"rank", total},
                           {"match", all}});
  }
  return rep;
}

// --- criterion 3 / 9 -------------------------------------------------------

struct SweepOutcome {
  std::size_t rank = 0;
  bool extends_all = true;
  bool linear_empty = true;
  bool counterexample_ok = true;

  bool consistent() const {
    bool r2 = rank >= 2;
    return r2 == extends_all && r2 == linear_empty && counterexample_ok;
  }
};

SweepOutcome sweep(const Quadric& q, unsigned dmax) {
  SweepOutcome out;
  out.rank = rank_condition(q);
  for (unsigned d = 1; d <= dmax && out.extends_all; ++d) {
    CRSpace space = cr_homogeneous_basis(q, d);
    if (space.basis.empty()) continue;
    for (const auto& r : extend_homogeneous_batch(q, space.basis, d))
      if (!r || !r->residual.is_zero()) {
        out.extends_all = false;
        break;
      }
  }
  out.linear_empty = cr_linear_space(q).empty();
  if (out.rank == 1) {
    auto cx = counterexample_linear(q);
    bool nonzero = false;
    if (cx)
      for (const auto& x : cx->v) nonzero = nonzero || !x.is_zero();
    out.counterexample_ok = cx && nonzero && cx->is_cr && cx->extension_fails;
  }
  return out;
}

std::string quadric_text(const Quadric& q) { return format_poly(q.poly()); }

SuiteReport extension_sweep_suite(const SuiteOptions& o) {
  SuiteReport rep;
  const unsigned dmax = o.dmax.value_or(4), samples = o.samples.value_or(200);
  Sampler s(o.seed);
  std::map<std::pair<unsigned, std::size_t>, std::pair<unsigned, unsigned>> tally;
  for (unsigned k = 0; k < samples; ++k) {
    const unsigned n = s.uniform(2, 3);
    Quadric q = s.quadric(n);
    SweepOutcome out = sweep(q, dmax);
    rep.check(out.consistent(), "sample " + std::to_string(k) + ": " + quadric_text(q));
    auto& t = tally[{n, std::min<std::size_t>(out.rank, 2)}];
    ++t.first;
    if (out.consistent()) ++t.second;
  }
  rep.lines.push_back("n  rank  samples  agree");
  for (const auto& [key, t] : tally) {
    std::string rank_label = key.second >= 2 ? ">=2" : std::to_string(key.second);
    rep.lines.push_back(std::to_string(key.first) + "  " + rank_label + "  " +
                        std::to_string(t.first) + "  " + std::to_string(t.second));
    rep.details.push_back({{"n", key.first},
                           {"rank", rank_label},
                           {"samples", t.first},
                           {"agree", t.second}});
  }
  return rep;
}

// --- criterion 4 ------------------------------------------------------------

SuiteReport uniqueness_suite(const SuiteOptions& o) {
  SuiteReport rep;
  const unsigned dmax = o.dmax.value_or(6), samples = o.samples.value_or(40);
  Sampler s(o.seed);
  std::vector<Quadric> qs;
  for (unsigned k = 0; k < samples; ++k) qs.push_back(s.quadric_rank2(s.uniform(2, 3)));
  rep.lines.push_back("d  samples  full column rank");
  for (unsigned d = 1; d <= dmax; ++d) {
    unsigned full = 0;
    for (const auto& q : qs) {
      std::size_t unknowns = matching_system(q, d).holomorphic.size();
      bool ok = matching_rank(q, d) == unknowns;
      rep.check(ok, "d=" + std::to_string(d) + ": " + quadric_text(q));
      if (ok) ++full;
    }
    rep.lines.push_back(std::to_string(d) + "  " + std::to_string(qs.size()) +
                        "  " + std::to_string(full));
    rep.details.push_back({{"d", d}, {"samples", qs.size()}, {"full_rank", full}});
  }
  return rep;
}

// --- criterion 5 ------------------------------------------------------------

template <typename Fn>
std::optional<Error> error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  return std::nullopt;
}

SuiteReport examples_suite(const SuiteOptions& o) {
  SuiteReport rep;
  const unsigned samples = o.samples.value_or(50);
  auto row = [&](const std::string& label, bool ok) {
    rep.check(ok, label);
    rep.lines.push_back(label + "  " + tf(ok));
    rep.details.push_back({{"check", label}, {"pass", ok}});
  };

  {
    Manifold m = Manifold::from_rho(parse("z1*zb1 + z2*zb2", 2).pow(2));
    CRCheck c = is_cr(m, parse("z1*zb1 + z2*zb2", 2));
    row("w = |z|^4: |z|^2 is CR", c.is_cr && !c.vacuous);
    auto e = error_of([&] { formal_extend(m, parse("z1*zb1 + z2*zb2", 2), 8); });
    row("w = |z|^4: formal_extend -> DegenerateQuadric",
        e && e->code() == ErrorCode::DegenerateQuadric);
  }
  {
    Quadric q = Quadric::from_poly(parse("zb1*z2", 2));
    row("w = zb1*z2: zb1 is CR", is_cr(Manifold(q), parse("zb1", 2)).is_cr);
    auto e = error_of([&] { extend_homogeneous(q, parse("zb1", 2), 1); });
    row("w = zb1*z2: zb1 -> NoExtension", e && e->code() == ErrorCode::NoExtension);
  }
  {
    Manifold m = Manifold::from_rho(parse("zb1*z2 + zb2^3", 2));
    Sampler s(o.seed);
    unsigned good = 0;
    for (unsigned k = 0; k < samples; ++k) {
      Poly F = s.holomorphic(2, 6, 5);
      Poly f = substitute_w(F, m.rho());
      bool ok = false;
      try {
        FormalExtension ext = formal_extend(m, f, 8);
        ok = ext.residual_order > 8 && ext.F == F;
      } catch (const Error&) {
      }
      rep.check(ok, "roundtrip F = " + format_poly(F));
      if (ok) ++good;
    }
    std::string label = "w = zb1*z2 + zb2^3: " + std::to_string(good) + "/" +
                        std::to_string(samples) + " roundtrips with residual order > 8";
    rep.lines.push_back(label + "  " + tf(good == samples));
    rep.details.push_back({{"check", label}, {"pass", good == samples}});
    auto e = error_of([&] { formal_extend(m, parse("zb1", 2), 8); });
    row("w = zb1*z2 + zb2^3: zb1 -> NotCRAtDegree(1)",
        e && e->code() == ErrorCode::NotCRAtDegree && e->degree() == 1u);
  }
  return rep;
}

// --- criterion 6 ------------------------------------------------------------

SuiteReport classification_suite(const SuiteOptions& o) {
  SuiteReport rep;
  const unsigned samples = o.samples.value_or(50);
  Sampler s(o.seed);
  struct Form {
    std::string text;
    ClassLabel label;
  };
  const std::vector<Form> forms = {
      {"zb1*z2 + zb1^2", {ClassKind::Case1, std::nullopt}},
      {"zb1*z2", {ClassKind::Case2, std::nullopt}},
      {"z1*zb1", {ClassKind::Case3, Rational(0)}},
      {"z1*zb1 + zb1^2", {ClassKind::Case3, Rational(1)}},
      {"z1*zb1 + 3/2*zb1^2", {ClassKind::Case3, Rational(9, 4)}},
      {"2*z1*zb1 + 3*zb1^2", {ClassKind::Case3, Rational(9, 4)}},
      {"zb1^2", {ClassKind::Case4, std::nullopt}},
  };
  rep.lines.push_back("n  quadric  label  invariant under T");
  for (unsigned n = 2; n <= 3; ++n)
    for (const auto& form : forms) {
      Quadric q0 = Quadric::from_poly(parse(form.text, n));
      bool ok = classify_quadric(q0) == form.label;
      rep.check(ok, "own label of " + form.text);
      unsigned good = 0;
      for (unsigned k = 0; k < samples; ++k) {
        Quadric q(q0.A(), q0.B(), s.symmetric(n, 0.5));
        Quadric moved = transform(q, s.invertible(n));
        bool same = classify_quadric(moved) == form.label;
        rep.check(same, "transformed " + form.text + ": " + quadric_text(moved));
        if (same) ++good;
      }
      ok = ok && good == samples;
      rep.lines.push_back(std::to_string(n) + "  " + form.text + "  " +
                          to_string(form.label) + "  " + std::to_string(good) +
                          "/" + std::to_string(samples));
      rep.details.push_back({{"n", n},
                             {"quadric", form.text},
                             {"label", to_string(form.label)},
                             {"invariant", good},
                             {"samples", samples}});
    }
  // pairwise distinct labels on the four normal forms
  std::vector<ClassLabel> labels;
  for (const char* t : {"zb1*z2 + zb1^2", "zb1*z2", "z1*zb1 + zb1^2", "zb1^2"})
    labels.push_back(classify_quadric(Quadric::from_poly(parse(t, 2))));
  bool distinct = true;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      distinct = distinct && !(labels[i] == labels[j]);
  rep.check(distinct, "normal forms pairwise distinct");
  rep.lines.push_back(std::string("normal forms pairwise distinct  ") + tf(distinct));

  struct Image {
    std::string rho;
    Poly poly;
    CRImageForm form;
  };
  const std::vector<Image> images = {
      {"(zb2 + i*z1*zb1 + z1^2*zb1^2)^2",
       parse("zb2 + i*z1*zb1 + z1^2*zb1^2", 2).pow(2), CRImageForm::Form4},
      {"zb1^3", parse("zb1^3", 2), CRImageForm::Form5},
      {"z1*zb1 + z2*zb2", parse("z1*zb1 + z2*zb2", 2), CRImageForm::NotApplicable},
  };
  for (const auto& img : images) {
    CRImageForm got = classify_cr_image(Manifold::from_rho(img.poly));
    bool ok = got == img.form;
    rep.check(ok, "cr-image " + img.rho);
    rep.lines.push_back("w = " + img.rho + " -> " + std::string(to_string(got)) +
                        "  " + tf(ok));
    rep.details.push_back(
        {{"rho", img.rho}, {"form", to_string(got)}, {"pass", ok}});
  }
  return rep;
}

// --- criterion 7 ------------------------------------------------------------

GaussRational frac(long a, long b) { return GaussRational(Rational(a, b)); }

ODEParams sample_ode(Sampler& s, OdeCase c) {
  ODEParams x;
  switch (c) {
    case OdeCase::A: {
      x.s = s.nonzero();
      x.r = s.entry(0.3);
      switch (s.uniform(0, 3)) {
        case 0: x.p = x.s * GaussRational(static_cast<long>(s.uniform(1, 12))); break;
        case 1: break;
        case 2: {
          static const long num[] = {-1, -1, 1, 5, -3};
          static const long den[] = {2, 3, 2, 2, 1};
          unsigned k = s.uniform(0, 4);
          x.p = x.s * frac(num[k], den[k]);
          break;
        }
        default:
          x.p = s.entry(0.2);
          x.q = s.entry(0.4);
      }
      return x;
    }
    case OdeCase::B: {
      x.t = s.nonzero();
      const unsigned mode = s.uniform(0, 3);
      if (mode <= 1) {
        GaussRational xi1 = s.entry(0.2), xi2;
        do xi2 = s.entry(0.2); while (xi2 == xi1);
        x.r = x.t * xi1 * xi2;
        x.s = -x.t * (xi1 + xi2);
        GaussRational e1(static_cast<long>(s.uniform(0, 6)));
        GaussRational e2(static_cast<long>(s.uniform(0, 6)));
        x.q = x.t * (e1 + e2);
        x.p = e1 * x.t * (xi1 - xi2) - x.q * xi1;
        if (mode == 1) x.p += s.nonzero() * frac(1, 2);
      } else if (mode == 2) {
        // irrational roots: only e1 = e2 can work
        do {
          x.s = s.entry(0.3);
          x.r = s.nonzero();
        } while ((x.s * x.s - GaussRational(4) * x.r * x.t).is_zero());
        x.q = GaussRational(2) * x.t * GaussRational(static_cast<long>(s.uniform(0, 6)));
        x.p = x.q * x.s / (GaussRational(2) * x.t);
      } else {
        do {
          x.s = s.entry(0.3);
          x.r = s.entry(0.3);
        } while ((x.s * x.s - GaussRational(4) * x.r * x.t).is_zero());
        x.p = s.entry(0.3);
        x.q = s.entry(0.3);
      }
      return x;
    }
    case OdeCase::C: {
      x.t = s.nonzero();
      x.xi = s.entry(0.3);
      switch (s.uniform(0, 4)) {
        case 0:
          x.q = x.t * GaussRational(static_cast<long>(s.uniform(1, 12)));
          x.p = -x.q * x.xi;
          break;
        case 1: break;
        case 2:
          x.q = x.t * frac(3, 2);
          x.p = -x.q * x.xi;
          break;
        case 3:
          x.q = x.t * GaussRational(static_cast<long>(s.uniform(1, 12)));
          x.p = -x.q * x.xi + s.nonzero();
          break;
        default:
          x.p = s.entry(0.2);
          x.q = s.entry(0.2);
      }
      return x;
    }
  }
  return x;
}

std::string ode_text(const ODEParams& x, OdeCase c) {
  std::string out = "case " + std::string(to_string(c)) + ": p=" + x.p.str() +
                    " q=" + x.q.str();
  if (c == OdeCase::C) return out + " t=" + x.t.str() + " xi=" + x.xi.str();
  out += " r=" + x.r.str() + " s=" + x.s.str();
  if (c == OdeCase::B) out += " t=" + x.t.str();
  return out;
}

SuiteReport ode_suite(const SuiteOptions& o) {
  SuiteReport rep;
  const unsigned samples = o.samples.value_or(500);
  const unsigned D = o.dmax.value_or(12);
  Sampler s(o.seed);
  rep.lines.push_back("case  compared  excluded  agree  NoNonzero  ConstantOnly  NonconstantPoly");
  for (OdeCase c : {OdeCase::A, OdeCase::B, OdeCase::C}) {
    std::vector<ODEParams> tuples;
    if (c == OdeCase::A) {
      // p/s = -1/2 and -1/3
      tuples.push_back({GaussRational(1), GaussRational(0), GaussRational(3),
                        GaussRational(-2), {}, {}});
      tuples.push_back({GaussRational(1), GaussRational(0), GaussRational(0),
                        GaussRational(-3), {}, {}});
      tuples.push_back({GaussRational(2), GaussRational(0), GaussRational(0),
                        GaussRational(1), {}, {}});
    }
    while (tuples.size() < samples) tuples.push_back(sample_ode(s, c));
    unsigned compared = 0, excluded = 0, agree = 0;
    std::map<Verdict, unsigned> verdicts;
    for (const auto& x : tuples) {
      bool ok = false;
      try {
        ODEDecision d = decide(x, c);
        ++verdicts[d.verdict];
        if (d.degree > D) {
          ++excluded;
          continue;
        }
        ++compared;
        ODEDecision b = brute_force_ode(x, c, D);
        ok = b.verdict == d.verdict && b.degree == d.degree &&
             (!d.witness || ode_residual(x, c, *d.witness).empty());
      } catch (const std::exception&) {
        ++compared;
      }
      rep.check(ok, ode_text(x, c));
      if (ok) ++agree;
    }
    std::ostringstream line;
    line << to_string(c) << "  " << compared << "  " << excluded << "  " << agree
         << "  " << verdicts[Verdict::NoNonzero] << "  "
         << verdicts[Verdict::ConstantOnly] << "  "
         << verdicts[Verdict::NonconstantPoly];
    rep.lines.push_back(line.str());
    rep.details.push_back({{"case", to_string(c)},
                           {"compared", compared},
                           {"excluded", excluded},
                           {"agree", agree},
                           {"no_nonzero", verdicts[Verdict::NoNonzero]},
                           {"constant_only", verdicts[Verdict::ConstantOnly]},
                           {"nonconstant", verdicts[Verdict::NonconstantPoly]}});
  }
  return rep;
}

// --- criterion 8 ------------------------------------------------------------

SuiteReport restriction_suite(const SuiteOptions& o) {
  SuiteReport rep;
  const unsigned samples = o.samples.value_or(100);
  const unsigned wdeg = o.dmax.value_or(6);
  Sampler s(o.seed);
  unsigned good = 0;
  for (unsigned k = 0; k < samples; ++k) {
    const unsigned n = s.coin(0.75) ? 2 : 3;
    Manifold m(s.quadric_rank2(n), s.zzbar(n, 3, 4, 4));
    Poly F = s.holomorphic(n, wdeg, 4);
    bool ok = is_cr(m, substitute_w(F, m.rho())).is_cr;
    rep.check(ok, "F = " + format_poly(F) + " on rho = " + format_poly(m.rho()));
    if (ok) ++good;
  }
  rep.lines.push_back("samples  restriction CR");
  rep.lines.push_back(std::to_string(samples) + "  " + std::to_string(good));
  rep.details.push_back({{"samples", samples}, {"cr", good}});
  return rep;
}

// --- criterion 9 ------------------------------------------------------------

SuiteReport levi_flat_suite(const SuiteOptions& o) {
  SuiteReport rep;
  const unsigned dmax = o.dmax.value_or(4);
  const std::vector<ClassLabel> labels = {
      {ClassKind::Case1, std::nullopt}, {ClassKind::Case2, std::nullopt},
      {ClassKind::Case3, Rational(0)},  {ClassKind::Case3, Rational(1)},
      {ClassKind::Case3, Rational(9, 4)}, {ClassKind::Case4, std::nullopt}};
  rep.lines.push_back("n  label  w component  identity  free of conj(xi)");
  for (unsigned n = 2; n <= 3; ++n)
    for (const auto& label : labels) {
      LeviFlatParam p = levi_flat_image_param(label, n);
      bool ok = p.identity_holds && p.holomorphic_in_xi;
      rep.check(ok, "parametrization " + to_string(label));
      rep.lines.push_back(std::to_string(n) + "  " + to_string(label) + "  " +
                          format_poly_named(p.map.back(), levi_flat_param_names(n)) +
                          "  " + tf(p.identity_holds) + "  " +
                          tf(p.holomorphic_in_xi));
      rep.details.push_back({{"n", n},
                             {"label", to_string(label)},
                             {"w", format_poly_named(p.map.back(),
                                                     levi_flat_param_names(n))},
                             {"identity", p.identity_holds},
                             {"holomorphic_in_xi", p.holomorphic_in_xi}});
    }
  struct Flat {
    unsigned n;
    std::string q;
  };
  for (const Flat& f : {Flat{2, "zb1^2 + zb2^2"}, Flat{3, "zb1^2 + zb2^2"},
                        Flat{3, "zb1^2 + zb2^2 + zb3^2"}}) {
    SweepOutcome out = sweep(Quadric::from_poly(parse(f.q, f.n)), dmax);
    bool ok = out.rank >= 2 && out.extends_all && out.linear_empty;
    rep.check(ok, "sweep " + f.q);
    rep.lines.push_back(std::to_string(f.n) + "  w = " + f.q + "  rank " +
                        std::to_string(out.rank) + "  extends through d=" +
                        std::to_string(dmax) + "  " + tf(ok));
    rep.details.push_back({{"n", f.n},
                           {"quadric", f.q},
                           {"rank", out.rank},
                           {"extends_all", out.extends_all},
                           {"linear_empty", out.linear_empty}});
  }
  return rep;
}

}  // namespace

void SuiteReport::check(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  ++failures;
  passed = false;
  if (failures <= 10) lines.push_back("FAILED: " + what);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "rank-formula", "block-ranks", "extension-sweep", "uniqueness", "examples",
      "classification", "ode", "restriction", "levi-flat"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  using Fn = SuiteReport (*)(const SuiteOptions&);
  static const std::map<std::string, Fn> table = {
      {"rank-formula", rank_formula_suite},
      {"block-ranks", block_ranks_suite},
      {"extension-sweep", extension_sweep_suite},
      {"uniqueness", uniqueness_suite},
      {"examples", examples_suite},
      {"classification", classification_suite},
      {"ode", ode_suite},
      {"restriction", restriction_suite},
      {"levi-flat", levi_flat_suite}};
  auto it = table.find(name);
  if (it == table.end())
    throw Error(ErrorCode::InvalidArgument, "unknown suite \"" + name + "\"");
  const auto start = std::chrono::steady_clock::now();
  SuiteReport rep = it->second(opts);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
  rep.name = name;
  const auto& names = suite_names();
  rep.criterion = static_cast<unsigned>(
      std::find(names.begin(), names.end(), name) - names.begin() + 1);
  return rep;
}

// --- Sampler ----------------------------------------------------------------

unsigned Sampler::uniform(unsigned lo, unsigned hi) {
  return std::uniform_int_distribution<unsigned>(lo, hi)(rng_);
}

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

GaussRational Sampler::entry(double p_zero) {
  if (coin(p_zero)) return GaussRational(0);
  static const GaussRational values[] = {
      GaussRational(1), GaussRational(-1), GaussRational::i(), -GaussRational::i(),
      frac(1, 2), frac(-1, 2)};
  return values[uniform(0, 5)];
}

GaussRational Sampler::nonzero() {
  static const GaussRational values[] = {
      GaussRational(1), GaussRational(-1), GaussRational::i(), -GaussRational::i(),
      frac(1, 2), frac(-1, 2), GaussRational(2), GaussRational(-2),
      GaussRational(Rational(1), Rational(1)), frac(1, 3)};
  return values[uniform(0, 9)];
}

Matrix Sampler::matrix(unsigned n, double p_zero) {
  Matrix m(n, n);
  for (unsigned r = 0; r < n; ++r)
    for (unsigned c = 0; c < n; ++c) m(r, c) = entry(p_zero);
  return m;
}

Matrix Sampler::symmetric(unsigned n, double p_zero) {
  Matrix m(n, n);
  for (unsigned r = 0; r < n; ++r)
    for (unsigned c = r; c < n; ++c) m(r, c) = m(c, r) = entry(p_zero);
  return m;
}

Matrix Sampler::invertible(unsigned n) {
  for (;;) {
    Matrix t = matrix(n, 0.4);
    if (!determinant(t).is_zero()) return t;
  }
}

Quadric Sampler::quadric(unsigned n) {
  static const double sparsity[] = {0.3, 0.55, 0.8, 0.9};
  for (;;) {
    const double p = sparsity[uniform(0, 3)];
    Quadric q(matrix(n, p), symmetric(n, p), symmetric(n, 0.6));
    if (rank_condition(q) > 0) return q;
  }
}

Quadric Sampler::quadric_rank2(unsigned n) {
  for (;;) {
    Quadric q = quadric(n);
    if (rank_condition(q) >= 2) return q;
  }
}

Poly Sampler::holomorphic(unsigned n, unsigned wdeg, unsigned max_terms) {
  Poly out(n);
  const unsigned terms = uniform(1, max_terms);
  while (out.size() < terms) {
    const unsigned total = uniform(0, wdeg);
    const unsigned j = uniform(0, total / 2);
    auto comps = compositions(n, total - 2 * j);
    std::vector<Monomial::Exponent> zero(n, 0);
    Monomial m(comps[uniform(0, static_cast<unsigned>(comps.size() - 1))], zero, j);
    out.add_term(m, nonzero());
  }
  return out;
}

Poly Sampler::zzbar(unsigned n, unsigned lo, unsigned hi, unsigned max_terms) {
  Poly out(n);
  const unsigned terms = uniform(1, max_terms);
  while (out.size() < terms) {
    auto monos = zzbar_monomials(n, uniform(lo, hi));
    out.add_term(monos[uniform(0, static_cast<unsigned>(monos.size() - 1))], nonzero());
  }
  return out;
}

}  // namespace crsing
