#include "crsing/odecrit.hpp"

#include <stdexcept>

#include "crsing/error.hpp"

namespace crsing {
namespace {

void trim(EtaPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

EtaPoly mul(const EtaPoly& a, const EtaPoly& b) {
  if (a.empty() || b.empty()) return {};
  EtaPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

EtaPoly power(const EtaPoly& base, unsigned long e) {
  EtaPoly out{GaussRational(1)};
  for (unsigned long k = 0; k < e; ++k) out = mul(out, base);
  return out;
}

EtaPoly monic(EtaPoly p) {
  trim(p);
  if (p.empty()) return p;
  GaussRational lead = p.back().inverse();
  for (auto& c : p) c *= lead;
  return p;
}

ODEDecision constant_only() {
  return {Verdict::ConstantOnly, EtaPoly{GaussRational(1)}, 0};
}

ODEDecision with_witness(const ODEParams& params, OdeCase c, EtaPoly zeta) {
  zeta = monic(std::move(zeta));
  if (!ode_residual(params, c, zeta).empty())
    throw std::logic_error("closed-form witness fails its equation");
  ODEDecision d;
  d.degree = static_cast<unsigned>(zeta.size() - 1);
  d.verdict = d.degree == 0 ? Verdict::ConstantOnly : Verdict::NonconstantPoly;
  d.witness = std::move(zeta);
  return d;
}

unsigned long as_count(const GaussRational& x) {
  return x.re().get_num().get_ui();
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::NoNonzero: return "NoNonzero";
    case Verdict::ConstantOnly: return "ConstantOnly";
    case Verdict::NonconstantPoly: return "NonconstantPoly";
  }
  return "?";
}

std::string_view to_string(OdeCase c) {
  switch (c) {
    case OdeCase::A: return "a";
    case OdeCase::B: return "b";
    case OdeCase::C: return "c";
  }
  return "?";
}

void ode_rhs_coefficients(const ODEParams& params, OdeCase c, GaussRational& r,
                          GaussRational& s, GaussRational& t) {
  switch (c) {
    case OdeCase::A:
      r = params.r;
      s = params.s;
      t = GaussRational(0);
      return;
    case OdeCase::B:
      r = params.r;
      s = params.s;
      t = params.t;
      return;
    case OdeCase::C:
      t = params.t;
      s = GaussRational(-2) * params.t * params.xi;
      r = params.t * params.xi * params.xi;
      return;
  }
}

EtaPoly ode_residual(const ODEParams& params, OdeCase c, const EtaPoly& zeta) {
  GaussRational r, s, t;
  ode_rhs_coefficients(params, c, r, s, t);
  EtaPoly deriv;
  for (std::size_t k = 1; k < zeta.size(); ++k)
    deriv.push_back(GaussRational(static_cast<long>(k)) * zeta[k]);
  EtaPoly lhs = mul({params.p, params.q}, zeta);
  EtaPoly rhs = mul({r, s, t}, deriv);
  EtaPoly out(std::max(lhs.size(), rhs.size()));
  for (std::size_t k = 0; k < lhs.size(); ++k) out[k] += lhs[k];
  for (std::size_t k = 0; k < rhs.size(); ++k) out[k] -= rhs[k];
  trim(out);
  return out;
}

ODEDecision decide_case_a(const ODEParams& x) {
  if (x.s.is_zero()) throw Error(ErrorCode::InvalidArgument, "case (a) needs s != 0");
  if (x.q.is_zero()) {
    GaussRational e = x.p / x.s;
    if (is_positive_integer(e))
      return with_witness(x, OdeCase::A, power({x.r, x.s}, as_count(e)));
    if (x.p.is_zero()) return constant_only();
  }
  return {};
}

ODEDecision decide_case_b(const ODEParams& x) {
  if (x.t.is_zero()) throw Error(ErrorCode::InvalidArgument, "case (b) needs t != 0");
  const GaussRational disc = x.s * x.s - GaussRational(4) * x.r * x.t;
  if (disc.is_zero())
    throw Error(ErrorCode::InvalidArgument, "case (b) needs s^2 - 4rt != 0");
  // e1 + e2 and e1 e2 for the two exponents
  const GaussRational sum = x.q / x.t;
  const GaussRational prod =
      -(x.q * x.q * x.r - x.p * x.q * x.s + x.p * x.p * x.t) / (x.t * disc);
  GaussRational root;
  if (!sqrt_exact(sum * sum - GaussRational(4) * prod, root)) return {};
  const GaussRational half(Rational(1, 2));
  const GaussRational e1 = (sum + root) * half;
  const GaussRational e2 = (sum - root) * half;
  if (!is_nonnegative_integer(e1) || !is_nonnegative_integer(e2)) return {};
  if (e1.is_zero() && e2.is_zero()) return constant_only();
  if (e1 == e2) {
    const GaussRational inv_t = x.t.inverse();
    return with_witness(x, OdeCase::B,
                        power({x.r * inv_t, x.s * inv_t, GaussRational(1)},
                              as_count(e1)));
  }
  const GaussRational delta =
      (GaussRational(2) * x.p - x.q * x.s / x.t) / (x.t * (e1 - e2));
  const GaussRational centre = -x.s / x.t;
  const GaussRational xi1 = (centre + delta) * half;
  const GaussRational xi2 = (centre - delta) * half;
  return with_witness(x, OdeCase::B,
                      mul(power({-xi1, GaussRational(1)}, as_count(e1)),
                          power({-xi2, GaussRational(1)}, as_count(e2))));
}

ODEDecision decide_case_c(const ODEParams& x) {
  if (x.t.is_zero()) throw Error(ErrorCode::InvalidArgument, "case (c) needs t != 0");
  const GaussRational e = x.q / x.t;
  if (is_positive_integer(e) && (x.q * x.xi + x.p).is_zero())
    return with_witness(x, OdeCase::C, power({-x.xi, GaussRational(1)}, as_count(e)));
  if (x.p.is_zero() && x.q.is_zero()) return constant_only();
  return {};
}

ODEDecision decide(const ODEParams& params, OdeCase c) {
  switch (c) {
    case OdeCase::A: return decide_case_a(params);
    case OdeCase::B: return decide_case_b(params);
    case OdeCase::C: return decide_case_c(params);
  }
  return {};
}

ODEDecision brute_force_ode(const ODEParams& params, OdeCase c, unsigned D) {
  GaussRational r, s, t;
  ode_rhs_coefficients(params, c, r, s, t);
  // row m: coefficient of eta^m, m = 0..D+1; column k: c_k
  SparseMatrix m(D + 2, D + 1);
  for (unsigned k = 0; k <= D; ++k) {
    const GaussRational kk(static_cast<long>(k));
    m.add(k, k, params.p - s * kk);
    m.add(k + 1, k, params.q - t * kk);
    if (k >= 1) m.add(k - 1, k, -(r * kk));
  }
  auto basis = kernel(m);
  if (basis.empty()) return {};
  EtaPoly best;
  for (auto v : basis) {
    trim(v);
    if (v.size() > best.size()) best = std::move(v);
  }
  return with_witness(params, c, std::move(best));
}

std::string format_eta_poly(const EtaPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const GaussRational& c = p[k];
    if (c.is_zero()) continue;
    bool positive = sgn(c.re()) > 0 || (sgn(c.re()) == 0 && sgn(c.im()) > 0);
    GaussRational mag = positive ? c : -c;
    if (out.empty()) {
      if (!positive) out += '-';
    } else {
      out += positive ? " + " : " - ";
    }
    std::string coeff = mag.is_real() || sgn(mag.re()) == 0 ? mag.str()
                                                           : "(" + mag.str() + ")";
    if (k == 0) {
      out += coeff;
      continue;
    }
    if (!mag.is_one()) out += coeff + '*';
    out += "eta";
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out;
}

}  // namespace crsing
