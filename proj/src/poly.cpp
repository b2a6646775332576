#include "crsing/poly.hpp"

#include <algorithm>
#include <string>

#include "crsing/error.hpp"

namespace crsing {
namespace {

void check_same_dim(const Poly& a, const Poly& b) {
  if (a.n() != b.n())
    throw Error(ErrorCode::DimensionMismatch,
                "polynomials live in dimensions " + std::to_string(a.n()) +
                    " and " + std::to_string(b.n()));
}

void accumulate(Poly::Terms& terms, const Monomial& m,
                const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

void check_var(unsigned n, Var v) {
  if (v.kind == Var::Kind::W) return;
  if (v.index < 1 || v.index > n)
    throw Error(ErrorCode::UnknownVariable,
                "variable index " + std::to_string(v.index) +
                    " outside 1.." + std::to_string(n));
}

Poly Poly::constant(unsigned n, const GaussRational& c) {
  Poly p(n);
  p.add_term(Monomial(n), c);
  return p;
}

Poly Poly::variable(unsigned n, Var v) {
  check_var(n, v);
  Monomial m(n);
  m.set(v, 1);
  return term(m, GaussRational(1));
}

Poly Poly::term(const Monomial& m, const GaussRational& c) {
  Poly p(m.n());
  p.add_term(m, c);
  return p;
}

GaussRational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussRational() : it->second;
}

void Poly::add_term(const Monomial& m, const GaussRational& c) {
  if (m.n() != n_)
    throw Error(ErrorCode::DimensionMismatch, "monomial dimension mismatch");
  accumulate(terms_, m, c);
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_)
    d = std::max(d, static_cast<int>(m.total_degree()));
  return d;
}

int Poly::weighted_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_)
    d = std::max(d, static_cast<int>(m.weighted_degree()));
  return d;
}

int Poly::order() const {
  // Terms are sorted by ascending total degree.
  return terms_.empty() ? -1
                        : static_cast<int>(terms_.begin()->first.total_degree());
}

unsigned Poly::degree_in(Var v) const {
  check_var(n_, v);
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.get(v));
  return d;
}

bool Poly::contains_w() const {
  return std::ranges::any_of(terms_,
                             [](const auto& t) { return t.first.w() > 0; });
}

bool Poly::contains_zbar() const {
  return std::ranges::any_of(
      terms_, [](const auto& t) { return t.first.zb_degree() > 0; });
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_dim(*this, o);
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_dim(*this, o);
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, -c);
  return *this;
}

Poly& Poly::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same_dim(a, b);
  Poly r(a.n());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) accumulate(r.terms_, ma * mb, ca * cb);
  return r;
}

Poly multiply_truncated(const Poly& a, const Poly& b, unsigned max_degree) {
  check_same_dim(a, b);
  Poly r(a.n());
  for (const auto& [ma, ca] : a.terms()) {
    unsigned da = ma.total_degree();
    if (da > max_degree) break;
    for (const auto& [mb, cb] : b.terms()) {
      if (da + mb.total_degree() > max_degree) break;
      r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(n_, GaussRational(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Poly differentiate(const Poly& p, Var v) {
  check_var(p.n(), v);
  Poly r(p.n());
  for (const auto& [m, c] : p.terms()) {
    auto e = m.get(v);
    if (e == 0) continue;
    Monomial dm = m;
    dm.set(v, e - 1);
    r.add_term(dm, c * GaussRational(static_cast<long>(e)));
  }
  return r;
}

Poly conjugate_poly(const Poly& p) {
  if (p.contains_w())
    throw Error(ErrorCode::ContainsW,
                "conjugation is only defined on the w-free subring");
  Poly r(p.n());
  for (const auto& [m, c] : p.terms())
    r.add_term(Monomial(m.zb_block(), m.z_block(), 0), c.conj());
  return r;
}

Poly substitute_w(const Poly& p, const Poly& q,
                  std::optional<unsigned> max_degree) {
  check_same_dim(p, q);
  if (q.contains_w())
    throw Error(ErrorCode::ContainsW, "substituted polynomial contains w");
  if (!q.coefficient(Monomial(q.n())).is_zero())
    throw Error(ErrorCode::ConstantTerm,
                "substituted polynomial has a constant term");
  const unsigned cap = max_degree.value_or(~0u);
  auto by_power = collect(p, Var::w());
  Poly result(p.n());
  Poly power = Poly::constant(p.n(), GaussRational(1));
  unsigned current = 0;
  for (const auto& [j, coeff] : by_power) {
    while (current < j) {
      power = max_degree ? multiply_truncated(power, q, cap) : power * q;
      ++current;
    }
    result += max_degree ? multiply_truncated(coeff, power, cap)
                         : coeff * power;
  }
  return result;
}

Poly substitute(const Poly& p, const std::vector<Poly>& images,
                std::optional<unsigned> max_degree) {
  const std::size_t slots = 2 * std::size_t{p.n()} + 1;
  if (images.size() != slots)
    throw Error(ErrorCode::DimensionMismatch,
                "substitution needs one image per variable");
  const unsigned target = images.front().n();
  for (const auto& img : images)
    if (img.n() != target)
      throw Error(ErrorCode::DimensionMismatch,
                  "substitution images disagree on dimension");
  const unsigned cap = max_degree.value_or(~0u);
  auto mul = [&](const Poly& a, const Poly& b) {
    return max_degree ? multiply_truncated(a, b, cap) : a * b;
  };
  // powers[s][e] = images[s]^e, filled lazily.
  std::vector<std::vector<Poly>> powers(slots);
  auto power_of = [&](std::size_t s, unsigned e) -> const Poly& {
    auto& cache = powers[s];
    if (cache.empty()) cache.push_back(Poly::constant(target, 1));
    while (cache.size() <= e) cache.push_back(mul(cache.back(), images[s]));
    return cache[e];
  };
  Poly result(target);
  for (const auto& [m, c] : p.terms()) {
    Poly t = Poly::constant(target, c);
    auto exps = m.exponents();
    for (std::size_t s = 0; s < slots && !t.is_zero(); ++s)
      if (exps[s] > 0) t = mul(t, power_of(s, exps[s]));
    result += t;
  }
  return result;
}

Poly homogeneous_part(const Poly& p, unsigned d, bool weighted) {
  Poly r(p.n());
  for (const auto& [m, c] : p.terms()) {
    unsigned deg = weighted ? m.weighted_degree() : m.total_degree();
    if (deg == d) r.add_term(m, c);
  }
  return r;
}

Poly truncate(const Poly& p, unsigned max_degree) {
  Poly r(p.n());
  for (const auto& [m, c] : p.terms()) {
    if (m.total_degree() > max_degree) break;
    r.add_term(m, c);
  }
  return r;
}

std::map<unsigned, Poly> collect(const Poly& p, Var v) {
  check_var(p.n(), v);
  std::map<unsigned, Poly> out;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest.set(v, 0);
    auto [it, _] = out.try_emplace(m.get(v), Poly(p.n()));
    it->second.add_term(rest, c);
  }
  return out;
}

DivisionResult weierstrass_divide(const Poly& p, const Poly& divisor,
                                  Var main_var) {
  check_same_dim(p, divisor);
  check_var(p.n(), main_var);
  auto divisor_parts = collect(divisor, main_var);
  if (divisor_parts.empty() || divisor_parts.rbegin()->first == 0)
    throw Error(ErrorCode::InvalidArgument,
                "divisor must have positive degree in the main variable");
  const unsigned m = divisor_parts.rbegin()->first;
  const Poly& leading = divisor_parts.rbegin()->second;
  if (!leading.is_constant())
    throw Error(ErrorCode::NonConstantLeading,
                "leading coefficient of the divisor is not a constant");
  const GaussRational lead_inv = leading.terms().begin()->second.inverse();

  Poly quotient(p.n());
  Poly remainder = p;
  while (true) {
    unsigned k = remainder.degree_in(main_var);
    if (remainder.is_zero() || k < m) break;
    Poly step(p.n());
    for (const auto& [mono, c] : remainder.terms()) {
      if (mono.get(main_var) != k) continue;
      Monomial shifted = mono;
      shifted.set(main_var, k - m);
      step.add_term(shifted, c * lead_inv);
    }
    quotient += step;
    remainder -= step * divisor;
  }
  return {std::move(quotient), std::move(remainder)};
}

}  // namespace crsing
