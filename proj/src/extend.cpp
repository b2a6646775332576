#include "crsing/extend.hpp"

#include <map>
#include <sstream>

#include "crsing/coefficients.hpp"
#include "crsing/error.hpp"
#include "crsing/polyio.hpp"

namespace crsing {
namespace {

void check_homogeneous(const Poly& f, unsigned d) {
  if (f.contains_w())
    throw Error(ErrorCode::ContainsW, "f must be a polynomial in z, zb");
  for (const auto& [m, c] : f.terms())
    if (m.total_degree() != d)
      throw Error(ErrorCode::InvalidArgument,
                  "f is not homogeneous of degree " + std::to_string(d));
}

void require_cr(const Quadric& q, const Poly& f, unsigned d) {
  if (!is_cr(Manifold(q), f).is_cr)
    throw Error(ErrorCode::NotCR,
                "degree " + std::to_string(d) +
                    " part is not CR on the quadric",
                d);
}

ExtensionResult finish(const Quadric& q, const Poly& f, const MatchingSystem& sys,
                       const Vector& coeffs, bool unique) {
  ExtensionResult r;
  r.F = combine(sys.holomorphic, coeffs);
  r.residual = f - substitute_w(r.F, q.poly());
  r.unique = unique;
  return r;
}

}  // namespace

std::string CRMatrix::to_csv() const {
  std::ostringstream out;
  out << "row";
  for (const auto& m : columns) out << ',' << format_poly(Poly::term(m, 1));
  out << '\n';
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t r = 0; r < columns.size(); ++r) {
      out << 'L' << pairs[p].first << pairs[p].second << ':'
          << format_poly(Poly::term(columns[r], 1));
      const auto& row = matrix.row(row_index(p, r));
      auto it = row.begin();
      for (std::size_t c = 0; c < columns.size(); ++c) {
        out << ',';
        if (it != row.end() && it->first == c) {
          out << it->second.str();
          ++it;
        } else {
          out << '0';
        }
      }
      out << '\n';
    }
  return out.str();
}

CRMatrix build_Xd(const Quadric& q, unsigned d) {
  require_n_ge_2(q.n());
  CRMatrix x;
  x.n = q.n();
  x.degree = d;
  x.columns = zzbar_monomials(q.n(), d);
  std::map<Monomial, std::size_t> index;
  for (std::size_t c = 0; c < x.columns.size(); ++c) index.emplace(x.columns[c], c);
  auto fields = cr_fields(Manifold(q));
  for (const auto& f : fields) x.pairs.emplace_back(f.k, f.l);
  x.matrix = SparseMatrix(fields.size() * x.columns.size(), x.columns.size());
  for (std::size_t c = 0; c < x.columns.size(); ++c) {
    Poly mono = Poly::term(x.columns[c], 1);
    for (std::size_t p = 0; p < fields.size(); ++p) {
      const Poly image = fields[p].apply(mono);
      for (const auto& [m, coeff] : image.terms())
        x.matrix.add(x.row_index(p, index.at(m)), c, coeff);
    }
  }
  return x;
}

unsigned long rank_formula(unsigned d) {
  unsigned long total = 0;
  for (unsigned j = 1; j <= d; ++j) total += 2ul * ((j + 1) / 2) * (d - j + 1);
  return total;
}

CRSpace cr_homogeneous_basis(const Quadric& q, unsigned d) {
  CRMatrix x = build_Xd(q, d);
  RowEchelon ech = row_echelon(x.matrix);
  CRSpace space;
  space.degree = d;
  space.monomials = x.columns.size();
  space.rank = ech.rank();
  std::vector<Poly> monos;
  for (const auto& m : x.columns) monos.push_back(Poly::term(m, 1));
  for (const auto& v : ech.kernel()) space.basis.push_back(combine(monos, v));
  return space;
}

MatchingSystem matching_system(const Quadric& q, unsigned d) {
  const unsigned n = q.n();
  MatchingSystem sys;
  Poly qpoly = q.poly();
  Poly qpow = Poly::constant(n, 1);
  for (unsigned j = 0; 2 * j <= d; ++j) {
    for (const auto& alpha : compositions(n, d - 2 * j)) {
      std::vector<Monomial::Exponent> zero(n, 0);
      Monomial z_alpha(alpha, zero, 0);
      Monomial with_w(alpha, zero, j);
      sys.holomorphic.push_back(Poly::term(with_w, 1));
      sys.restricted.push_back(Poly::term(z_alpha, 1) * qpow);
    }
    qpow = qpow * qpoly;
  }
  return sys;
}

std::size_t matching_rank(const Quadric& q, unsigned d) {
  auto sys = matching_system(q, d);
  std::vector<std::vector<Poly>> columns;
  for (auto& p : sys.restricted) columns.push_back({p});
  return rank(coefficient_system(columns).matrix);
}

std::vector<std::optional<ExtensionResult>> extend_homogeneous_batch(
    const Quadric& q, const std::vector<Poly>& fs, unsigned d) {
  require_n_ge_2(q.n());
  for (const auto& f : fs) {
    if (f.n() != q.n())
      throw Error(ErrorCode::DimensionMismatch, "f and quadric dimensions differ");
    check_homogeneous(f, d);
    require_cr(q, f, d);
  }
  MatchingSystem sys = matching_system(q, d);
  std::vector<std::vector<Poly>> columns;
  for (const auto& p : sys.restricted) columns.push_back({p});
  std::vector<std::vector<Poly>> rhs;
  for (const auto& f : fs) rhs.push_back({f});
  auto cs = coefficient_system(columns, rhs);
  SolveResult sol = solve(cs.matrix, cs.rhs);
  std::vector<std::optional<ExtensionResult>> out;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (!sol.solutions[k]) {
      out.emplace_back(std::nullopt);
      continue;
    }
    out.emplace_back(finish(q, fs[k], sys, *sol.solutions[k], sol.nullity == 0));
  }
  return out;
}

ExtensionResult extend_homogeneous(const Quadric& q, const Poly& f, unsigned d) {
  auto results = extend_homogeneous_batch(q, {f}, d);
  if (!results.front())
    throw Error(ErrorCode::NoExtension,
                "no holomorphic polynomial restricts to the degree " +
                    std::to_string(d) + " part",
                d);
  return std::move(*results.front());
}

ExtensionResult extend_polynomial(const Quadric& q, const Poly& f,
                                  bool require_rank) {
  require_n_ge_2(q.n());
  if (f.n() != q.n())
    throw Error(ErrorCode::DimensionMismatch, "f and quadric dimensions differ");
  if (f.contains_w())
    throw Error(ErrorCode::ContainsW, "f must be a polynomial in z, zb");
  if (require_rank) {
    auto r = rank_condition(q);
    if (r == 0)
      throw Error(ErrorCode::DegenerateQuadric, "Q has no antiholomorphic part");
    if (r < 2)
      throw Error(ErrorCode::RankTooLow, "rank [A*; B] is 1");
  }
  ExtensionResult total;
  total.F = Poly(q.n());
  total.residual = Poly(q.n());
  total.unique = true;
  const int top = f.total_degree();
  for (int d = 0; d <= top; ++d) {
    Poly part = homogeneous_part(f, static_cast<unsigned>(d), false);
    if (part.is_zero()) continue;
    auto ext = extend_homogeneous(q, part, static_cast<unsigned>(d));
    total.F += ext.F;
    total.residual += ext.residual;
    total.unique = total.unique && ext.unique;
  }
  return total;
}

std::optional<LinearCounterexample> counterexample_linear(const Quadric& q) {
  require_n_ge_2(q.n());
  const auto r = rank_condition(q);
  if (r == 0)
    throw Error(ErrorCode::DegenerateQuadric, "Q has no antiholomorphic part");
  if (r >= 2) return std::nullopt;
  auto basis = cr_linear_space(q);
  if (basis.empty())
    throw std::logic_error("rank-one quadric without a CR linear function");
  LinearCounterexample cx;
  cx.v = basis.front();
  cx.h = linear_zbar(q.n(), cx.v);
  cx.is_cr = is_cr(Manifold(q), cx.h).is_cr;
  try {
    extend_homogeneous(q, cx.h, 1);
    cx.extension_fails = false;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoExtension) throw;
    cx.extension_fails = true;
  }
  return cx;
}

}  // namespace crsing
