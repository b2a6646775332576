#include "crsing/formal.hpp"

#include <string>

#include "crsing/error.hpp"
#include "crsing/extend.hpp"

namespace crsing {
namespace {

bool cr_through(const Manifold& m, const Poly& g, unsigned N) {
  for (const auto& field : cr_fields(m))
    if (!truncate(field.apply(g), N).is_zero()) return false;
  return true;
}

[[noreturn]] void not_cr(unsigned k) {
  throw Error(ErrorCode::NotCRAtDegree,
              "f is not CR on M: failure at degree " + std::to_string(k), k);
}

}  // namespace

FormalExtension formal_extend(const Manifold& m, const Poly& f, unsigned N,
                              RankPolicy policy) {
  require_n_ge_2(m.n());
  if (f.n() != m.n())
    throw Error(ErrorCode::DimensionMismatch, "f and manifold dimensions differ");
  if (f.contains_w())
    throw Error(ErrorCode::ContainsW, "f must be a polynomial in z, zb");
  const Quadric& q = m.quadric();
  const auto r = rank_condition(q);
  if (r == 0)
    throw Error(ErrorCode::DegenerateQuadric,
                "Q has no antiholomorphic part; the quadric model is complex");
  if (r < 2 && policy == RankPolicy::RequireRankTwo)
    throw Error(ErrorCode::RankTooLow, "rank [A*; B] is 1");

  const Manifold model(q);
  FormalExtension out;
  out.order = N;
  out.F = Poly(m.n());
  Poly remainder = truncate(f, N);
  while (!remainder.is_zero()) {
    const auto k = static_cast<unsigned>(remainder.order());
    Poly fk = homogeneous_part(remainder, k, false);
    if (!is_cr(model, fk).is_cr) not_cr(k);
    ExtensionResult ext;
    try {
      ext = extend_homogeneous(q, fk, k);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoExtension) throw;
      if (!cr_through(m, remainder, N)) not_cr(k);
      throw;
    }
    out.stages.push_back({k, ext.F, ext.unique});
    out.unique = out.unique && ext.unique;
    out.F += ext.F;
    remainder -= substitute_w(ext.F, m.rho(), N);
  }
  out.residual = f - substitute_w(out.F, m.rho());
  out.residual_order = out.residual.is_zero()
                           ? kInfiniteOrder
                           : static_cast<unsigned>(out.residual.order());
  return out;
}

bool check_formal_uniqueness(const Manifold& m, const Poly& f, unsigned N) {
  return formal_extend(m, f, N, RankPolicy::RequireRankTwo).unique;
}

}  // namespace crsing
