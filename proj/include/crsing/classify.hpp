#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crsing/formal.hpp"
#include "crsing/linalg.hpp"
#include "crsing/manifold.hpp"
#include "crsing/poly.hpp"

namespace crsing {

enum class ClassKind { NonExceptional, RankZero, Case1, Case2, Case3, Case4 };

struct ClassLabel {
  ClassKind kind = ClassKind::NonExceptional;
  /// a^2 for Case3 (normal form |z1|^2 + a zb1^2, a >= 0).
  std::optional<Rational> a_squared;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

std::string to_string(const ClassLabel& label);
std::string_view to_string(ClassKind kind);

struct Normalization {
  /// Columns 2..n of T span the kernel of [A*; B].
  Matrix T;
  /// transform(q, T): only the first row of A and the (1,1) entry of B are
  /// nonzero.
  Quadric normalized;
};

/// Requires rank [A*; B] == 1 (RankNotOne otherwise).
Normalization normalize_rank1(const Quadric& q);

/// Decision on the normalized data a_j = A'(1, j) and mu = conj(B'(1, 1)):
/// a = 0 gives Case4; a supported at index 1 only gives Case3 with
/// a^2 = |mu|^2 / |a_1|^2; otherwise Case1 (mu != 0) or Case2 (mu = 0).
ClassLabel classify_quadric(const Quadric& q);

/// Normal form quadric of the label in dimension n (Case3 needs a^2 a
/// rational square, InvalidArgument otherwise).
Quadric normal_form(const ClassLabel& label, unsigned n);

enum class CRImageForm { Form1, Form2, Form3, Form4, Form5, NotApplicable };
std::string_view to_string(CRImageForm form);

CRImageForm classify_cr_image(const Manifold& m);

/// (s, t, xi) -> (s + it, xi, Q(s + it, xi, s - it)) for a normal form.
///
/// Components are polynomials in dimension n where the slot z1 holds s, zb1
/// holds t, z_j holds xi_j and zb_j holds conj(xi_j) (j >= 2).
struct LeviFlatParam {
  ClassLabel label;
  Quadric quadric;
  /// z_1, ..., z_n, w as functions of the parameters.
  std::vector<Poly> map;
  /// The w component is free of conj(xi).
  bool holomorphic_in_xi = false;
  /// Q evaluated on the image equals the w component.
  bool identity_holds = false;
};

/// Rejects NonExceptional and RankZero (InvalidArgument).
LeviFlatParam levi_flat_image_param(const ClassLabel& label, unsigned n);

/// Names of the parameter slots: s, xi2, ..., t, xib2, ..., w.
std::vector<std::string> levi_flat_param_names(unsigned n);

enum class QuadraticMatch { Matches, Mismatch, NormalizationRequired };
std::string_view to_string(QuadraticMatch m);

struct FirstIntegralReport {
  bool real_valued = false;
  bool cr_through_order = false;
  QuadraticMatch quadratic = QuadraticMatch::Mismatch;
  /// alpha with g_2 = alpha Q, when it exists.
  std::optional<Rational> alpha;
  /// First failing pair and degree of the CR test, when any.
  std::optional<unsigned> failing_degree;

  bool passes() const {
    return real_valued && cr_through_order &&
           quadratic == QuadraticMatch::Matches;
  }
};

/// Requires rank >= 2 (RankTooLow / DegenerateQuadric).
FirstIntegralReport check_first_integral(const Manifold& m, const Poly& g,
                                         unsigned N);

/// Holomorphic F with F(z, rho) = g through order N. Fails NotCRAtDegree when
/// g is not CR, NotApplicable when g is not real-valued or its quadratic part
/// is not alpha Q, NormalizationRequired when Q itself is not real-valued.
FormalExtension flatten_from_first_integral(const Manifold& m, const Poly& g,
                                            unsigned N);

}  // namespace crsing
