#pragma once

#include <optional>
#include <string>

#include "crsing/gauss_rational.hpp"
#include "crsing/linalg.hpp"

namespace crsing {

/// (a) (p + q eta) zeta = (r + s eta) zeta'
/// (b) (p + q eta) zeta = (r + s eta + t eta^2) zeta', distinct roots
/// (c) (p + q eta) zeta = t (eta - xi)^2 zeta'
enum class OdeCase { A, B, C };

struct ODEParams {
  GaussRational p, q, r, s, t, xi;
};

enum class Verdict { NoNonzero, ConstantOnly, NonconstantPoly };

std::string_view to_string(Verdict v);
std::string_view to_string(OdeCase c);

/// Dense univariate polynomial in eta, lowest coefficient first, no trailing
/// zeros.
using EtaPoly = Vector;

struct ODEDecision {
  Verdict verdict = Verdict::NoNonzero;
  /// Solution of the highest degree, normalized monic, when one exists.
  std::optional<EtaPoly> witness;
  /// Degree of the polynomial solution for NonconstantPoly (0 for constants).
  unsigned degree = 0;
};

/// Coefficients r, s, t of the right-hand factor for the given case. Case (a)
/// has t = 0; case (c) expands t (eta - xi)^2.
void ode_rhs_coefficients(const ODEParams& params, OdeCase c, GaussRational& r,
                          GaussRational& s, GaussRational& t);

/// (p + q eta) zeta - (r + s eta + t eta^2) zeta', exactly.
EtaPoly ode_residual(const ODEParams& params, OdeCase c, const EtaPoly& zeta);

/// Rejects s = 0 (InvalidArgument).
ODEDecision decide_case_a(const ODEParams& params);
/// Rejects t = 0 and s^2 - 4rt = 0 (InvalidArgument).
ODEDecision decide_case_b(const ODEParams& params);
/// Rejects t = 0 (InvalidArgument). Uses p, q, t, xi.
ODEDecision decide_case_c(const ODEParams& params);
ODEDecision decide(const ODEParams& params, OdeCase c);

/// Independent oracle: solves for zeta of degree <= D by coefficient matching.
ODEDecision brute_force_ode(const ODEParams& params, OdeCase c, unsigned D);

std::string format_eta_poly(const EtaPoly& p);

}  // namespace crsing
