#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "crsing/gauss_rational.hpp"
#include "crsing/manifold.hpp"
#include "crsing/poly.hpp"

namespace crsing {

/// Parses a polynomial in dimension n.
///
///   expr   := ['-'] term { ('+'|'-') term }
///   term   := factor { '*' factor }
///   factor := coeff | var ['^' nat]
///   var    := 'z' nat | 'zb' nat | 'w'
///   coeff  := rat | rat 'i' | 'i' | '(' scalar ')'
///   rat    := nat ['/' nat]
///
/// scalar is the grammar of parse_scalar. Whitespace is ignored. Errors carry
/// the byte offset in the message (Syntax, IndexOutOfRange, MalformedNumber).
Poly parse_poly(std::string_view text, unsigned n);

/// Parses a Gaussian rational such as "3", "-1/2", "3/4i", "-i", "1/2+3/4i".
///
///   scalar := part [ ('+'|'-') part ]
///   part   := ['-'|'+'] ( rat ['i'] | 'i' )
GaussRational parse_scalar(std::string_view text);

/// Canonical text form; parse_poly(format_poly(p), p.n()) == p.
std::string format_poly(const Poly& p);

/// format_poly with custom variable names, one per slot
/// [z_1..z_n, zb_1..zb_n, w]. Not parseable in general.
std::string format_poly_named(const Poly& p, const std::vector<std::string>& names);

/// Same as GaussRational::str(); accepted by parse_scalar.
std::string format_scalar(const GaussRational& x);

/// Loads a manifold document:
///   {"n": 2, "A": [["0","1"],["0","0"]], "B": [...], "C": [...], "E": "zb2^3"}
/// Matrix entries are scalar strings (integers are also accepted). "E" is
/// optional.
Manifold load_manifold(std::string_view json_text);
Manifold manifold_from_json(const nlohmann::json& doc);
nlohmann::json manifold_to_json(const Manifold& m);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& rows, unsigned n,
                        const char* name);
nlohmann::json vector_to_json(const Vector& v);

}  // namespace crsing
