#include "crsing/polyio.hpp"

#include <cctype>
#include <sstream>

#include "crsing/error.hpp"

namespace crsing {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  // Raw peek without whitespace skipping (for "zb", "3i").
  char peek_raw(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void advance() { ++pos_; }
  std::size_t pos() const { return pos_; }

  [[noreturn]] void fail(ErrorCode code, const std::string& what) const {
    throw Error(code, what + " at offset " + std::to_string(pos_));
  }

  Integer nat() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) fail(ErrorCode::Syntax, "expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Rational rat() {
    Integer num = nat();
    if (accept('/')) {
      Integer den = nat();
      if (den == 0) fail(ErrorCode::MalformedNumber, "zero denominator");
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    return Rational(num);
  }

  // part := ['-'|'+'] ( rat ['i'] | 'i' )
  GaussRational scalar_part() {
    bool negative = false;
    if (accept('-')) negative = true;
    else accept('+');
    GaussRational value;
    if (accept('i')) {
      value = GaussRational::i();
    } else {
      Rational r = rat();
      // The imaginary unit must follow the number directly.
      if (peek_raw() == 'i') {
        advance();
        value = GaussRational(Rational(0), r);
      } else {
        value = GaussRational(r);
      }
    }
    return negative ? -value : value;
  }

  GaussRational scalar() {
    GaussRational value = scalar_part();
    char c = peek();
    if (c == '+' || c == '-') value += scalar_part();
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class PolyParser {
 public:
  PolyParser(std::string_view text, unsigned n) : cur_(text), n_(n) {}

  Poly parse() {
    if (cur_.at_end()) cur_.fail(ErrorCode::Syntax, "empty polynomial");
    bool negative = cur_.accept('-');
    Poly result = term();
    if (negative) result = -result;
    while (!cur_.at_end()) {
      if (cur_.accept('+')) {
        result += term();
      } else if (cur_.accept('-')) {
        result -= term();
      } else {
        cur_.fail(ErrorCode::Syntax, "expected '+' or '-'");
      }
    }
    return result;
  }

 private:
  Poly term() {
    Poly t = factor();
    while (cur_.accept('*')) t = t * factor();
    return t;
  }

  unsigned index() {
    std::size_t at = cur_.pos();
    Integer idx = cur_.nat();
    if (idx < 1 || idx > n_)
      throw Error(ErrorCode::IndexOutOfRange,
                  "variable index " + idx.get_str() + " outside 1.." +
                      std::to_string(n_) + " at offset " + std::to_string(at));
    return static_cast<unsigned>(idx.get_ui());
  }

  Poly factor() {
    char c = cur_.peek();
    if (c == 'z' || c == 'w') {
      Var v;
      cur_.advance();
      if (c == 'w') {
        v = Var::w();
      } else if (cur_.peek_raw() == 'b') {
        cur_.advance();
        v = Var::zb(index());
      } else {
        v = Var::z(index());
      }
      unsigned e = 1;
      if (cur_.accept('^')) {
        Integer k = cur_.nat();
        if (!k.fits_uint_p() || k > 100000)
          cur_.fail(ErrorCode::Syntax, "exponent too large");
        e = static_cast<unsigned>(k.get_ui());
      }
      Monomial m(n_);
      m.set(v, e);
      return Poly::term(m, GaussRational(1));
    }
    if (c == '(') {
      cur_.advance();
      GaussRational value = cur_.scalar();
      if (!cur_.accept(')')) cur_.fail(ErrorCode::Syntax, "expected ')'");
      return Poly::constant(n_, value);
    }
    if (c == 'i') {
      cur_.advance();
      return Poly::constant(n_, GaussRational::i());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational r = cur_.rat();
      if (cur_.peek_raw() == 'i') {
        cur_.advance();
        return Poly::constant(n_, GaussRational(Rational(0), r));
      }
      return Poly::constant(n_, GaussRational(r));
    }
    cur_.fail(ErrorCode::Syntax, "expected a coefficient or variable");
  }

  Cursor cur_;
  unsigned n_;
};

std::string coefficient_text(const GaussRational& c) {
  if (c.is_real()) return c.re().get_str();
  if (sgn(c.re()) == 0) return c.im() == 1 ? "i" : c.im().get_str() + "i";
  return "(" + c.str() + ")";
}

std::string monomial_text(const Monomial& m,
                         const std::vector<std::string>* names = nullptr) {
  std::string out;
  auto emit = [&](const std::string& name, unsigned e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (e > 1) out += '^' + std::to_string(e);
  };
  const unsigned n = m.n();
  for (unsigned i = 1; i <= n; ++i) {
    emit(names ? (*names)[i - 1] : "z" + std::to_string(i), m.z(i));
    emit(names ? (*names)[n + i - 1] : "zb" + std::to_string(i), m.zb(i));
  }
  emit(names ? (*names)[2 * n] : "w", m.w());
  return out;
}

std::string format_terms(const Poly& p, const std::vector<std::string>* names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool positive = sgn(c.re()) > 0 || (sgn(c.re()) == 0 && sgn(c.im()) > 0);
    GaussRational mag = positive ? c : -c;
    if (first) {
      if (!positive) out += '-';
    } else {
      out += positive ? " + " : " - ";
    }
    first = false;
    if (m.is_constant()) {
      out += coefficient_text(mag);
    } else {
      if (!mag.is_one()) out += coefficient_text(mag) + '*';
      out += monomial_text(m, names);
    }
  }
  return out;
}

GaussRational scalar_from_json(const nlohmann::json& v, const char* name) {
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return GaussRational(v.get<long>());
  throw Error(ErrorCode::MalformedNumber,
              std::string("entries of ") + name +
                  " must be strings like \"1/2+3/4i\" or integers");
}

}  // namespace

Poly parse_poly(std::string_view text, unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
  return PolyParser(text, n).parse();
}

GaussRational parse_scalar(std::string_view text) {
  Cursor cur(text);
  GaussRational value;
  try {
    value = cur.scalar();
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedNumber,
                "malformed number \"" + std::string(text) + "\": " + e.what());
  }
  if (!cur.at_end())
    throw Error(ErrorCode::MalformedNumber,
                "malformed number \"" + std::string(text) + "\"");
  return value;
}

std::string format_scalar(const GaussRational& x) { return x.str(); }

std::string format_poly(const Poly& p) { return format_terms(p, nullptr); }

std::string format_poly_named(const Poly& p, const std::vector<std::string>& names) {
  if (names.size() != 2 * p.n() + 1)
    throw Error(ErrorCode::InvalidArgument, "need one name per variable slot");
  return format_terms(p, &names);
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_scalar(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json vector_to_json(const Vector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(format_scalar(x));
  return out;
}

Matrix matrix_from_json(const nlohmann::json& rows, unsigned n,
                        const char* name) {
  if (!rows.is_array() || rows.size() != n)
    throw Error(ErrorCode::Schema, std::string(name) + " must be an array of " +
                                       std::to_string(n) + " rows");
  Matrix m(n, n);
  for (unsigned r = 0; r < n; ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || row.size() != n)
      throw Error(ErrorCode::Schema, std::string(name) + " row " +
                                         std::to_string(r + 1) + " must have " +
                                         std::to_string(n) + " entries");
    for (unsigned c = 0; c < n; ++c) m(r, c) = scalar_from_json(row[c], name);
  }
  return m;
}

Manifold manifold_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::Schema, "manifold must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long>() < 1)
    throw Error(ErrorCode::Schema, "\"n\" must be a positive integer");
  const auto n = static_cast<unsigned>(doc["n"].get<long>());
  for (const char* key : {"A", "B", "C"})
    if (!doc.contains(key))
      throw Error(ErrorCode::Schema, std::string("missing matrix \"") + key + "\"");
  Quadric q(matrix_from_json(doc["A"], n, "A"), matrix_from_json(doc["B"], n, "B"),
            matrix_from_json(doc["C"], n, "C"));
  Poly e(n);
  if (doc.contains("E") && !doc["E"].is_null()) {
    if (!doc["E"].is_string())
      throw Error(ErrorCode::Schema, "\"E\" must be a polynomial string");
    e = parse_poly(doc["E"].get<std::string>(), n);
  }
  return Manifold(std::move(q), std::move(e));
}

Manifold load_manifold(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Schema, std::string("invalid JSON: ") + e.what());
  }
  return manifold_from_json(doc);
}

nlohmann::json manifold_to_json(const Manifold& m) {
  nlohmann::json doc;
  doc["n"] = m.n();
  doc["A"] = matrix_to_json(m.quadric().A());
  doc["B"] = matrix_to_json(m.quadric().B());
  doc["C"] = matrix_to_json(m.quadric().C());
  doc["E"] = format_poly(m.higher_order());
  return doc;
}

}  // namespace crsing
