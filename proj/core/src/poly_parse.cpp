#include <cctype>
#include <optional>

#include "affaut/multipoly.hpp"

namespace affaut {

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;
  const ParamRing& ring;
  int nvars;

  [[noreturn]] void fail(const std::string& msg) const {
    raise(Errc::SyntaxError, msg + " at position " + std::to_string(pos) + " in \"" + text + "\"");
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  std::string read_digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return text.substr(start, pos - start);
  }

  long long read_signed_small() {
    bool neg = eat('-');
    std::string d = read_digits();
    if (d.size() > 6) fail("exponent too large");
    long long v = std::stoll(d);
    return neg ? -v : v;
  }

  Scalar int_scalar(const std::string& digits, bool neg) {
    if (ring.base->is_rational()) {
      mpq_class v(digits);
      if (neg) v = -v;
      return Scalar::of_mpq(v);
    }
    unsigned p = ring.base->characteristic();
    unsigned long long acc = 0;
    for (char c : digits) acc = (acc * 10 + static_cast<unsigned long long>(c - '0')) % p;
    Scalar s = Scalar::of_int(ring.base, static_cast<long long>(acc));
    return neg ? -s : s;
  }

  MultiPoly parse_bracket_scalar() {
    // '[' already consumed
    std::vector<long long> entries;
    while (true) {
      bool neg = eat('-');
      std::string d = read_digits();
      if (d.size() > 9) fail("coefficient list entry too large");
      long long v = std::stoll(d);
      entries.push_back(neg ? -v : v);
      if (eat(']')) break;
      if (!eat(',')) fail("expected ',' or ']' in coefficient list");
    }
    require(ring.base->is_finite(), Errc::SyntaxError,
            "coefficient-list literal over " + ring.base->tag());
    const auto& f = ring.base;
    require(entries.size() <= f->extension_degree(), Errc::SyntaxError,
            "coefficient list longer than extension degree");
    std::vector<unsigned> dig;
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) dig.push_back(f->from_int(*it));
    dig.resize(f->extension_degree(), 0);
    return MultiPoly::constant(ring, nvars, Scalar::of_index(f, f->from_digits(dig)));
  }

  MultiPoly parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      MultiPoly e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (c == '[') {
      ++pos;
      return parse_bracket_scalar();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string d = read_digits();
      return MultiPoly::constant(ring, nvars, int_scalar(d, false));
    }
    if (c == 'x') {
      ++pos;
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("expected a variable index after 'x'");
      int i = text[pos] - '0';
      ++pos;
      require(i >= 1 && i <= nvars, Errc::UnknownVariable,
              "x" + std::to_string(i) + " is not a variable (n = " + std::to_string(nvars) + ")");
      return MultiPoly::variable(ring, nvars, i);
    }
    if (c == 't') {
      ++pos;
      require(ring.has_param(), Errc::UnknownVariable,
              "parameter t does not exist in " + ring.tag());
      return MultiPoly::param(ring, nvars);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  MultiPoly parse_power() {
    MultiPoly base = parse_atom();
    if (!eat('^')) return base;
    long long e = read_signed_small();
    if (e >= 0) return base.pow(static_cast<int>(e));
    // negative exponents: only units (scalars and t-monomials in Laurent rings)
    MultiPoly powed = base.pow(static_cast<int>(-e));
    auto check_unit = [&]() -> std::optional<MultiPoly> {
      if (powed.terms().size() != 1) return std::nullopt;
      const auto& [m, coef] = *powed.terms().begin();
      if (m.x_degree() != 0) return std::nullopt;
      if (m.t != 0 && ring.kind != RingKind::LaurentT) return std::nullopt;
      MultiPoly r(ring, nvars);
      r.add_term(Monomial{-m.t, std::vector<int>(static_cast<std::size_t>(nvars), 0)},
                 coef.inverse());
      return r;
    };
    auto inv = check_unit();
    if (!inv) {
      if (base.depends_on_t())
        raise(Errc::NegativeTPower, "t^" + std::to_string(e) + " is not allowed in " + ring.tag());
      fail("negative exponent on a non-invertible base");
    }
    return *inv;
  }

  MultiPoly parse_unary() {
    if (eat('-')) return -parse_unary();
    return parse_power();
  }

  MultiPoly parse_term() {
    MultiPoly p = parse_unary();
    while (true) {
      if (eat('*')) {
        p = p * parse_unary();
      } else if (eat('/')) {
        MultiPoly d = parse_unary();
        if (d.terms().size() != 1) fail("division is only defined by units");
        const auto& [m, coef] = *d.terms().begin();
        if (m.x_degree() != 0) fail("division is only defined by units");
        if (m.t != 0 && ring.kind != RingKind::LaurentT)
          raise(Errc::NegativeTPower, "division by t in " + ring.tag());
        MultiPoly inv(ring, nvars);
        inv.add_term(Monomial{-m.t, std::vector<int>(static_cast<std::size_t>(nvars), 0)},
                     coef.inverse());
        p = p * inv;
      } else {
        break;
      }
    }
    return p;
  }

  MultiPoly parse_expr() {
    MultiPoly p = parse_term();
    while (true) {
      if (eat('+'))
        p = p + parse_term();
      else if (peek() == '-') {
        // binary minus; unary minus inside parse_term handles the operand sign
        ++pos;
        p = p - parse_term();
      } else {
        break;
      }
    }
    return p;
  }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const ParamRing& ring, int nvars) {
  Parser parser{text, 0, ring, nvars};
  MultiPoly p = parser.parse_expr();
  parser.skip_ws();
  if (parser.pos != text.size()) parser.fail("trailing input");
  return p;
}

}  // namespace affaut
