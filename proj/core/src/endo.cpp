#include "affaut/endo.hpp"

#include <algorithm>

namespace affaut {

Endo::Endo(ParamRing ring, std::vector<MultiPoly> components)
    : ring_(std::move(ring)), n_(static_cast<int>(components.size())), comps_(std::move(components)) {
  require(n_ >= 1, Errc::DimensionMismatch, "an endomorphism needs at least one component");
  for (const auto& c : comps_) {
    require(c.ring() == ring_, Errc::RingMismatch, "component ring differs from the declared ring");
    require(c.nvars() == n_, Errc::DimensionMismatch, "component arity differs from the dimension");
  }
}

Endo Endo::identity(const ParamRing& ring, int n) {
  std::vector<MultiPoly> comps;
  comps.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) comps.push_back(MultiPoly::variable(ring, n, i));
  return Endo(ring, std::move(comps));
}

Endo Endo::translation(const ParamRing& ring, const std::vector<Scalar>& v) {
  int n = static_cast<int>(v.size());
  std::vector<MultiPoly> comps;
  for (int i = 1; i <= n; ++i)
    comps.push_back(MultiPoly::variable(ring, n, i) +
                    MultiPoly::constant(ring, n, v[static_cast<std::size_t>(i - 1)]));
  return Endo(ring, std::move(comps));
}

Endo Endo::linear(const ParamRing& ring, const ScalarMatrix& m) {
  int n = static_cast<int>(m.size());
  std::vector<MultiPoly> comps;
  for (int i = 0; i < n; ++i) {
    require(static_cast<int>(m[static_cast<std::size_t>(i)].size()) == n, Errc::DimensionMismatch,
            "linear map matrix must be square");
    MultiPoly c(ring, n);
    for (int j = 0; j < n; ++j)
      c = c + MultiPoly::variable(ring, n, j + 1) * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    comps.push_back(c);
  }
  return Endo(ring, std::move(comps));
}

bool Endo::is_identity() const { return *this == identity(ring_, n_); }

bool Endo::is_translation() const {
  for (int i = 1; i <= n_; ++i) {
    MultiPoly d = component(i) - MultiPoly::variable(ring_, n_, i);
    for (const auto& [m, c] : d.terms())
      if (m.x_degree() != 0) return false;
  }
  return true;
}

std::vector<Scalar> Endo::translation_vector() const {
  require(is_translation() && !ring_.has_param(), Errc::BadRequest,
          "not a parameter-free translation: " + str());
  std::vector<Scalar> v;
  for (int i = 1; i <= n_; ++i)
    v.push_back((component(i) - MultiPoly::variable(ring_, n_, i)).constant_value());
  return v;
}

int Endo::degree() const {
  int d = 0;
  for (const auto& c : comps_) d = std::max(d, c.x_degree());
  return d;
}

std::vector<Scalar> Endo::evaluate(const std::vector<Scalar>& point,
                                   const std::optional<Scalar>& t_value) const {
  std::vector<Scalar> out;
  out.reserve(comps_.size());
  for (const auto& c : comps_) out.push_back(c.evaluate(point, t_value));
  return out;
}

std::vector<MultiPoly> Endo::origin_image() const {
  std::vector<MultiPoly> out;
  for (const auto& c : comps_) {
    MultiPoly k(ring_, n_);
    for (const auto& [m, coeff] : c.terms())
      if (m.x_degree() == 0) k.add_term(m, coeff);
    out.push_back(k);
  }
  return out;
}

Endo Endo::substitute_t(const MultiPoly& t_image) const {
  std::vector<MultiPoly> images;
  const ParamRing& target = t_image.ring();
  for (int i = 1; i <= n_; ++i) images.push_back(MultiPoly::variable(target, n_, i));
  std::vector<MultiPoly> comps;
  for (const auto& c : comps_) comps.push_back(c.substitute(images, t_image));
  return Endo(target, std::move(comps));
}

Endo Endo::specialize_t(const Scalar& t0) const {
  require(ring_.has_param(), Errc::RingMismatch, "specialize_t on a parameter-free endomorphism");
  std::vector<MultiPoly> comps;
  for (const auto& c : comps_) comps.push_back(c.specialize_t(t0));
  return Endo(ring_over(ring_.base), std::move(comps));
}

Endo Endo::cast(RingKind k) const {
  std::vector<MultiPoly> comps;
  for (const auto& c : comps_) comps.push_back(c.cast(k));
  return Endo(ring_over(ring_.base, k), std::move(comps));
}

std::string Endo::str() const {
  std::string s = "(";
  for (int i = 1; i <= n_; ++i) {
    if (i > 1) s += ", ";
    s += component(i).str();
  }
  return s + ") over " + ring_.tag();
}

Endo compose(const Endo& f, const Endo& g) {
  require(f.ring() == g.ring(), Errc::RingMismatch,
          "composing endomorphisms over " + f.ring().tag() + " and " + g.ring().tag());
  require(f.n() == g.n(), Errc::DimensionMismatch, "composing endomorphisms of different dimension");
  std::vector<MultiPoly> comps;
  for (const auto& c : f.components()) comps.push_back(c.substitute(g.components()));
  return Endo(f.ring(), std::move(comps));
}

PolyMatrix derivative_matrix(const Endo& f) {
  PolyMatrix m;
  for (int i = 1; i <= f.n(); ++i) {
    std::vector<MultiPoly> row;
    for (int j = 1; j <= f.n(); ++j) row.push_back(f.component(i).derivative(j));
    m.push_back(std::move(row));
  }
  return m;
}

MultiPoly poly_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  require(n >= 1 && n <= 6, Errc::DimensionMismatch,
          "cofactor determinant supports 1 <= n <= 6, got n = " + std::to_string(n));
  if (n == 1) return m[0][0];
  const ParamRing& ring = m[0][0].ring();
  int nv = m[0][0].nvars();
  MultiPoly acc(ring, nv);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MultiPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    MultiPoly term = m[0][j] * poly_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

MultiPoly jacobian(const Endo& f) { return poly_det(derivative_matrix(f)); }

bool chain_rule_check(const Endo& f, const Endo& g) {
  Endo fg = compose(f, g);
  PolyMatrix lhs = derivative_matrix(fg);
  PolyMatrix df = derivative_matrix(f);
  PolyMatrix dg = derivative_matrix(g);
  const int n = f.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MultiPoly entry(f.ring(), n);
      for (int k = 0; k < n; ++k) {
        MultiPoly pulled = df[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].substitute(g.components());
        entry = entry + pulled * dg[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      }
      if (entry != lhs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) return false;
    }
  return true;
}

std::pair<ScalarMatrix, std::vector<Scalar>> linear_part(const Endo& f) {
  const int n = f.n();
  const Scalar zero = Scalar::zero(f.ring().base);
  ScalarMatrix m(static_cast<std::size_t>(n), std::vector<Scalar>(static_cast<std::size_t>(n), zero));
  std::vector<Scalar> v;
  for (int i = 1; i <= n; ++i) {
    const MultiPoly& c = f.component(i);
    Scalar constant = zero;
    for (const auto& [mono, coeff] : c.terms()) {
      int d = mono.x_degree();
      if (d > 1) continue;
      require(mono.t == 0, Errc::RingMismatch,
              "linear part requires parameter-free low-degree terms: " + c.str());
      if (d == 0) {
        constant = coeff;
      } else {
        for (int j = 0; j < n; ++j)
          if (mono.x[static_cast<std::size_t>(j)] == 1)
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] = coeff;
      }
    }
    v.push_back(constant);
  }
  return {m, v};
}

Scalar matrix_det(const ScalarMatrix& m) {
  // Gaussian elimination with exact arithmetic
  ScalarMatrix a = m;
  const std::size_t n = a.size();
  if (n == 0) raise(Errc::DimensionMismatch, "empty matrix");
  const FieldPtr field = a[0][0].field();
  Scalar det = Scalar::one(field);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Scalar::zero(field);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det = det * a[col][col];
    Scalar inv = a[col][col].inverse();
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col].is_zero()) continue;
      Scalar factor = a[row][col] * inv;
      for (std::size_t k = col; k < n; ++k) a[row][k] = a[row][k] - factor * a[col][k];
    }
  }
  return det;
}

ScalarMatrix matrix_inverse(const ScalarMatrix& m) {
  ScalarMatrix a = m;
  const std::size_t n = a.size();
  require(n > 0, Errc::DimensionMismatch, "empty matrix");
  const FieldPtr field = a[0][0].field();
  ScalarMatrix inv(n, std::vector<Scalar>(n, Scalar::zero(field)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Scalar::one(field);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    require(pivot < n, Errc::SingularMatrix, "matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Scalar s = a[col][col].inverse();
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] = a[col][k] * s;
      inv[col][k] = inv[col][k] * s;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      Scalar factor = a[row][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[row][k] = a[row][k] - factor * a[col][k];
        inv[row][k] = inv[row][k] - factor * inv[col][k];
      }
    }
  }
  return inv;
}

ScalarMatrix matrix_mul(const ScalarMatrix& a, const ScalarMatrix& b) {
  const std::size_t n = a.size();
  const FieldPtr field = a[0][0].field();
  ScalarMatrix c(n, std::vector<Scalar>(n, Scalar::zero(field)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar acc = Scalar::zero(field);
      for (std::size_t k = 0; k < n; ++k) acc = acc + a[i][k] * b[k][j];
      c[i][j] = acc;
    }
  return c;
}

bool matrix_is_identity(const ScalarMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i == j && !m[i][j].is_one()) return false;
      if (i != j && !m[i][j].is_zero()) return false;
    }
  return true;
}

Endo parse_endo(const std::string& text, const std::optional<ParamRing>& ring_arg) {
  // split an optional trailing "over RING"; "over" cannot occur inside the
  // polynomial grammar, so a plain word scan is unambiguous
  std::string body = text;
  std::optional<ParamRing> ring = ring_arg;
  auto pos = text.rfind("over");
  if (pos != std::string::npos) {
    bool standalone = (pos == 0 || std::isspace(static_cast<unsigned char>(text[pos - 1]))) &&
                      (pos + 4 < text.size());
    if (standalone) {
      body = text.substr(0, pos);
      ring = ParamRing::parse(text.substr(pos + 4));
    }
  }
  require(ring.has_value(), Errc::BadRequest, "no ring given for endomorphism: " + text);

  // strip outer parentheses and split on top-level commas
  std::size_t a = body.find_first_not_of(" \t\r\n");
  std::size_t b = body.find_last_not_of(" \t\r\n");
  require(a != std::string::npos && body[a] == '(' && body[b] == ')', Errc::SyntaxError,
          "expected a parenthesized component tuple: " + text);
  std::string inner = body.substr(a + 1, b - a - 1);
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : inner) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  int n = static_cast<int>(parts.size());
  std::vector<MultiPoly> comps;
  for (const auto& p : parts) comps.push_back(parse_poly(p, *ring, n));
  return Endo(*ring, std::move(comps));
}

}  // namespace affaut
