#include "affaut/multipoly.hpp"

#include <algorithm>

namespace affaut {

MultiPoly::MultiPoly(ParamRing ring, int nvars) : ring_(std::move(ring)), nvars_(nvars) {
  require(nvars_ >= 1 && nvars_ <= 9, Errc::DimensionMismatch,
          "nvars must be in 1..9, got " + std::to_string(nvars_));
}

MultiPoly MultiPoly::constant(const ParamRing& ring, int nvars, const Scalar& c) {
  MultiPoly p(ring, nvars);
  require(*c.field() == *ring.base, Errc::FieldMismatch, "constant from a different field");
  p.add_term(Monomial{0, std::vector<int>(nvars, 0)}, c);
  return p;
}

MultiPoly MultiPoly::of_int(const ParamRing& ring, int nvars, long long v) {
  return constant(ring, nvars, Scalar::of_int(ring.base, v));
}

MultiPoly MultiPoly::variable(const ParamRing& ring, int nvars, int i) {
  MultiPoly p(ring, nvars);
  require(i >= 1 && i <= nvars, Errc::UnknownVariable,
          "x" + std::to_string(i) + " out of range for n=" + std::to_string(nvars));
  Monomial m{0, std::vector<int>(nvars, 0)};
  m.x[i - 1] = 1;
  p.add_term(m, Scalar::one(ring.base));
  return p;
}

MultiPoly MultiPoly::param(const ParamRing& ring, int nvars, int exp) {
  require(ring.has_param(), Errc::UnknownVariable, "ring " + ring.tag() + " has no parameter t");
  MultiPoly p(ring, nvars);
  p.add_term(Monomial{exp, std::vector<int>(nvars, 0)}, Scalar::one(ring.base));
  return p;
}

void MultiPoly::check_monomial(const Monomial& m) const {
  require(static_cast<int>(m.x.size()) == nvars_, Errc::DimensionMismatch, "monomial arity mismatch");
  for (int e : m.x) require(e >= 0, Errc::BadRequest, "negative x-exponent");
  if (m.t != 0)
    require(ring_.has_param(), Errc::UnknownVariable, "t-term in parameter-free ring");
  if (m.t < 0)
    require(ring_.kind == RingKind::LaurentT, Errc::NegativeTPower,
            "negative t-exponent in " + ring_.tag());
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  check_monomial(m);
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    Scalar s = it->second + c;
    if (s.is_zero())
      terms_.erase(it);
    else
      it->second = s;
  }
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Monomial& m = terms_.begin()->first;
  return m.t == 0 && m.x_degree() == 0;
}

bool MultiPoly::is_x_constant() const {
  for (const auto& [m, c] : terms_)
    if (m.x_degree() != 0) return false;
  return true;
}

Scalar MultiPoly::constant_value() const {
  if (terms_.empty()) return Scalar::zero(ring_.base);
  require(is_constant(), Errc::BadRequest, "polynomial is not constant: " + str());
  return terms_.begin()->second;
}

bool MultiPoly::depends_on_x(int i) const {
  for (const auto& [m, c] : terms_)
    if (m.x[i - 1] != 0) return true;
  return false;
}

bool MultiPoly::depends_on_t() const {
  for (const auto& [m, c] : terms_)
    if (m.t != 0) return true;
  return false;
}

int MultiPoly::x_degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.x_degree();  // graded order: last term has max degree
}

int MultiPoly::min_t_exp() const {
  int v = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first || m.t < v) v = m.t;
    first = false;
  }
  return v;
}

int MultiPoly::max_t_exp() const {
  int v = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first || m.t > v) v = m.t;
    first = false;
  }
  return v;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require(ring_ == o.ring_ && nvars_ == o.nvars_, Errc::RingMismatch,
          "adding polynomials over " + ring_.tag() + " and " + o.ring_.tag());
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ring_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const Scalar& c) const {
  MultiPoly r(ring_, nvars_);
  require(*c.field() == *ring_.base, Errc::FieldMismatch, "scalar from a different field");
  if (c.is_zero()) return r;
  for (const auto& [m, coeff] : terms_) {
    Scalar s = coeff * c;
    if (!s.is_zero()) r.terms_.emplace(m, s);
  }
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  require(ring_ == o.ring_ && nvars_ == o.nvars_, Errc::RingMismatch,
          "multiplying polynomials over " + ring_.tag() + " and " + o.ring_.tag());
  MultiPoly r(ring_, nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m{ma.t + mb.t, ma.x};
      for (int i = 0; i < nvars_; ++i) m.x[i] += mb.x[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (!(ring_ == o.ring_) || nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt)
    if (!(it->first == jt->first) || it->second != jt->second) return false;
  return true;
}

MultiPoly MultiPoly::pow(int e) const {
  require(e >= 0, Errc::BadRequest, "pow expects e >= 0");
  MultiPoly result = of_int(ring_, nvars_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    if (e >>= 1) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(int i) const {
  require(i >= 1 && i <= nvars_, Errc::UnknownVariable, "derivative index out of range");
  MultiPoly r(ring_, nvars_);
  for (const auto& [m, c] : terms_) {
    int e = m.x[i - 1];
    if (e == 0) continue;
    Scalar factor = Scalar::of_int(ring_.base, e);
    if (factor.is_zero()) continue;  // characteristic divides the exponent
    Monomial d = m;
    d.x[i - 1] = e - 1;
    r.add_term(d, c * factor);
  }
  return r;
}

namespace {

// powers[k] = base^k, grown on demand
const MultiPoly& cached_pow(std::vector<MultiPoly>& powers, const MultiPoly& base, int k) {
  while (static_cast<int>(powers.size()) <= k) {
    if (powers.empty())
      powers.push_back(MultiPoly::of_int(base.ring(), base.nvars(), 1));
    else
      powers.push_back(powers.back() * base);
  }
  return powers[static_cast<std::size_t>(k)];
}

// inverse of a unit c * t^k (no x-part); nullopt when not a unit
std::optional<MultiPoly> unit_inverse(const MultiPoly& u) {
  if (u.terms().size() != 1) return std::nullopt;
  const auto& [m, c] = *u.terms().begin();
  if (m.x_degree() != 0) return std::nullopt;
  if (m.t != 0 && u.ring().kind != RingKind::LaurentT) return std::nullopt;
  MultiPoly r(u.ring(), u.nvars());
  r.add_term(Monomial{-m.t, std::vector<int>(static_cast<std::size_t>(u.nvars()), 0)}, c.inverse());
  return r;
}

}  // namespace

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images,
                                const std::optional<MultiPoly>& t_image) const {
  require(static_cast<int>(images.size()) == nvars_, Errc::DimensionMismatch,
          "expected " + std::to_string(nvars_) + " substitution images");
  const ParamRing& target = images.empty() ? ring_ : images.front().ring();
  int target_n = images.empty() ? nvars_ : images.front().nvars();
  for (const auto& img : images)
    require(img.ring() == target && img.nvars() == target_n, Errc::RingMismatch,
            "substitution images must share one ring");
  require(*target.base == *ring_.base, Errc::FieldMismatch,
          "substitution cannot change the base field");
  if (t_image)
    require(t_image->ring() == target && t_image->nvars() == target_n, Errc::RingMismatch,
            "t-image ring mismatch");

  // t -> t by default when both rings carry a parameter
  std::optional<MultiPoly> timg = t_image;
  if (!timg && depends_on_t()) {
    require(target.has_param(), Errc::NegativeTPower,
            "substitution into a parameter-free ring requires a t-image");
    timg = param(target, target_n);
  }

  std::vector<std::vector<MultiPoly>> pows(images.size());
  std::vector<MultiPoly> tpows_pos, tpows_neg;  // t_image^k and (t_image^{-1})^k
  std::optional<MultiPoly> tinv;

  MultiPoly result(target, target_n);
  for (const auto& [m, c] : terms_) {
    MultiPoly term = MultiPoly::constant(target, target_n, c);
    for (int i = 0; i < nvars_; ++i)
      if (m.x[i] > 0) term = term * cached_pow(pows[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(i)], m.x[i]);
    if (m.t > 0) {
      term = term * cached_pow(tpows_pos, *timg, m.t);
    } else if (m.t < 0) {
      if (!tinv) {
        auto inv = unit_inverse(*timg);
        require(inv.has_value(), Errc::NegativeTPower,
                "negative t-power meets a non-invertible t-image");
        tinv = *inv;
      }
      term = term * cached_pow(tpows_neg, *tinv, -m.t);
    }
    result += term;
  }
  return result;
}

Scalar MultiPoly::evaluate(const std::vector<Scalar>& point,
                           const std::optional<Scalar>& t_value) const {
  require(static_cast<int>(point.size()) == nvars_, Errc::DimensionMismatch,
          "expected a point with " + std::to_string(nvars_) + " coordinates");
  Scalar acc = Scalar::zero(ring_.base);
  for (const auto& [m, c] : terms_) {
    Scalar term = c;
    for (int i = 0; i < nvars_; ++i)
      if (m.x[i] > 0) term = term * point[static_cast<std::size_t>(i)].pow(m.x[i]);
    if (m.t != 0) {
      require(t_value.has_value(), Errc::BadRequest, "evaluation needs a t value");
      if (t_value->is_zero()) {
        require(m.t >= 0, Errc::NegativeTPower, "t = 0 meets a negative t-exponent");
        if (m.t > 0) continue;
      } else {
        term = term * t_value->pow(m.t);
      }
    }
    acc = acc + term;
  }
  return acc;
}

std::map<std::pair<int, int>, MultiPoly> MultiPoly::bigraded_parts() const {
  require(ring_.kind == RingKind::PolyT, Errc::RingMismatch,
          "bigraded decomposition requires a k[t] ring");
  ParamRing base = ring_over(ring_.base);
  std::map<std::pair<int, int>, MultiPoly> parts;
  for (const auto& [m, c] : terms_) {
    auto key = std::make_pair(m.t, m.x_degree());
    auto it = parts.find(key);
    if (it == parts.end()) it = parts.emplace(key, MultiPoly(base, nvars_)).first;
    it->second.add_term(Monomial{0, m.x}, c);
  }
  return parts;
}

MultiPoly MultiPoly::x_homogeneous_part(int d) const {
  MultiPoly r(ring_, nvars_);
  for (const auto& [m, c] : terms_)
    if (m.x_degree() == d) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::leading_x_form() const { return x_homogeneous_part(x_degree()); }

MultiPoly MultiPoly::cast(RingKind k) const {
  if (k == ring_.kind) return *this;
  if (k == RingKind::None)
    require(!depends_on_t(), Errc::RingMismatch, "cannot drop t from " + str());
  if (k == RingKind::PolyT)
    require(min_t_exp() >= 0, Errc::NegativeTPower,
            "negative t-exponents prevent the cast to " + ring_.base->tag() + "[t]");
  MultiPoly r(ring_over(ring_.base, k), nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c);
  return r;
}

MultiPoly MultiPoly::specialize_t(const Scalar& t0) const {
  require(*t0.field() == *ring_.base, Errc::FieldMismatch, "t value from a different field");
  ParamRing target = ring_over(ring_.base);
  MultiPoly r(target, nvars_);
  for (const auto& [m, c] : terms_) {
    Scalar coeff = c;
    if (m.t != 0) {
      if (t0.is_zero()) {
        require(m.t >= 0, Errc::NegativeTPower, "specializing t = 0 on a negative t-exponent");
        continue;  // t^positive vanishes
      }
      coeff = coeff * t0.pow(m.t);
    }
    r.add_term(Monomial{0, m.x}, coeff);
  }
  return r;
}

Scalar MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(ring_.base) : it->second;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& m = it->first;
    Scalar c = it->second;
    bool neg = c.is_negative();
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    Scalar shown = neg ? -c : c;

    std::vector<std::string> factors;
    bool monomial_present = m.t != 0 || m.x_degree() != 0;
    if (!shown.is_one() || !monomial_present) factors.push_back(shown.poly_coeff_str());
    if (m.t != 0) factors.push_back(m.t == 1 ? "t" : "t^" + std::to_string(m.t));
    for (int i = 0; i < nvars_; ++i)
      if (m.x[i] != 0) {
        std::string v = "x" + std::to_string(i + 1);
        factors.push_back(m.x[i] == 1 ? v : v + "^" + std::to_string(m.x[i]));
      }
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) out += "*";
      out += factors[k];
    }
  }
  return out;
}

}  // namespace affaut
