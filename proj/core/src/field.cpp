#include "affaut/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace affaut {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::CardinalityTooLarge: return "CardinalityTooLarge";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::NegativeTPower: return "NegativeTPower";
    case Errc::BadRequest: return "BadRequest";
    case Errc::JacobianNotUnit: return "JacobianNotUnit";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::JacobianNotOne: return "JacobianNotOne";
    case Errc::NotSAut: return "NotSAut";
    case Errc::IdentityInput: return "IdentityInput";
    case Errc::NotIdAtZero: return "NotIdAtZero";
    case Errc::NoWitness: return "NoWitness";
    case Errc::IsTranslation: return "IsTranslation";
    case Errc::DoesNotFixOrigin: return "DoesNotFixOrigin";
    case Errc::FixedPointMissing: return "FixedPointMissing";
    case Errc::DegenerateGeometry: return "DegenerateGeometry";
    case Errc::VariableLeak: return "VariableLeak";
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::WrongCharacteristic: return "WrongCharacteristic";
    case Errc::ZeroScalar: return "ZeroScalar";
    case Errc::TooManyPoints: return "TooManyPoints";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::ZeroDiagonal: return "ZeroDiagonal";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

bool errc_is_input_error(Errc c) {
  switch (c) {
    case Errc::NotPrime:
    case Errc::CardinalityTooLarge:
    case Errc::FieldMismatch:
    case Errc::RingMismatch:
    case Errc::DimensionMismatch:
    case Errc::DivisionByZero:
    case Errc::SyntaxError:
    case Errc::UnknownVariable:
    case Errc::NegativeTPower:
    case Errc::BadRequest:
      return true;
    default:
      return false;
  }
}

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// dense univariate arithmetic over F_p on digit vectors, used only for
// modulus selection and reduction
using Digits = std::vector<unsigned>;

void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b over F_p; b monic
Digits poly_mod(Digits a, const Digits& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    unsigned lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    if (lead != 0)
      for (std::size_t i = 0; i <= db; ++i) {
        unsigned sub = (lead * b[i]) % p;
        a[shift + i] = (a[shift + i] + p - sub % p) % p;
      }
    a.pop_back();
    trim(a);
    if (a.size() < b.size()) break;
  }
  return a;
}

bool is_zero_poly(const Digits& a) {
  for (unsigned c : a)
    if (c) return false;
  return true;
}

Digits digits_of_value(unsigned long long v, unsigned p, std::size_t len) {
  Digits d(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    d[i] = static_cast<unsigned>(v % p);
    v /= p;
  }
  return d;
}

// Trial division by every monic polynomial of degree 1..r/2. Degrees are
// tiny (p^r <= 2^16), so this stays cheap and matches the construction
// invariant directly.
bool is_irreducible(const Digits& f, unsigned p) {
  const std::size_t r = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= r; ++d) {
    unsigned long long count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (unsigned long long v = 0; v < count; ++v) {
      Digits g = digits_of_value(v, p, d + 1);
      g[d] = 1;  // monic of degree d
      if (is_zero_poly(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

FieldPtr FieldDesc::rationals() {
  static FieldPtr instance = [] {
    auto f = std::shared_ptr<FieldDesc>(new FieldDesc());
    f->kind_ = FieldKind::Rationals;
    f->p_ = 0;
    f->r_ = 1;
    f->q_ = 0;
    return FieldPtr(f);
  }();
  return instance;
}

FieldPtr FieldDesc::finite(unsigned p, unsigned r) {
  require(r >= 1, Errc::BadRequest, "extension degree must be >= 1");
  require(is_prime(p), Errc::NotPrime, "characteristic " + std::to_string(p) + " is not prime");
  unsigned long long q = 1;
  for (unsigned i = 0; i < r; ++i) {
    q *= p;
    require(q <= 65536ULL, Errc::CardinalityTooLarge,
            "field cardinality " + std::to_string(p) + "^" + std::to_string(r) + " exceeds 2^16");
  }

  static std::map<std::pair<unsigned, unsigned>, FieldPtr> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find({p, r});
  if (it != cache.end()) return it->second;

  auto f = std::shared_ptr<FieldDesc>(new FieldDesc());
  f->kind_ = FieldKind::Finite;
  f->p_ = p;
  f->r_ = r;
  f->q_ = static_cast<unsigned>(q);
  if (r > 1) {
    // smallest monic irreducible of degree r in base-p value order
    bool found = false;
    for (unsigned long long v = 0; v < q && !found; ++v) {
      Digits cand = digits_of_value(v, p, r + 1);
      cand[r] = 1;
      if (is_irreducible(cand, p)) {
        f->modulus_ = cand;
        found = true;
      }
    }
    require(found, Errc::Internal, "no irreducible modulus found");
  }
  FieldPtr fp(f);
  cache.emplace(std::make_pair(p, r), fp);
  return fp;
}

FieldPtr FieldDesc::parse(const std::string& tag) {
  if (tag == "QQ" || tag.empty()) return rationals();
  if (tag.rfind("GF(", 0) == 0 && tag.back() == ')') {
    std::string body = tag.substr(3, tag.size() - 4);
    auto caret = body.find('^');
    unsigned long long p = 0, r = 1;
    try {
      if (caret == std::string::npos) {
        unsigned long long q = std::stoull(body);
        require(q >= 2, Errc::BadRequest, "GF cardinality must be >= 2");
        // factor q = p^r
        unsigned long long base = 0;
        for (unsigned long long d = 2; d * d <= q; ++d)
          if (q % d == 0) {
            base = d;
            break;
          }
        if (base == 0) {
          p = q;
          r = 1;
        } else {
          p = base;
          unsigned long long rest = q;
          r = 0;
          while (rest > 1) {
            require(rest % p == 0, Errc::NotPrime, "GF cardinality is not a prime power: " + body);
            rest /= p;
            ++r;
          }
        }
      } else {
        p = std::stoull(body.substr(0, caret));
        r = std::stoull(body.substr(caret + 1));
      }
    } catch (const std::invalid_argument&) {
      raise(Errc::SyntaxError, "bad field tag: " + tag);
    } catch (const std::out_of_range&) {
      raise(Errc::CardinalityTooLarge, "field tag out of range: " + tag);
    }
    return finite(static_cast<unsigned>(p), static_cast<unsigned>(r));
  }
  raise(Errc::SyntaxError, "unknown field tag: " + tag + " (expected QQ or GF(p^r))");
}

std::string FieldDesc::tag() const {
  if (is_rational()) return "QQ";
  if (r_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(r_) + ")";
}

std::vector<unsigned> FieldDesc::digits(unsigned a) const {
  std::vector<unsigned> d(r_, 0);
  for (unsigned i = 0; i < r_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

unsigned FieldDesc::from_digits(const std::vector<unsigned>& d) const {
  unsigned v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + (d[i] % p_);
  return v;
}

unsigned FieldDesc::add(unsigned a, unsigned b) const {
  if (r_ == 1) return (a + b) % p_;
  unsigned v = 0, scale = 1;
  for (unsigned i = 0; i < r_; ++i) {
    v += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return v;
}

unsigned FieldDesc::neg(unsigned a) const {
  if (r_ == 1) return (p_ - a % p_) % p_;
  unsigned v = 0, scale = 1;
  for (unsigned i = 0; i < r_; ++i) {
    v += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return v;
}

unsigned FieldDesc::sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

unsigned FieldDesc::mul(unsigned a, unsigned b) const {
  if (r_ == 1) return static_cast<unsigned>((static_cast<unsigned long long>(a) * b) % p_);
  std::vector<unsigned> da = digits(a), db = digits(b);
  std::vector<unsigned> prod(2 * r_ - 1, 0);
  for (unsigned i = 0; i < r_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  // reduce modulo the monic modulus
  for (std::size_t k = prod.size(); k-- > r_;) {
    unsigned lead = prod[k];
    if (lead == 0) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < r_; ++i) {
      unsigned sub = (lead * modulus_[i]) % p_;
      prod[k - r_ + i] = (prod[k - r_ + i] + p_ - sub) % p_;
    }
  }
  prod.resize(r_);
  return from_digits(prod);
}

unsigned FieldDesc::pow(unsigned a, unsigned long long e) const {
  unsigned result = 1;
  unsigned base = a;
  while (e > 0) {
    if (e & 1ULL) result = mul(result, base);
    base = mul(base, base);
    e >>= 1ULL;
  }
  return result;
}

unsigned FieldDesc::inv(unsigned a) const {
  require(a != 0, Errc::DivisionByZero, "inverse of 0 in " + tag());
  return pow(a, static_cast<unsigned long long>(q_) - 2);
}

unsigned FieldDesc::from_int(long long v) const {
  long long m = v % static_cast<long long>(p_);
  if (m < 0) m += p_;
  return static_cast<unsigned>(m);
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::zero(const FieldPtr& f) { return Scalar(f, mpq_class(0), 0); }

Scalar Scalar::one(const FieldPtr& f) {
  return f->is_rational() ? Scalar(f, mpq_class(1), 0) : Scalar(f, mpq_class(0), 1);
}

Scalar Scalar::of_int(const FieldPtr& f, long long v) {
  if (f->is_rational()) return Scalar(f, mpq_class(static_cast<long>(v)), 0);
  return Scalar(f, mpq_class(0), f->from_int(v));
}

Scalar Scalar::of_mpq(mpq_class v) {
  v.canonicalize();
  return Scalar(FieldDesc::rationals(), std::move(v), 0);
}

Scalar Scalar::of_index(const FieldPtr& f, unsigned idx) {
  require(f->is_finite(), Errc::FieldMismatch, "element index only exists over finite fields");
  require(idx < f->cardinality(), Errc::BadRequest, "element index out of range");
  return Scalar(f, mpq_class(0), idx);
}

void Scalar::ensure_same_field(const Scalar& o) const {
  if (field_.get() == o.field_.get()) return;
  require(*field_ == *o.field_, Errc::FieldMismatch,
          "operands live in " + field_->tag() + " and " + o.field_->tag());
}

bool Scalar::is_zero() const { return field_->is_rational() ? rat_ == 0 : idx_ == 0; }
bool Scalar::is_one() const { return field_->is_rational() ? rat_ == 1 : idx_ == 1; }

Scalar Scalar::operator+(const Scalar& o) const {
  ensure_same_field(o);
  if (field_->is_rational()) return Scalar(field_, rat_ + o.rat_, 0);
  return Scalar(field_, mpq_class(0), field_->add(idx_, o.idx_));
}

Scalar Scalar::operator-(const Scalar& o) const {
  ensure_same_field(o);
  if (field_->is_rational()) return Scalar(field_, rat_ - o.rat_, 0);
  return Scalar(field_, mpq_class(0), field_->sub(idx_, o.idx_));
}

Scalar Scalar::operator*(const Scalar& o) const {
  ensure_same_field(o);
  if (field_->is_rational()) return Scalar(field_, rat_ * o.rat_, 0);
  return Scalar(field_, mpq_class(0), field_->mul(idx_, o.idx_));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (field_->is_rational()) return Scalar(field_, -rat_, 0);
  return Scalar(field_, mpq_class(0), field_->neg(idx_));
}

Scalar Scalar::inverse() const {
  if (field_->is_rational()) {
    require(rat_ != 0, Errc::DivisionByZero, "inverse of 0 in QQ");
    return Scalar(field_, 1 / rat_, 0);
  }
  return Scalar(field_, mpq_class(0), field_->inv(idx_));
}

Scalar Scalar::pow(long long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Scalar result = one(field_);
  while (n > 0) {
    if (n & 1ULL) result = result * base;
    base = base * base;
    n >>= 1ULL;
  }
  return result;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_.get() != o.field_.get() && *field_ != *o.field_) return false;
  return field_->is_rational() ? rat_ == o.rat_ : idx_ == o.idx_;
}

bool Scalar::is_negative() const { return field_->is_rational() && rat_ < 0; }

Scalar Scalar::abs() const {
  return is_negative() ? -*this : *this;
}

std::string Scalar::str() const {
  if (field_->is_rational()) return rat_.get_str();
  auto d = field_->digits(idx_);
  std::string s = "[";
  for (std::size_t i = d.size(); i-- > 0;) {
    s += std::to_string(d[i]);
    if (i > 0) s += ",";
  }
  return s + "]";
}

std::string Scalar::poly_coeff_str() const {
  if (field_->is_rational()) return rat_.get_str();
  if (field_->extension_degree() == 1) return std::to_string(idx_);
  return str();
}

Scalar Scalar::parse(const FieldPtr& f, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  require(!s.empty(), Errc::SyntaxError, "empty scalar literal");

  if (s.front() == '[') {
    require(f->is_finite(), Errc::SyntaxError, "coefficient-list literal over " + f->tag());
    require(s.back() == ']', Errc::SyntaxError, "unterminated coefficient list: " + text);
    std::vector<unsigned> rev;  // given high -> low
    std::string body = s.substr(1, s.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        rev.push_back(f->from_int(std::stoll(item)));
      } catch (const std::exception&) {
        raise(Errc::SyntaxError, "bad coefficient list entry: " + item);
      }
    }
    require(rev.size() <= f->extension_degree(), Errc::SyntaxError,
            "coefficient list longer than extension degree");
    std::vector<unsigned> d(rev.rbegin(), rev.rend());
    d.resize(f->extension_degree(), 0);
    return of_index(f, f->from_digits(d));
  }

  auto slash = s.find('/');
  try {
    if (f->is_rational()) {
      mpq_class v(s);
      v.canonicalize();
      return of_mpq(v);
    }
    if (slash == std::string::npos) return of_int(f, std::stoll(s));
    Scalar num = of_int(f, std::stoll(s.substr(0, slash)));
    Scalar den = of_int(f, std::stoll(s.substr(slash + 1)));
    return num / den;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    raise(Errc::SyntaxError, "bad scalar literal: " + text);
  }
}

// ---------------------------------------------------------------------------
// ParamRing

std::string ParamRing::tag() const {
  std::string s = base->tag();
  if (kind == RingKind::PolyT) s += "[t]";
  if (kind == RingKind::LaurentT) s += "[t,1/t]";
  return s;
}

ParamRing ParamRing::parse(const std::string& tag) {
  std::string s;
  for (char c : tag)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  RingKind kind = RingKind::None;
  if (s.size() >= 7 && s.substr(s.size() - 7) == "[t,1/t]") {
    kind = RingKind::LaurentT;
    s = s.substr(0, s.size() - 7);
  } else if (s.size() >= 3 && s.substr(s.size() - 3) == "[t]") {
    kind = RingKind::PolyT;
    s = s.substr(0, s.size() - 3);
  }
  return ParamRing{FieldDesc::parse(s), kind};
}

}  // namespace affaut
