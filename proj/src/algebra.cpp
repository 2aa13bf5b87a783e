#include "burnlab/algebra.hpp"

#include <numeric>

namespace burnlab::algebra {

namespace {

void check_same_ring(const ModRing* a, const ModRing* b) {
  if (a != b && !(*a == *b)) throw DomainError("operands belong to different rings");
}

void check_same_field(const FiniteField* a, const FiniteField* b) {
  if (a != b && !(*a == *b)) throw DomainError("operands belong to different fields");
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over GF(p) as coefficient vectors, constant term first.
std::vector<unsigned> poly_mul(const std::vector<unsigned>& f, const std::vector<unsigned>& g,
                               unsigned p) {
  std::vector<unsigned> out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      out[i + j] = (out[i + j] + f[i] * g[j]) % p;
  return out;
}

// Remainder of f modulo a monic divisor g, in place.
void poly_mod(std::vector<unsigned>& f, const std::vector<unsigned>& g, unsigned p) {
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    unsigned lead = f.back();
    std::size_t shift = f.size() - 1 - dg;
    if (lead != 0) {
      for (std::size_t i = 0; i <= dg; ++i) {
        unsigned sub = (lead * g[i]) % p;
        f[shift + i] = (f[shift + i] + p - sub) % p;
      }
    }
    f.pop_back();
  }
}

bool poly_is_zero(const std::vector<unsigned>& f) {
  for (unsigned c : f)
    if (c != 0) return false;
  return true;
}

// Trial division by every monic polynomial of degree 1..k/2.
bool is_irreducible(const std::vector<unsigned>& f, unsigned p) {
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  for (std::size_t d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<unsigned> g(d + 1, 0);
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(t % p);
        t /= p;
      }
      g[d] = 1;
      std::vector<unsigned> r = f;
      poly_mod(r, g, p);
      if (poly_is_zero(r)) return false;
    }
  }
  return true;
}

std::vector<unsigned> index_to_coeffs(std::uint32_t idx, unsigned p, unsigned k) {
  std::vector<unsigned> c(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    c[i] = idx % p;
    idx /= p;
  }
  return c;
}

std::uint32_t coeffs_to_index(const std::vector<unsigned>& c, unsigned p) {
  std::uint32_t idx = 0;
  for (std::size_t i = c.size(); i-- > 0;) idx = idx * p + (c[i] % p);
  return idx;
}

}  // namespace

// ---------------------------------------------------------------------------
// ModRing / ModElem
// ---------------------------------------------------------------------------

ModRing::ModRing(std::uint64_t modulus) : n_(modulus) {
  if (modulus < 2) throw DomainError("modulus must be at least 2");
}

ModElem::ModElem(const ModRing& ring, std::int64_t value) : ring_(&ring) {
  const std::int64_t n = static_cast<std::int64_t>(ring.modulus());
  std::int64_t r = value % n;
  if (r < 0) r += n;
  v_ = static_cast<std::uint64_t>(r);
}

bool ModElem::is_unit() const { return std::gcd(v_, ring_->modulus()) == 1; }

ModElem ModElem::inverse() const {
  const std::uint64_t n = ring_->modulus();
  // extended Euclid on (v, n)
  std::int64_t t = 0, new_t = 1;
  std::uint64_t r = n, new_r = v_;
  while (new_r != 0) {
    std::uint64_t q = r / new_r;
    std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * new_t;
    t = new_t;
    new_t = tmp_t;
    std::uint64_t tmp_r = r - q * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  if (r != 1)
    throw DomainError("element " + std::to_string(v_) + " is not a unit mod " + std::to_string(n));
  return ModElem(*ring_, t);
}

ModElem operator+(const ModElem& x, const ModElem& y) {
  check_same_ring(x.ring_, y.ring_);
  const std::uint64_t n = x.ring_->modulus();
  std::uint64_t s = x.v_ + y.v_;
  if (s >= n) s -= n;
  ModElem out = x;
  out.v_ = s;
  return out;
}

ModElem operator-(const ModElem& x, const ModElem& y) {
  check_same_ring(x.ring_, y.ring_);
  const std::uint64_t n = x.ring_->modulus();
  ModElem out = x;
  out.v_ = (x.v_ >= y.v_) ? x.v_ - y.v_ : x.v_ + n - y.v_;
  return out;
}

ModElem operator*(const ModElem& x, const ModElem& y) {
  check_same_ring(x.ring_, y.ring_);
  const std::uint64_t n = x.ring_->modulus();
  unsigned __int128 prod = static_cast<unsigned __int128>(x.v_) * y.v_;
  ModElem out = x;
  out.v_ = static_cast<std::uint64_t>(prod % n);
  return out;
}

ModElem ModElem::operator-() const {
  ModElem out = *this;
  out.v_ = (v_ == 0) ? 0 : ring_->modulus() - v_;
  return out;
}

bool operator==(const ModElem& x, const ModElem& y) {
  check_same_ring(x.ring_, y.ring_);
  return x.v_ == y.v_;
}

// ---------------------------------------------------------------------------
// FiniteField / FFElem
// ---------------------------------------------------------------------------

FiniteField::FiniteField(unsigned p, unsigned k, std::vector<unsigned> poly)
    : p_(p), k_(k), poly_(std::move(poly)) {
  if (!is_prime(p_)) throw DomainError("characteristic must be prime, got " + std::to_string(p_));
  if (k_ < 1) throw DomainError("field degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k_; ++i) {
    q *= p_;
    if (q > 64) throw DomainError("field size p^k must not exceed 64");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (poly_.size() != static_cast<std::size_t>(k_) + 1)
    throw DomainError("reduction polynomial must list k+1 coefficients, constant term first");
  for (unsigned& c : poly_) c %= p_;
  if (poly_[k_] != 1) throw DomainError("reduction polynomial must be monic");
  if (!is_irreducible(poly_, p_))
    throw DomainError("reduction polynomial is not irreducible over GF(p)");

  add_.assign(static_cast<std::size_t>(q_) * q_, 0);
  mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);

  for (std::uint32_t a = 0; a < q_; ++a) {
    std::vector<unsigned> ca = index_to_coeffs(a, p_, k_);
    std::vector<unsigned> na(k_);
    for (unsigned i = 0; i < k_; ++i) na[i] = (p_ - ca[i]) % p_;
    neg_[a] = coeffs_to_index(na, p_);
    for (std::uint32_t b = 0; b < q_; ++b) {
      std::vector<unsigned> cb = index_to_coeffs(b, p_, k_);
      std::vector<unsigned> s(k_);
      for (unsigned i = 0; i < k_; ++i) s[i] = (ca[i] + cb[i]) % p_;
      add_[static_cast<std::size_t>(a) * q_ + b] = coeffs_to_index(s, p_);
      std::vector<unsigned> m = poly_mul(ca, cb, p_);
      poly_mod(m, poly_, p_);
      m.resize(k_, 0);
      mul_[static_cast<std::size_t>(a) * q_ + b] = coeffs_to_index(m, p_);
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a) {
    for (std::uint32_t b = 1; b < q_; ++b) {
      if (mul_[static_cast<std::size_t>(a) * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
    }
  }
}

FiniteField FiniteField::gf8() { return FiniteField(2, 3, {1, 1, 0, 1}); }

FiniteField FiniteField::prime_field(unsigned p) { return FiniteField(p, 1, {0, 1}); }

FFElem FiniteField::make(std::uint32_t index) const { return FFElem(*this, index); }

FFElem FiniteField::from_coeffs(const std::vector<unsigned>& coeffs) const {
  if (coeffs.size() != k_)
    throw DomainError("expected " + std::to_string(k_) + " coefficients, got " +
                      std::to_string(coeffs.size()));
  return FFElem(*this, coeffs_to_index(coeffs, p_));
}

FFElem FiniteField::generator() const {
  for (std::uint32_t i = 1; i < q_; ++i) {
    FFElem e(*this, i);
    if (e.multiplicative_order() == q_ - 1) return e;
  }
  throw StateError("no multiplicative generator found");  // unreachable for a field
}

FFElem::FFElem(const FiniteField& field, std::uint32_t index) : field_(&field), i_(index) {
  if (index >= field.size())
    throw DomainError("element index " + std::to_string(index) + " out of range for field of size " +
                      std::to_string(field.size()));
}

std::vector<unsigned> FFElem::coeffs() const {
  return index_to_coeffs(i_, field_->characteristic(), field_->degree());
}

FFElem FFElem::inverse() const {
  if (i_ == 0) throw DomainError("zero has no multiplicative inverse");
  return FFElem(*field_, field_->inv_index(i_));
}

FFElem FFElem::pow(std::uint64_t e) const {
  FFElem acc = field_->one();
  FFElem base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::uint64_t FFElem::multiplicative_order() const {
  if (i_ == 0) throw DomainError("zero has no multiplicative order");
  FFElem acc = *this;
  std::uint64_t k = 1;
  while (!(acc == field_->one())) {
    acc = acc * *this;
    ++k;
  }
  return k;
}

FFElem operator+(const FFElem& x, const FFElem& y) {
  check_same_field(x.field_, y.field_);
  return FFElem(*x.field_, x.field_->add_index(x.i_, y.i_));
}

FFElem operator-(const FFElem& x, const FFElem& y) {
  check_same_field(x.field_, y.field_);
  return FFElem(*x.field_, x.field_->add_index(x.i_, x.field_->neg_index(y.i_)));
}

FFElem operator*(const FFElem& x, const FFElem& y) {
  check_same_field(x.field_, y.field_);
  return FFElem(*x.field_, x.field_->mul_index(x.i_, y.i_));
}

FFElem FFElem::operator-() const { return FFElem(*field_, field_->neg_index(i_)); }

bool operator==(const FFElem& x, const FFElem& y) {
  check_same_field(x.field_, y.field_);
  return x.i_ == y.i_;
}

}  // namespace burnlab::algebra
