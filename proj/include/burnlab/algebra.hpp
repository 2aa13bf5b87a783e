#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "burnlab/errors.hpp"

namespace burnlab::algebra {

// ---------------------------------------------------------------------------
// Z/nZ
// ---------------------------------------------------------------------------

class ModRing;

// A canonical residue tied to its ring. Mixing elements of different rings
// raises DomainError.
class ModElem {
 public:
  using Carrier = ModRing;

  ModElem(const ModRing& ring, std::int64_t value);

  const ModRing& carrier() const { return *ring_; }
  const ModRing& ring() const { return *ring_; }
  std::uint64_t value() const { return v_; }
  std::uint64_t key() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_unit() const;
  ModElem inverse() const;  // DomainError if gcd(v, n) != 1

  friend ModElem operator+(const ModElem& x, const ModElem& y);
  friend ModElem operator-(const ModElem& x, const ModElem& y);
  friend ModElem operator*(const ModElem& x, const ModElem& y);
  ModElem operator-() const;
  friend bool operator==(const ModElem& x, const ModElem& y);

 private:
  const ModRing* ring_;
  std::uint64_t v_;
};

class ModRing {
 public:
  explicit ModRing(std::uint64_t modulus);  // DomainError if modulus < 2

  std::uint64_t modulus() const { return n_; }
  std::uint64_t size() const { return n_; }

  ModElem make(std::int64_t v) const { return ModElem(*this, v); }
  ModElem zero() const { return make(0); }
  ModElem one() const { return make(1); }

  friend bool operator==(const ModRing& a, const ModRing& b) { return a.n_ == b.n_; }

 private:
  std::uint64_t n_;
};

// ---------------------------------------------------------------------------
// GF(p^k), polynomial basis, sizes up to 64
// ---------------------------------------------------------------------------

class FiniteField;

// Field element stored as its canonical index sum(c_i p^i); the coefficient
// vector is recovered on demand.
class FFElem {
 public:
  using Carrier = FiniteField;

  FFElem(const FiniteField& field, std::uint32_t index);

  const FiniteField& carrier() const { return *field_; }
  const FiniteField& field() const { return *field_; }
  std::uint32_t index() const { return i_; }
  std::uint64_t key() const { return i_; }
  std::vector<unsigned> coeffs() const;

  bool is_zero() const { return i_ == 0; }
  bool is_unit() const { return i_ != 0; }
  FFElem inverse() const;  // DomainError on zero
  FFElem pow(std::uint64_t e) const;
  std::uint64_t multiplicative_order() const;  // DomainError on zero

  friend FFElem operator+(const FFElem& x, const FFElem& y);
  friend FFElem operator-(const FFElem& x, const FFElem& y);
  friend FFElem operator*(const FFElem& x, const FFElem& y);
  FFElem operator-() const;
  friend bool operator==(const FFElem& x, const FFElem& y);

 private:
  const FiniteField* field_;
  std::uint32_t i_;
};

// GF(p^k) as GF(p)[x]/(f) with f monic irreducible of degree k, coefficients
// listed constant term first. Construction checks irreducibility by trial
// division; sizes p^k > 64 are rejected.
class FiniteField {
 public:
  FiniteField(unsigned p, unsigned k, std::vector<unsigned> poly);

  static FiniteField gf8();  // x^3 + x + 1
  static FiniteField prime_field(unsigned p);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t size() const { return q_; }
  const std::vector<unsigned>& reduction_poly() const { return poly_; }

  FFElem make(std::uint32_t index) const;
  FFElem from_coeffs(const std::vector<unsigned>& coeffs) const;
  FFElem zero() const { return make(0); }
  FFElem one() const { return make(1); }
  FFElem generator() const;  // least element of multiplicative order q-1

  std::uint32_t add_index(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul_index(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t neg_index(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t inv_index(std::uint32_t a) const { return inv_[a]; }

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.poly_ == b.poly_;
  }

 private:
  unsigned p_ = 0;
  unsigned k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<unsigned> poly_;  // k+1 coefficients, constant first, monic
  std::vector<std::uint32_t> add_, mul_;
  std::vector<std::uint32_t> neg_, inv_;
};

// ---------------------------------------------------------------------------
// 2x2 matrices over either carrier
// ---------------------------------------------------------------------------

template <class E>
class Mat2 {
 public:
  using Elem = E;
  using Key = std::array<std::uint64_t, 4>;

  Mat2(E a, E b, E c, E d)
      : a_(a), b_(b), c_(c), d_(d), det_(a * d - b * c) {}

  static Mat2 identity(const typename E::Carrier& r) {
    return Mat2(r.one(), r.zero(), r.zero(), r.one());
  }

  const typename E::Carrier& carrier() const { return a_.carrier(); }
  const E& a() const { return a_; }
  const E& b() const { return b_; }
  const E& c() const { return c_; }
  const E& d() const { return d_; }
  const E& det() const { return det_; }

  Key key() const { return {a_.key(), b_.key(), c_.key(), d_.key()}; }

  bool is_identity() const { return *this == identity(carrier()); }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return Mat2(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
  }

  Mat2 inverse() const {
    E di = det_.inverse();  // DomainError when det is not a unit
    return Mat2(d_ * di, -b_ * di, -c_ * di, a_ * di);
  }

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

 private:
  E a_, b_, c_, d_;
  E det_;
};

using ModMat2 = Mat2<ModElem>;
using FFMat2 = Mat2<FFElem>;

// Breadth-first closure of a generating set under multiplication by the
// generators and their inverses. Output is sorted by canonical entry key, so
// the result is identical across runs. Throws CapacityError (with the count
// found so far in the message) when the closure exceeds max_size. Generators
// must be invertible; inverse() rejects anything else.
template <class E>
std::vector<Mat2<E>> group_closure(const std::vector<Mat2<E>>& gens,
                                   std::size_t max_size = 1000000) {
  if (gens.empty()) throw DomainError("group_closure: need at least one generator");
  using M = Mat2<E>;
  std::vector<M> step;
  step.reserve(gens.size() * 2);
  for (const M& g : gens) {
    step.push_back(g);
    step.push_back(g.inverse());
  }
  M id = M::identity(gens[0].carrier());

  std::map<typename M::Key, std::size_t> seen;
  std::vector<M> out;
  out.push_back(id);
  seen.emplace(id.key(), 0);
  std::size_t next = 0;
  while (next < out.size()) {
    M cur = out[next++];
    for (const M& g : step) {
      M prod = cur * g;
      auto k = prod.key();
      if (seen.find(k) == seen.end()) {
        if (out.size() >= max_size)
          throw CapacityError("group_closure: exceeded max_size=" + std::to_string(max_size) +
                              " with " + std::to_string(out.size()) + " elements found so far");
        seen.emplace(k, out.size());
        out.push_back(prod);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const M& x, const M& y) { return x.key() < y.key(); });
  return out;
}

// Least k >= 1 with A^k = I; NotFoundError if no such k <= bound.
template <class E>
std::uint64_t element_order(const Mat2<E>& A, std::uint64_t bound) {
  Mat2<E> id = Mat2<E>::identity(A.carrier());
  Mat2<E> acc = A;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (acc == id) return k;
    acc = acc * A;
  }
  throw NotFoundError("element_order: order exceeds bound " + std::to_string(bound));
}

}  // namespace burnlab::algebra
