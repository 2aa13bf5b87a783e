#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "burnlab/algebra.hpp"
#include "burnlab/presentation.hpp"

namespace burnlab::psl {

// Projective class of a unit-determinant 2x2 matrix over a finite field.
// Equality is projective: M ~ sM for scalars s. The canonical key scales the
// first nonzero entry (in a,b,c,d reading order) to 1; in characteristic 2
// the scalar subgroup is trivial and the key is the representative itself.
// Scaling to leading-1 is injective on unit-determinant classes, so it is a
// sound equality key even though the scaled matrix may have determinant != 1.
class ProjMat2 {
 public:
  using Key = std::array<std::uint64_t, 4>;

  explicit ProjMat2(const algebra::FFMat2& rep);  // DomainError unless det = 1

  const algebra::FFMat2& rep() const { return rep_; }
  const algebra::FiniteField& field() const { return rep_.carrier(); }
  Key key() const { return key_; }

  static ProjMat2 identity(const algebra::FiniteField& f) {
    return ProjMat2(algebra::FFMat2::identity(f));
  }

  ProjMat2 inverse() const { return ProjMat2(rep_.inverse()); }
  bool is_identity() const { return *this == identity(field()); }

  friend ProjMat2 operator*(const ProjMat2& x, const ProjMat2& y) {
    return ProjMat2(x.rep_ * y.rep_);
  }
  friend bool operator==(const ProjMat2& x, const ProjMat2& y) { return x.key_ == y.key_; }

 private:
  algebra::FFMat2 rep_;
  Key key_;
};

// Least k >= 1 with x^k = 1; NotFoundError past bound.
std::uint64_t proj_element_order(const ProjMat2& x, std::uint64_t bound);

// PSL(2, q) by closure from the standard generators [[1,1],[0,1]],
// [[g,0],[0,g^-1]] (g a multiplicative generator) and [[0,1],[-1,0]].
// Result sorted by canonical key. CapacityError past max_size.
std::vector<ProjMat2> build_psl2(const algebra::FiniteField& field,
                                 std::size_t max_size = 1000000);

struct ConjClassReport {
  std::uint64_t order = 0;
  std::vector<std::uint64_t> class_sizes;  // ascending
};

// Partition of a finite matrix group into conjugacy orbits. The input must be
// closed under multiplication; closure is asserted on a deterministic sample
// of pairs (and every conjugate must land inside the input). Works for any
// element type with key()/inverse()/operator*.
template <class G>
ConjClassReport conj_classes(const std::vector<G>& group) {
  if (group.empty()) throw DomainError("conjugacy classes need a nonempty group");
  const std::size_t n = group.size();
  std::map<typename G::Key, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(group[i].key(), i).second)
      throw DomainError("group input contains duplicate elements");
  }
  // closure spot-check on a deterministic sample (all pairs when small)
  const std::size_t samples = n <= 32 ? n * n : 64;
  for (std::size_t s = 0; s < samples; ++s) {
    const G& x = group[n <= 32 ? s / n : (s * 2654435761u) % n];
    const G& y = group[n <= 32 ? s % n : (s * 40503u + 17) % n];
    if (index.find((x * y).key()) == index.end())
      throw DomainError("group input is not closed under multiplication");
  }

  ConjClassReport report;
  report.order = n;
  std::vector<bool> assigned(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    std::uint64_t size = 0;
    for (const G& g : group) {
      G conj = g * group[i] * g.inverse();
      auto it = index.find(conj.key());
      if (it == index.end())
        throw DomainError("group input is not closed under conjugation");
      if (!assigned[it->second]) {
        assigned[it->second] = true;
        ++size;
      }
    }
    report.class_sizes.push_back(size);
  }
  std::sort(report.class_sizes.begin(), report.class_sizes.end());
  return report;
}

// Class-equation simplicity test: a proper normal subgroup would be a union
// of conjugacy classes containing the identity class whose total size is a
// proper nontrivial divisor of the order. Exact subset-sum over class sizes.
bool is_simple_by_class_equation(const ConjClassReport& report);

// True iff every relator of p maps to the identity under the given generator
// images AND the images generate the whole group.
bool verify_presentation_hom(const fp::Presentation& p, const std::vector<ProjMat2>& images,
                             const std::vector<ProjMat2>& group);

// First generator-image tuple satisfying verify_presentation_hom, trying
// candidates per generator in (element order, canonical key) order and
// pruning by pure power relators g^k (image order must divide k). With
// require_generation = false the generation requirement is dropped.
std::optional<std::vector<ProjMat2>> search_presentation_images(
    const fp::Presentation& p, const std::vector<ProjMat2>& group,
    bool require_generation = true);

}  // namespace burnlab::psl
