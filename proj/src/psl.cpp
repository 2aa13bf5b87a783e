#include "burnlab/psl.hpp"

#include <algorithm>
#include <numeric>

#include "burnlab/errors.hpp"

namespace burnlab::psl {

using algebra::FFElem;
using algebra::FFMat2;
using algebra::FiniteField;

ProjMat2::ProjMat2(const FFMat2& rep) : rep_(rep), key_{} {
  const FiniteField& f = rep.carrier();
  if (!(rep.det() == f.one())) throw DomainError("projective matrix needs determinant 1");
  if (f.characteristic() == 2) {
    key_ = rep.key();
    return;
  }
  const FFElem* entries[4] = {&rep.a(), &rep.b(), &rep.c(), &rep.d()};
  FFElem scale = f.one();
  for (const FFElem* e : entries) {
    if (!e->is_zero()) {
      scale = e->inverse();
      break;
    }
  }
  key_ = {(*entries[0] * scale).key(), (*entries[1] * scale).key(),
          (*entries[2] * scale).key(), (*entries[3] * scale).key()};
}

std::uint64_t proj_element_order(const ProjMat2& x, std::uint64_t bound) {
  ProjMat2 id = ProjMat2::identity(x.field());
  ProjMat2 acc = x;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (acc == id) return k;
    acc = acc * x;
  }
  throw NotFoundError("projective element order exceeds bound " + std::to_string(bound));
}

std::vector<ProjMat2> build_psl2(const FiniteField& f, std::size_t max_size) {
  FFElem zero = f.zero(), one = f.one();
  FFElem g = f.generator();
  std::vector<ProjMat2> gens;
  gens.emplace_back(FFMat2(one, one, zero, one));
  if (!(g == one)) gens.emplace_back(FFMat2(g, zero, zero, g.inverse()));
  gens.emplace_back(FFMat2(zero, one, -one, zero));

  std::vector<ProjMat2> step;
  for (const ProjMat2& x : gens) {
    step.push_back(x);
    step.push_back(x.inverse());
  }
  std::map<ProjMat2::Key, std::size_t> seen;
  std::vector<ProjMat2> out;
  out.push_back(ProjMat2::identity(f));
  seen.emplace(out[0].key(), 0);
  std::size_t next = 0;
  while (next < out.size()) {
    ProjMat2 cur = out[next++];
    for (const ProjMat2& s : step) {
      ProjMat2 prod = cur * s;
      if (seen.find(prod.key()) == seen.end()) {
        if (out.size() >= max_size)
          throw CapacityError("projective group closure exceeded max_size=" +
                              std::to_string(max_size));
        seen.emplace(prod.key(), out.size());
        out.push_back(prod);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ProjMat2& x, const ProjMat2& y) { return x.key() < y.key(); });
  return out;
}

bool is_simple_by_class_equation(const ConjClassReport& report) {
  const std::uint64_t order = report.order;
  std::uint64_t sum = 0;
  for (std::uint64_t s : report.class_sizes) sum += s;
  if (sum != order) throw DomainError("class sizes do not sum to the group order");
  auto one_it = std::find(report.class_sizes.begin(), report.class_sizes.end(), 1u);
  if (one_it == report.class_sizes.end())
    throw DomainError("class report lacks an identity class");

  // subset sums of the remaining classes, with the identity class forced in
  std::vector<bool> reach(order + 1, false);
  reach[1] = true;
  for (auto it = report.class_sizes.begin(); it != report.class_sizes.end(); ++it) {
    if (it == one_it) continue;
    std::uint64_t s = *it;
    for (std::uint64_t t = order; t >= s; --t)
      if (reach[t - s]) reach[t] = true;
  }
  for (std::uint64_t s = 2; s < order; ++s)
    if (reach[s] && order % s == 0) return false;
  return true;
}

namespace {

ProjMat2 evaluate_word(const fp::Word& w, const std::vector<ProjMat2>& images,
                       const FiniteField& f) {
  ProjMat2 acc = ProjMat2::identity(f);
  for (int l : w) {
    const ProjMat2& img = images[static_cast<std::size_t>(l > 0 ? l : -l) - 1];
    acc = acc * (l > 0 ? img : img.inverse());
  }
  return acc;
}

bool images_generate(const std::vector<ProjMat2>& images, std::size_t target,
                     const FiniteField& f) {
  std::vector<ProjMat2> step;
  for (const ProjMat2& x : images) {
    step.push_back(x);
    step.push_back(x.inverse());
  }
  std::map<ProjMat2::Key, std::size_t> seen;
  std::vector<ProjMat2> out;
  out.push_back(ProjMat2::identity(f));
  seen.emplace(out[0].key(), 0);
  std::size_t next = 0;
  while (next < out.size()) {
    ProjMat2 cur = out[next++];
    for (const ProjMat2& s : step) {
      ProjMat2 prod = cur * s;
      if (seen.find(prod.key()) == seen.end()) {
        seen.emplace(prod.key(), out.size());
        out.push_back(prod);
        if (out.size() > target) return false;  // not a subgroup of the target group
      }
    }
  }
  return out.size() == target;
}

}  // namespace

bool verify_presentation_hom(const fp::Presentation& p, const std::vector<ProjMat2>& images,
                             const std::vector<ProjMat2>& group) {
  if (images.size() != static_cast<std::size_t>(p.ngens()))
    throw DomainError("need exactly one image per generator");
  if (group.empty()) throw DomainError("target group is empty");
  const FiniteField& f = group[0].field();
  std::map<ProjMat2::Key, std::size_t> index;
  for (std::size_t i = 0; i < group.size(); ++i) index.emplace(group[i].key(), i);
  for (const ProjMat2& img : images)
    if (index.find(img.key()) == index.end())
      throw DomainError("an image lies outside the target group");

  for (const fp::Word& r : p.relators)
    if (!evaluate_word(r, images, f).is_identity()) return false;
  return images_generate(images, group.size(), f);
}

std::optional<std::vector<ProjMat2>> search_presentation_images(const fp::Presentation& p,
                                                                const std::vector<ProjMat2>& group,
                                                                bool require_generation) {
  if (group.empty()) throw DomainError("target group is empty");
  if (group.size() > 10000) throw CapacityError("witness search target exceeds 10^4 elements");
  const FiniteField& f = group[0].field();
  const int ngens = p.ngens();

  // order-divisibility constraints from pure power relators g^k
  std::vector<std::uint64_t> power_constraint(ngens, 0);
  for (const fp::Word& r : p.relators) {
    bool pure = true;
    int g0 = r[0] > 0 ? r[0] : -r[0];
    for (int l : r)
      if ((l > 0 ? l : -l) != g0 || (l > 0) != (r[0] > 0)) pure = false;
    if (!pure) continue;
    std::uint64_t k = r.size();
    std::uint64_t& c = power_constraint[g0 - 1];
    c = c == 0 ? k : std::gcd(c, k);
  }

  // candidates per generator, ordered by (element order, canonical key)
  std::vector<std::pair<std::uint64_t, std::size_t>> by_order;
  by_order.reserve(group.size());
  for (std::size_t i = 0; i < group.size(); ++i)
    by_order.emplace_back(proj_element_order(group[i], group.size()), i);
  std::sort(by_order.begin(), by_order.end(), [&group](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return group[x.second].key() < group[y.second].key();
  });

  std::vector<std::vector<std::size_t>> candidates(ngens);
  for (int gi = 0; gi < ngens; ++gi) {
    for (const auto& [ord, idx] : by_order)
      if (power_constraint[gi] == 0 || power_constraint[gi] % ord == 0)
        candidates[gi].push_back(idx);
  }

  std::vector<ProjMat2> tuple;
  std::vector<std::size_t> pick(ngens, 0);
  // nested loops over the candidate lists, expressed iteratively
  int level = 0;
  for (;;) {
    if (level < 0) return std::nullopt;
    if (level == ngens) {
      tuple.clear();
      for (int gi = 0; gi < ngens; ++gi) tuple.push_back(group[candidates[gi][pick[gi] - 1]]);
      bool ok = true;
      for (const fp::Word& r : p.relators)
        if (!evaluate_word(r, tuple, f).is_identity()) {
          ok = false;
          break;
        }
      if (ok && require_generation) ok = images_generate(tuple, group.size(), f);
      if (ok) return tuple;
      --level;
      continue;
    }
    if (pick[level] >= candidates[level].size()) {
      pick[level] = 0;
      --level;
      continue;
    }
    ++pick[level];
    ++level;
  }
}

}  // namespace burnlab::psl
