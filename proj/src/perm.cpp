#include "burnlab/perm.hpp"

#include <numeric>
#include <unordered_map>

#include "burnlab/errors.hpp"

namespace burnlab::fp {

PermGroupView regular_representation(const CosetTable& t) {
  if (!t.complete()) throw StateError("regular representation needs a complete coset table");
  PermGroupView g;
  g.degree = t.nrows();
  g.gens.reserve(t.ngens());
  for (int i = 0; i < t.ngens(); ++i) {
    Perm p(g.degree);
    for (std::int64_t r = 0; r < g.degree; ++r) p[r] = t.entry(r, 2 * i);
    g.gens.push_back(std::move(p));
  }
  return g;
}

Perm perm_compose(const Perm& f, const Perm& g) {
  if (f.size() != g.size()) throw DomainError("permutation degrees differ");
  Perm out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = g[f[x]];
  return out;
}

Perm perm_inverse(const Perm& f) {
  Perm out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[f[x]] = static_cast<std::int32_t>(x);
  return out;
}

std::uint64_t perm_order(const Perm& f) {
  std::vector<bool> done(f.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (done[x]) continue;
    std::uint64_t len = 0;
    std::size_t y = x;
    do {
      done[y] = true;
      y = static_cast<std::size_t>(f[y]);
      ++len;
    } while (y != x);
    ord = std::lcm(ord, len);
  }
  return ord;
}

namespace {

std::uint64_t perm_hash(const Perm& p) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::int32_t v : p) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::vector<Perm> perm_group_elements(const PermGroupView& g, std::size_t element_bound) {
  if (g.degree < 1) throw DomainError("permutation group needs positive degree");
  std::vector<Perm> step;
  for (const Perm& p : g.gens) {
    if (static_cast<std::int64_t>(p.size()) != g.degree)
      throw DomainError("generator degree mismatch");
    step.push_back(p);
    step.push_back(perm_inverse(p));
  }
  Perm id(g.degree);
  std::iota(id.begin(), id.end(), 0);

  std::vector<Perm> out;
  out.push_back(id);
  // hash buckets with full comparison on collision
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;
  seen[perm_hash(id)].push_back(0);
  auto known = [&](const Perm& p, std::uint64_t h) {
    auto it = seen.find(h);
    if (it == seen.end()) return false;
    for (std::size_t i : it->second)
      if (out[i] == p) return true;
    return false;
  };
  std::size_t next = 0;
  while (next < out.size()) {
    Perm cur = out[next++];
    for (const Perm& s : step) {
      Perm prod = perm_compose(cur, s);
      std::uint64_t h = perm_hash(prod);
      if (known(prod, h)) continue;
      if (out.size() >= element_bound)
        throw CapacityError("permutation group enumeration exceeded element_bound=" +
                            std::to_string(element_bound));
      seen[h].push_back(out.size());
      out.push_back(std::move(prod));
    }
  }
  return out;
}

std::uint64_t perm_group_exponent(const PermGroupView& g, std::size_t element_bound) {
  std::uint64_t e = 1;
  for (const Perm& p : perm_group_elements(g, element_bound)) e = std::lcm(e, perm_order(p));
  return e;
}

bool perm_gens_commute(const PermGroupView& g) {
  for (std::size_t i = 0; i < g.gens.size(); ++i)
    for (std::size_t j = i + 1; j < g.gens.size(); ++j)
      if (perm_compose(g.gens[i], g.gens[j]) != perm_compose(g.gens[j], g.gens[i])) return false;
  return true;
}

}  // namespace burnlab::fp
