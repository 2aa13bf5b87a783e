#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "burnlab/presentation.hpp"
#include "burnlab/word.hpp"

namespace burnlab::fp {

// Action of a group on cosets 0..nrows-1. Columns alternate generator and
// inverse (g1, g1', g2, g2', ...). Entries are target cosets, -1 = undefined.
// Coset 0 is the subgroup coset. A table marked complete has every entry
// defined, with generator and inverse columns mutually inverse permutations.
class CosetTable {
 public:
  CosetTable(int ngens, std::vector<std::string> gen_names,
             std::vector<std::int32_t> action, bool complete);

  int ngens() const { return ngens_; }
  int ncols() const { return 2 * ngens_; }
  std::int64_t nrows() const { return static_cast<std::int64_t>(action_.size()) / ncols(); }
  bool complete() const { return complete_; }
  const std::vector<std::string>& gen_names() const { return gen_names_; }

  std::int32_t entry(std::int64_t row, int col) const { return action_[row * ncols() + col]; }

  // Follows w from row; returns -1 if an undefined entry is hit.
  std::int32_t trace(std::int32_t row, const Word& w) const;

  // Exhaustive audits; each throws StateError describing the first violation.
  void check_inverse_columns() const;
  void check_relator_traces(const Presentation& p) const;

  // FNV-1a over dimensions and action entries, as a stable fingerprint.
  std::uint64_t hash() const;

  // JSON round-trip: {"nrows": N, "gens": [names], "action": [...]} with the
  // action row-major and 1-based (0 encodes undefined).
  std::string to_json() const;
  static CosetTable from_json(const std::string& text);

 private:
  int ngens_;
  std::vector<std::string> gen_names_;
  std::vector<std::int32_t> action_;
  bool complete_;
};

// Todd-Coxeter coset enumeration (Felsch-style: define the first undefined
// entry in row-major order, process all consequences immediately). Returns a
// complete standardized table whose rows are numbered in breadth-first order
// from the subgroup coset; throws CapacityError when live cosets would exceed
// max_cosets.
CosetTable coset_enumerate(const Presentation& p, const std::vector<Word>& subgens,
                           std::int64_t max_cosets = 200000);

}  // namespace burnlab::fp
