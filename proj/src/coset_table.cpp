#include "burnlab/coset_table.hpp"

#include <json.hpp>

#include "burnlab/errors.hpp"

namespace burnlab::fp {

CosetTable::CosetTable(int ngens, std::vector<std::string> gen_names,
                       std::vector<std::int32_t> action, bool complete)
    : ngens_(ngens), gen_names_(std::move(gen_names)), action_(std::move(action)),
      complete_(complete) {
  if (ngens_ < 1) throw DomainError("coset table needs at least one generator");
  if (gen_names_.size() != static_cast<std::size_t>(ngens_))
    throw DomainError("generator name count does not match ngens");
  if (action_.size() % static_cast<std::size_t>(2 * ngens_) != 0)
    throw DomainError("action array size is not a multiple of 2*ngens");
  const std::int64_t n = nrows();
  if (n < 1) throw DomainError("coset table needs at least one row");
  for (std::int32_t v : action_) {
    if (v < -1 || v >= n) throw DomainError("action entry out of range");
    if (complete_ && v == -1) throw DomainError("complete table has an undefined entry");
  }
}

std::int32_t CosetTable::trace(std::int32_t row, const Word& w) const {
  std::int32_t cur = row;
  for (int l : w) {
    if (cur < 0) return -1;
    cur = entry(cur, col_of_letter(l));
  }
  return cur;
}

void CosetTable::check_inverse_columns() const {
  const std::int64_t n = nrows();
  for (std::int64_t r = 0; r < n; ++r) {
    for (int c = 0; c < ncols(); ++c) {
      std::int32_t t = entry(r, c);
      if (t < 0) throw StateError("undefined entry at row " + std::to_string(r));
      if (entry(t, inverse_col(c)) != r)
        throw StateError("columns are not mutually inverse at row " + std::to_string(r) +
                         ", column " + std::to_string(c));
    }
  }
}

void CosetTable::check_relator_traces(const Presentation& p) const {
  const std::int64_t n = nrows();
  for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
    for (std::int64_t r = 0; r < n; ++r) {
      std::int32_t t = trace(static_cast<std::int32_t>(r), p.relators[ri]);
      if (t != r)
        throw StateError("relator " + std::to_string(ri) + " does not fix coset " +
                         std::to_string(r));
    }
  }
}

std::uint64_t CosetTable::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(nrows()));
  mix(static_cast<std::uint64_t>(ngens_));
  for (std::int32_t v : action_) mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(v)));
  return h;
}

std::string CosetTable::to_json() const {
  nlohmann::ordered_json j;
  j["nrows"] = nrows();
  j["gens"] = gen_names_;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::int32_t v : action_) arr.push_back(v + 1);  // 1-based, 0 = undefined
  j["action"] = std::move(arr);
  return j.dump();
}

CosetTable CosetTable::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, 1, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("nrows") || !j.contains("gens") || !j.contains("action"))
    throw ParseError(1, 1, "coset table JSON needs nrows, gens, action");
  std::vector<std::string> names;
  for (const auto& g : j["gens"]) names.push_back(g.get<std::string>());
  if (names.empty()) throw ParseError(1, 1, "coset table JSON declares no generators");
  std::int64_t n = j["nrows"].get<std::int64_t>();
  std::vector<std::int32_t> action;
  action.reserve(j["action"].size());
  bool complete = true;
  for (const auto& v : j["action"]) {
    std::int64_t t = v.get<std::int64_t>();
    if (t == 0) complete = false;
    action.push_back(static_cast<std::int32_t>(t - 1));
  }
  if (static_cast<std::int64_t>(action.size()) != n * 2 * static_cast<std::int64_t>(names.size()))
    throw ParseError(1, 1, "action array size does not match nrows and gens");
  const int ngens = static_cast<int>(names.size());
  return CosetTable(ngens, std::move(names), std::move(action), complete);
}

}  // namespace burnlab::fp
