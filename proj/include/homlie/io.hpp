#pragma once

#include <cstddef>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "homlie/cohomology.hpp"
#include "homlie/structures.hpp"

// JSON forms. Indices are 1-based in files and 0-based in memory.
//   algebra:   {"dim", "alpha": [[q..]..], "brackets": [{"i","j","value"}], "basis"?}
//   cochain:   {"arity", "coeffs": [{"tuple", "value"}]}
//   action:    {"module_dim", "beta", "action": [{"g","v","value"}], "brackets"?, "basis"?}
//   operator:  {"matrix": [[q..]..]}  (rows index the codomain)
namespace homlie::io {

using json = nlohmann::json;

/// Reads a JSON document; "-" is stdin.
inline json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError((path == "-" ? std::string("stdin") : path) + ": malformed JSON: " + e.what());
  }
}

namespace detail {

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw UsageError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw UsageError(where + ": missing \"" + key + "\"");
  return *it;
}

inline std::size_t count(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw UsageError(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

/// 1-based index in [1, bound], returned 0-based.
inline std::size_t index(const json& j, std::size_t bound, const std::string& where) {
  if (!j.is_number_integer()) throw UsageError(where + ": expected an integer index");
  const long long v = j.get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > bound)
    throw UsageError(where + ": index " + std::to_string(v) + " out of range 1.." + std::to_string(bound));
  return static_cast<std::size_t>(v - 1);
}

}  // namespace detail

inline Scalar scalar_from(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_scalar(j.get<std::string>());
    } catch (const UsageError& e) {
      throw UsageError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Scalar(j.dump());
  throw UsageError(where + ": expected a rational string or an integer");
}

inline Vec vec_from(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) throw UsageError(where + ": expected an array");
  if (j.size() != dim)
    throw UsageError(where + ": expected " + std::to_string(dim) + " entries, got " + std::to_string(j.size()));
  Vec v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = scalar_from(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

inline Mat mat_from(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    throw UsageError(where + ": expected " + std::to_string(rows) + " rows");
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vec row = vec_from(j[r], cols, where + "[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

inline std::vector<std::string> names_from(const json& j, std::size_t dim, const std::string& where) {
  auto it = j.find("basis");
  if (it == j.end()) return {};
  if (!it->is_array() || it->size() != dim) throw UsageError(where + ".basis: expected " + std::to_string(dim) + " names");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const auto& n : *it) {
    if (!n.is_string()) throw UsageError(where + ".basis: names must be strings");
    if (!seen.insert(n.get<std::string>()).second) throw UsageError(where + ".basis: duplicate name " + n.get<std::string>());
    names.push_back(n.get<std::string>());
  }
  return names;
}

inline SpaceRef space_from(const json& j, const char* dim_key, const char* twist_key, const std::string& where) {
  const std::size_t dim = detail::count(detail::field(j, dim_key, where), where + "." + dim_key);
  if (dim == 0 || dim > kMaxDim) throw UsageError(where + "." + dim_key + ": must be in 1.." + std::to_string(kMaxDim));
  Mat twist = j.contains(twist_key) ? mat_from(j[twist_key], dim, dim, where + "." + twist_key) : Mat::identity(dim);
  return make_space(std::move(twist), names_from(j, dim, where));
}

inline SkewCochain brackets_from(const json& j, const SpaceRef& space, const std::string& where) {
  std::vector<BracketEntry> entries;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  auto it = j.find("brackets");
  if (it == j.end()) return SkewCochain(space, space, 2);
  if (!it->is_array()) throw UsageError(where + ".brackets: expected an array");
  for (std::size_t k = 0; k < it->size(); ++k) {
    const std::string at = where + ".brackets[" + std::to_string(k) + "]";
    const auto& e = (*it)[k];
    const std::size_t i = detail::index(detail::field(e, "i", at), space->dim(), at + ".i");
    const std::size_t jj = detail::index(detail::field(e, "j", at), space->dim(), at + ".j");
    if (i >= jj) throw UsageError(at + ": needs i < j");
    if (!seen.insert({i, jj}).second) throw UsageError(at + ": duplicate pair (" + std::to_string(i + 1) + "," + std::to_string(jj + 1) + ")");
    entries.push_back({i, jj, vec_from(detail::field(e, "value", at), space->dim(), at + ".value")});
  }
  return bracket_from_entries(space, entries);
}

inline RawHomStructure algebra_from(const json& j, const std::string& where = "algebra") {
  auto space = space_from(j, "dim", "alpha", where);
  return RawHomStructure(space, brackets_from(j, space, where));
}

/// Validated Hom-Lie algebra; structure failures become usage errors with the witness.
inline HomLieAlgebra hom_lie_from(const json& j, const std::string& where = "algebra") {
  try {
    return HomLieAlgebra(algebra_from(j, where));
  } catch (const StructureError& e) {
    throw UsageError(where + ": not a multiplicative Hom-Lie algebra: " + e.what());
  }
}

inline Representation representation_from(const json& j, const HomLieAlgebra& g, const std::string& where = "representation") {
  auto module = space_from(j, "module_dim", "beta", where);
  BilinearMap act(g.dim(), module->dim(), module->dim());
  std::set<std::pair<std::size_t, std::size_t>> seen;
  const auto& list = detail::field(j, "action", where);
  if (!list.is_array()) throw UsageError(where + ".action: expected an array");
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string at = where + ".action[" + std::to_string(k) + "]";
    const std::size_t x = detail::index(detail::field(list[k], "g", at), g.dim(), at + ".g");
    const std::size_t v = detail::index(detail::field(list[k], "v", at), module->dim(), at + ".v");
    if (!seen.insert({x, v}).second) throw UsageError(at + ": duplicate pair");
    act.on_basis(x, v) = vec_from(detail::field(list[k], "value", at), module->dim(), at + ".value");
  }
  Representation rep(g, module, std::move(act));
  if (auto w = find_representation_failure(rep)) throw UsageError(where + ": not a representation: " + w->describe());
  return rep;
}

/// Action of g on the algebra carried by the file's "brackets" and "beta".
inline HomLieAction action_from(const json& j, const HomLieAlgebra& g, const std::string& where = "action") {
  Representation rep = representation_from(j, g, where);
  HomLieAlgebra h = [&] {
    try {
      return HomLieAlgebra(rep.module(), brackets_from(j, rep.module(), where));
    } catch (const StructureError& e) {
      throw UsageError(where + ": acted algebra is not a multiplicative Hom-Lie algebra: " + e.what());
    }
  }();
  HomLieAction action(std::move(rep), std::move(h));
  if (auto w = find_action_failure(action)) throw UsageError(where + ": not an action: " + w->describe());
  return action;
}

inline SkewCochain cochain_from(const json& j, const SpaceRef& domain, const SpaceRef& codomain, const std::string& where = "cochain") {
  const std::size_t arity = detail::count(detail::field(j, "arity", where), where + ".arity");
  if (arity > domain->dim() + 1) throw UsageError(where + ".arity: too large for the domain");
  SkewCochain c(domain, codomain, arity);
  std::set<unsigned> seen;
  const auto& list = detail::field(j, "coeffs", where);
  if (!list.is_array()) throw UsageError(where + ".coeffs: expected an array");
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string at = where + ".coeffs[" + std::to_string(k) + "]";
    const auto& t = detail::field(list[k], "tuple", at);
    if (!t.is_array() || t.size() != arity) throw UsageError(at + ".tuple: expected " + std::to_string(arity) + " indices");
    std::vector<std::size_t> tuple;
    for (std::size_t p = 0; p < arity; ++p) {
      tuple.push_back(detail::index(t[p], domain->dim(), at + ".tuple[" + std::to_string(p) + "]"));
      if (p > 0 && tuple[p] <= tuple[p - 1]) throw UsageError(at + ".tuple: indices must be strictly increasing");
    }
    const unsigned mask = tuple_mask(tuple);
    if (!seen.insert(mask).second) throw UsageError(at + ": duplicate tuple");
    const auto idx = c.basis().index_of_mask[mask];
    c.coeff(static_cast<std::size_t>(idx)) = vec_from(detail::field(list[k], "value", at), codomain->dim(), at + ".value");
  }
  return c;
}

inline Mat matrix_from(const json& j, std::size_t rows, std::size_t cols, const std::string& where = "operator") {
  return mat_from(detail::field(j, "matrix", where), rows, cols, where + ".matrix");
}

// ---------------------------------------------------------------- output

inline json to_json(const Scalar& s) { return to_string(s); }

inline json to_json(const Vec& v) {
  json a = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(to_string(v[i]));
  return a;
}

inline json to_json(const Mat& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
  return a;
}

inline json space_json(const TwistedSpace& s) {
  json names = json::array();
  for (const auto& n : s.names()) names.push_back(n);
  return {{"dim", s.dim()}, {"alpha", to_json(s.twist())}, {"basis", names}};
}

inline json to_json(const RawHomStructure& a) {
  json j = space_json(*a.space);
  json br = json::array();
  for (std::size_t i = 0; i < a.space->dim(); ++i)
    for (std::size_t k = i + 1; k < a.space->dim(); ++k) {
      const Vec v = a.bracket_basis(i, k);
      if (!v.is_zero()) br.push_back({{"i", i + 1}, {"j", k + 1}, {"value", to_json(v)}});
    }
  j["brackets"] = br;
  return j;
}

/// Nonzero coefficients only.
inline json to_json(const SkewCochain& c) {
  json coeffs = json::array();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c.coeff(k).is_zero()) continue;
    json t = json::array();
    for (auto i : c.basis().tuples[k]) t.push_back(i + 1);
    coeffs.push_back({{"tuple", t}, {"value", to_json(c.coeff(k))}});
  }
  return {{"arity", c.arity()}, {"coeffs", coeffs}};
}

inline json to_json(const Witness& w) {
  json idx = json::array();
  for (auto i : w.indices) idx.push_back(i + 1);
  return {{"axiom", w.axiom}, {"at", w.labels}, {"indices", idx}, {"lhs", format_vector(w.lhs, w.value_names)},
          {"rhs", format_vector(w.rhs, w.value_names)}, {"message", w.describe()}};
}

inline json to_json(const CohomologyReport& r) {
  return {{"degree", r.degree},
          {"dim_cochains", r.dim_cochains},
          {"dim_cocycles", r.dim_cocycles},
          {"dim_coboundaries", r.dim_coboundaries},
          {"dim_H", r.dim_H()}};
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace homlie::io
