#pragma once

#include <array>
#include <string>
#include <utility>

#include <json.hpp>

#include "acyt/catalog.hpp"

namespace acyt {

/// On-disk description of an algebra plus structure. Coefficients are exact
/// rational strings; floating point is rejected outright.
struct InputDocument {
  std::string name;
  std::array<Form, kDim> d{Form(2), Form(2), Form(2), Form(2), Form(2), Form(2)};
  Form F = Form(2);
  Form psi_plus = Form(3);
  Form psi_minus = Form(3);
  Orientation orientation;
  Convention convention = Convention::internal_F;

  friend bool operator==(const InputDocument& a, const InputDocument& b) {
    return a.name == b.name && a.d == b.d && a.F == b.F && a.psi_plus == b.psi_plus &&
           a.psi_minus == b.psi_minus &&
           a.orientation.volume_tuple == b.orientation.volume_tuple &&
           a.convention == b.convention;
  }
};

namespace detail {

using json = nlohmann::json;

inline Rational coefficient_from_json(const json& j, const std::string& where) {
  std::string text;
  if (j.is_string()) {
    text = j.get<std::string>();
  } else if (j.is_number_integer()) {
    text = std::to_string(j.get<long long>());
  } else if (j.is_number()) {
    throw InputError(where + ": floating point not accepted");
  } else {
    throw InputError(where + ": coefficient must be a rational string");
  }
  std::string why;
  auto r = parse_rational(text, &why);
  if (!r) throw InputError(where + ": " + why);
  return *r;
}

inline Form form_from_json(const json& j, int degree, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected a list of [coefficient, indices] terms");
  Form f(degree);
  std::size_t n = 0;
  for (const auto& term : j) {
    std::string ctx = where + "[" + std::to_string(n++) + "]";
    if (!term.is_array() || term.size() != 2)
      throw InputError(ctx + ": term must be [coefficient, indices]");
    Rational c = coefficient_from_json(term[0], ctx);
    const json& idx = term[1];
    if (!idx.is_array() || static_cast<int>(idx.size()) != degree)
      throw InputError(ctx + ": expected " + std::to_string(degree) + " indices");
    Mask m = 0;
    int prev = 0;
    for (const auto& v : idx) {
      if (!v.is_number_integer()) throw InputError(ctx + ": indices must be integers");
      int i = v.get<int>();
      if (i < 1 || i > kDim) throw InputError(ctx + ": index out of range 1..6");
      if (i <= prev) throw InputError(ctx + ": indices must be strictly increasing");
      prev = i;
      m |= 1u << (i - 1);
    }
    f.add_term(m, c);
  }
  return f;
}

inline json form_to_json(const Form& f) {
  // canonical: terms sorted lexicographically by index tuple
  std::vector<std::pair<std::vector<int>, Rational>> ts;
  for (auto& [m, c] : f.terms()) ts.emplace_back(mask_indices(m), c);
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  json out = json::array();
  for (auto& [idx, c] : ts) out.push_back(json::array({to_string(c), idx}));
  return out;
}

}  // namespace detail

inline InputDocument parse_document(const std::string& text) {
  using detail::form_from_json;
  using json = nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("document is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("document: top level must be an object");
  for (auto& [key, value] : j.items()) {
    (void)value;
    if (key != "name" && key != "convention" && key != "orientation" && key != "d" &&
        key != "F" && key != "psi_plus" && key != "psi_minus")
      throw InputError("document: unknown field \"" + key + "\"");
  }

  InputDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError("name: expected a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("convention")) {
    if (!j["convention"].is_string()) throw InputError("convention: expected a string");
    std::string c = j["convention"].get<std::string>();
    if (c == "internal-F")
      doc.convention = Convention::internal_F;
    else if (c == "paper-omega")
      doc.convention = Convention::paper_omega;
    else
      throw InputError("convention: unknown convention tag \"" + c + "\"");
  }
  if (j.contains("orientation")) {
    const auto& o = j["orientation"];
    if (!o.is_array() || o.size() != kDim)
      throw InputError("orientation: expected a permutation of [1..6]");
    for (int i = 0; i < kDim; ++i) {
      if (!o[i].is_number_integer()) throw InputError("orientation: indices must be integers");
      doc.orientation.volume_tuple[i] = o[i].get<int>();
    }
    doc.orientation.sign();  // validates; throws InputError on a non-permutation
  }
  if (j.contains("d")) {
    if (!j["d"].is_object()) throw InputError("d: expected an object with keys e1..e6");
    for (auto& [key, value] : j["d"].items()) {
      if (key.size() != 2 || key[0] != 'e' || key[1] < '1' || key[1] > '6')
        throw InputError("d: unknown key \"" + key + "\" (expected e1..e6)");
      doc.d[key[1] - '1'] = form_from_json(value, 2, "d." + key);
    }
  }
  for (const char* field : {"F", "psi_plus", "psi_minus"})
    if (!j.contains(field)) throw InputError(std::string(field) + ": missing required field");
  doc.F = form_from_json(j["F"], 2, "F");
  doc.psi_plus = form_from_json(j["psi_plus"], 3, "psi_plus");
  doc.psi_minus = form_from_json(j["psi_minus"], 3, "psi_minus");
  return doc;
}

/// Canonical serialization: sorted keys, rationals as lowest-term strings,
/// term lists sorted by index tuple. Byte-identical across runs.
inline std::string serialize_document(const InputDocument& doc) {
  using detail::form_to_json;
  using json = nlohmann::json;
  json j;
  j["name"] = doc.name;
  j["convention"] = to_string(doc.convention);
  j["orientation"] = doc.orientation.volume_tuple;
  json d = json::object();
  for (int k = 0; k < kDim; ++k) d["e" + std::to_string(k + 1)] = form_to_json(doc.d[k]);
  j["d"] = d;
  j["F"] = form_to_json(doc.F);
  j["psi_plus"] = form_to_json(doc.psi_plus);
  j["psi_minus"] = form_to_json(doc.psi_minus);
  return j.dump(2) + "\n";
}

/// Realizes the document as engine data, applying the sign dictionary when the
/// document is in the (ω, Θ) convention.
inline std::pair<LieAlgebra, SU3Structure> realize(const InputDocument& doc) {
  LieAlgebra g(doc.d);
  Form F = doc.F, pp = doc.psi_plus, pm = doc.psi_minus;
  if (doc.convention == Convention::paper_omega) {
    F = -F;
    pp = -pp;
    pm = -pm;
  }
  return {std::move(g), SU3Structure::make(std::move(F), std::move(pp), std::move(pm),
                                           doc.orientation)};
}

inline InputDocument document_from_catalog(const CatalogEntry& e,
                                           Convention out = Convention::internal_F) {
  InputDocument doc;
  doc.name = e.name;
  doc.convention = out;
  for (int k = 1; k <= kDim; ++k) doc.d[k - 1] = e.algebra.d_basis(k);
  doc.orientation = e.structure.orientation;
  if (out == Convention::internal_F) {
    doc.F = e.structure.F;
    doc.psi_plus = e.structure.psi_plus;
    doc.psi_minus = e.structure.psi_minus;
  } else {
    doc.F = -e.structure.F;
    doc.psi_plus = -e.structure.psi_plus;
    doc.psi_minus = -e.structure.psi_minus;
  }
  return doc;
}

}  // namespace acyt
