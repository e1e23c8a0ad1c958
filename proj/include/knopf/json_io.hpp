#pragma once

// JSON input and output for Hopf algebras, group schemes, comodules and
// reports. Rationals are strings "a/b" (or "a"), F_p elements integers.

#include "knopf/canonical.hpp"
#include "knopf/trace.hpp"

#include <filesystem>

#include "json.hpp"

namespace knopf {

using Json = nlohmann::ordered_json;

/// Malformed or schema-violating input (the CLI maps this to exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses JSON text; syntax errors carry "source:line:column".
Json parse_json(const std::string& text, const std::string& source = "<input>");
Json load_json_file(const std::filesystem::path& path);

/// "Q", "Fp:p" or {"Fp": p}.
FieldSpec field_from_json(const Json& j);
Json field_to_json(const FieldSpec& f);

Json scalar_to_json(const Rational& x);
Json scalar_to_json(const Fp& x);

template <class K>
K scalar_from_json(const Json& j, const FieldSpec& f) {
  if (j.is_number_integer()) return scalar<K>(j.get<long>(), f);
  if (j.is_string()) {
    try {
      return ScalarTraits<K>::parse(j.get<std::string>(), f);
    } catch (const std::exception& e) {
      throw InputError("bad scalar '" + j.get<std::string>() + "': " + e.what());
    }
  }
  throw InputError("scalar must be an integer or a string, got " + j.dump());
}

namespace detail {

const Json& require(const Json& obj, const char* key, const std::string& where);
int index_from_json(const Json& j, int n, const std::string& where);

template <class K>
Vector<K> vector_from_json(const Json& j, int n, const FieldSpec& f, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw InputError(where + ": expected an array of " + std::to_string(n) + " scalars");
  Vector<K> v(n);
  for (int i = 0; i < n; ++i) v(i) = scalar_from_json<K>(j[i], f);
  return v;
}

template <class K>
Tensor3<K> tensor_from_json(const Json& j, int n, const FieldSpec& f, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of [i, j, k, c] entries");
  std::vector<TensorEntry<K>> entries;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4) throw InputError(where + ": entries are [i, j, k, c], got " + e.dump());
    entries.push_back({index_from_json(e[0], n, where), index_from_json(e[1], n, where),
                       index_from_json(e[2], n, where), scalar_from_json<K>(e[3], f)});
  }
  return Tensor3<K>(n, std::move(entries));
}

template <class K>
Json tensor_to_json(const Tensor3<K>& t) {
  Json out = Json::array();
  for (const auto& e : t.entries()) out.push_back(Json::array({e.i, e.j, e.k, scalar_to_json(e.c)}));
  return out;
}

}  // namespace detail

/// Reads the Hopf algebra schema. The antipode is solved for when absent.
/// Axioms are not checked here; see verify_axioms.
template <class K>
HopfAlgebra<K> hopf_from_json(const Json& j, const FieldSpec& field) {
  const std::string w = "hopf algebra";
  if (!j.is_object()) throw InputError(w + ": expected an object");
  const Json& dj = detail::require(j, "dim", w);
  if (!dj.is_number_integer() || dj.get<long>() <= 0) throw InputError(w + ": dim must be a positive integer");
  const int n = dj.get<int>();
  Algebra<K> A;
  A.field = field;
  if (j.contains("basis")) {
    const Json& b = j["basis"];
    if (!b.is_array() || static_cast<int>(b.size()) != n) throw InputError(w + ": basis must list " + std::to_string(n) + " labels");
    for (const auto& l : b) {
      if (!l.is_string()) throw InputError(w + ": basis labels must be strings");
      A.labels.push_back(l.get<std::string>());
    }
  } else {
    for (int i = 0; i < n; ++i) A.labels.push_back("b" + std::to_string(i));
  }
  A.mult = detail::tensor_from_json<K>(detail::require(j, "mult", w), n, field, w + " mult");
  A.unit = detail::vector_from_json<K>(detail::require(j, "unit", w), n, field, w + " unit");
  Tensor3<K> comult = detail::tensor_from_json<K>(detail::require(j, "comult", w), n, field, w + " comult");
  Vector<K> counit = detail::vector_from_json<K>(detail::require(j, "counit", w), n, field, w + " counit");
  std::optional<Matrix<K>> S;
  if (j.contains("antipode") && !j["antipode"].is_null()) {
    const Json& a = j["antipode"];
    if (!a.is_array() || static_cast<int>(a.size()) != n) throw InputError(w + ": antipode must be an n x n matrix");
    Matrix<K> m(n, n);
    for (int r = 0; r < n; ++r) {
      Vector<K> row = detail::vector_from_json<K>(a[r], n, field, w + " antipode row");
      m.row(r) = row.transpose();
    }
    S = std::move(m);
  }
  return make_hopf(std::move(A), std::move(comult), std::move(counit), std::move(S));
}

template <class K>
Json hopf_to_json(const HopfAlgebra<K>& H) {
  Json j;
  j["field"] = field_to_json(H.field());
  j["dim"] = H.dim();
  j["basis"] = H.labels();
  Json unit = Json::array(), counit = Json::array(), S = Json::array();
  for (int i = 0; i < H.dim(); ++i) {
    unit.push_back(scalar_to_json(H.unit()(i)));
    counit.push_back(scalar_to_json(H.counit(i)));
    Json row = Json::array();
    for (int c = 0; c < H.dim(); ++c) row.push_back(scalar_to_json(H.antipode(i, c)));
    S.push_back(std::move(row));
  }
  j["unit"] = std::move(unit);
  j["counit"] = std::move(counit);
  j["mult"] = detail::tensor_to_json(H.algebra.mult);
  j["comult"] = detail::tensor_to_json(H.comult);
  j["antipode"] = std::move(S);
  return j;
}

/// The field of a Hopf algebra or group scheme document, unless overridden.
FieldSpec document_field(const Json& j, const std::optional<FieldSpec>& override_field);

/// {"coordinate_ring": <hopf>, "label": ...}; a bare Hopf schema is accepted.
template <class K>
SchemePtr<K> scheme_from_json(const Json& j, const FieldSpec& field) {
  const Json& ring = j.is_object() && j.contains("coordinate_ring") ? j["coordinate_ring"] : j;
  std::string label = j.is_object() && j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "";
  return make_scheme(hopf_from_json<K>(ring, field), std::move(label));
}

template <class K>
Json scheme_to_json(const FiniteGroupScheme<K>& G) {
  Json j;
  if (!G.label().empty()) j["label"] = G.label();
  j["coordinate_ring"] = hopf_to_json(G.gamma());
  return j;
}

template <class K>
Json comodule_to_json(const Comodule<K>& V, bool inline_scheme = true) {
  Json j;
  if (inline_scheme) j["scheme"] = scheme_to_json(V.scheme());
  j["dim"] = V.dim();
  Json c = Json::array();
  for (int i = 0; i < V.dim(); ++i)
    for (int k = 0; k < V.dim(); ++k) {
      const Vector<K> g = V.entry(i, k);
      if (is_zero<K>(Matrix<K>(g))) continue;
      Json coeffs = Json::array();
      for (int q = 0; q < g.size(); ++q) coeffs.push_back(scalar_to_json(g(q)));
      c.push_back(Json::array({i, k, std::move(coeffs)}));
    }
  j["coaction"] = std::move(c);
  return j;
}

/// A loaded G-module: the comodule, plus the matrix group when it came from
/// the constant-group shorthand (so smallness and Molien are available).
template <class K>
struct ModuleInput {
  std::optional<Comodule<K>> module;
  std::optional<MatrixGroup<K>> group;
  std::optional<DiagonalizableAction> diagonal;
};

template <class K>
Matrix<K> matrix_from_json(const Json& j, const FieldSpec& f, const std::string& where) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw InputError(where + ": expected a matrix (array of rows)");
  const int r = static_cast<int>(j.size()), c = static_cast<int>(j[0].size());
  Matrix<K> m(r, c);
  for (int i = 0; i < r; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != c) throw InputError(where + ": ragged matrix");
    for (int q = 0; q < c; ++q) m(i, q) = scalar_from_json<K>(j[i][q], f);
  }
  return m;
}

/// Reads a comodule document. "scheme" may be inline, a path (relative to
/// base_dir), or absent when `scheme` is supplied. Also accepts
/// {"constant_group": {"matrices"|"generators": [...]}} and
/// {"diagonal": {"weights": [...], "modulus": m}}.
template <class K>
ModuleInput<K> module_from_json(const Json& j, const FieldSpec& field, SchemePtr<K> scheme,
                                 const std::filesystem::path& base_dir = {}) {
  const std::string w = "module";
  if (!j.is_object()) throw InputError(w + ": expected an object");
  ModuleInput<K> out;
  if (j.contains("diagonal")) {
    const Json& d = j["diagonal"];
    DiagonalizableAction a;
    const Json& ws = detail::require(d, "weights", w + " diagonal");
    if (!ws.is_array()) throw InputError(w + ": weights must be an array of integers");
    for (const auto& x : ws) {
      if (!x.is_number_integer()) throw InputError(w + ": weights must be integers");
      a.weights.push_back(x.get<long>());
    }
    if (d.contains("modulus")) a.modulus = d["modulus"].get<long>();
    if (a.modulus < 0 || a.weights.empty()) throw InputError(w + ": modulus must be >= 0 and weights nonempty");
    out.diagonal = a;
    return out;
  }
  if (j.contains("constant_group")) {
    const Json& cg = j["constant_group"];
    std::vector<Matrix<K>> mats;
    const bool gens = cg.contains("generators");
    const Json& list = gens ? cg["generators"] : detail::require(cg, "matrices", w + " constant_group");
    if (!list.is_array() || list.empty()) throw InputError(w + ": constant_group needs a nonempty matrix list");
    for (const auto& m : list) mats.push_back(matrix_from_json<K>(m, field, w + " constant_group"));
    try {
      out.group = gens ? MatrixGroup<K>::generated_by(mats, field) : MatrixGroup<K>::from_list(mats, field);
    } catch (const std::invalid_argument& e) {
      throw InputError(w + ": " + e.what());
    }
    out.module = matrix_group_comodule(*out.group, constant_scheme_of(*out.group));
    return out;
  }
  if (j.contains("scheme")) {
    const Json& s = j["scheme"];
    if (s.is_string()) {
      std::filesystem::path p = s.get<std::string>();
      if (p.is_relative()) p = base_dir / p;
      scheme = scheme_from_json<K>(load_json_file(p), field);
    } else {
      scheme = scheme_from_json<K>(s, field);
    }
  }
  if (!scheme) throw InputError(w + ": no scheme given");
  const Json& dj = detail::require(j, "dim", w);
  if (!dj.is_number_integer() || dj.get<long>() <= 0) throw InputError(w + ": dim must be a positive integer");
  const int n = dj.get<int>();
  std::vector<std::vector<Vector<K>>> gamma(n, std::vector<Vector<K>>(n, zero_vector<K>(scheme->dim(), field)));
  for (const auto& e : detail::require(j, "coaction", w)) {
    if (!e.is_array() || e.size() != 3) throw InputError(w + ": coaction entries are [i, j, [coeffs]]");
    const int r = detail::index_from_json(e[0], n, w), c = detail::index_from_json(e[1], n, w);
    gamma[r][c] = detail::vector_from_json<K>(e[2], scheme->dim(), field, w + " coaction");
  }
  out.module = Comodule<K>::from_entries(scheme, gamma);
  return out;
}

// ---------------------------------------------------------------------------
// Reports

Json to_json(const AxiomReport& r);
Json to_json(const ClassificationReport& r);
Json to_json(const GjsReport& r);
Json to_json(const TraceReport& r);
Json to_json(const AInvariant& a);

/// Plain-text rendering of a report object: one "key: value" line per
/// scalar, nested objects indented.
std::string render_text(const Json& j);

}  // namespace knopf
