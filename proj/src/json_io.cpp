#include "knopf/json_io.hpp"

#include <fstream>
#include <sstream>

namespace knopf {

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }
}

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path.string());
}

FieldSpec field_from_json(const Json& j) {
  try {
    if (j.is_string()) return FieldSpec::parse(j.get<std::string>());
    if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_integer() && j["Fp"].get<long>() > 0)
      return FieldSpec::prime(static_cast<std::uint32_t>(j["Fp"].get<long>()));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("field: ") + e.what());
  }
  throw InputError("field must be \"Q\", \"Fp:<p>\" or {\"Fp\": p}, got " + j.dump());
}

Json field_to_json(const FieldSpec& f) {
  if (f.is_rational()) return "Q";
  return Json{{"Fp", f.characteristic()}};
}

Json scalar_to_json(const Rational& x) { return x.str(); }
Json scalar_to_json(const Fp& x) { return x.value(); }

namespace detail {

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
  return obj[key];
}

int index_from_json(const Json& j, int n, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": index must be an integer, got " + j.dump());
  const long v = j.get<long>();
  if (v < 0 || v >= n) throw InputError(where + ": index " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

}  // namespace detail

FieldSpec document_field(const Json& j, const std::optional<FieldSpec>& override_field) {
  if (override_field) return *override_field;
  const Json* cur = &j;
  for (const char* key : {"scheme", "coordinate_ring"})
    if (cur->is_object() && cur->contains(key) && (*cur)[key].is_object()) cur = &(*cur)[key];
  if (cur->is_object() && cur->contains("field")) return field_from_json((*cur)["field"]);
  if (j.is_object() && j.contains("field")) return field_from_json(j["field"]);
  return FieldSpec::rationals();
}

// ---------------------------------------------------------------------------

Json to_json(const AxiomReport& r) {
  Json j;
  j["ok"] = r.ok();
  Json checks;
  for (const auto& c : r.checks) checks[c.name] = c.ok ? Json("pass") : Json("fail: " + c.witness);
  j["checks"] = std::move(checks);
  return j;
}

Json to_json(const AInvariant& a) {
  if (a.value) return *a.value;
  return "<= " + std::to_string(a.upper_bound) + " (undetermined within window)";
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["n"] = r.n;
  j["window"] = r.window;
  j["smallness"] = r.smallness;
  j["outside_hypotheses"] = r.outside_hypotheses;
  j["det_V"] = r.det_v;
  j["lambda"] = r.lambda;
  j["omega_twist"] = r.twist;
  j["watanabe_path"] = r.watanabe_path;
  Json conds;
  for (int k = 1; k <= 7; ++k) {
    const Condition& c = r.condition(k);
    conds["c" + std::to_string(k)] = c.verdict == Verdict::NotEvaluated ? "not_evaluated(" + c.evidence + ")"
                                                                       : to_string(c.verdict);
  }
  j["conditions"] = std::move(conds);
  Json evidence;
  for (int k = 1; k <= 7; ++k) evidence["c" + std::to_string(k)] = r.condition(k).evidence;
  j["evidence"] = std::move(evidence);
  Json a;
  a["omega_route"] = to_json(r.a_omega);
  if (r.a_molien) a["molien_route"] = *r.a_molien;
  j["a_invariant"] = std::move(a);
  if (!r.hilbert_series.empty()) j["hilbert_series"] = r.hilbert_series;
  j["hilbert"] = r.hilbert;
  j["omega_hilbert"] = r.omega;
  j["hilbert_consistent"] = r.hilbert_consistent;
  j["consistency"] = r.consistency;
  j["witnesses"] = r.witnesses;
  j["notes"] = r.notes;
  return j;
}

Json to_json(const GjsReport& r) {
  Json j;
  j["n"] = r.n;
  j["window"] = r.window;
  j["first_omega_degree"] = r.first_degree ? Json(*r.first_degree) : Json("none within window");
  if (r.a_series) j["a_invariant_series"] = *r.a_series;
  j["holds"] = r.holds;
  j["strict"] = r.strict;
  j["outside_hypotheses"] = r.outside_hypotheses;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

namespace {

Json degree_checks(const std::vector<DegreeCheck>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) {
    Json e{{"degree", c.degree}, {"ok", c.ok}};
    if (!c.note.empty()) e["note"] = c.note;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

Json to_json(const TraceReport& r) {
  Json j;
  j["window"] = r.window;
  j["image_invariant"] = r.image_invariant;
  if (r.equivariant)
    j["equivariant"] = *r.equivariant;
  else
    j["equivariant"] = r.equivariance_note;
  j["a_linear"] = r.a_linear;
  if (r.reynolds_scaling) j["reynolds_scaling"] = *r.reynolds_scaling;
  j["nondegeneracy"] = degree_checks(r.nondegeneracy);
  j["nondegeneracy_note"] = "truncated proxy: failures near the window boundary are inconclusive";
  return j;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_flat_array(const Json& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v)
    if (e.is_object() || e.is_array()) return false;
  return true;
}

void render(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !is_flat_array(v))) {
        out += pad + k + ":\n";
        render(v, indent + 1, out);
      } else if (v.is_array()) {
        std::string s;
        for (const auto& e : v) s += (s.empty() ? "" : ", ") + scalar_text(e);
        out += pad + k + ": " + (v.empty() ? "(none)" : s) + "\n";
      } else {
        out += pad + k + ": " + scalar_text(v) + "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_object()) {
        std::string inner;
        render(e, indent + 1, inner);
        inner.replace(0, pad.size() + 2, pad + "- ");
        out += inner;
      } else if (e.is_array()) {
        out += pad + "- " + e.dump() + "\n";
      } else {
        out += pad + "- " + scalar_text(e) + "\n";
      }
    }
  } else {
    out += pad + scalar_text(j) + "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::string out;
  render(j, 0, out);
  return out;
}

}  // namespace knopf
