#include "knopf/catalog.hpp"
#include "knopf/frobenius.hpp"

#include <iostream>

#include "CLI11.hpp"

using namespace knopf;

namespace {

struct Options {
  std::string field;
  int max_degree = -1;
  std::string output = "text";
  bool assert_small = false;
  int jobs = 0;
  std::string input;
  std::string scheme;
  std::string module;
  std::string entry;
  std::vector<std::string> params;
  std::string part;
};

// Thrown for results that should end with exit code 1.
class CheckFailure : public std::runtime_error {
 public:
  CheckFailure(Json report, const std::string& msg) : std::runtime_error(msg), report(std::move(report)) {}
  Json report;
};

std::optional<FieldSpec> field_override(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  try {
    return FieldSpec::parse(o.field);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--field: ") + e.what());
  }
}

void emit(const Options& o, const Json& j) {
  if (o.output == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << render_text(j);
}

// A Hopf algebra document: a bare schema, {"coordinate_ring": ...} or a
// catalog export {"hopf": ...}.
const Json& hopf_part(const Json& doc) {
  if (doc.is_object() && doc.contains("coordinate_ring")) return doc["coordinate_ring"];
  if (doc.is_object() && doc.contains("hopf")) return doc["hopf"];
  if (doc.is_object() && doc.contains("scheme") && doc["scheme"].is_object()) return hopf_part(doc["scheme"]);
  return doc;
}

template <class K>
HopfAlgebra<K> checked_hopf(const Json& doc, const FieldSpec& f) {
  HopfAlgebra<K> H = hopf_from_json<K>(hopf_part(doc), f);
  const AxiomReport rep = verify_axioms(H);
  if (const auto* bad = rep.first_failure())
    throw CheckFailure(Json{{"axioms", to_json(rep)}}, "Hopf axiom " + bad->name + " fails: " + bad->witness);
  return H;
}

template <class F>
void with_hopf(const Options& o, F&& fn) {
  const Json doc = load_json_file(o.input);
  const FieldSpec f = document_field(doc, field_override(o));
  visit_field(f, [&](auto zero) { fn(checked_hopf<decltype(zero)>(doc, f)); });
}

std::string vector_text(const auto& H, const auto& v) { return format_element(H, v); }

// A functional on H in the dual basis b_i*.
template <class K>
std::string functional_text(const HopfAlgebra<K>& H, const Vector<K>& v) {
  std::string s;
  for (int i = 0; i < v.size(); ++i) {
    if (is_zero(v(i))) continue;
    if (!s.empty()) s += " + ";
    if (!(v(i) == H.algebra.one())) s += v(i).str() + "*";
    s += H.labels()[i] + "*";
  }
  return s.empty() ? "0" : s;
}

int cmd_verify_module(const Options& o);

int cmd_verify(const Options& o) {
  if (!o.module.empty()) return cmd_verify_module(o);
  const Json doc = load_json_file(o.input);
  const FieldSpec f = document_field(doc, field_override(o));
  int code = 0;
  visit_field(f, [&](auto zero) {
    using K = decltype(zero);
    const HopfAlgebra<K> H = hopf_from_json<K>(hopf_part(doc), f);
    const AxiomReport rep = verify_axioms(H);
    Json j{{"field", f.str()}, {"dim", H.dim()}};
    j.update(to_json(rep));
    emit(o, j);
    code = rep.ok() ? 0 : 1;
  });
  return code;
}

int cmd_integrals(const Options& o) {
  with_hopf(o, [&](const auto& H) {
    const auto l = integrals(H, Side::Left).generator();
    const auto r = integrals(H, Side::Right).generator();
    emit(o, Json{{"dim", H.dim()},
                 {"left_integral", vector_text(H, l)},
                 {"right_integral", vector_text(H, r)},
                 {"unimodular", is_unimodular(H)}});
  });
  return 0;
}

int cmd_unimodular(const Options& o) {
  with_hopf(o, [&](const auto& H) {
    emit(o, Json{{"unimodular", is_unimodular(H)}, {"modular_element", functional_text(H, modular_element(H))}});
  });
  return 0;
}

int cmd_symmetric(const Options& o) {
  with_hopf(o, [&](const auto& H) {
    const auto s = symmetric_form(H.algebra);
    const auto fr = frobenius_form(H.algebra);
    Json j{{"symmetric", s.exists()}, {"symmetric_search", to_string(s.outcome)},
           {"frobenius", fr.exists()}, {"frobenius_search", to_string(fr.outcome)}};
    if (s.phi) {
      Json phi = Json::array();
      for (Eigen::Index i = 0; i < s.phi->size(); ++i) phi.push_back(scalar_to_json((*s.phi)(i)));
      j["symmetric_functional"] = std::move(phi);
    }
    j["unimodular"] = is_unimodular(H);
    j["cocommutative"] = H.is_cocommutative();
    emit(o, j);
  });
  return 0;
}

template <class K>
SchemePtr<K> load_scheme(const Json& doc, const FieldSpec& f) {
  try {
    return scheme_from_json<K>(doc.is_object() && doc.contains("scheme") ? doc["scheme"] : doc, f);
  } catch (const InconsistencyError& e) {
    throw CheckFailure(Json{{"error", e.what()}}, e.what());
  }
}

int cmd_knop(const Options& o) {
  const std::string path = o.scheme.empty() ? o.input : o.scheme;
  if (path.empty()) throw InputError("knop needs a scheme file");
  const Json doc = load_json_file(path);
  const FieldSpec f = document_field(doc, field_override(o));
  int code = 0;
  visit_field(f, [&](auto zero) {
    using K = decltype(zero);
    const auto G = load_scheme<K>(doc, f);
    const auto adj = knop_character_adjoint_route(*G);
    const auto mod = knop_character_via_modular(*G);
    const bool agree = equal<K>(adj, mod);
    const bool uni = is_unimodular(G->dual());
    Json j{{"scheme", G->label()},
           {"knop_character", format_element(G->gamma(), adj)},
           {"trivial", is_trivial_character(*G, adj)},
           {"modular_route", format_element(G->gamma(), mod)},
           {"routes_agree", agree},
           {"dual_unimodular", uni}};
    emit(o, j);
    if (!agree || is_trivial_character(*G, adj) != uni) code = 1;
  });
  return code;
}

// Everything needed for the module-level commands.
template <class K>
struct Loaded {
  using Scalar = K;
  FieldSpec field;
  ModuleInput<K> in;
};

FieldSpec module_field(const Options& o, const Json& module_doc, const std::optional<Json>& scheme_doc) {
  if (scheme_doc) return document_field(*scheme_doc, field_override(o));
  if (module_doc.is_object() && module_doc.contains("field")) return document_field(module_doc, field_override(o));
  if (module_doc.is_object() && module_doc.contains("scheme") && module_doc["scheme"].is_object())
    return document_field(module_doc["scheme"], field_override(o));
  if (module_doc.is_object() && module_doc.contains("scheme") && module_doc["scheme"].is_string()) {
    std::filesystem::path p = module_doc["scheme"].get<std::string>();
    if (p.is_relative()) p = std::filesystem::path(o.module).parent_path() / p;
    return document_field(load_json_file(p), field_override(o));
  }
  return document_field(module_doc, field_override(o));
}

template <class F>
void with_module(const Options& o, F&& fn, bool check_axioms = true) {
  if (o.module.empty()) throw InputError("--module is required");
  const Json mdoc = load_json_file(o.module);
  std::optional<Json> sdoc;
  if (!o.scheme.empty()) sdoc = load_json_file(o.scheme);
  const FieldSpec f = module_field(o, mdoc, sdoc);
  visit_field(f, [&](auto zero) {
    using K = decltype(zero);
    SchemePtr<K> scheme;
    if (sdoc) scheme = load_scheme<K>(*sdoc, f);
    Loaded<K> L{f, module_from_json<K>(mdoc, f, scheme, std::filesystem::path(o.module).parent_path())};
    if (L.in.module && check_axioms) {
      const auto rep = verify_comodule(*L.in.module);
      if (!rep.ok()) throw CheckFailure(Json{{"comodule_axioms", rep.witness}}, "comodule axioms fail: " + rep.witness);
    }
    fn(L);
  });
}

int cmd_verify_module(const Options& o) {
  int code = 0;
  with_module(
      o,
      [&](const auto& L) {
        if (!L.in.module) {
          emit(o, Json{{"comodule_axioms", "pass (diagonal action)"}});
          return;
        }
        const auto rep = verify_comodule(*L.in.module);
        Json j{{"dim", L.in.module->dim()}, {"counit", rep.counit_ok}, {"coassociativity", rep.coassociativity_ok}};
        if (!rep.ok()) j["witness"] = rep.witness;
        emit(o, j);
        code = rep.ok() ? 0 : 1;
      },
      false);
  return code;
}

template <class K>
std::string polynomial_text(SymmetricAlgebra<K>& S, int d, const Vector<K>& v) {
  const auto& mons = S.monomials(d);
  const auto names = S.table().variable_names();
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (is_zero(v(i))) continue;
    const std::string c = v(i).str();
    const std::string m = monomial_string(mons[i], names);
    std::string term = c == "1" ? m : (c == "-1" ? "-" + m : c + "*" + m);
    if (d == 0) term = c;
    if (!out.empty()) term = term[0] == '-' ? " - " + term.substr(1) : " + " + term;
    out += term;
  }
  return out.empty() ? "0" : out;
}

int window_or(const Options& o, int fallback) { return o.max_degree >= 0 ? o.max_degree : fallback; }

int cmd_invariants(const Options& o) {
  with_module(o, [&](auto& L) {
    using K = typename std::decay_t<decltype(L)>::Scalar;
    const int D = window_or(o, 6);
    const int jobs = resolve_jobs(o.jobs);
    Json j;
    j["window"] = D;
    if (L.in.diagonal) {
      const auto& a = *L.in.diagonal;
      j["hilbert"] = weight_hilbert_function(a, D);
      Json basis = Json::object();
      std::vector<std::string> names;
      for (int i = 0; i < a.dim(); ++i) names.push_back("x" + std::to_string(i));
      for (int d = 0; d <= std::min(D, 6); ++d) {
        const auto mons = monomials_of_degree(a.dim(), d);
        Json list = Json::array();
        for (int q : weight_invariant_monomials(a, d)) list.push_back(monomial_string(mons[q], names));
        basis[std::to_string(d)] = std::move(list);
      }
      j["basis"] = std::move(basis);
      emit(o, j);
      return;
    }
    auto S = std::make_shared<SymmetricAlgebra<K>>(dual_comodule(*L.in.module));
    GradedInvariantRing<K> A(S);
    j["hilbert"] = A.hilbert(D, jobs);
    bool agree = true;
    for (int d = 0; d <= D; ++d)
      agree = agree && invariants_kernel_route(S->power(d)).size() == A.degree(d).size();
    j["kernel_route_agrees"] = agree;
    Json basis = Json::object();
    for (int d = 0; d <= std::min(D, 6); ++d) {
      Json list = Json::array();
      for (const auto& v : A.degree(d)) list.push_back(polynomial_text(*S, d, v));
      basis[std::to_string(d)] = std::move(list);
    }
    j["basis"] = std::move(basis);
    if (!agree) throw CheckFailure(j, "generator and kernel routes disagree");
    emit(o, j);
  });
  return 0;
}

int cmd_molien(const Options& o) {
  with_module(o, [&](auto& L) {
    using K = typename std::decay_t<decltype(L)>::Scalar;
    if constexpr (!std::is_same_v<K, Rational>) {
      throw InputError("molien needs a constant group over Q");
    } else {
      if (!L.in.group) throw InputError("molien needs a constant_group module");
      const auto series = molien_series(*L.in.group);
      const int D = window_or(o, 10);
      Json coeffs = Json::array();
      for (const auto& c : series.series(D + 1)) coeffs.push_back(c.str());
      emit(o, Json{{"order", L.in.group->order()},
                   {"molien_series", series.str()},
                   {"coefficients", coeffs},
                   {"a_invariant", a_invariant_via_molien(series)}});
    }
  });
  return 0;
}

int cmd_classify(const Options& o) {
  int code = 0;
  with_module(o, [&](auto& L) {
    ClassifyOptions opts;
    opts.small_asserted = o.assert_small;
    opts.max_degree = o.max_degree;
    opts.jobs = resolve_jobs(o.jobs);
    const ClassificationReport r = L.in.diagonal ? classify_diagonal_action(*L.in.diagonal, opts)
                                                 : classify_small_action(*L.in.module, opts,
                                                                         L.in.group ? &*L.in.group : nullptr);
    emit(o, to_json(r));
    if (!r.consistency) code = 1;
  });
  return code;
}

int cmd_gjs(const Options& o) {
  int code = 0;
  with_module(o, [&](auto& L) {
    const int jobs = resolve_jobs(o.jobs);
    GjsReport g;
    if (L.in.diagonal) {
      const auto& a = *L.in.diagonal;
      bool small = o.assert_small;
      if (a.modulus > 0) small = is_small_diagonal(a);
      else if (!small) throw HypothesisError("smallness of a torus action must be asserted");
      const int D = default_window(a.dim(), o.max_degree);
      std::optional<RationalFunction> series;
      if (a.modulus > 0)
        series = diagonal_hilbert_series(a, Poly::one_minus_t_power(static_cast<int>(a.modulus)).pow(a.dim()));
      g = gjs_inequality_check(weight_hilbert_function(a, D, -a.det_weight()), a.dim(), small, series);
    } else {
      const auto* grp = L.in.group ? &*L.in.group : nullptr;
      bool small = o.assert_small;
      if (grp) small = is_small_constant(*grp);
      else if (!small) throw HypothesisError("smallness of a non-constant scheme must be asserted (--assert-small)");
      g = gjs_inequality_check(*L.in.module, default_window(L.in.module->dim(), o.max_degree), small, jobs, grp);
    }
    emit(o, to_json(g));
    if (!g.holds && !g.outside_hypotheses) code = 1;
  });
  return code;
}

int cmd_trace(const Options& o) {
  int code = 0;
  with_module(o, [&](auto& L) {
    using K = typename std::decay_t<decltype(L)>::Scalar;
    if (L.in.diagonal) {
      const auto& a = *L.in.diagonal;
      if (a.modulus <= 0) throw InputError("trace needs a finite group scheme");
      std::vector<int> idx;
      for (long w : a.weights) idx.push_back(static_cast<int>(((w % a.modulus) + a.modulus) % a.modulus));
      L.in.module = diagonal_comodule(mu_scheme<K>(static_cast<int>(a.modulus), L.field), idx);
    }
    auto S = std::make_shared<SymmetricAlgebra<K>>(dual_comodule(*L.in.module));
    std::optional<long> order;
    if (L.in.group) {
      const std::uint32_t p = L.field.characteristic();
      if (p == 0 || L.in.group->order() % p != 0) order = L.in.group->order();
    }
    const TraceReport t = trace_equivariance_check(*S, window_or(o, 8), order);
    emit(o, to_json(t));
    const bool ok = t.image_invariant && t.equivariant.value_or(true) && t.a_linear && t.reynolds_scaling.value_or(true);
    if (!ok) code = 1;
  });
  return code;
}

CatalogParams parse_params(const std::vector<std::string>& raw) {
  CatalogParams out;
  for (const auto& s : raw) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("--param expects key=value, got '" + s + "'");
    try {
      std::size_t used = 0;
      const long v = std::stol(s.substr(eq + 1), &used);
      if (used != s.size() - eq - 1) throw std::invalid_argument("trailing characters");
      out[s.substr(0, eq)] = v;
    } catch (const std::exception&) {
      throw InputError("--param value must be an integer, got '" + s + "'");
    }
  }
  return out;
}

int cmd_catalog_list(const Options& o) {
  Json list = Json::array();
  for (const auto& e : catalog_entries()) {
    Json defaults = Json::object();
    for (const auto& [k, v] : e.defaults) defaults[k] = v;
    list.push_back(Json{{"name", e.name}, {"summary", e.summary}, {"params", defaults}});
  }
  if (o.output == "json") {
    std::cout << list.dump(2) << "\n";
  } else {
    for (const auto& e : catalog_entries()) {
      std::string params;
      for (const auto& [k, v] : e.defaults) params += " " + k + "=" + std::to_string(v);
      std::cout << e.name << "  " << e.summary << (params.empty() ? "" : "  [" + params.substr(1) + "]") << "\n";
    }
  }
  return 0;
}

int cmd_catalog_run(const Options& o) {
  CatalogResult r;
  try {
    r = run_catalog(o.entry, parse_params(o.params), o.jobs);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (o.output == "json") {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << r.name << ": " << (r.pass() ? "pass" : "FAIL") << "\n";
    for (const auto& w : r.warnings) std::cout << "  warning: " << w << "\n";
    for (const auto& c : r.checks) {
      std::cout << "  [" << (c.ok ? "ok" : "MISMATCH") << "] " << c.what;
      if (!c.ok) std::cout << ": expected " << c.expected << ", got " << c.actual;
      std::cout << "\n";
    }
  }
  return r.pass() ? 0 : 1;
}

int cmd_catalog_export(const Options& o) {
  Json j;
  try {
    j = catalog_export(o.entry, parse_params(o.params));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (!o.part.empty()) {
    if (!j.contains(o.part)) throw InputError("entry " + o.entry + " has no " + o.part + " to export");
    j = j[o.part];
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integrals, Knop characters and canonical modules of finite group schemes"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sc) {
    sc->add_option("--field", o.field, "Q or Fp:<p>; overrides the input document");
    sc->add_option("--max-degree", o.max_degree, "degree window D")->check(CLI::NonNegativeNumber);
    sc->add_option("--output", o.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    sc->add_option("--jobs", o.jobs, "worker threads (default: KNOPF_JOBS, else 1)")->check(CLI::PositiveNumber);
  };
  auto module_opts = [&](CLI::App* sc) {
    common(sc);
    sc->add_option("--scheme", o.scheme, "group scheme JSON");
    sc->add_option("--module", o.module, "comodule JSON")->required();
    sc->add_flag("--assert-small", o.assert_small, "assume the action is small");
  };

  std::map<CLI::App*, int (*)(const Options&)> handlers;
  auto hopf_cmd = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    CLI::App* sc = app.add_subcommand(name, help);
    common(sc);
    sc->add_option("input", o.input, "Hopf algebra JSON")->required()->check(CLI::ExistingFile);
    handlers[sc] = fn;
    return sc;
  };

  CLI::App* verify = app.add_subcommand("verify", "check Hopf algebra (or, with --module, comodule) axioms");
  common(verify);
  verify->add_option("input", o.input, "Hopf algebra JSON")->check(CLI::ExistingFile);
  verify->add_option("--module", o.module, "comodule JSON to check instead")->check(CLI::ExistingFile);
  verify->add_option("--scheme", o.scheme, "group scheme JSON for --module")->check(CLI::ExistingFile);
  handlers[verify] = cmd_verify;

  hopf_cmd("integrals", "left and right integrals", cmd_integrals);
  hopf_cmd("unimodular", "whether left and right integrals coincide", cmd_unimodular);
  hopf_cmd("symmetric", "search for symmetric and Frobenius forms", cmd_symmetric);

  CLI::App* knop = app.add_subcommand("knop", "Knop character of a group scheme by two routes");
  common(knop);
  knop->add_option("input", o.input, "group scheme JSON")->check(CLI::ExistingFile);
  knop->add_option("--scheme", o.scheme, "group scheme JSON")->check(CLI::ExistingFile);
  handlers[knop] = cmd_knop;

  for (auto [name, help, fn] : std::vector<std::tuple<const char*, const char*, int (*)(const Options&)>>{
           {"invariants", "graded invariants up to the window", cmd_invariants},
           {"molien", "Molien series of a constant group over Q", cmd_molien},
           {"classify", "canonical module and the seven conditions", cmd_classify},
           {"gjs", "a(A) <= -n within the window", cmd_gjs},
           {"trace", "trace map checks", cmd_trace}}) {
    CLI::App* sc = app.add_subcommand(name, help);
    module_opts(sc);
    handlers[sc] = fn;
  }

  CLI::App* catalog = app.add_subcommand("catalog", "named examples with expected outcomes");
  catalog->require_subcommand(1);
  CLI::App* clist = catalog->add_subcommand("list", "list entries and default parameters");
  clist->add_option("--output", o.output, "text or json")->check(CLI::IsMember({"text", "json"}));
  handlers[clist] = cmd_catalog_list;
  CLI::App* crun = catalog->add_subcommand("run", "run an entry and compare with its expectations");
  crun->add_option("name", o.entry, "entry name")->required();
  crun->add_option("--param", o.params, "key=value, repeatable");
  crun->add_option("--output", o.output, "text or json")->check(CLI::IsMember({"text", "json"}));
  crun->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  handlers[crun] = cmd_catalog_run;
  CLI::App* cexp = catalog->add_subcommand("export", "print an entry's inputs as JSON");
  cexp->add_option("name", o.entry, "entry name")->required();
  cexp->add_option("--param", o.params, "key=value, repeatable");
  cexp->add_option("--part", o.part, "hopf, scheme or module")->check(CLI::IsMember({"hopf", "scheme", "module"}));
  handlers[cexp] = cmd_catalog_export;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    for (const auto& [sc, fn] : handlers)
      if (sc->parsed()) {
        if (sc == verify && o.input.empty() && o.module.empty()) throw InputError("verify needs an input file or --module");
        if (sc == knop && o.input.empty() && o.scheme.empty()) throw InputError("knop needs a scheme file");
        return fn(o);
      }
    return 2;
  } catch (const CheckFailure& e) {
    emit(o, e.report);
    std::cerr << "knopf: " << e.what() << "\n";
    return 1;
  } catch (const InconsistencyError& e) {
    std::cerr << "knopf: inconsistent input: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "knopf: " << e.what() << "\n";
    return 2;
  } catch (const HypothesisError& e) {
    std::cerr << "knopf: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "knopf: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "knopf: error: " << e.what() << "\n";
    return 1;
  }
}
