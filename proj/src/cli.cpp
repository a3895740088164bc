#include "apl/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"

#include "apl/catalog.hpp"

namespace apl::cli {

namespace {

using io::Document;
using io::FieldMode;

const std::map<std::string, std::string>& aliases() {
  static const std::map<std::string, std::string> table = {
      {"sl2", "SL2_LIE"},
      {"sl2-apl", "SL2_APL"},
      {"nonabelian2", "DIM2_NONABELIAN_LIE"},
      {"frobenius2", "DIM2_ASSOC_FROB"},
  };
  return table;
}

std::string unalias(const std::string& ref) {
  auto it = aliases().find(ref);
  return it == aliases().end() ? ref : it->second;
}

std::pair<std::string, std::string> split_key(const std::string& ref) {
  auto h = ref.find('#');
  if (h == std::string::npos) return {unalias(ref), ""};
  return {unalias(ref.substr(0, h)), ref.substr(h + 1)};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string strip_brackets(std::string s) {
  if (!s.empty() && s.front() == '[') s.erase(s.begin());
  if (!s.empty() && s.back() == ']') s.pop_back();
  return s;
}

CatalogEntry lookup(const std::string& base) {
  try {
    return catalog(base);
  } catch (const CatalogError& e) {
    throw UsageError(std::string("cannot resolve '") + base + "': " + e.what());
  }
}

using Produced = std::variant<std::monostate, Algebra<Scalar>, TwoOpAlgebra<Scalar>, BilinearForm<Scalar>,
                              LinearMap<Scalar>, Vector<Scalar>, Representation<Scalar>>;

struct HandlerOut {
  Json result = Json::object();
  bool pass = true;
  Produced produced;
};

// Reads objects for one command: workspace names first, then catalog references.
template <class S>
class Resolver {
 public:
  Resolver(const Document& ws, const FieldMode& field) : ws_(ws), field_(field) {}

  S scalar(const std::string& text) const {
    std::vector<std::string> warn;
    return field_cast<S>(io::parse_field_scalar(text, field_, {}, warn, "argument"));
  }

  Algebra<S> algebra(const std::string& ref) const {
    auto [base, key] = split_key(ref);
    if (auto it = ws_.algebras.find(base); it != ws_.algebras.end()) {
      if (!key.empty()) throw UsageError("algebra '" + base + "' has no component '" + key + "'");
      return cast(it->second);
    }
    if (auto it = ws_.two_ops.find(base); it != ws_.two_ops.end()) return component(it->second, key, ref);
    CatalogEntry e = lookup(base);
    if (e.two && (e.algebra == std::nullopt || !key.empty())) return component(*e.two, key, ref);
    if (!e.algebra) throw UsageError("'" + ref + "' carries no algebra");
    if (!key.empty()) throw UsageError("'" + base + "' has no component '" + key + "'");
    return cast(*e.algebra);
  }

  TwoOpAlgebra<S> two(const std::string& ref) const {
    auto [base, key] = split_key(ref);
    if (!key.empty()) throw UsageError("two-operation reference takes no component: '" + ref + "'");
    if (auto it = ws_.two_ops.find(base); it != ws_.two_ops.end()) return cast(it->second);
    CatalogEntry e = lookup(base);
    if (!e.two) throw UsageError("'" + ref + "' is not a two-operation algebra");
    return cast(*e.two);
  }

  BilinearForm<S> form(const std::string& ref, int dim) const {
    if (ref == "identity") return BilinearForm<S>(identity_matrix<S>(dim));
    if (!ref.empty() && ref.front() == '[') return BilinearForm<S>(inline_matrix(ref));
    auto [base, key] = split_key(ref);
    if (auto it = ws_.forms.find(base); it != ws_.forms.end()) return BilinearForm<S>(cast(it->second.matrix));
    CatalogEntry e = lookup(base);
    if ((key.empty() || key == "form") && e.form) return BilinearForm<S>(cast(e.form->matrix));
    throw UsageError("'" + ref + "' carries no bilinear form");
  }

  LinearMap<S> map(const std::string& ref, int dim) const {
    if (ref == "identity") return LinearMap<S>(identity_matrix<S>(dim), "id");
    if (ref == "zero") return LinearMap<S>(zero_matrix<S>(dim, dim), "0");
    if (!ref.empty() && ref.front() == '[') return LinearMap<S>(inline_matrix(ref));
    auto [base, key] = split_key(ref);
    if (auto it = ws_.maps.find(base); it != ws_.maps.end()) return LinearMap<S>(cast(it->second.matrix), it->second.role);
    CatalogEntry e = lookup(base);
    if (key.empty() && e.maps.size() == 1) key = e.maps.begin()->first;
    auto it = e.maps.find(key);
    if (it == e.maps.end()) throw UsageError("'" + ref + "' names no linear map");
    return LinearMap<S>(cast(it->second.matrix), it->second.role);
  }

  Vector<S> vector(const std::string& ref, int dim) const {
    if (auto it = ws_.vectors.find(ref); it != ws_.vectors.end()) return cast(Matrix<Scalar>(it->second)).col(0);
    if (ref.size() >= 2 && ref[0] == 'e' && ref.find_first_not_of("0123456789", 1) == std::string::npos) {
      const int i = std::stoi(ref.substr(1));
      if (dim <= 0 || i < 1 || i > dim) throw UsageError("basis vector '" + ref + "' out of range");
      return unit_vector<S>(dim, i - 1);
    }
    auto [base, key] = split_key(ref);
    if (key == "s") {
      CatalogEntry e = lookup(base);
      if (!e.vector) throw UsageError("'" + base + "' carries no vector");
      return cast(Matrix<Scalar>(*e.vector)).col(0);
    }
    auto parts = split(strip_brackets(ref), ',');
    if (parts.empty()) throw UsageError("empty vector '" + ref + "'");
    Vector<S> v(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) v(i) = scalar(parts[i]);
    return v;
  }

  // ad:REF, coad:REF, negleft:REF, dual-negleft:REF, trivial:m; bare forms apply to `lie`.
  Representation<S> rep(const std::string& ref, const Algebra<S>* lie) const {
    if (auto it = ws_.representations.find(ref); it != ws_.representations.end()) {
      std::vector<Matrix<S>> mats;
      for (const auto& m : it->second.mats) mats.push_back(cast(m));
      return Representation<S>(it->second.carrier_dim, std::move(mats));
    }
    auto colon = ref.find(':');
    const std::string kind = ref.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : ref.substr(colon + 1);
    if (kind == "trivial") {
      if (!lie) throw UsageError("trivial representation needs the acting algebra");
      return trivial_representation<S>(lie->dim(), arg.empty() ? 1 : std::stoi(arg));
    }
    Algebra<S> a = arg.empty() ? (lie ? *lie : throw UsageError("representation '" + ref + "' needs an algebra"))
                               : algebra(arg);
    if (kind == "ad") return adjoint_representation(a);
    if (kind == "coad") return dual_representation(adjoint_representation(a));
    if (kind == "negleft") return negative_left_rep(a);
    if (kind == "dual-negleft") return dual_representation(negative_left_rep(a));
    throw UsageError("unknown representation '" + ref + "'");
  }

  Matrix<S> inline_matrix(const std::string& text) const {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw UsageError("inline matrix: " + std::string(e.what()));
    }
    if (j.is_array())
      for (auto& row : j)
        if (row.is_array())
          for (auto& x : row)
            if (x.is_number()) x = x.dump();
    std::vector<std::string> warn;
    return cast(io::matrix_from_json(j, field_, {}, warn, "inline matrix"));
  }

  const FieldMode& field() const { return field_; }

 private:
  Algebra<S> component(const TwoOpAlgebra<Scalar>& t, const std::string& key, const std::string& ref) const {
    if (key == "dot") return cast(t.dot());
    if (key == "second" || key == to_string(t.second().role())) return cast(t.second());
    throw UsageError("'" + ref + "' is a two-operation algebra; select #dot or #second");
  }

  static Algebra<S> cast(const Algebra<Scalar>& a) { return guarded([&] { return cast_algebra<S>(a); }); }
  static Matrix<S> cast(const Matrix<Scalar>& m) { return guarded([&] { return cast_matrix<S>(m); }); }
  static TwoOpAlgebra<S> cast(const TwoOpAlgebra<Scalar>& t) {
    return TwoOpAlgebra<S>(cast(t.dot()), cast(t.second()));
  }

  template <class F>
  static auto guarded(F f) {
    try {
      return f();
    } catch (const std::domain_error& e) {
      throw UsageError(std::string("object has no image in the chosen field: ") + e.what());
    }
  }

  const Document& ws_;
  FieldMode field_;
};

template <class S>
Algebra<Scalar> to_scalar(const Algebra<S>& a) {
  return cast_algebra<Scalar>(a);
}
template <class S>
Matrix<Scalar> to_scalar(const Matrix<S>& m) {
  return cast_matrix<Scalar>(m);
}

std::string opt(const Request& r, const std::string& key, const std::string& fallback) {
  auto it = r.options.find(key);
  return it == r.options.end() ? fallback : it->second;
}

std::string need(const Request& r, const std::string& key) {
  auto it = r.options.find(key);
  if (it == r.options.end()) throw UsageError("missing --" + key);
  return it->second;
}

bool flag(const Request& r, const std::string& key) { return r.flags.count(key) > 0; }

int int_opt(const Request& r, const std::string& key, int fallback) {
  auto it = r.options.find(key);
  if (it == r.options.end()) return fallback;
  try {
    std::size_t used = 0;
    int v = std::stoi(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("--" + key + " expects an integer, got '" + it->second + "'");
  }
}

template <class S>
Json check_entry(const std::string& name, const CheckReport<S>& r) {
  Json j;
  j["check"] = name;
  j.update(io::report_json(r));
  return j;
}

// Appends named checks to result["checks"] and folds them into pass.
template <class S>
void add_check(HandlerOut& out, const std::string& name, const CheckReport<S>& r) {
  out.result["checks"].push_back(check_entry(name, r));
  out.pass = out.pass && r.pass();
}

template <class S>
void add_identity_checks(HandlerOut& out, const Algebra<S>& a, std::initializer_list<IdentityId> ids) {
  for (auto id : ids) add_check(out, token(id), check_identity(a, id));
}

template <class S>
Json profile_json(const Algebra<S>& a) {
  auto prof = identity_profile(a);
  Json sat = Json::array(), fail = Json::array();
  for (auto id : all_identities()) (prof.count(id) ? sat : fail).push_back(token(id));
  return Json{{"satisfied", sat}, {"failed", fail}};
}

template <class S>
Json fingerprint_json(const Fingerprint<S>& fp) {
  Json j;
  j["is_commutative"] = fp.is_commutative;
  j["dim_product_span"] = fp.dim_product_span;
  j["dim_left_annihilator"] = fp.dim_left_annihilator;
  j["dim_right_annihilator"] = fp.dim_right_annihilator;
  j["subadjacent_abelian"] = fp.subadjacent_abelian;
  j["idempotents_computed"] = fp.idempotents_computed;
  j["idempotent_family"] = fp.idempotent_family;
  Json data = Json::array();
  for (const auto& d : fp.idempotent_data) {
    Json lp = Json::array(), rp = Json::array();
    for (const auto& c : d.left_charpoly) lp.push_back(c.str());
    for (const auto& c : d.right_charpoly) rp.push_back(c.str());
    data.push_back(Json{{"point", io::vector_json(d.point)}, {"left_charpoly", lp}, {"right_charpoly", rp}});
  }
  j["idempotent_data"] = data;
  return j;
}

std::vector<long> parse_window(const std::string& s) {
  std::vector<long> out;
  for (const auto& p : split(strip_brackets(s), ',')) {
    try {
      out.push_back(std::stol(p));
    } catch (const std::logic_error&) {
      throw UsageError("window entries must be integers, got '" + p + "'");
    }
  }
  return out;
}

// ---- field-independent handlers -------------------------------------------

Json entry_json(const CatalogEntry& e) {
  Json j;
  j["id"] = e.id;
  j["family"] = e.family;
  Json params = Json::object();
  for (const auto& [k, v] : e.params) params[k] = v.str();
  j["params"] = params;
  Document doc;
  if (e.algebra) {
    j["algebra"] = io::algebra_json(*e.algebra);
    doc.algebras.emplace(e.family, *e.algebra);
  }
  if (e.two) {
    j["two_op"] = io::two_json(*e.two);
    doc.two_ops.emplace(e.family, *e.two);
  }
  if (e.form) {
    j["form"] = io::form_json(*e.form);
    doc.forms.emplace(e.family + "#form", *e.form);
  }
  if (e.vector) {
    j["s"] = io::vector_json(*e.vector);
    doc.vectors.emplace(e.family + "#s", *e.vector);
  }
  Json maps = Json::object();
  for (const auto& [k, m] : e.maps) {
    maps[k] = io::map_json(m);
    doc.maps.emplace(e.family + "#" + k, m);
  }
  if (!e.maps.empty()) j["maps"] = maps;
  j["document"] = io::print_document(doc);
  return j;
}

HandlerOut classify_catalog(const Request& r) {
  HandlerOut out;
  auto it = r.options.find("id");
  if (it == r.options.end()) {
    out.result["families"] = catalog_families();
    Json al = Json::object();
    for (const auto& [k, v] : aliases()) al[k] = v;
    out.result["aliases"] = al;
    return out;
  }
  CatalogEntry e = lookup(unalias(it->second));
  out.result = entry_json(e);
  if (e.algebra) out.produced = *e.algebra;
  else if (e.two) out.produced = *e.two;
  return out;
}

HandlerOut classify_verify(const Request& r) {
  HandlerOut out;
  CatalogVerification v = verify_catalog_entry(lookup(unalias(need(r, "id"))));
  out.result["id"] = v.id;
  out.result["checks"] = Json::array();
  for (const auto& c : v.checks) {
    Json j = check_entry(c.name, c.report);
    j["expected"] = c.expected;
    j["ok"] = c.ok();
    out.result["checks"].push_back(j);
  }
  out.pass = v.pass();
  return out;
}

Json witness_json(const StoredWitness& w) {
  Json j;
  j["name"] = w.name;
  j["matrix"] = io::matrix_json(w.s);
  j.update(io::report_json(verify(w)));
  return j;
}

// ---- field-generic handlers ------------------------------------------------

template <class S>
HandlerOut handle_check(const Request& r, const Resolver<S>& R) {
  HandlerOut out;
  Algebra<S> a = R.algebra(need(r, "alg"));
  if (r.options.count("rep")) {
    auto rho = R.rep(r.options.at("rep"), &a);
    add_check(out, "representation", is_representation(a, rho));
    return out;
  }
  const std::string id = need(r, "identity");
  if (id == "all") {
    out.result = profile_json(a);
    out.pass = out.result["failed"].empty();
    return out;
  }
  const IdentityId iid = identity_from_token(id);
  auto rep = check_identity(a, iid);
  out.result["identity"] = token(iid);
  out.result.update(io::report_json(rep));
  out.pass = rep.pass();
  return out;
}

template <class S>
HandlerOut handle_cocycles(const Request& r, const Resolver<S>& R) {
  HandlerOut out;
  const std::string ref = r.options.count("lie") ? r.options.at("lie") : need(r, "alg");
  Algebra<S> a = R.algebra(ref);
  const int radius = int_opt(r, "radius", 3);
  auto auto_form = [&](const Algebra<S>& lie) {
    auto ms = nondegenerate_member(solve_form_space(lie, FormMode::cocycle, true), radius);
    if (!ms.member) throw PreconditionFailed("no nondegenerate symmetric cocycle found within radius " + std::to_string(radius));
    return BilinearForm<S>(*ms.member);
  };
  if (r.sub == "solve" || r.sub == "nondegenerate") {
    const FormMode mode = form_mode_from_token(opt(r, "mode", "cocycle"));
    const bool sym = flag(r, "symmetric");
    auto space = solve_form_space(a, mode, sym);
    out.result["mode"] = token(mode);
    out.result["symmetric"] = sym;
    out.result["dimension"] = space.dimension();
    if (r.sub == "solve") {
      Json basis = Json::array();
      for (int i = 0; i < space.dimension(); ++i) basis.push_back(io::matrix_json(space.form(i).matrix));
      out.result["basis"] = basis;
      return out;
    }
    auto ms = nondegenerate_member(space, radius);
    out.result["radius"] = ms.radius;
    out.result["found"] = ms.member.has_value();
    if (ms.member) {
      out.result["form"] = io::form_json(BilinearForm<S>(*ms.member));
      out.result["coefficients"] = ms.coefficients;
      out.produced = BilinearForm<Scalar>(to_scalar(*ms.member));
    }
    out.pass = ms.member.has_value();
    return out;
  }
  if (r.sub == "induce" || r.sub == "admissible-form") {
    const std::string fref = opt(r, "form", "auto");
    BilinearForm<S> b = fref == "auto" ? auto_form(a) : R.form(fref, a.dim());
    out.result["form"] = io::form_json(b);
    if (r.sub == "admissible-form") {
      add_check(out, "admissibility-form", check_admissibility_form(a, b));
      return out;
    }
    Algebra<S> prod = induce_compatible_product(a, b);
    out.result["algebra"] = io::algebra_json(prod);
    add_identity_checks(out, prod, {IdentityId::anti_pre_lie_1, IdentityId::anti_pre_lie_2});
    add_check(out, "commutator-equals-lie",
              verify_iso_witness(with_role(commutator_algebra(prod), a.role()), a, identity_matrix<S>(a.dim())));
    out.produced = to_scalar(prod);
    return out;
  }
  if (r.sub == "intertwiners") {
    auto ra = R.rep(need(r, "rep-a"), &a), rb = R.rep(need(r, "rep-b"), &a);
    auto space = solve_intertwiners(ra, rb);
    Json basis = Json::array();
    for (const auto& m : space.basis) basis.push_back(io::matrix_json(m));
    out.result["dimension"] = space.dimension();
    out.result["basis"] = basis;
    if (ra.carrier_dim == rb.carrier_dim) {
      auto ms = nondegenerate_member(space, radius);
      out.result["invertible_found"] = ms.member.has_value();
      if (ms.member) out.result["invertible"] = io::matrix_json(*ms.member);
    }
    return out;
  }
  throw UsageError("unknown cocycles subcommand '" + r.sub + "'");
}

template <int P>
HandlerOut enumerate_ff(const Request& r, const Document& ws, std::ostream* stream) {
  using F = Zp<P>;
  FieldMode fm;
  fm.kind = FieldMode::Kind::mod;
  fm.p = P;
  Resolver<F> R(ws, fm);
  HandlerOut out;
  out.result["p"] = P;
  Json records = Json::array();
  auto emit = [&](Json rec) {
    if (stream)
      *stream << rec.dump() << '\n';
    else
      records.push_back(std::move(rec));
  };
  if (r.options.count("identities")) {
    std::vector<IdentityId> ids;
    for (const auto& t : split(r.options.at("identities"), ',')) ids.push_back(identity_from_token(t));
    const bool orbits = flag(r, "orbits");
    auto en = ff_enumerate_tensors<P>(
        2, [&](const Algebra<F>& a) { return satisfies_all(a, ids); }, orbits);
    for (std::size_t i = 0; i < en.solutions.size(); ++i) {
      Json rec = Json::object();
      rec["code"] = en.codes[i];
      rec["tensor"] = io::tensor_json(en.solutions[i]);
      if (orbits) rec["orbit"] = en.orbit_of[i];
      emit(std::move(rec));
    }
    Json idj = Json::array();
    for (auto id : ids) idj.push_back(token(id));
    out.result["identities"] = idj;
    out.result["count"] = en.solutions.size();
    if (en.orbit_count) {
      out.result["orbit_count"] = *en.orbit_count;
      out.result["orbit_representatives"] = en.orbit_representatives;
    }
  } else {
    const OperatorLevel level = operator_level_from_token(need(r, "level"));
    Algebra<F> lie = R.algebra(opt(r, "lie", "DIM2_NONABELIAN_LIE"));
    auto rho = R.rep(opt(r, "rep", "ad"), &lie);
    const bool endo = level == OperatorLevel::cons2;
    const int rows = level == OperatorLevel::anti_derivation ? rho.carrier_dim : lie.dim();
    const int cols = endo || level == OperatorLevel::anti_derivation ? lie.dim() : rho.carrier_dim;
    auto en = ff_enumerate_matrices<P>(rows, cols, [&](const Matrix<F>& m) {
      return check_operator(LinearMap<F>(m), lie, rho, level).pass();
    });
    for (std::size_t i = 0; i < en.solutions.size(); ++i)
      emit(Json{{"code", en.codes[i]}, {"matrix", io::matrix_json(en.solutions[i])}});
    out.result["level"] = token(level);
    out.result["count"] = en.solutions.size();
  }
  if (!stream) out.result["records"] = records;
  return out;
}

template <class S>
HandlerOut handle_operator(const Request& r, const Resolver<S>& R, const Document& ws, std::ostream* stream) {
  if (r.sub == "enumerate-ff") {
    const int p = int_opt(r, "p", 0);
    try {
      switch (p) {
        case 2: return enumerate_ff<2>(r, ws, stream);
        case 3: return enumerate_ff<3>(r, ws, stream);
        case 5: return enumerate_ff<5>(r, ws, stream);
        case 7: return enumerate_ff<7>(r, ws, stream);
        default: break;
      }
    } catch (const Unsupported& e) {
      throw UsageError(e.what());
    }
    throw UsageError("--p must be one of 2, 3, 5, 7");
  }
  HandlerOut out;
  Algebra<S> lie = R.algebra(need(r, "lie"));
  auto rho = R.rep(opt(r, "rep", "ad"), &lie);
  LinearMap<S> t = R.map(need(r, "map"), lie.dim());
  if (r.sub == "check") {
    const OperatorLevel level = operator_level_from_token(need(r, "level"));
    add_check(out, token(level), check_operator(t, lie, rho, level));
    return out;
  }
  if (r.sub == "induce") {
    Algebra<S> a = induced_algebra(t, rho);
    out.result["algebra"] = io::algebra_json(a);
    out.result["profile"] = profile_json(a);
    out.produced = to_scalar(a);
    return out;
  }
  throw UsageError("unknown operator subcommand '" + r.sub + "'");
}

template <class S>
HandlerOut handle_construct(const Request& r, const Resolver<S>& R) {
  HandlerOut out;
  using I = IdentityId;
  auto finish = [&](const Algebra<S>& a) {
    out.result["algebra"] = io::algebra_json(a);
    out.produced = to_scalar(a);
  };
  if (r.sub == "linear-functions") {
    const int dim = int_opt(r, "dim", 0);
    Vector<S> f = R.vector(need(r, "f"), dim), g = R.vector(need(r, "g"), dim);
    Algebra<S> a = from_linear_functions(f, g, dim > 0 ? dim : static_cast<int>(f.size()));
    finish(a);
    const bool cond = linear_functions_condition(f, g);
    const bool apl = satisfies_all(a, {I::anti_pre_lie_1, I::anti_pre_lie_2});
    out.result["condition"] = cond;
    out.result["anti_pre_lie"] = apl;
    out.pass = cond == apl;
  } else if (r.sub == "symmetric-form") {
    BilinearForm<S> b = R.form(need(r, "form"), int_opt(r, "dim", 0));
    Vector<S> s = R.vector(need(r, "s"), b.dim());
    Algebra<S> a = from_symmetric_form(b, s);
    finish(a);
    add_identity_checks(out, a, {I::anti_pre_lie_1, I::anti_pre_lie_2});
    add_check(out, "form-apl-invariant", check_form(a, b, FormMode::apl_invariant));
  } else if (r.sub == "q-transform") {
    Algebra<S> src = R.algebra(need(r, "alg"));
    if (flag(r, "inverse-two")) {
      finish(with_role(exact_inverse_two_transform(src), Role::star));
    } else {
      finish(q_transform(src, R.scalar(need(r, "q"))));
    }
  } else if (r.sub == "pair") {
    Algebra<S> assoc = R.algebra(need(r, "assoc"));
    LinearMap<S> p = R.map(need(r, "p"), assoc.dim()), q = R.map(opt(r, "q", need(r, "p")), assoc.dim());
    const PairMode mode = pair_mode_from_token(need(r, "mode"));
    Algebra<S> a = pair_based_product(assoc, p, q, mode);
    finish(a);
    if (mode == PairMode::novikov) add_identity_checks(out, a, {I::pre_lie, I::novikov_right});
    if (mode == PairMode::admissible_novikov)
      add_identity_checks(out, a, {I::anti_pre_lie_1, I::anti_pre_lie_2, I::admissible_novikov});
    if (mode == PairMode::lie) {
      add_identity_checks(out, a, {I::jacobi});
      Algebra<S> adm = pair_based_product(assoc, p, q, PairMode::admissible_novikov);
      add_check(out, "equals-commutator-of-admissible",
                verify_iso_witness(with_role(commutator_algebra(adm), Role::bracket), a, identity_matrix<S>(a.dim())));
    }
  } else if (r.sub == "semidirect") {
    if (r.options.count("apl")) {
      Algebra<S> src = R.algebra(r.options.at("apl"));
      Algebra<S> a = dual_semidirect(src);
      finish(a);
      add_identity_checks(out, a, {I::jacobi});
      add_check(out, "pairing-cocycle", check_form(a, canonical_pairing_form<S>(src.dim()), FormMode::cocycle));
    } else {
      Algebra<S> lie = R.algebra(need(r, "lie"));
      Algebra<S> a = semidirect_lie(lie, R.rep(need(r, "rep"), &lie));
      finish(a);
      add_identity_checks(out, a, {I::jacobi});
    }
  } else if (r.sub == "tensor-lie") {
    Algebra<S> assoc = R.algebra(need(r, "assoc"));
    LinearMap<S> p = R.map(need(r, "p"), assoc.dim()), q = R.map(opt(r, "q", need(r, "p")), assoc.dim());
    Algebra<S> a = tensor_lie(assoc, p, q, R.algebra(need(r, "v")), tensor_mode_from_token(need(r, "mode")));
    finish(a);
    add_identity_checks(out, a, {I::jacobi});
  } else {
    throw UsageError("unknown construct subcommand '" + r.sub + "'");
  }
  return out;
}

template <class S>
HandlerOut handle_poisson(const Request& r, const Resolver<S>& R) {
  HandlerOut out;
  using P = PoissonIdentityId;
  auto finish = [&](const TwoOpAlgebra<S>& t) {
    out.result["two_op"] = io::two_json(t);
    out.produced = TwoOpAlgebra<Scalar>(to_scalar(t.dot()), to_scalar(t.second()));
  };
  auto aplp = [&](const TwoOpAlgebra<S>& t) {
    add_check(out, "aplp-1", check_poisson_identity(t, P::aplp_1));
    add_check(out, "aplp-2", check_poisson_identity(t, P::aplp_2));
  };
  if (r.sub == "tensor") {
    TwoOpAlgebra<S> a = R.two(need(r, "a")), b = R.two(need(r, "b"));
    TwoOpAlgebra<S> t = tensor_poisson(a, b);
    finish(t);
    aplp(t);
    const bool both = check_identity(a.second(), IdentityId::admissible_novikov).pass() &&
                      check_identity(b.second(), IdentityId::admissible_novikov).pass();
    auto an = check_identity(t.second(), IdentityId::admissible_novikov);
    out.result["inputs_admissible_novikov"] = both;
    out.result["checks"].push_back(check_entry("admissible-novikov", an));
    if (both) out.pass = out.pass && an.pass();
    return out;
  }
  TwoOpAlgebra<S> two = R.two(need(r, "two"));
  if (r.sub == "check") {
    const std::string id = opt(r, "identity", "aplp");
    if (id == "aplp") {
      aplp(two);
    } else if (id == "np") {
      add_check(out, "np-1", check_poisson_identity(two, P::np_1));
      add_check(out, "np-2", check_poisson_identity(two, P::np_2));
    } else if (id == "derived") {
      add_check(out, "derived", derived_identities_hold(two));
    } else if (id == "all") {
      for (auto pid : all_poisson_identities())
        if (expected_second_role(pid) == two.second().role()) add_check(out, token(pid), check_poisson_identity(two, pid));
    } else {
      const P pid = poisson_identity_from_token(id);
      add_check(out, token(pid), check_poisson_identity(two, pid));
    }
  } else if (r.sub == "transform") {
    finish(poisson_two_transform(two, poisson_direction_from_token(need(r, "direction"))));
  } else if (r.sub == "sub-adjacent") {
    TwoOpAlgebra<S> t = sub_adjacent_transposed(two);
    finish(t);
    add_check(out, "transposed", check_poisson_identity(t, P::transposed));
    add_check(out, "jacobi", check_identity(t.second(), IdentityId::jacobi));
  } else if (r.sub == "induce") {
    TwoOpAlgebra<S> t = induce_poisson_from_form(two, R.form(need(r, "form"), two.dim()));
    finish(t);
    aplp(t);
  } else {
    throw UsageError("unknown poisson subcommand '" + r.sub + "'");
  }
  return out;
}

template <class S>
HandlerOut handle_classify(const Request& r, const Resolver<S>& R) {
  if (r.sub == "catalog") return classify_catalog(r);
  if (r.sub == "verify") return classify_verify(r);
  HandlerOut out;
  if (r.sub == "fingerprint" || r.sub == "idempotents") {
    Algebra<S> a = R.algebra(need(r, "alg"));
    if (r.sub == "idempotents") {
      auto id = idempotents(a);
      Json pts = Json::array();
      for (const auto& p : id.points) pts.push_back(io::vector_json(p));
      out.result["points"] = pts;
      out.result["infinite_family"] = id.infinite;
      return out;
    }
    const bool with = !flag(r, "no-idempotents") && (characteristic_of<S> != 0 || a.dim() <= 2);
    out.result = fingerprint_json(fingerprint(a, with));
    return out;
  }
  if (r.sub == "witness") {
    if (r.options.count("source")) {
      Algebra<S> a = R.algebra(r.options.at("source")), b = R.algebra(need(r, "target"));
      Matrix<S> s = R.map(need(r, "matrix"), a.dim()).matrix;
      out.result["matrix"] = io::matrix_json(s);
      add_check(out, "isomorphism", verify_iso_witness(a, b, s));
      return out;
    }
    if constexpr (characteristic_of<S> != 0) {
      throw UsageError("stored witnesses live over Q and its quadratic extensions");
    } else {
      std::vector<StoredWitness> ws;
      if (r.options.count("name")) {
        auto w = find_witness(r.options.at("name"));
        if (!w) throw UsageError("no stored witness named '" + r.options.at("name") + "'");
        ws.push_back(*w);
      } else {
        ws = stored_witnesses();
      }
      out.result["witnesses"] = Json::array();
      for (const auto& w : ws) {
        Json j = witness_json(w);
        out.pass = out.pass && j["pass"].get<bool>();
        out.result["witnesses"].push_back(j);
      }
      return out;
    }
  }
  throw UsageError("unknown classify subcommand '" + r.sub + "'");
}

template <class S>
HandlerOut dispatch(const Request& r, const Document& ws, const FieldMode& field, std::ostream* stream) {
  Resolver<S> R(ws, field);
  if (r.command == "check") return handle_check(r, R);
  if (r.command == "profile") {
    HandlerOut out;
    out.result = profile_json(R.algebra(need(r, "alg")));
    return out;
  }
  if (r.command == "cocycles") return handle_cocycles(r, R);
  if (r.command == "operator") return handle_operator(r, R, ws, stream);
  if (r.command == "construct") return handle_construct(r, R);
  if (r.command == "poisson") return handle_poisson(r, R);
  if (r.command == "classify") return handle_classify(r, R);
  if (r.command == "affinize-check") {
    HandlerOut out;
    Algebra<S> a = R.algebra(need(r, "alg"));
    const AffinizationMode mode = affinization_mode_from_token(need(r, "mode"));
    const auto window = parse_window(opt(r, "window", "0,1,2"));
    out.result["window"] = window;
    add_check(out, "affinization-jacobi", affinization_check(a, mode, window));
    return out;
  }
  throw UsageError("unknown command '" + r.command + "'");
}

const CommandSpec* find_spec(const std::string& command, const std::string& sub) {
  for (const auto& s : command_table())
    if (s.command == command && s.sub == sub) return &s;
  return nullptr;
}

void validate(const Request& r) {
  const CommandSpec* spec = find_spec(r.command, r.sub);
  if (!spec) throw UsageError("unknown command '" + r.command + (r.sub.empty() ? "" : " " + r.sub) + "'");
  for (const auto& [k, v] : r.options) {
    (void)v;
    if (std::find(spec->options.begin(), spec->options.end(), k) == spec->options.end())
      throw UsageError("'" + r.command + " " + r.sub + "' has no option --" + k);
  }
  for (const auto& f : r.flags)
    if (std::find(spec->flags.begin(), spec->flags.end(), f) == spec->flags.end())
      throw UsageError("'" + r.command + " " + r.sub + "' has no flag --" + f);
}

void store(Document& ws, const std::string& name, Produced p) {
  if (name.empty()) return;
  if (std::holds_alternative<std::monostate>(p)) throw UsageError("step produces no object to store as '" + name + "'");
  if (ws.has_object(name)) throw UsageError("workspace already has an object named '" + name + "'");
  std::visit(
      [&](auto&& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Algebra<Scalar>>) ws.algebras.emplace(name, v);
        else if constexpr (std::is_same_v<V, TwoOpAlgebra<Scalar>>) ws.two_ops.emplace(name, v);
        else if constexpr (std::is_same_v<V, BilinearForm<Scalar>>) ws.forms.emplace(name, v);
        else if constexpr (std::is_same_v<V, LinearMap<Scalar>>) ws.maps.emplace(name, v);
        else if constexpr (std::is_same_v<V, Vector<Scalar>>) ws.vectors.emplace(name, v);
        else if constexpr (std::is_same_v<V, Representation<Scalar>>) ws.representations.emplace(name, v);
      },
      p);
}

Json request_json(const Request& r) {
  Json j;
  j["command"] = r.command;
  if (!r.sub.empty()) j["sub"] = r.sub;
  Json o = Json::object();
  for (const auto& [k, v] : r.options) o[k] = v;
  for (const auto& f : r.flags) o[f] = true;
  j["args"] = o;
  return j;
}

}  // namespace

const std::vector<CommandSpec>& command_table() {
  static const std::vector<CommandSpec> table = {
      {"check", "", {"alg", "identity", "rep"}, {}, "check one identity (or 'all'), or the representation law with --rep"},
      {"profile", "", {"alg"}, {}, "list the identities an algebra satisfies"},
      {"cocycles", "solve", {"alg", "lie", "mode"}, {"symmetric"}, "solve for cocycle or invariant forms"},
      {"cocycles", "nondegenerate", {"alg", "lie", "mode", "radius"}, {"symmetric"}, "find a nondegenerate member"},
      {"cocycles", "induce", {"lie", "alg", "form", "radius"}, {}, "compatible product from a nondegenerate cocycle"},
      {"cocycles", "admissible-form", {"lie", "alg", "form", "radius"}, {}, "quadrilinear admissibility condition"},
      {"cocycles", "intertwiners", {"alg", "lie", "rep-a", "rep-b", "radius"}, {}, "solve phi rhoA(x) = rhoB(x) phi"},
      {"operator", "check", {"lie", "map", "rep", "level"}, {}, "check an operator level"},
      {"operator", "induce", {"lie", "map", "rep"}, {}, "u o v = -rho(T u) v"},
      {"operator", "enumerate-ff", {"p", "identities", "level", "lie", "rep"}, {"orbits"},
       "exhaustive search over F_p in dimension 2 (JSON lines)"},
      {"construct", "linear-functions", {"f", "g", "dim"}, {}, "x o y = f(y) x + g(x) y"},
      {"construct", "symmetric-form", {"form", "s", "dim"}, {}, "x o y = B(x,y) s - B(x,s) y"},
      {"construct", "q-transform", {"alg", "q"}, {"inverse-two"}, "x o' y = x o y + q y o x"},
      {"construct", "pair", {"assoc", "p", "q", "mode"}, {}, "products from an admissible pair"},
      {"construct", "semidirect", {"lie", "rep", "apl"}, {}, "semidirect product Lie algebra"},
      {"construct", "tensor-lie", {"assoc", "p", "q", "v", "mode"}, {}, "Lie bracket on A (x) V"},
      {"poisson", "check", {"two", "identity"}, {}, "two-operation identities (aplp, np, derived, all, or one id)"},
      {"poisson", "transform", {"two", "direction"}, {}, "(-2) / 2 transform of the second operation"},
      {"poisson", "sub-adjacent", {"two"}, {}, "replace o by its commutator"},
      {"poisson", "induce", {"two", "form"}, {}, "anti-pre-Lie Poisson structure from a form"},
      {"poisson", "tensor", {"a", "b"}, {}, "tensor product of two structures"},
      {"classify", "catalog", {"id"}, {}, "export a catalog entry, or list families"},
      {"classify", "verify", {"id"}, {}, "run the declared checks of a catalog entry"},
      {"classify", "fingerprint", {"alg"}, {"no-idempotents"}, "basis-invariant summary"},
      {"classify", "idempotents", {"alg"}, {}, "all x with x o x = x"},
      {"classify", "witness", {"name", "source", "target", "matrix"}, {}, "verify isomorphism witnesses"},
      {"affinize-check", "", {"alg", "mode", "window"}, {}, "grid certificate for the graded bracket"},
  };
  return table;
}

Outcome execute(const Request& req, Document& ws, std::ostream* stream) {
  Outcome o;
  o.report["request"] = request_json(req);
  o.report["field"] = ws.field.str();
  try {
    validate(req);
    HandlerOut h;
    switch (ws.field.kind) {
      case FieldMode::Kind::rational:
      case FieldMode::Kind::quadratic: h = dispatch<Scalar>(req, ws, ws.field, stream); break;
      case FieldMode::Kind::mod:
        switch (ws.field.p) {
          case 2: h = dispatch<Zp<2>>(req, ws, ws.field, stream); break;
          case 3: h = dispatch<Zp<3>>(req, ws, ws.field, stream); break;
          case 5: h = dispatch<Zp<5>>(req, ws, ws.field, stream); break;
          case 7: h = dispatch<Zp<7>>(req, ws, ws.field, stream); break;
          default: throw UsageError("commands run over F_p for p in {2, 3, 5, 7}");
        }
        break;
    }
    o.report["result"] = h.result;
    o.report["pass"] = h.pass;
    o.status = h.pass ? kPass : kCheckFailed;
    store(ws, req.store_as, std::move(h.produced));
  } catch (const UsageError& e) {
    o.report["error"] = Json{{"kind", "usage"}, {"message", e.what()}};
    o.status = kUsage;
  } catch (const UnknownId& e) {
    o.report["error"] = Json{{"kind", "usage"}, {"message", e.what()}};
    o.status = kUsage;
  } catch (const io::ValidationError& e) {
    o.report["error"] = Json{{"kind", "validation"}, {"message", e.what()}};
    o.status = kUsage;
  } catch (const CatalogError& e) {
    o.report["error"] = Json{{"kind", "usage"}, {"message", e.what()}};
    o.status = kUsage;
  } catch (const std::exception& e) {
    // Precondition failures, singular matrices, dimension mismatches.
    o.report["pass"] = false;
    o.report["result"] = Json{{"status", "precondition-failed"}, {"message", e.what()}};
    o.status = kCheckFailed;
  }
  if (o.status == kUsage) o.report["pass"] = false;
  return o;
}

Request request_from_step(const Json& step) {
  Request r;
  if (!step.is_object() || !step.contains("command") || !step["command"].is_string())
    throw UsageError("recipe step needs a string 'command'");
  auto words = split(step["command"].get<std::string>(), ' ');
  if (words.empty() || words.size() > 2) throw UsageError("recipe command must be 'command' or 'command sub'");
  r.command = words[0];
  if (words.size() == 2) r.sub = words[1];
  if (step.contains("sub")) {
    if (!r.sub.empty() || !step["sub"].is_string()) throw UsageError("recipe step has a conflicting 'sub'");
    r.sub = step["sub"].get<std::string>();
  }
  if (step.contains("as")) {
    if (!step["as"].is_string()) throw UsageError("recipe 'as' must be a string");
    r.store_as = step["as"].get<std::string>();
  }
  for (const auto& [k, v] : step.items())
    if (k != "command" && k != "sub" && k != "as" && k != "args") throw UsageError("unknown recipe step key '" + k + "'");
  if (step.contains("args")) {
    if (!step["args"].is_object()) throw UsageError("recipe 'args' must be an object");
    for (const auto& [k, v] : step["args"].items()) {
      if (v.is_boolean()) {
        if (v.get<bool>()) r.flags.insert(k);
      } else if (v.is_string()) {
        r.options[k] = v.get<std::string>();
      } else if (v.is_number_integer()) {
        r.options[k] = std::to_string(v.get<long>());
      } else {
        r.options[k] = v.dump();
      }
    }
  }
  return r;
}

Outcome run_recipe(Document& doc) {
  Outcome o;
  o.report["field"] = doc.field.str();
  if (!doc.warnings.empty()) o.report["warnings"] = doc.warnings;
  Json steps = Json::array();
  bool pass = true;
  int worst = kPass;
  for (std::size_t i = 0; i < doc.recipe.size(); ++i) {
    Outcome step;
    try {
      step = execute(request_from_step(doc.recipe[i]), doc);
    } catch (const UsageError& e) {
      step.report["error"] = Json{{"kind", "usage"}, {"message", e.what()}};
      step.report["pass"] = false;
      step.status = kUsage;
    }
    step.report["step"] = i;
    pass = pass && step.status == kPass;
    worst = std::max(worst, step.status);
    steps.push_back(step.report);
  }
  o.report["steps"] = steps;
  o.report["pass"] = pass;
  o.status = worst;
  return o;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_report(std::ostream& out, const Json& report, bool compact) {
  out << (compact ? report.dump() : report.dump(2)) << '\n';
}

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structure-constant workbench for anti-pre-Lie, Novikov and Poisson-type algebras"};
  app.require_subcommand(1);
  std::string doc_path, field_text;
  bool strict = false;
  app.add_option("--doc", doc_path, "JSON document with named objects");
  app.add_option("--field", field_text, "rational, quadratic:d or mod:p");
  app.add_flag("--strict", strict, "reject non-canonical scalar strings");

  const auto& table = command_table();
  std::vector<std::map<std::string, std::string>> values(table.size());
  std::vector<std::map<std::string, bool>> flag_values(table.size());
  std::vector<CLI::App*> apps(table.size());
  std::map<std::string, CLI::App*> parents;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& spec = table[i];
    CLI::App* parent = nullptr;
    if (spec.sub.empty()) {
      parent = app.add_subcommand(spec.command, spec.help);
      apps[i] = parent;
    } else {
      auto it = parents.find(spec.command);
      if (it == parents.end()) {
        it = parents.emplace(spec.command, app.add_subcommand(spec.command, spec.command + " subcommands")).first;
        it->second->require_subcommand(1);
      }
      apps[i] = it->second->add_subcommand(spec.sub, spec.help);
    }
    for (const auto& o : spec.options) apps[i]->add_option("--" + o, values[i][o]);
    for (const auto& f : spec.flags) apps[i]->add_flag("--" + f, flag_values[i][f]);
  }
  std::string recipe_path;
  CLI::App* run_app = app.add_subcommand("run", "execute the recipe of a document");
  run_app->add_option("file", recipe_path, "recipe document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    print_report(out, Json{{"pass", false}, {"error", Json{{"kind", "usage"}, {"message", e.what()}}}}, false);
    return kUsage;
  }

  try {
    io::ParseOptions popts{strict};
    if (run_app->parsed()) {
      Document doc = io::parse_document(read_file(recipe_path), popts);
      if (!field_text.empty() && !(io::field_mode_from_string(field_text) == doc.field))
        throw UsageError("--field conflicts with the document's field");
      const auto t0 = std::chrono::steady_clock::now();
      Outcome o = run_recipe(doc);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      err << "recipe: " << doc.recipe.size() << " steps in " << secs << " s\n";
      print_report(out, o.report, false);
      return o.status;
    }
    Document ws;
    if (!doc_path.empty()) ws = io::parse_document(read_file(doc_path), popts);
    if (!field_text.empty()) {
      FieldMode f = io::field_mode_from_string(field_text);
      if (!doc_path.empty() && !(f == ws.field)) throw UsageError("--field conflicts with the document's field");
      ws.field = f;
    }
    for (const auto& w : ws.warnings) err << "warning: " << w << '\n';
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (!apps[i]->parsed()) continue;
      Request r;
      r.command = table[i].command;
      r.sub = table[i].sub;
      for (const auto& o : table[i].options)
        if (apps[i]->get_option("--" + o)->count() > 0) r.options[o] = values[i][o];
      for (const auto& f : table[i].flags)
        if (flag_values[i][f]) r.flags.insert(f);
      const bool streaming = r.sub == "enumerate-ff";
      Outcome o = execute(r, ws, streaming ? &out : nullptr);
      if (o.status == kUsage && o.report.contains("error"))
        err << "error: " << o.report["error"]["message"].get<std::string>() << '\n';
      print_report(out, o.report, streaming);
      return o.status;
    }
    throw UsageError("no command given");
  } catch (const io::SyntaxError& e) {
    err << "error: " << e.what() << '\n';
    print_report(out,
                 Json{{"pass", false},
                      {"error", Json{{"kind", "syntax"}, {"message", e.what()}, {"line", e.line}, {"column", e.column}}}},
                 false);
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    print_report(out, Json{{"pass", false}, {"error", Json{{"kind", "usage"}, {"message", e.what()}}}}, false);
    return kUsage;
  }
}

}  // namespace apl::cli
