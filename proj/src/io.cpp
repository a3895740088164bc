#include "apl/io.hpp"

#include <algorithm>

namespace apl::io {

namespace {

bool is_small_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return p < 46341;
}

void expect(bool ok, const std::string& where, const std::string& what) {
  if (!ok) throw ValidationError(where + ": " + what);
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::vector<std::string> labels_from_json(const Json& j, int dim, const std::string& where) {
  if (!j.contains("labels")) return {};
  expect(j["labels"].is_array(), where, "labels must be an array of strings");
  std::vector<std::string> out;
  for (const auto& l : j["labels"]) {
    expect(l.is_string(), where, "labels must be an array of strings");
    out.push_back(l.get<std::string>());
  }
  expect(static_cast<int>(out.size()) == dim, where, "label count differs from dim");
  return out;
}

int dim_from_json(const Json& j, const std::string& where) {
  expect(j.is_object(), where, "expected an object");
  expect(j.contains("dim") && j["dim"].is_number_integer(), where, "missing integer 'dim'");
  const int n = j["dim"].get<int>();
  expect(n > 0, where, "dim must be positive");
  return n;
}

Algebra<Scalar> tensor_from_json(const Json& t, int n, Role role, std::vector<std::string> labels,
                                 const FieldMode& field, const ParseOptions& opts, std::vector<std::string>& warnings,
                                 const std::string& where) {
  expect(t.is_array() && static_cast<int>(t.size()) == n, where, "tensor must be a dim x dim x dim array");
  Algebra<Scalar> a(n, role, std::move(labels));
  for (int i = 0; i < n; ++i) {
    expect(t[i].is_array() && static_cast<int>(t[i].size()) == n, where, "tensor must be a dim x dim x dim array");
    for (int j = 0; j < n; ++j) {
      const Json& cell = t[i][j];
      expect(cell.is_array() && static_cast<int>(cell.size()) == n, where, "tensor must be a dim x dim x dim array");
      for (int k = 0; k < n; ++k) {
        const std::string at = where + ".tensor[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
                               std::to_string(k) + "]";
        expect(cell[k].is_string(), at, "scalars must be strings");
        a(i, j, k) = parse_field_scalar(cell[k].get<std::string>(), field, opts, warnings, at);
      }
    }
  }
  return a;
}

}  // namespace

Json FieldMode::to_json() const {
  switch (kind) {
    case Kind::rational: return "rational";
    case Kind::quadratic: return Json{{"quadratic", d}};
    case Kind::mod: return Json{{"mod", p}};
  }
  return "rational";
}

std::string FieldMode::str() const {
  switch (kind) {
    case Kind::rational: return "rational";
    case Kind::quadratic: return "quadratic:" + std::to_string(d);
    case Kind::mod: return "mod:" + std::to_string(p);
  }
  return "rational";
}

namespace {

FieldMode make_quadratic(long d) {
  mpz_class root;
  expect(d != 0, "field", "quadratic radicand must be nonzero");
  const long sf = squarefree_part(mpz_class(d), root);
  expect(sf != 1, "field", "radicand " + std::to_string(d) + " is a perfect square");
  expect(sf == d, "field", "radicand must be squarefree (use " + std::to_string(sf) + ")");
  FieldMode f;
  f.kind = FieldMode::Kind::quadratic;
  f.d = d;
  return f;
}

FieldMode make_mod(long p) {
  expect(is_small_prime(p), "field", "modulus " + std::to_string(p) + " is not a supported prime");
  FieldMode f;
  f.kind = FieldMode::Kind::mod;
  f.p = static_cast<int>(p);
  return f;
}

}  // namespace

FieldMode field_mode_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "rational") return {};
  if (j.is_object() && j.size() == 1) {
    if (j.contains("quadratic") && j["quadratic"].is_number_integer()) return make_quadratic(j["quadratic"].get<long>());
    if (j.contains("mod") && j["mod"].is_number_integer()) return make_mod(j["mod"].get<long>());
  }
  throw ValidationError("field: expected \"rational\", {\"quadratic\": d} or {\"mod\": p}");
}

FieldMode field_mode_from_string(const std::string& s) {
  if (s == "rational") return {};
  auto colon = s.find(':');
  if (colon != std::string::npos) {
    const std::string kind = s.substr(0, colon), arg = s.substr(colon + 1);
    try {
      std::size_t used = 0;
      const long v = std::stol(arg, &used);
      if (used == arg.size()) {
        if (kind == "quadratic") return make_quadratic(v);
        if (kind == "mod") return make_mod(v);
      }
    } catch (const std::logic_error&) {
    }
  }
  throw ValidationError("field: expected rational, quadratic:d or mod:p, got '" + s + "'");
}

Scalar parse_field_scalar(const std::string& text, const FieldMode& field, const ParseOptions& opts,
                          std::vector<std::string>& warnings, const std::string& where) {
  Scalar s;
  try {
    s = Scalar::parse(text);
  } catch (const ParseError& e) {
    throw ValidationError(where + ": " + e.what());
  }
  if (field.kind == FieldMode::Kind::mod) {
    expect(s.is_rational() && s.rational_part().get_den() == 1, where, "mod-p scalars must be integers");
    mpz_class r = s.rational_part().get_num() % field.p;
    if (r < 0) r += field.p;
    s = Scalar(mpq_class(r));
  } else if (!s.is_rational()) {
    expect(field.kind == FieldMode::Kind::quadratic && s.radicand() == field.d, where,
           "radical sqrt(" + std::to_string(s.radicand()) + ") is outside the declared field");
  }
  if (s.str() != text) {
    const std::string msg = where + ": '" + text + "' is not canonical, read as '" + s.str() + "'";
    if (opts.strict) throw ValidationError(msg);
    warnings.push_back(msg);
  }
  return s;
}

Matrix<Scalar> matrix_from_json(const Json& j, const FieldMode& field, const ParseOptions& opts,
                                std::vector<std::string>& warnings, const std::string& where) {
  expect(j.is_array() && !j.empty(), where, "matrix must be a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  expect(cols > 0, where, "matrix rows must be non-empty arrays");
  Matrix<Scalar> m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    expect(j[r].is_array() && j[r].size() == cols, where, "matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string at = where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]";
      expect(j[r][c].is_string(), at, "scalars must be strings");
      m(r, c) = parse_field_scalar(j[r][c].get<std::string>(), field, opts, warnings, at);
    }
  }
  return m;
}

Vector<Scalar> vector_from_json(const Json& j, const FieldMode& field, const ParseOptions& opts,
                                std::vector<std::string>& warnings, const std::string& where) {
  expect(j.is_array() && !j.empty(), where, "vector must be a non-empty array");
  Vector<Scalar> v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    expect(j[i].is_string(), at, "scalars must be strings");
    v(i) = parse_field_scalar(j[i].get<std::string>(), field, opts, warnings, at);
  }
  return v;
}

Algebra<Scalar> algebra_from_json(const Json& j, const FieldMode& field, const ParseOptions& opts,
                                  std::vector<std::string>& warnings, const std::string& where) {
  const int n = dim_from_json(j, where);
  Role role = Role::circ;
  if (j.contains("role")) {
    expect(j["role"].is_string(), where, "role must be a string");
    try {
      role = role_from_string(j["role"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
  expect(j.contains("tensor"), where, "missing 'tensor'");
  return tensor_from_json(j["tensor"], n, role, labels_from_json(j, n, where), field, opts, warnings, where);
}

bool Document::has_object(const std::string& name) const {
  return algebras.count(name) || two_ops.count(name) || forms.count(name) || maps.count(name) ||
         vectors.count(name) || representations.count(name);
}

Document document_from_json(const Json& j, const ParseOptions& opts) {
  expect(j.is_object(), "document", "top level must be an object");
  static const std::vector<std::string> keys = {"field",   "algebras", "two_ops",         "forms",
                                                "maps",    "vectors",  "representations", "recipe"};
  for (const auto& [k, v] : j.items()) {
    (void)v;
    expect(std::find(keys.begin(), keys.end(), k) != keys.end(), "document", "unknown key '" + k + "'");
  }
  Document doc;
  if (j.contains("field")) doc.field = field_mode_from_json(j["field"]);
  auto& w = doc.warnings;
  auto section = [&j](const char* key) -> const Json* {
    if (!j.contains(key)) return nullptr;
    expect(j[key].is_object(), key, "must be an object keyed by name");
    return &j[key];
  };
  auto fresh = [&doc](const std::string& name, const std::string& where) {
    expect(!name.empty(), where, "object names must be non-empty");
    expect(!doc.has_object(name), where, "duplicate object name '" + name + "'");
  };
  if (const Json* s = section("algebras"))
    for (const auto& [name, v] : s->items()) {
      const std::string where = "algebras." + name;
      fresh(name, where);
      doc.algebras.emplace(name, algebra_from_json(v, doc.field, opts, w, where));
    }
  if (const Json* s = section("two_ops"))
    for (const auto& [name, v] : s->items()) {
      const std::string where = "two_ops." + name;
      fresh(name, where);
      const int n = dim_from_json(v, where);
      auto labels = labels_from_json(v, n, where);
      expect(v.contains("dot"), where, "missing 'dot'");
      std::vector<std::string> second;
      for (const char* k : {"circ", "star", "bracket"})
        if (v.contains(k)) second.push_back(k);
      expect(second.size() == 1, where, "exactly one of 'circ', 'star', 'bracket' is required");
      auto dot = tensor_from_json(v["dot"], n, Role::dot, labels, doc.field, opts, w, where + ".dot");
      auto sec = tensor_from_json(v[second[0]], n, role_from_string(second[0]), labels, doc.field, opts, w,
                                  where + "." + second[0]);
      doc.two_ops.emplace(name, TwoOpAlgebra<Scalar>(std::move(dot), std::move(sec)));
    }
  if (const Json* s = section("forms"))
    for (const auto& [name, v] : s->items()) {
      const std::string where = "forms." + name;
      fresh(name, where);
      expect(v.is_object() && v.contains("matrix"), where, "missing 'matrix'");
      Matrix<Scalar> m = matrix_from_json(v["matrix"], doc.field, opts, w, where + ".matrix");
      expect(m.rows() == m.cols(), where, "form matrix must be square");
      doc.forms.emplace(name, BilinearForm<Scalar>(std::move(m)));
    }
  if (const Json* s = section("maps"))
    for (const auto& [name, v] : s->items()) {
      const std::string where = "maps." + name;
      fresh(name, where);
      expect(v.is_object() && v.contains("matrix"), where, "missing 'matrix'");
      std::string role = "map";
      if (v.contains("role")) {
        expect(v["role"].is_string(), where, "role must be a string");
        role = v["role"].get<std::string>();
      }
      doc.maps.emplace(name, LinearMap<Scalar>(matrix_from_json(v["matrix"], doc.field, opts, w, where + ".matrix"), role));
    }
  if (const Json* s = section("vectors"))
    for (const auto& [name, v] : s->items()) {
      const std::string where = "vectors." + name;
      fresh(name, where);
      doc.vectors.emplace(name, vector_from_json(v, doc.field, opts, w, where));
    }
  if (const Json* s = section("representations"))
    for (const auto& [name, v] : s->items()) {
      const std::string where = "representations." + name;
      fresh(name, where);
      expect(v.is_object() && v.contains("carrier_dim") && v["carrier_dim"].is_number_integer(), where,
             "missing integer 'carrier_dim'");
      expect(v.contains("matrices") && v["matrices"].is_array(), where, "missing 'matrices' array");
      const int m = v["carrier_dim"].get<int>();
      std::vector<Matrix<Scalar>> mats;
      for (std::size_t i = 0; i < v["matrices"].size(); ++i) {
        const std::string at = where + ".matrices[" + std::to_string(i) + "]";
        mats.push_back(matrix_from_json(v["matrices"][i], doc.field, opts, w, at));
        expect(mats.back().rows() == m && mats.back().cols() == m, at, "matrix size differs from carrier_dim");
      }
      doc.representations.emplace(name, Representation<Scalar>(m, std::move(mats)));
    }
  if (j.contains("recipe")) {
    expect(j["recipe"].is_array(), "recipe", "must be an array of steps");
    for (std::size_t i = 0; i < j["recipe"].size(); ++i) {
      const Json& step = j["recipe"][i];
      const std::string where = "recipe[" + std::to_string(i) + "]";
      expect(step.is_object() && step.contains("command") && step["command"].is_string(), where,
             "step needs a string 'command'");
    }
    doc.recipe = j["recipe"];
  }
  return doc;
}

Document parse_document(const std::string& text, const ParseOptions& opts) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte);
    throw SyntaxError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what(), line,
                      col);
  }
  return document_from_json(j, opts);
}

Json print_document(const Document& doc) {
  Json j;
  j["field"] = doc.field.to_json();
  if (!doc.algebras.empty()) {
    Json s = Json::object();
    for (const auto& [name, a] : doc.algebras) s[name] = algebra_json(a);
    j["algebras"] = s;
  }
  if (!doc.two_ops.empty()) {
    Json s = Json::object();
    for (const auto& [name, t] : doc.two_ops) s[name] = two_json(t);
    j["two_ops"] = s;
  }
  if (!doc.forms.empty()) {
    Json s = Json::object();
    for (const auto& [name, f] : doc.forms) s[name] = form_json(f);
    j["forms"] = s;
  }
  if (!doc.maps.empty()) {
    Json s = Json::object();
    for (const auto& [name, m] : doc.maps) s[name] = map_json(m);
    j["maps"] = s;
  }
  if (!doc.vectors.empty()) {
    Json s = Json::object();
    for (const auto& [name, v] : doc.vectors) s[name] = vector_json(v);
    j["vectors"] = s;
  }
  if (!doc.representations.empty()) {
    Json s = Json::object();
    for (const auto& [name, r] : doc.representations) s[name] = representation_json(r);
    j["representations"] = s;
  }
  if (!doc.recipe.empty()) j["recipe"] = doc.recipe;
  return j;
}

bool same_document(const Document& a, const Document& b) {
  auto labels_eq = [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return false;
    for (auto i = x.begin(), k = y.begin(); i != x.end(); ++i, ++k)
      if (i->first != k->first || i->second.labels() != k->second.labels()) return false;
    return true;
  };
  auto roles_eq = [](const auto& x, const auto& y) {
    for (auto i = x.begin(), k = y.begin(); i != x.end(); ++i, ++k)
      if (i->second.role() != k->second.role()) return false;
    return true;
  };
  auto vec_eq = [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return false;
    for (auto i = x.begin(), k = y.begin(); i != x.end(); ++i, ++k)
      if (i->first != k->first || !same_matrix(i->second, k->second)) return false;
    return true;
  };
  auto map_roles_eq = [](const auto& x, const auto& y) {
    for (auto i = x.begin(), k = y.begin(); i != x.end(); ++i, ++k)
      if (i->second.role != k->second.role) return false;
    return true;
  };
  return a.field == b.field && a.algebras == b.algebras && labels_eq(a.algebras, b.algebras) &&
         roles_eq(a.algebras, b.algebras) && a.two_ops == b.two_ops && a.forms == b.forms && a.maps == b.maps &&
         map_roles_eq(a.maps, b.maps) && vec_eq(a.vectors, b.vectors) && a.representations == b.representations &&
         a.recipe == b.recipe;
}

}  // namespace apl::io
