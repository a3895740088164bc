#include "apl/catalog.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace apl {

namespace {

using S = Scalar;
using A = Algebra<S>;
using T = ProductTerm<S>;

struct ParamSpec {
  std::string name;
  std::optional<std::string> fallback;
};

struct Family {
  std::string name;
  std::vector<ParamSpec> params;
};

const std::vector<Family>& families() {
  static const std::vector<Family> table = {
      {"A1", {}},
      {"A2", {{"lambda", std::nullopt}}},
      {"A3", {}},
      {"A4", {{"lambda", std::nullopt}}},
      {"A5", {}},
      {"B1", {{"n", "2"}}},
      {"B2", {{"k", std::nullopt}, {"n", "2"}}},
      {"B3", {{"n", "2"}}},
      {"B4", {{"k", std::nullopt}, {"n", "2"}}},
      {"B5", {{"n", "2"}}},
      {"B6", {{"k", std::nullopt}, {"n", "3"}}},
      {"N1", {{"lambda", std::nullopt}}},
      {"N2", {}},
      {"Nprime1", {}},
      {"Nprime2", {}},
      {"Nprime3", {{"l", std::nullopt}}},
      {"Nprime4", {}},
      {"AN1", {{"lambda", std::nullopt}}},
      {"AN2", {}},
      {"SL2_LIE", {}},
      {"SL2_APL", {}},
      {"DIM2_NONABELIAN_LIE", {}},
      {"LIE2", {{"a", std::nullopt}, {"b", std::nullopt}}},
      {"ABELIAN_LIE", {{"n", std::nullopt}}},
      {"DIM2_ASSOC_FROB", {}},
      {"TRUNC_POLY", {{"n", std::nullopt}, {"k", "1"}}},
      {"R1", {}},
      {"R2", {{"a", std::nullopt}}},
      {"R3", {{"a", std::nullopt}}},
      {"R4", {{"a", std::nullopt}, {"b", std::nullopt}}},
      {"R5", {{"a", std::nullopt}}},
      {"R6", {{"a", std::nullopt}, {"b", std::nullopt}}},
      {"R7", {{"a", std::nullopt}}},
      {"R8", {{"a", std::nullopt}, {"b", std::nullopt}}},
      {"POISSON_DIM3", {}},
      {"UNIT_POISSON", {}},
      {"PAIR_POISSON", {{"n", std::nullopt}, {"k", "1"}}},
  };
  return table;
}

const Family& family(const std::string& name) {
  for (const auto& f : families())
    if (f.name == name) return f;
  throw CatalogError("unknown catalog family '" + name + "'");
}

int as_int(const S& v, const std::string& what) {
  if (!v.is_rational() || v.rational_part().get_den() != 1 || !v.rational_part().get_num().fits_slong_p())
    throw CatalogError(what + " must be an integer");
  return static_cast<int>(v.rational_part().get_num().get_si());
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw CatalogError(msg);
}

A two_dim(const std::vector<T>& terms, Role role = Role::circ) { return algebra_from_products<S>(2, terms, role); }

// e1 = 0, e2 = 1 in the product lists below.
A a_family(const std::string& fam, const S& lambda) {
  if (fam == "A1") return two_dim({{0, 0, 1, S(-1)}, {1, 0, 0, S(-1)}});
  if (fam == "A2") return two_dim({{1, 0, 0, S(-1)}, {1, 1, 1, lambda}});
  if (fam == "A3") return two_dim({{1, 0, 0, S(-1)}, {1, 1, 0, S(1)}, {1, 1, 1, S(-1)}});
  if (fam == "A4")
    return two_dim({{0, 1, 0, lambda + S(1)}, {1, 0, 0, lambda}, {1, 1, 1, lambda - S(1)}});
  return two_dim({{0, 1, 0, S(-1)}, {1, 0, 0, S(-2)}, {1, 1, 0, S(1)}, {1, 1, 1, S(-3)}});
}

// Generating form with s = e1 for the symmetric-form families.
Matrix<S> b_family_form(const std::string& fam, int n, int k) {
  Matrix<S> b = zero_matrix<S>(n, n);
  if (fam == "B2") {
    for (int l = 1; l < k; ++l) b(l, l) = S(1);
  } else if (fam == "B3") {
    b(0, 0) = S(-1);
  } else if (fam == "B4") {
    b(0, 0) = S(-1);
    for (int l = 1; l < k; ++l) b(l, l) = S(1);
  } else if (fam == "B5" || fam == "B6") {
    b(0, 1) = b(1, 0) = S(-1);
    if (fam == "B6")
      for (int l = 2; l < k; ++l) b(l, l) = S(1);
  }
  return b;
}

A nonabelian_lie(const S& a, const S& b) {
  return two_dim({{0, 1, 0, a}, {0, 1, 1, b}, {1, 0, 0, -a}, {1, 0, 1, -b}}, Role::bracket);
}

Matrix<S> r_matrix(int index, const S& a, const S& b) {
  Matrix<S> r = zero_matrix<S>(2, 2);
  switch (index) {
    case 1: break;
    case 2: r(0, 1) = a; break;
    case 3: r(1, 1) = a; break;
    case 4: r(0, 1) = b; r(1, 1) = a; break;
    case 5: r(0, 0) = a; r(1, 1) = -a / S(2); break;
    case 6: r(0, 0) = a; r(0, 1) = b; r(1, 1) = -a / S(2); break;
    case 7: r(1, 0) = a; break;
    case 8: r(0, 0) = a; r(0, 1) = -a * a / b; r(1, 0) = b; r(1, 1) = -a; break;
    default: throw CatalogError("operator index must be 1..8");
  }
  return r;
}

A sl2_lie() {
  // basis x, h, y
  return algebra_from_products<S>(3,
                                  {{1, 0, 0, S(2)}, {0, 1, 0, S(-2)}, {1, 2, 2, S(-2)}, {2, 1, 2, S(2)},
                                   {0, 2, 1, S(1)}, {2, 0, 1, S(-1)}},
                                  Role::bracket, {"x", "h", "y"});
}

BilinearForm<S> sl2_form() {
  Matrix<S> b = zero_matrix<S>(3, 3);
  b(0, 2) = b(2, 0) = S(-1);
  b(1, 1) = S(4);
  return BilinearForm<S>(b);
}

A sl2_apl() {
  const S half = S::rational(1, 2);
  return algebra_from_products<S>(3,
                                  {{0, 1, 0, S(-4)}, {0, 2, 1, half}, {1, 0, 0, S(-2)}, {1, 2, 2, S(2)},
                                   {2, 0, 1, -half}, {2, 1, 2, S(4)}},
                                  Role::circ, {"x", "h", "y"});
}

std::vector<std::string> poly_labels(int n) {
  std::vector<std::string> out{"1"};
  if (n > 1) out.push_back("x");
  for (int i = 2; i < n; ++i) out.push_back("x^" + std::to_string(i));
  return out;
}

A trunc_poly(int n) {
  A a(n, Role::dot, poly_labels(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; i + j < n; ++j) a(i, j, i + j) = S(1);
  return a;
}

// x^k d/dx on F[x]/(x^n): x^i -> i x^(i+k-1).
Matrix<S> poly_derivation(int n, int k) {
  Matrix<S> m = zero_matrix<S>(n, n);
  for (int i = 1; i < n; ++i)
    if (i + k - 1 < n) m(i + k - 1, i) = S(i);
  return m;
}

BilinearForm<S> poly_form(int n) {
  Matrix<S> m = zero_matrix<S>(n, n);
  for (int i = 0; i < n; ++i) m(i, n - 1 - i) = S(1);
  return BilinearForm<S>(m);
}

A frob_dot() { return two_dim({{0, 0, 0, S(1)}, {0, 1, 1, S(1)}, {1, 0, 1, S(1)}}, Role::dot); }

std::string canonical_id(const Family& fam, const std::map<std::string, S>& params) {
  std::string id = fam.name;
  char sep = '?';
  for (const auto& p : fam.params) {
    id += sep + p.name + "=" + params.at(p.name).str();
    sep = '&';
  }
  return id;
}

}  // namespace

CatalogRef parse_catalog_ref(const std::string& ref) {
  CatalogRef out;
  auto q = ref.find('?');
  out.family = ref.substr(0, q);
  if (out.family.empty()) throw CatalogError("empty catalog reference");
  if (q == std::string::npos) return out;
  std::string rest = ref.substr(q + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    auto amp = rest.find('&', pos);
    std::string kv = rest.substr(pos, amp == std::string::npos ? std::string::npos : amp - pos);
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == kv.size())
      throw CatalogError("malformed parameter '" + kv + "' in '" + ref + "'");
    out.params.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
    if (amp == std::string::npos) break;
    pos = amp + 1;
  }
  return out;
}

const std::vector<std::string>& catalog_families() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& f : families()) v.push_back(f.name);
    return v;
  }();
  return names;
}

CatalogEntry catalog(const std::string& ref) {
  const CatalogRef parsed = parse_catalog_ref(ref);
  const Family& fam = family(parsed.family);
  CatalogEntry e;
  e.family = fam.name;
  for (const auto& [k, v] : parsed.params) {
    bool known = std::any_of(fam.params.begin(), fam.params.end(), [&](const ParamSpec& p) { return p.name == k; });
    if (!known) throw CatalogError("family " + fam.name + " has no parameter '" + k + "'");
    if (e.params.count(k)) throw CatalogError("parameter '" + k + "' given twice");
    try {
      e.params.emplace(k, S::parse(v));
    } catch (const ParseError& err) {
      throw CatalogError("parameter '" + k + "': " + err.what());
    }
  }
  // Fallbacks first so that k can default to n in the B families.
  for (const auto& p : fam.params)
    if (!e.params.count(p.name) && p.fallback) e.params.emplace(p.name, S::parse(*p.fallback));
  for (const auto& p : fam.params)
    if (!e.params.count(p.name)) {
      if (p.name == "k" && e.params.count("n") && fam.name[0] == 'B')
        e.params.emplace("k", e.params.at("n"));
      else if (p.fallback)
        e.params.emplace(p.name, S::parse(*p.fallback));
      else
        throw CatalogError("family " + fam.name + " needs parameter '" + p.name + "'");
    }
  e.id = canonical_id(fam, e.params);
  auto par = [&e](const std::string& k) { return e.params.at(k); };
  const std::string& f = fam.name;

  if (f.size() == 2 && f[0] == 'A') {
    S lambda = e.params.count("lambda") ? par("lambda") : S(0);
    if (f == "A4") require(lambda != S(-1), "A4 requires lambda != -1");
    e.algebra = a_family(f, lambda);
  } else if (f.size() == 2 && f[0] == 'B') {
    const int n = as_int(par("n"), "n");
    const int k = e.params.count("k") ? as_int(par("k"), "k") : n;
    require(n >= 1, "n must be positive");
    if (f == "B2" || f == "B4") require(k >= 2 && k <= n, f + " requires 2 <= k <= n");
    if (f == "B6") require(n >= 3 && k >= 3 && k <= n, "B6 requires 3 <= k <= n");
    if (f == "B5") require(n >= 2, "B5 requires n >= 2");
    if (f == "B3") require(n >= 2, "B3 requires n >= 2");
    e.form = BilinearForm<S>(b_family_form(f, n, k));
    e.vector = unit_vector<S>(n, 0);
    e.algebra = from_symmetric_form(*e.form, *e.vector);
  } else if (f == "N1") {
    const S l = par("lambda");
    e.algebra = two_dim({{0, 1, 0, S(1) - l}, {1, 0, 0, -(l + S(2))}, {1, 1, 1, S(1) - l}}, Role::star);
  } else if (f == "N2") {
    e.algebra = two_dim({{0, 1, 0, S(3)}, {1, 1, 0, S(-1)}, {1, 1, 1, S(3)}}, Role::star);
  } else if (f == "Nprime1") {
    e.algebra = two_dim({{1, 0, 0, S(-1)}}, Role::star);
  } else if (f == "Nprime2") {
    e.algebra = two_dim({{0, 1, 0, S(1)}, {1, 1, 1, S(1)}}, Role::star);
  } else if (f == "Nprime3") {
    const S l = par("l");
    require(l != S(0) && l != S(1), "Nprime3 requires l not in {0, 1}");
    e.algebra = two_dim({{0, 1, 0, S(1)}, {1, 0, 0, l}, {1, 1, 1, S(1)}}, Role::star);
  } else if (f == "Nprime4") {
    e.algebra = two_dim({{0, 1, 0, S(1)}, {1, 1, 0, S(1)}, {1, 1, 1, S(1)}}, Role::star);
  } else if (f == "AN1") {
    // The A4 formula; at lambda = -1 it is (A2)_{-2}.
    e.algebra = a_family("A4", par("lambda"));
  } else if (f == "AN2") {
    e.algebra = a_family("A5", S(0));
  } else if (f == "SL2_LIE") {
    e.algebra = sl2_lie();
    e.form = sl2_form();
  } else if (f == "SL2_APL") {
    e.algebra = sl2_apl();
    e.form = sl2_form();
  } else if (f == "DIM2_NONABELIAN_LIE") {
    e.algebra = nonabelian_lie(S(1), S(0));
  } else if (f == "LIE2") {
    const S a = par("a"), b = par("b");
    require(!(is_zero(a) && is_zero(b)), "LIE2 requires (a, b) != (0, 0)");
    e.algebra = nonabelian_lie(a, b);
    e.form = BilinearForm<S>(identity_matrix<S>(2));
  } else if (f == "ABELIAN_LIE") {
    const int n = as_int(par("n"), "n");
    require(n >= 1, "n must be positive");
    e.algebra = zero_algebra<S>(n, Role::bracket);
    e.form = BilinearForm<S>(identity_matrix<S>(n));
  } else if (f == "DIM2_ASSOC_FROB") {
    e.algebra = frob_dot();
    Matrix<S> b = zero_matrix<S>(2, 2);
    b(0, 1) = b(1, 0) = S(1);
    e.form = BilinearForm<S>(b);
    Matrix<S> q = zero_matrix<S>(2, 2), qh = zero_matrix<S>(2, 2);
    q(1, 1) = S(1);
    qh(0, 0) = S(1);
    e.maps.emplace("Q", LinearMap<S>(q, "Q"));
    e.maps.emplace("Qhat", LinearMap<S>(qh, "Qhat"));
  } else if (f == "TRUNC_POLY" || f == "PAIR_POISSON") {
    const int n = as_int(par("n"), "n"), k = as_int(par("k"), "k");
    require(n >= 2, "n must be at least 2");
    require(k >= 1, "k must be at least 1");
    A dot = trunc_poly(n);
    LinearMap<S> p(poly_derivation(n, k), "P");
    e.form = poly_form(n);
    e.maps.emplace("P", p);
    e.maps.emplace("Q", LinearMap<S>(p.matrix, "Q"));
    if (f == "TRUNC_POLY")
      e.algebra = dot;
    else
      e.two = TwoOpAlgebra<S>(dot, pair_based_product(dot, p, p, PairMode::admissible_novikov));
  } else if (f.size() == 2 && f[0] == 'R') {
    const int index = f[1] - '0';
    const S a = e.params.count("a") ? par("a") : S(0);
    const S b = e.params.count("b") ? par("b") : S(0);
    if (index > 1) require(!is_zero(a), f + " requires a != 0");
    if (e.params.count("b")) require(!is_zero(b), f + " requires b != 0");
    e.algebra = nonabelian_lie(S(1), S(0));
    e.maps.emplace("R", LinearMap<S>(r_matrix(index, a, b), "R"));
  } else if (f == "POISSON_DIM3") {
    A dot = algebra_from_products<S>(3, {{2, 2, 2, S(1)}}, Role::dot);
    A circ = algebra_from_products<S>(3, {{0, 1, 1, S(1)}, {2, 2, 2, S(1)}});
    e.two = TwoOpAlgebra<S>(dot, circ);
  } else if (f == "UNIT_POISSON") {
    e.two = TwoOpAlgebra<S>(algebra_from_products<S>(1, {{0, 0, 0, S(1)}}, Role::dot), A(1));
  }
  return e;
}

std::vector<std::string> a_family_samples() {
  std::vector<std::string> out{"A1", "A3", "A5"};
  for (int l = -2; l <= 2; ++l) {
    out.push_back("A2?lambda=" + std::to_string(l));
    if (l != -1) out.push_back("A4?lambda=" + std::to_string(l));
  }
  return out;
}

std::vector<std::string> b_family_samples(int max_dim) {
  std::vector<std::string> out;
  for (int n = 1; n <= max_dim; ++n) {
    const std::string ns = "n=" + std::to_string(n);
    out.push_back("B1?" + ns);
    if (n >= 2) {
      for (int k = 2; k <= n; ++k) out.push_back("B2?k=" + std::to_string(k) + "&" + ns);
      out.push_back("B3?" + ns);
      for (int k = 2; k <= n; ++k) out.push_back("B4?k=" + std::to_string(k) + "&" + ns);
      out.push_back("B5?" + ns);
    }
    for (int k = 3; k <= n; ++k) out.push_back("B6?k=" + std::to_string(k) + "&" + ns);
  }
  return out;
}

namespace {

void add_identity(CatalogVerification& v, const A& alg, IdentityId id, bool expected) {
  v.checks.push_back({token(id), expected, check_identity(alg, id)});
}

void add_profile(CatalogVerification& v, const A& alg, const std::set<IdentityId>& expected,
                 const std::set<IdentityId>& excluded) {
  for (auto id : all_identities()) {
    if (expected.count(id)) add_identity(v, alg, id, true);
    if (excluded.count(id)) add_identity(v, alg, id, false);
  }
}

CheckReport<S> equality_report(const A& got, const A& want) {
  return verify_iso_witness(got, want, identity_matrix<S>(got.dim()));
}

}  // namespace

CatalogVerification verify_catalog_entry(const CatalogEntry& e) {
  using I = IdentityId;
  CatalogVerification v;
  v.id = e.id;
  const std::string& f = e.family;
  const std::set<I> apl = {I::anti_pre_lie_1, I::anti_pre_lie_2};

  if (f.size() == 2 && f[0] == 'A') {
    const S lambda = e.params.count("lambda") ? e.params.at("lambda") : S(0);
    const bool a2 = f == "A2";
    std::set<I> exp = apl, exc = {I::commutative, I::anti_associative};
    (a2 && lambda == S(-1) ? exp : exc).insert(I::associative);
    (a2 || f == "A3" ? exp : exc).insert(I::pre_lie);
    ((a2 && lambda == S(-2)) || f == "A4" || f == "A5" ? exp : exc).insert(I::admissible_novikov);
    add_profile(v, *e.algebra, exp, exc);
  } else if (f.size() == 2 && f[0] == 'B') {
    const int n = e.algebra->dim();
    const bool low = f == "B1" || f == "B2";
    std::set<I> exp = apl, exc;
    for (auto id : {I::associative, I::commutative, I::anti_associative}) (low ? exp : exc).insert(id);
    (low || f == "B3" ? exp : exc).insert(I::pre_lie);
    (low || (f == "B5" && n == 2) ? exp : exc).insert(I::admissible_novikov);
    add_profile(v, *e.algebra, exp, exc);
    v.checks.push_back({"form-apl-invariant", true, check_form(*e.algebra, *e.form, FormMode::apl_invariant)});
  } else if (f == "N1" || f == "N2" || f.rfind("Nprime", 0) == 0) {
    add_profile(v, *e.algebra, {I::pre_lie, I::novikov_right}, {I::commutative});
  } else if (f == "AN1" || f == "AN2") {
    add_profile(v, *e.algebra, {I::anti_pre_lie_1, I::anti_pre_lie_2, I::admissible_novikov}, {I::commutative});
  } else if (f == "SL2_LIE" || f == "LIE2" || f == "ABELIAN_LIE") {
    add_identity(v, *e.algebra, I::jacobi, true);
    v.checks.push_back({"form-cocycle", true, check_form(*e.algebra, *e.form, FormMode::cocycle)});
    v.checks.push_back({"form-nondegenerate", true,
                        e.form->is_nondegenerate() ? CheckReport<S>::ok()
                                                   : CheckReport<S>::failure("form-nondegenerate", {}, Vector<S>::Constant(1, S(0)))});
  } else if (f == "SL2_APL") {
    add_profile(v, *e.algebra, apl, {I::pre_lie, I::admissible_novikov});
    v.checks.push_back({"form-apl-invariant", true, check_form(*e.algebra, *e.form, FormMode::apl_invariant)});
    v.checks.push_back({"commutator-is-sl2", true,
                        equality_report(with_role(commutator_algebra(*e.algebra), Role::bracket), sl2_lie())});
  } else if (f == "DIM2_NONABELIAN_LIE") {
    add_identity(v, *e.algebra, I::jacobi, true);
  } else if (f == "DIM2_ASSOC_FROB" || f == "TRUNC_POLY") {
    add_profile(v, *e.algebra, {I::commutative, I::associative}, {});
    v.checks.push_back({"form-assoc-invariant", true, check_form(*e.algebra, *e.form, FormMode::assoc_invariant)});
    const LinearMap<S>& q = e.maps.at("Q");
    v.checks.push_back({"derivation", true, check_derivation(*e.algebra, q)});
    if (f == "DIM2_ASSOC_FROB")
      v.checks.push_back({"adjoint-consistency", true, check_adjoint_consistency(*e.form, q, e.maps.at("Qhat"))});
  } else if (f.size() == 2 && f[0] == 'R') {
    const int index = f[1] - '0';
    const auto rho = adjoint_representation(*e.algebra);
    const auto& r = e.maps.at("R");
    v.checks.push_back({"anti-o", true, check_operator(r, *e.algebra, rho, OperatorLevel::anti_o)});
    v.checks.push_back({"strong", true, check_operator(r, *e.algebra, rho, OperatorLevel::strong)});
    v.checks.push_back(
        {"admissible", index != 3 && index != 4, check_operator(r, *e.algebra, rho, OperatorLevel::admissible)});
    A induced = induced_algebra(r, rho);
    add_profile(v, induced, apl, {});
  } else if (e.two) {
    const auto& two = *e.two;
    v.checks.push_back({"aplp-1", true, check_poisson_identity(two, PoissonIdentityId::aplp_1)});
    v.checks.push_back({"aplp-2", true, check_poisson_identity(two, PoissonIdentityId::aplp_2)});
    v.checks.push_back({"dot-commutative", true, check_identity(two.dot(), I::commutative)});
    v.checks.push_back({"dot-associative", true, check_identity(two.dot(), I::associative)});
    v.checks.push_back(
        {"admissible-novikov", f != "POISSON_DIM3", check_identity(two.second(), I::admissible_novikov)});
  }
  return v;
}

}  // namespace apl
