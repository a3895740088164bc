#include "apl/catalog.hpp"

namespace apl {

namespace {

using S = Scalar;
using A = Algebra<S>;

Matrix<S> mat2(const S& a, const S& b, const S& c, const S& d) {
  Matrix<S> m(2, 2);
  m << a, b, c, d;
  return m;
}

A cat(const std::string& ref) { return *catalog(ref).algebra; }

A single(int i, int j, int k) { return algebra_from_products<S>(2, {{i, j, k, S(1)}}); }

const S I = S(0, 1, -1);  // sqrt(-1)

StoredWitness named(std::string name, A source, A target, Matrix<S> s) {
  return {std::move(name), std::move(source), std::move(target), std::move(s)};
}

}  // namespace

StoredWitness r_operator_witness(int index, const S& a, const S& b) {
  const CatalogEntry e = catalog("R" + std::to_string(index) + (index == 1 ? "" : "?a=" + a.str()) +
                                 (index == 4 || index == 6 || index == 8 ? "&b=" + b.str() : ""));
  A induced = induced_algebra(e.maps.at("R"), adjoint_representation(*e.algebra));
  const S one(1), zero(0);
  std::string name = e.id;
  switch (index) {
    case 1: return named(name, induced, A(2), mat2(one, zero, zero, one));
    case 2: return named(name, induced, single(1, 1, 0), mat2(-a, zero, zero, one));
    case 3: return named(name, induced, cat("A2?lambda=0"), mat2(one, zero, zero, -one / a));
    case 4: return named(name, induced, cat("A2?lambda=0"), mat2(one, -b / (a * a), zero, -one / a));
    case 5: return named(name, induced, cat("A4?lambda=1"), mat2(one, zero, zero, S(-2) / a));
    case 6: return named(name, induced, cat("A4?lambda=1"), mat2(one, S(4) * b / (S(3) * a * a), zero, S(-2) / a));
    case 7: return named(name, induced, single(0, 0, 0), mat2(one / a, zero, zero, one));
    case 8: return named(name, induced, single(0, 0, 0), mat2(one / b, a / b, zero, one));
  }
  throw CatalogError("operator index must be 1..8");
}

StoredWitness n1_witness(const S& lambda) {
  A source = cat("N1?lambda=" + lambda.str());
  const S one(1), zero(0), third = S::rational(1, 3);
  if (lambda == S(1)) return named("N1(1)-to-Nprime1", source, cat("Nprime1"), mat2(one, zero, zero, third));
  if (lambda == S(-2)) return named("N1(-2)-to-Nprime2", source, cat("Nprime2"), mat2(one, zero, zero, third));
  const S l = one - S(3) / (one - lambda);
  return named("N1(" + lambda.str() + ")-to-Nprime3(" + l.str() + ")", source, cat("Nprime3?l=" + l.str()),
               mat2(one, zero, zero, one / (one - lambda)));
}

std::vector<StoredWitness> stored_witnesses() {
  const S one(1), zero(0), half = S::rational(1, 2);
  std::vector<StoredWitness> out;
  out.push_back(named("B3-to-A2(0)", cat("B3?n=2"), cat("A2?lambda=0"), mat2(zero, -one, one, zero)));
  out.push_back(named("B4(2)-to-A1", cat("B4?k=2&n=2"), cat("A1"), mat2(zero, -one, one, zero)));
  out.push_back(named("B5-to-A4(0)", cat("B5?n=2"), cat("A4?lambda=0"), mat2(one, zero, zero, -one)));
  out.push_back(named("AN1(-1)-to-A2(-2)", cat("AN1?lambda=-1"), cat("A2?lambda=-2"), identity_matrix<S>(2)));

  // Symmetric-form construction at nondegenerate forms.
  out.push_back(named("symform(identity)-to-B4(2)",
                      from_symmetric_form(BilinearForm<S>(identity_matrix<S>(2)), unit_vector<S>(2, 0)),
                      cat("B4?k=2&n=2"), mat2(-one, zero, zero, -I)));
  {
    Matrix<S> b = zero_matrix<S>(3, 3);
    b(0, 1) = b(1, 0) = one;
    Matrix<S> s = identity_matrix<S>(3);
    s(1, 1) = -one;
    out.push_back(named("symform(e12)-to-B5(3)", from_symmetric_form(BilinearForm<S>(b), unit_vector<S>(3, 0)),
                        cat("B5?n=3"), s));
  }

  // Linear-function construction, dimension 2.
  {
    Vector<S> f0 = Vector<S>::Constant(2, zero), e1 = unit_vector<S>(2, 0);
    out.push_back(named("linear(f=0,g=e1*)-to-A2(-1)", from_linear_functions<S>(f0, e1, 2), cat("A2?lambda=-1"),
                        mat2(zero, -one, one, zero)));
    out.push_back(named("linear(f=e1*,g=2f)-to-A4(-2)", from_linear_functions<S>(e1, S(2) * e1, 2),
                        cat("A4?lambda=-2"), mat2(zero, -one, one, zero)));
  }

  out.push_back(named("inverse-two(A5)-to-N2", exact_inverse_two_transform(cat("A5")), cat("N2"),
                      mat2(S(-3), zero, zero, S(-3))));

  // Compatible products on the non-abelian Lie algebra with B = Id.
  {
    const BilinearForm<S> id(identity_matrix<S>(2));
    out.push_back(named("LIE2(1,1)-identity-form-to-A1", induce_compatible_product(cat("LIE2?a=1&b=1"), id),
                        cat("A1"), mat2(-I * half, -half, -I * half, half)));
    out.push_back(named("LIE2(1,0)-identity-form-to-A1", induce_compatible_product(cat("LIE2?a=1&b=0"), id),
                        cat("A1"), mat2(-I, zero, zero, one)));
  }

  // Frobenius algebra products.
  {
    const CatalogEntry frob = catalog("DIM2_ASSOC_FROB");
    const auto t = triple_products(*frob.algebra, frob.maps.at("Q"), *frob.form);
    const Matrix<S> swap = mat2(zero, one, one, zero);
    out.push_back(named("circ1-to-A4(1)", t.circ1, cat("A4?lambda=1"), swap));
    out.push_back(named("circ2-to-A4(-2)", t.circ2, cat("A4?lambda=-2"), swap));
    out.push_back(named("circ3-to-A4(0)", t.circ3, cat("A4?lambda=0"), swap));
  }

  // Novikov presentations.
  for (const auto& l : {S(0), S(1), S(-2), S(2), S(3), S::rational(-1, 2)}) out.push_back(n1_witness(l));
  out.push_back(named("N2-to-Nprime4", cat("N2"), cat("Nprime4"), mat2(S::rational(-1, 9), zero, zero, S::rational(1, 3))));

  // Anti-Rota-Baxter induced products.
  for (int i = 1; i <= 8; ++i)
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b) {
        if (i == 1 && (a > 1 || b > 1)) continue;
        if ((i == 2 || i == 3 || i == 5 || i == 7) && b > 1) continue;
        out.push_back(r_operator_witness(i, S(a), S(b)));
      }
  return out;
}

std::optional<StoredWitness> find_witness(const std::string& name) {
  for (auto& w : stored_witnesses())
    if (w.name == name) return w;
  return std::nullopt;
}

}  // namespace apl
