#pragma once

// Named algebras, forms and maps, addressable as "FAMILY?key=value&key=value".

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apl/classify.hpp"
#include "apl/poisson.hpp"

namespace apl {

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CatalogRef {
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;  // raw, in input order
};

CatalogRef parse_catalog_ref(const std::string& ref);

struct CatalogEntry {
  std::string id;  // canonical ref, defaults filled in
  std::string family;
  std::map<std::string, Scalar> params;
  std::optional<Algebra<Scalar>> algebra;
  std::optional<TwoOpAlgebra<Scalar>> two;
  std::optional<BilinearForm<Scalar>> form;
  std::optional<Vector<Scalar>> vector;  // s of the symmetric-form families
  std::map<std::string, LinearMap<Scalar>> maps;
};

CatalogEntry catalog(const std::string& ref);
const std::vector<std::string>& catalog_families();

// The sample references used for table-level checks.
std::vector<std::string> a_family_samples();
std::vector<std::string> b_family_samples(int max_dim);

struct NamedCheck {
  std::string name;
  bool expected = true;
  CheckReport<Scalar> report;
  bool ok() const { return report.pass() == expected; }
};

struct CatalogVerification {
  std::string id;
  std::vector<NamedCheck> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
};

CatalogVerification verify_catalog_entry(const CatalogEntry& entry);
inline CatalogVerification verify_catalog_entry(const std::string& ref) { return verify_catalog_entry(catalog(ref)); }

struct StoredWitness {
  std::string name;
  Algebra<Scalar> source;
  Algebra<Scalar> target;
  Matrix<Scalar> s;  // change_basis(source, s) == target
};

std::vector<StoredWitness> stored_witnesses();
std::optional<StoredWitness> find_witness(const std::string& name);

// Families solved in closed form; an operator index outside 1..8 throws CatalogError.
StoredWitness r_operator_witness(int index, const Scalar& a, const Scalar& b);
StoredWitness n1_witness(const Scalar& lambda);

inline CheckReport<Scalar> verify(const StoredWitness& w) { return verify_iso_witness(w.source, w.target, w.s); }

}  // namespace apl
