#pragma once

// JSON wire format. Scalars travel as strings; tensors as dense nested arrays
// indexed [i][j][k] for e_i op e_j = sum_k t[i][j][k] e_k; matrices row-major
// [row][col] with columns as images of basis vectors.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "apl/constructions.hpp"

namespace apl::io {

using Json = nlohmann::ordered_json;

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SyntaxError : public ValidationError {
 public:
  SyntaxError(const std::string& msg, std::size_t line, std::size_t column)
      : ValidationError(msg), line(line), column(column) {}
  std::size_t line, column;
};

struct FieldMode {
  enum class Kind { rational, quadratic, mod };
  Kind kind = Kind::rational;
  long d = 0;  // quadratic: squarefree radicand
  int p = 0;   // mod: prime

  Json to_json() const;
  std::string str() const;  // "rational", "quadratic:d", "mod:p"
  friend bool operator==(const FieldMode& a, const FieldMode& b) {
    return a.kind == b.kind && a.d == b.d && a.p == b.p;
  }
};

FieldMode field_mode_from_json(const Json& j);
FieldMode field_mode_from_string(const std::string& s);

struct ParseOptions {
  bool strict = false;  // reject non-canonical scalar strings instead of warning
};

// Scalar text checked against the field: radicals only of the declared d,
// integers only in mod mode (stored reduced to [0, p)).
Scalar parse_field_scalar(const std::string& text, const FieldMode& field, const ParseOptions& opts,
                          std::vector<std::string>& warnings, const std::string& where);

struct Document {
  FieldMode field;
  std::map<std::string, Algebra<Scalar>> algebras;
  std::map<std::string, TwoOpAlgebra<Scalar>> two_ops;
  std::map<std::string, BilinearForm<Scalar>> forms;
  std::map<std::string, LinearMap<Scalar>> maps;
  std::map<std::string, Vector<Scalar>> vectors;
  std::map<std::string, Representation<Scalar>> representations;
  Json recipe = Json::array();
  std::vector<std::string> warnings;

  bool has_object(const std::string& name) const;
};

Document parse_document(const std::string& text, const ParseOptions& opts = {});
Document document_from_json(const Json& j, const ParseOptions& opts = {});
Json print_document(const Document& doc);
bool same_document(const Document& a, const Document& b);

Algebra<Scalar> algebra_from_json(const Json& j, const FieldMode& field, const ParseOptions& opts,
                                  std::vector<std::string>& warnings, const std::string& where);
Matrix<Scalar> matrix_from_json(const Json& j, const FieldMode& field, const ParseOptions& opts,
                                std::vector<std::string>& warnings, const std::string& where);
Vector<Scalar> vector_from_json(const Json& j, const FieldMode& field, const ParseOptions& opts,
                                std::vector<std::string>& warnings, const std::string& where);

template <class S>
Json vector_json(const Vector<S>& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

template <class S>
Json matrix_json(const Matrix<S>& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(std::move(row));
  }
  return out;
}

template <class S>
Json tensor_json(const Algebra<S>& a) {
  const int n = a.dim();
  Json out = Json::array();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < n; ++j) {
      Json cell = Json::array();
      for (int k = 0; k < n; ++k) cell.push_back(a(i, j, k).str());
      row.push_back(std::move(cell));
    }
    out.push_back(std::move(row));
  }
  return out;
}

template <class S>
Json algebra_json(const Algebra<S>& a) {
  Json j;
  j["dim"] = a.dim();
  j["labels"] = a.labels();
  j["role"] = to_string(a.role());
  j["tensor"] = tensor_json(a);
  return j;
}

template <class S>
Json two_json(const TwoOpAlgebra<S>& t) {
  Json j;
  j["dim"] = t.dim();
  j["labels"] = t.labels();
  j["dot"] = tensor_json(t.dot());
  j[to_string(t.second().role())] = tensor_json(t.second());
  return j;
}

template <class S>
Json form_json(const BilinearForm<S>& b) {
  return Json{{"matrix", matrix_json(b.matrix)}};
}

template <class S>
Json map_json(const LinearMap<S>& m) {
  return Json{{"role", m.role}, {"matrix", matrix_json(m.matrix)}};
}

template <class S>
Json representation_json(const Representation<S>& r) {
  Json mats = Json::array();
  for (const auto& m : r.mats) mats.push_back(matrix_json(m));
  return Json{{"carrier_dim", r.carrier_dim}, {"matrices", mats}};
}

template <class S>
Json report_json(const CheckReport<S>& r) {
  Json j;
  j["pass"] = r.pass();
  if (r.witness) {
    j["witness"] = Json{{"identity", r.witness->identity},
                        {"indices", r.witness->indices},
                        {"residual", vector_json(r.witness->residual)}};
  }
  return j;
}

}  // namespace apl::io
