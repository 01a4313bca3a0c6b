#include "parcomod/json_io.hpp"

namespace parcomod {

Json to_json(const FieldElem& a) { return a.str(); }

FieldElem field_from_json(const Json& j, int order) {
  if (j.is_number_integer()) return FieldElem(Rational(j.get<long>()), order);
  if (!j.is_string()) throw std::invalid_argument("coefficient must be a string or integer");
  return FieldElem::parse(j.get<std::string>(), order);
}

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Vec vec_from_json(const Json& j, int order) {
  Vec v;
  for (const auto& x : j) v.push_back(field_from_json(x, order));
  return v;
}

Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Matrix matrix_from_json(const Json& j, int order) {
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r, order));
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) throw DimensionMismatch("ragged matrix");
  return Matrix::from_rows(rows, cols);
}

Json hopf_to_json(const FiniteDimHopf& h) {
  const std::size_t n = h.n;
  Json j;
  j["name"] = h.name;
  j["field"] = {{"cyclotomic_order", h.field_order}};
  j["dim"] = n;
  j["basis"] = h.labels;
  j["unit"] = to_json(h.unit);
  Json mult = Json::array();
  for (std::size_t a = 0; a < n; ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < n; ++b) row.push_back(to_json(to_dense(h.mult[a * n + b], n)));
    mult.push_back(row);
  }
  j["mult"] = mult;
  Json comult = Json::array();
  for (std::size_t a = 0; a < n; ++a) comult.push_back(to_json(to_dense(h.comult[a], n * n)));
  j["comult"] = comult;
  j["counit"] = to_json(h.counit);
  // Row i, column j holds the b_i-coefficient of S(b_j).
  Matrix s = h.antipode_matrix();
  j["antipode"] = to_json(s);
  j["grouplikes"] = h.grouplikes;
  if (h.antipode_inverse) {
    Matrix si = *h.antipode_inverse_matrix();
    j["antipode_inverse"] = to_json(si);
  }
  if (!h.named.empty()) {
    Json named = Json::object();
    for (const auto& [k, v] : h.named) named[k] = to_json(v);
    j["named"] = named;
  }
  return j;
}

FiniteDimHopf hopf_from_json(const Json& j) {
  FiniteDimHopf h;
  h.name = j.value("name", std::string("H"));
  h.field_order = j.contains("field") ? j["field"].value("cyclotomic_order", default_field_order())
                                      : default_field_order();
  const int N = h.field_order;
  h.n = j.at("dim").get<std::size_t>();
  const std::size_t n = h.n;
  h.labels = j.at("basis").get<std::vector<std::string>>();
  h.unit = vec_from_json(j.at("unit"), N);
  const Json& mult = j.at("mult");
  if (mult.size() != n) throw DimensionMismatch("mult must be n x n");
  for (std::size_t a = 0; a < n; ++a) {
    if (mult[a].size() != n) throw DimensionMismatch("mult must be n x n");
    for (std::size_t b = 0; b < n; ++b) {
      Vec v = vec_from_json(mult[a][b], N);
      if (v.size() != n) throw DimensionMismatch("mult entry length");
      h.mult.push_back(to_sparse(v));
    }
  }
  for (const auto& c : j.at("comult")) {
    Vec v = vec_from_json(c, N);
    if (v.size() != n * n) throw DimensionMismatch("comult entry length");
    h.comult.push_back(to_sparse(v));
  }
  h.counit = vec_from_json(j.at("counit"), N);
  Matrix s = matrix_from_json(j.at("antipode"), N);
  if (s.rows() != n || s.cols() != n) throw DimensionMismatch("antipode must be n x n");
  for (std::size_t c = 0; c < n; ++c) h.antipode.push_back(to_sparse(s.col(c)));
  if (j.contains("grouplikes")) h.grouplikes = j["grouplikes"].get<std::vector<std::size_t>>();
  if (j.contains("antipode_inverse")) {
    Matrix si = matrix_from_json(j["antipode_inverse"], N);
    if (si.rows() != n || si.cols() != n) throw DimensionMismatch("antipode inverse must be n x n");
    std::vector<SparseVec> cols;
    for (std::size_t c = 0; c < n; ++c) cols.push_back(to_sparse(si.col(c)));
    h.antipode_inverse = std::move(cols);
  }
  if (j.contains("named"))
    for (auto it = j["named"].begin(); it != j["named"].end(); ++it)
      h.named[it.key()] = vec_from_json(it.value(), N);
  check_shapes(h);
  return h;
}

}  // namespace parcomod
