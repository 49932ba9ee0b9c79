#include "suncs/json_io.hpp"

#include <stdexcept>

namespace suncs {

using nlohmann::json;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument("expected a complex number as [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a non-empty matrix array");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty())
    throw std::invalid_argument("expected matrix rows as arrays of [re, im] pairs");
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<Eigen::Index>(j[r].size()) != cols)
      throw std::invalid_argument("matrix rows have inconsistent lengths");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(complex_to_json(v[k]));
  return out;
}

json angles_to_json(const AngleCoordinates& a) {
  return json{{"xi", a.xi}, {"phi", a.phi}};
}

AngleCoordinates angles_from_json(const json& j) {
  if (!j.is_object() || !j.contains("xi") || !j.contains("phi"))
    throw std::invalid_argument("expected angles as {\"xi\": [...], \"phi\": [...]}");
  AngleCoordinates a;
  a.xi = j.at("xi").get<std::vector<double>>();
  a.phi = j.at("phi").get<std::vector<double>>();
  return a;
}

json tree_to_json(const DecompositionTree& t) {
  if (t.is_leaf()) return json{{"theta", t.theta()}, {"phi1", t.phi1()}, {"phi2", t.phi2()}};
  return json{{"theta", t.theta()},
              {"phi", t.phi()},
              {"left", tree_to_json(t.left())},
              {"right", tree_to_json(t.right())}};
}

DecompositionTree tree_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("expected a decomposition tree object");
  if (j.contains("left") || j.contains("right")) {
    if (!j.contains("left") || !j.contains("right") || !j.contains("theta") || !j.contains("phi"))
      throw std::invalid_argument("tree node needs theta, phi, left, right");
    return DecompositionTree::node(j.at("theta").get<double>(), j.at("phi").get<double>(),
                                   tree_from_json(j.at("left")), tree_from_json(j.at("right")));
  }
  if (!j.contains("theta") || !j.contains("phi1") || !j.contains("phi2"))
    throw std::invalid_argument("tree leaf needs theta, phi1, phi2");
  return DecompositionTree::su2(j.at("theta").get<double>(), j.at("phi1").get<double>(),
                                j.at("phi2").get<double>());
}

}  // namespace suncs
