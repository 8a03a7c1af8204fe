#include "orderlab/json_io.hpp"

#include <stdexcept>

namespace orderlab {

Json matrixToJson(const SquareMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return Json{{"n", m.dim()}, {"rows", rows}};
}

SquareMatrix matrixFromJson(const Json& j) {
  if (!j.contains("n") || !j.contains("rows"))
    throw std::invalid_argument("matrix json: expected keys 'n' and 'rows'");
  const int n = j.at("n").get<int>();
  const auto& rows = j.at("rows");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("matrix json: wrong row count");
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix json: wrong column count");
    for (int col = 0; col < n; ++col) {
      const auto& cell = row.at(col);
      if (cell.is_string())
        m.at(i, col) = Rational::parse(cell.get<std::string>());
      else if (cell.is_number_integer())
        m.at(i, col) = Rational(Int(cell.get<long>()));
      else
        throw std::invalid_argument("matrix json: entries must be strings");
    }
  }
  return m;
}

Json elementaryToJson(const ElementaryMatrix& e) {
  return Json{{"i", e.i}, {"j", e.j}, {"t", e.t.str()}};
}

ElementaryMatrix elementaryFromJson(const Json& j, int n) {
  return ElementaryMatrix(n, j.at("i").get<int>(), j.at("j").get<int>(),
                          Rational::parse(j.at("t").get<std::string>()));
}

}  // namespace orderlab
