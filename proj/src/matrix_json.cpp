#include "nradius/matrix_json.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "nradius/error.hpp"

namespace nradius {

using nlohmann::json;

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("matrix JSON must be an object");
  if (!j.contains("dim") || !j.contains("entries")) {
    throw ParseError("matrix JSON needs \"dim\" and \"entries\"");
  }
  const json& jd = j.at("dim");
  if (!jd.is_number_integer() || jd.get<long long>() < 1) {
    throw ParseError("\"dim\" must be a positive integer");
  }
  const auto dim = static_cast<std::size_t>(jd.get<long long>());
  const json& je = j.at("entries");
  if (!je.is_array()) throw ParseError("\"entries\" must be an array");
  if (je.size() != dim * dim) {
    throw ParseError("\"entries\" holds " + std::to_string(je.size()) + " values, expected " +
                     std::to_string(dim * dim));
  }
  std::vector<cplx> entries;
  entries.reserve(je.size());
  for (const auto& e : je) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ParseError("each entry must be a [re, im] pair of numbers");
    }
    const double re = e[0].get<double>();
    const double im = e[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError("entries must be finite");
    entries.emplace_back(re, im);
  }
  return ComplexMatrix(dim, std::move(entries));
}

json matrix_to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (const auto& z : m.entries()) entries.push_back({z.real(), z.imag()});
  return {{"dim", m.dim()}, {"entries", std::move(entries)}};
}

ComplexMatrix parse_matrix(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed matrix JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_matrix(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << matrix_to_json(m).dump() << '\n';
}

} // namespace nradius
