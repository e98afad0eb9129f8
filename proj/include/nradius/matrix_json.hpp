#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "nradius/matrix.hpp"

namespace nradius {

// Matrix file format: {"dim": n, "entries": [[re, im], ...]} with n*n
// row-major entries. Anything else raises ParseError.

ComplexMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

ComplexMatrix parse_matrix(const std::string& text);
ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);

} // namespace nradius
