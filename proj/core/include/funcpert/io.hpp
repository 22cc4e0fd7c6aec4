#pragma once

#include <filesystem>
#include <string>

#include "funcpert/besov.hpp"
#include "funcpert/matnum.hpp"

namespace funcpert {

// JSON text formats (doubles round-trip exactly):
//   matrix:  {"rows": r, "cols": c, "entries": [[re, im], ...]} row-major
//   bipoly:  {"deg1": n1, "deg2": n2, "coeffs": [[re, im], ...]} row-major
//   trig:    [{"j1": int, "j2": int, "re": float, "im": float}, ...]
// Malformed input raises std::runtime_error; non-finite values are rejected
// on write.

std::string matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const std::string& text);

std::string bipoly_to_json(const BiPolynomial& f);
BiPolynomial bipoly_from_json(const std::string& text);

std::string trig_to_json(const TrigPolynomial2D& f);
TrigPolynomial2D trig_from_json(const std::string& text);

void save_text_file(const std::filesystem::path& path, const std::string& text);
std::string load_text_file(const std::filesystem::path& path);

void save_matrix(const std::filesystem::path& path, const CMatrix& m);
CMatrix load_matrix(const std::filesystem::path& path);

void save_bipoly(const std::filesystem::path& path, const BiPolynomial& f);
BiPolynomial load_bipoly(const std::filesystem::path& path);

void save_trig(const std::filesystem::path& path, const TrigPolynomial2D& f);
TrigPolynomial2D load_trig(const std::filesystem::path& path);

}  // namespace funcpert
