#include "funcpert/io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "serial_detail.hpp"

namespace funcpert {

namespace {

using nlohmann::json;

json complex_entry(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument("serialization: non-finite value");
  return json::array({z.real(), z.imag()});
}

Complex parse_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::runtime_error("expected [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

namespace detail {

json matrix_json(const CMatrix& m) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) entries.push_back(complex_entry(m(i, j)));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

CMatrix matrix_from_json_obj(const json& j) {
  try {
    const auto rows = j.at("rows").get<Eigen::Index>();
    const auto cols = j.at("cols").get<Eigen::Index>();
    const auto& entries = j.at("entries");
    if (rows < 0 || cols < 0 || !entries.is_array() ||
        entries.size() != static_cast<std::size_t>(rows * cols))
      throw std::runtime_error("matrix entry count mismatch");
    CMatrix m(rows, cols);
    std::size_t k = 0;
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = parse_complex(entries[k++]);
    if (!m.allFinite()) throw std::runtime_error("matrix has non-finite entries");
    return m;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed matrix: ") + e.what());
  }
}

json bipoly_json(const BiPolynomial& f) {
  json coeffs = json::array();
  const auto& a = f.coeffs();
  for (Eigen::Index k = 0; k < a.rows(); ++k)
    for (Eigen::Index m = 0; m < a.cols(); ++m) coeffs.push_back(complex_entry(a(k, m)));
  return json{{"deg1", f.deg1()}, {"deg2", f.deg2()}, {"coeffs", std::move(coeffs)}};
}

BiPolynomial bipoly_from_json_obj(const json& j) {
  try {
    const int n1 = j.at("deg1").get<int>();
    const int n2 = j.at("deg2").get<int>();
    const auto& coeffs = j.at("coeffs");
    if (n1 < 0 || n2 < 0 || !coeffs.is_array() ||
        coeffs.size() != static_cast<std::size_t>((n1 + 1) * (n2 + 1)))
      throw std::runtime_error("bipoly coefficient count mismatch");
    Eigen::MatrixXcd a(n1 + 1, n2 + 1);
    std::size_t idx = 0;
    for (int k = 0; k <= n1; ++k)
      for (int m = 0; m <= n2; ++m) a(k, m) = parse_complex(coeffs[idx++]);
    return BiPolynomial(std::move(a));
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed bipoly: ") + e.what());
  }
}

}  // namespace detail

std::string matrix_to_json(const CMatrix& m) { return detail::matrix_json(m).dump(); }

CMatrix matrix_from_json(const std::string& text) {
  return detail::matrix_from_json_obj(parse(text, "matrix"));
}

std::string bipoly_to_json(const BiPolynomial& f) { return detail::bipoly_json(f).dump(); }

BiPolynomial bipoly_from_json(const std::string& text) {
  return detail::bipoly_from_json_obj(parse(text, "bipoly"));
}

std::string trig_to_json(const TrigPolynomial2D& f) {
  json out = json::array();
  for (const auto& [key, val] : f.support()) {
    if (!std::isfinite(val.real()) || !std::isfinite(val.imag()))
      throw std::invalid_argument("serialization: non-finite value");
    out.push_back(json{{"j1", key[0]}, {"j2", key[1]}, {"re", val.real()}, {"im", val.imag()}});
  }
  return out.dump();
}

TrigPolynomial2D trig_from_json(const std::string& text) {
  const json j = parse(text, "trig polynomial");
  if (!j.is_array()) throw std::runtime_error("malformed trig polynomial: expected a list");
  TrigPolynomial2D f;
  try {
    for (const auto& item : j)
      f.add(item.at("j1").get<int>(), item.at("j2").get<int>(),
            Complex(item.at("re").get<double>(), item.at("im").get<double>()));
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed trig polynomial: ") + e.what());
  }
  return f;
}

void save_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string load_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void save_matrix(const std::filesystem::path& path, const CMatrix& m) {
  save_text_file(path, matrix_to_json(m));
}
CMatrix load_matrix(const std::filesystem::path& path) {
  return matrix_from_json(load_text_file(path));
}

void save_bipoly(const std::filesystem::path& path, const BiPolynomial& f) {
  save_text_file(path, bipoly_to_json(f));
}
BiPolynomial load_bipoly(const std::filesystem::path& path) {
  return bipoly_from_json(load_text_file(path));
}

void save_trig(const std::filesystem::path& path, const TrigPolynomial2D& f) {
  save_text_file(path, trig_to_json(f));
}
TrigPolynomial2D load_trig(const std::filesystem::path& path) {
  return trig_from_json(load_text_file(path));
}

}  // namespace funcpert
