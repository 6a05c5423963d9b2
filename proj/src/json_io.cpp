#include "skewtrace/json_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "skewtrace/errors.hpp"

namespace skewtrace {
namespace {

std::vector<std::vector<double>> part_rows(const ComplexMatrix& m, bool imag) {
  std::vector<std::vector<double>> rows(m.dim(), std::vector<double>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) rows[i][j] = imag ? m(i, j).imag() : m(i, j).real();
  return rows;
}

void read_part(const json& j, const char* key, std::size_t n, std::vector<Complex>& out,
               bool imag) {
  if (!j.contains(key)) throw InvalidArgument(std::string("matrix JSON: missing \"") + key + "\"");
  const json& rows = j.at(key);
  if (!rows.is_array() || rows.size() != n) {
    throw InvalidArgument(std::string("matrix JSON: \"") + key + "\" must have " +
                          std::to_string(n) + " rows");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != n) {
      throw InvalidArgument(std::string("matrix JSON: \"") + key + "\" row " + std::to_string(i) +
                            " must have " + std::to_string(n) + " entries");
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (!row[k].is_number()) {
        throw InvalidArgument(std::string("matrix JSON: \"") + key + "\" entries must be numbers");
      }
      const double v = row[k].get<double>();
      if (imag) {
        out[i * n + k].imag(v);
      } else {
        out[i * n + k].real(v);
      }
    }
  }
}

double parse_decimal(std::string_view text, bool& ok) {
  // strtod accepts forms from_chars on older toolchains does not; require
  // the whole token to be consumed.
  const std::string s(text);
  char* end = nullptr;
  const double value = std::strtod(s.c_str(), &end);
  ok = !s.empty() && end == s.c_str() + s.size() && std::isfinite(value);
  return value;
}

}  // namespace

double round_significant(double value, int digits) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

json matrix_to_json(const ComplexMatrix& m) {
  return json{{"dim", m.dim()}, {"re", part_rows(m, false)}, {"im", part_rows(m, true)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("matrix JSON: expected an object");
  if (!j.contains("dim") || !j.at("dim").is_number_integer() || j.at("dim").get<long long>() < 1) {
    throw InvalidArgument("matrix JSON: \"dim\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(j.at("dim").get<long long>());
  std::vector<Complex> entries(n * n);
  read_part(j, "re", n, entries, false);
  read_part(j, "im", n, entries, true);
  return ComplexMatrix(n, std::move(entries));
}

std::string_view to_string(StateKind kind) {
  return kind == StateKind::density ? "density" : "observable";
}

json state_to_json(const ComplexMatrix& m, StateKind kind) {
  json j = matrix_to_json(m);
  j["type"] = std::string(to_string(kind));
  return j;
}

ComplexMatrix state_matrix_from_json(const json& j, StateKind expected) {
  if (j.is_object() && j.contains("type")) {
    const json& type = j.at("type");
    if (!type.is_string() || type.get<std::string>() != to_string(expected)) {
      throw InvalidArgument("state file: expected \"type\": \"" + std::string(to_string(expected)) +
                            "\"");
    }
  }
  return matrix_from_json(j);
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument("malformed JSON in " + path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << text;
  if (!out) throw InvalidArgument("write failed for " + path.string());
}

DensityMatrix read_density_file(const std::filesystem::path& path) {
  return DensityMatrix::from_matrix(state_matrix_from_json(read_json_file(path), StateKind::density));
}

Observable read_observable_file(const std::filesystem::path& path) {
  return Observable(state_matrix_from_json(read_json_file(path), StateKind::observable));
}

json to_json(const SkewQuantities& q) {
  return json{{"alpha", round_significant(q.alpha)},     {"V", round_significant(q.V)},
              {"I_alpha", round_significant(q.I_alpha)}, {"J_alpha", round_significant(q.J_alpha)},
              {"U_alpha", round_significant(q.U_alpha)}, {"K_alpha", round_significant(q.K_alpha)},
              {"L_alpha", round_significant(q.L_alpha)}, {"W_alpha", round_significant(q.W_alpha)}};
}

json to_json(const InequalityCheck& check) {
  json j{{"id", std::string(to_string(check.id))},
         {"lhs", round_significant(check.lhs)},
         {"rhs", round_significant(check.rhs)},
         {"margin", round_significant(check.margin)},
         {"holds", check.holds},
         {"tol", check.tol}};
  if (!check.detail.empty()) j["detail"] = check.detail;
  return j;
}

std::optional<double> parse_number(std::string_view text) {
  const auto slash = text.find('/');
  bool ok = false;
  if (slash == std::string_view::npos) {
    const double v = parse_decimal(text, ok);
    if (!ok) return std::nullopt;
    return v;
  }
  long long num = 0;
  long long den = 0;
  const auto num_text = text.substr(0, slash);
  const auto den_text = text.substr(slash + 1);
  const auto r1 = std::from_chars(num_text.data(), num_text.data() + num_text.size(), num);
  const auto r2 = std::from_chars(den_text.data(), den_text.data() + den_text.size(), den);
  if (num_text.empty() || den_text.empty() || r1.ec != std::errc{} ||
      r1.ptr != num_text.data() + num_text.size() || r2.ec != std::errc{} ||
      r2.ptr != den_text.data() + den_text.size() || den == 0) {
    return std::nullopt;
  }
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace skewtrace
