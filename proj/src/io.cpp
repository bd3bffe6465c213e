#include "tlrep/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>

#include "tlrep/errors.hpp"

namespace tlrep::io {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

// Whole-token integer; a leading '+' is allowed.
bool parse_int(std::string_view token, int& value) {
  if (!token.empty() && token.front() == '+') {
    token.remove_prefix(1);
    if (token.empty() || token.front() == '-' || token.front() == '+') return false;
  }
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

int parse_label(std::string_view token, const std::string& what) {
  int value = 0;
  if (!parse_int(token, value) || value < 0)
    throw ParseError("bad " + what + " '" + std::string(token) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

BraidWord parse_braid_word(std::string_view text, int strands) {
  if (strands < 2) throw ParseError("a braid word needs at least two strands");
  std::vector<int> letters;
  int position = 0;
  for (std::string_view token : split_ws(text)) {
    ++position;
    int value = 0;
    const std::string quoted = "token " + std::to_string(position) + " '" + std::string(token) + "'";
    if (!parse_int(token, value)) throw ParseError(quoted + " is not an integer", position);
    if (value == 0) throw ParseError(quoted + ": generator index 0 does not exist", position);
    if (std::abs(value) > strands - 1)
      throw ParseError(quoted + " out of range: |index| must be at most " +
                           std::to_string(strands - 1),
                       position);
    letters.push_back(value);
  }
  return BraidWord(strands, std::move(letters));
}

LabelSpec parse_labels(std::string_view text) {
  text = trim(text);
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos || text.find(':', colon + 1) != std::string_view::npos)
    throw ParseError("labels must look like 'a1,a2,...,an:out'");
  LabelSpec spec;
  std::string_view list = text.substr(0, colon);
  while (true) {
    const std::size_t comma = list.find(',');
    spec.inputs.push_back(parse_label(trim(list.substr(0, comma)), "input label"));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  spec.output = parse_label(trim(text.substr(colon + 1)), "output label");
  return spec;
}

GridSpec parse_grid(std::string_view text) {
  text = trim(text);
  const std::size_t dots = text.find("..");
  GridSpec grid;
  if (dots == std::string_view::npos) {
    grid.r_min = grid.r_max = parse_label(text, "grid value");
  } else {
    grid.r_min = parse_label(text.substr(0, dots), "grid lower bound");
    grid.r_max = parse_label(text.substr(dots + 2), "grid upper bound");
  }
  if (grid.r_min < 3 || grid.r_max < grid.r_min)
    throw ParseError("grid must satisfy 3 <= rmin <= rmax, got '" + std::string(text) + "'");
  return grid;
}

std::string format_real(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  if (ec != std::errc()) throw std::runtime_error("format_real: buffer too small");
  return std::string(buf, ptr);
}

nlohmann::json to_json(const RecouplingMatrix& m) {
  nlohmann::json data = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.entries.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.entries.cols(); ++c) row.push_back(m.entries(r, c));
    data.push_back(std::move(row));
  }
  return {{"rows", m.row_labels}, {"cols", m.col_labels}, {"data", std::move(data)}};
}

nlohmann::json to_json(const ComplexMatrix& u) {
  nlohmann::json data = nlohmann::json::array();
  for (Eigen::Index r = 0; r < u.rows(); ++r)
    for (Eigen::Index c = 0; c < u.cols(); ++c)
      data.push_back(nlohmann::json::array({u(r, c).real(), u(r, c).imag()}));
  return {{"dim", u.rows()}, {"data", std::move(data)}};
}

UnitaryMatrix unitary_from_json(const nlohmann::json& j) {
  const auto n = j.at("dim").get<Eigen::Index>();
  const auto& data = j.at("data");
  if (n < 0 || data.size() != static_cast<std::size_t>(n * n))
    throw ParseError("matrix JSON: data length does not match dim^2");
  UnitaryMatrix u(n, n);
  for (Eigen::Index t = 0; t < n * n; ++t) {
    const auto& z = data.at(t);
    if (z.size() != 2) throw ParseError("matrix JSON: entries must be [re, im]");
    u(t / n, t % n) = Complex(z.at(0).get<double>(), z.at(1).get<double>());
  }
  return u;
}

nlohmann::json to_json(const CheckReport& report) {
  nlohmann::json residual = std::isfinite(report.residual) ? nlohmann::json(report.residual)
                                                           : nlohmann::json("inf");
  return {{"name", report.name},
          {"parameters", report.parameters},
          {"passed", report.passed},
          {"residual", std::move(residual)},
          {"tolerance", report.tolerance},
          {"elapsed_seconds", report.elapsed_seconds},
          {"detail", report.detail}};
}

std::vector<Unitary2> read_targets(std::istream& in, double tol) {
  std::vector<Unitary2> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    const std::string where = "targets line " + std::to_string(line_no);
    if (tokens.size() != 8) throw ParseError(where + ": expected 8 reals", line_no);
    double v[8];
    for (int t = 0; t < 8; ++t) {
      const char* end = tokens[t].data() + tokens[t].size();
      const auto [ptr, ec] = std::from_chars(tokens[t].data(), end, v[t]);
      if (ec != std::errc() || ptr != end || !std::isfinite(v[t]))
        throw ParseError(where + ": bad real '" + std::string(tokens[t]) + "'", line_no);
    }
    Unitary2 u;
    u << Complex(v[0], v[1]), Complex(v[2], v[3]), Complex(v[4], v[5]), Complex(v[6], v[7]);
    const double residual = (u * u.adjoint() - Unitary2::Identity()).cwiseAbs().maxCoeff();
    if (!(residual < tol))
      throw ParseError(where + ": matrix is not unitary (residual " + format_real(residual) + ")",
                       line_no);
    out.push_back(u);
  }
  return out;
}

}  // namespace tlrep::io
