#include "linlaw/text_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "linlaw/error.hpp"

namespace linlaw {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Next line that is neither blank nor a '#' comment.
bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (!t.empty() && t.front() != '#') {
      line = std::string(t);
      return true;
    }
  }
  return false;
}

std::vector<double> parse_reals(std::string_view line, std::size_t line_no) {
  std::vector<double> out;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == ',')) ++p;
    if (p == end) break;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(p, end, v);
    if (ec != std::errc{})
      throw Error(ErrorCode::ParseError, fmt::format("line {}: expected a number", line_no));
    out.push_back(v);
    p = ptr;
  }
  return out;
}

}  // namespace

Matrix read_matrix_text(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no))
    throw Error(ErrorCode::ParseError, "empty matrix file");

  std::size_t dim = 0;
  const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), dim);
  if (ec != std::errc{} || ptr != line.data() + line.size() || dim == 0)
    throw Error(ErrorCode::ParseError, fmt::format("line {}: expected a positive dimension", line_no));

  Matrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!next_content_line(in, line, line_no))
      throw Error(ErrorCode::ParseError, fmt::format("expected {} rows, found {}", dim, r));
    const auto row = parse_reals(line, line_no);
    if (row.size() != dim)
      throw Error(ErrorCode::NotSquare,
                  fmt::format("line {}: row has {} entries, expected {}", line_no, row.size(), dim));
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = row[c];
  }
  if (next_content_line(in, line, line_no))
    throw Error(ErrorCode::NotSquare, fmt::format("line {}: more than {} rows", line_no, dim));
  return m;
}

void write_matrix_text(std::ostream& out, const Matrix& m) {
  out << m.rows() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << fmt::format("{}", m(r, c));
    out << '\n';
  }
}

TransferMatrix load_transfer_matrix(const std::filesystem::path& path, bool normalize) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::UnreadableSource, "cannot open " + path.string());
  Matrix raw = read_matrix_text(in);
  if (normalize) raw = normalize_columns(std::move(raw));
  return TransferMatrix::validate(std::move(raw));
}

void write_series(std::ostream& out, const CategoricalSeries& series) {
  std::string buf;
  buf.reserve(series.size() * 2);
  for (State s : series.states()) {
    buf += std::to_string(s);
    buf += '\n';
  }
  out << buf;
}

CategoricalSeries read_series(std::istream& in, std::optional<std::size_t> alphabet_size) {
  std::vector<State> states;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty()) continue;
    State v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size())
      throw Error(ErrorCode::ParseError, fmt::format("line {}: expected a state index", line_no));
    states.push_back(v);
  }
  if (states.empty()) throw Error(ErrorCode::BadParameter, "series file holds no samples");
  const std::size_t alphabet =
      alphabet_size.value_or(static_cast<std::size_t>(*std::max_element(states.begin(), states.end())) + 1);
  return CategoricalSeries(std::move(states), alphabet);
}

}  // namespace linlaw
