#include "pertsum/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "pertsum/errors.hpp"

namespace pertsum {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

[[noreturn]] void fail(std::size_t line, const std::string& reason) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + reason);
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && is_space(raw[i])) ++i;
      if (i == raw.size()) break;
      const std::size_t start = i;
      while (i < raw.size() && !is_space(raw[i])) ++i;
      line.tokens.push_back(raw.substr(start, i - start));
    }
    if (line.tokens.empty() || line.tokens.front().front() == '%') continue;
    out.push_back(std::move(line));
  }
  return out;
}

double parse_real(std::string_view s, std::size_t line) {
  std::string_view body = s;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (body.empty() || ec != std::errc{} || ptr != body.data() + body.size()) {
    fail(line, "malformed number '" + std::string(s) + "'");
  }
  if (!std::isfinite(value)) fail(line, "non-finite number '" + std::string(s) + "'");
  return value;
}

Complex parse_token(std::string_view token, std::size_t line) {
  if (token.front() != '(') return parse_real(token, line);
  if (token.size() < 5 || token.back() != ')') fail(line, "malformed complex token '" + std::string(token) + "'");
  const std::string_view inner = token.substr(1, token.size() - 2);
  const auto comma = inner.find(',');
  if (comma == std::string_view::npos || inner.find(',', comma + 1) != std::string_view::npos) {
    fail(line, "complex token needs exactly one ',': '" + std::string(token) + "'");
  }
  return {parse_real(inner.substr(0, comma), line), parse_real(inner.substr(comma + 1), line)};
}

std::size_t parse_dimension(const std::vector<Line>& lines) {
  if (lines.empty()) fail(1, "missing dimension header");
  const Line& header = lines.front();
  if (header.tokens.size() != 1) fail(header.number, "dimension header must be a single token");
  const std::string_view t = header.tokens.front();
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), n);
  if (ec != std::errc{} || ptr != t.data() + t.size() || n == 0) {
    fail(header.number, "dimension must be a positive integer, got '" + std::string(t) + "'");
  }
  return n;
}

std::string comment_block(std::string_view comment) {
  std::string out;
  std::size_t pos = 0;
  while (pos < comment.size()) {
    const std::size_t end = std::min(comment.find('\n', pos), comment.size());
    out += "% ";
    out += comment.substr(pos, end - pos);
    out += '\n';
    pos = end + 1;
  }
  return out;
}

std::string format_entry(Complex z) { return z.imag() == 0.0 ? format_real(z.real()) : format_complex(z); }

}  // namespace

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value == 0.0 ? 0.0 : value);
  return buf;
}

std::string format_complex(Complex value) {
  return "(" + format_real(value.real()) + "," + format_real(value.imag()) + ")";
}

std::string format_matrix(const HermitianMatrix& m, std::string_view comment) {
  std::string out = comment_block(comment);
  out += std::to_string(m.dim()) + "\n";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) out += ' ';
      out += format_entry(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string format_vector(const Vector& v, std::string_view comment) {
  std::string out = comment_block(comment);
  out += std::to_string(v.dim()) + "\n";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ' ';
    out += format_entry(v[i]);
  }
  out += '\n';
  return out;
}

HermitianMatrix parse_matrix(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  const std::size_t n = parse_dimension(lines);
  if (lines.size() - 1 < n) fail(lines.back().number, "expected " + std::to_string(n) + " matrix rows");
  if (lines.size() - 1 > n) fail(lines[n + 1].number, "unexpected content after the last row");

  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (std::size_t r = 1; r <= n; ++r) {
    const Line& line = lines[r];
    if (line.tokens.size() != n) {
      fail(line.number, "expected " + std::to_string(n) + " tokens, got " + std::to_string(line.tokens.size()));
    }
    for (auto t : line.tokens) entries.push_back(parse_token(t, line.number));
  }
  return HermitianMatrix::from_entries(n, std::move(entries));
}

StateVector parse_vector(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  const std::size_t n = parse_dimension(lines);
  std::vector<Complex> entries;
  for (std::size_t r = 1; r < lines.size(); ++r)
    for (auto t : lines[r].tokens) {
      if (entries.size() == n) fail(lines[r].number, "more than " + std::to_string(n) + " entries");
      entries.push_back(parse_token(t, lines[r].number));
    }
  if (entries.size() != n) {
    fail(lines.back().number, "expected " + std::to_string(n) + " entries, got " + std::to_string(entries.size()));
  }
  const Vector v(std::move(entries));
  const double norm = v.norm();
  if (std::abs(norm - 1.0) > kVectorNormSlack) {
    throw Error(ErrorKind::NotNormalized, "norm " + format_real(norm));
  }
  return StateVector(normalized(v));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorKind::InvalidArgument, "write failed for '" + path + "'");
}

}  // namespace pertsum
