#include "qgor/facet_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "qgor/error.hpp"

namespace qgor {

namespace {

constexpr long long kMaxVertexId = std::numeric_limits<Vertex>::max() - 1;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\f\v");
  return s.substr(first, last - first + 1);
}

long long parse_integer(std::string_view token, std::size_t line) {
  long long value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  if (!token.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line, "integer out of range: '" + std::string(token) + "'");
  }
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, "expected an integer, found '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

SimplicialComplex parse_facet_file(std::string_view text) {
  std::vector<std::vector<long long>> facets;
  long long header_n = -1;
  std::size_t header_line = 0;
  long long max_id = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    pos = next == std::string_view::npos ? text.size() + 1 : next + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == 'n') {
      auto rest = trim(line.substr(1));
      if (rest.empty() || rest.front() != '=') {
        throw ParseError(line_no, "malformed header, expected n=<int>");
      }
      if (header_n >= 0) throw ParseError(line_no, "duplicate n= header");
      if (!facets.empty()) throw ParseError(line_no, "n= header must precede the facets");
      header_n = parse_integer(trim(rest.substr(1)), line_no);
      if (header_n < 0 || header_n > kMaxVertexId) {
        throw ParseError(line_no, "invalid vertex count " + std::to_string(header_n));
      }
      header_line = line_no;
      continue;
    }

    std::vector<long long> facet;
    std::istringstream tokens{std::string(line)};
    std::string token;
    while (tokens >> token) {
      const long long id = parse_integer(token, line_no);
      if (id <= 0) {
        throw ParseError(line_no, "vertex ids must be positive, found " + std::to_string(id));
      }
      if (id > kMaxVertexId) throw ParseError(line_no, "vertex id too large");
      if (header_n >= 0 && id > header_n) {
        throw ParseError(line_no, "vertex " + std::to_string(id) + " exceeds n=" +
                                      std::to_string(header_n) + " declared on line " +
                                      std::to_string(header_line));
      }
      max_id = std::max(max_id, id);
      facet.push_back(id);
    }
    facets.push_back(std::move(facet));
  }

  if (facets.empty()) throw ParseError(line_no, "no facets");
  const long long n = header_n >= 0 ? header_n : max_id;
  return SimplicialComplex::from_facets(facets, n);
}

SimplicialComplex read_facet_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_facet_file(buffer.str());
}

std::string format_facet_file(const SimplicialComplex& complex) {
  std::string out = "n=" + std::to_string(complex.n_vertices()) + "\n";
  for (const Face& f : complex.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(f[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace qgor
