#include "unital/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace unital {

namespace {

std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::size_t parse_number(std::string_view tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (tok.empty() || ec != std::errc() || ptr != end)
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(tok) + "'");
  return value;
}

std::size_t header_field(const std::string& tok, const char* key, std::size_t line) {
  const std::string prefix = std::string(key) + "=";
  if (tok.rfind(prefix, 0) != 0) throw ParseError(line, "expected '" + prefix + "<int>' in header");
  return parse_number(std::string_view(tok).substr(prefix.size()), line, key);
}

}  // namespace

UnitalFile parse_unital(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t v = 0, k = 0;
  std::vector<Block> blocks;
  std::set<Block> seen;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    std::istringstream ss(line);
    if (!have_header) {
      std::string magic, vt, kt, extra;
      ss >> magic >> vt >> kt;
      if (magic != "unital" || vt.empty() || kt.empty() || (ss >> extra))
        throw ParseError(lineno, "expected header 'unital v=<int> k=<int>'");
      v = header_field(vt, "v", lineno);
      k = header_field(kt, "k", lineno);
      have_header = true;
      continue;
    }
    Block blk;
    std::string tok;
    while (ss >> tok) {
      const auto x = parse_number(tok, lineno, "point index");
      if (x >= v) throw ParseError(lineno, "point " + tok + " out of range for v=" + std::to_string(v));
      if (!blk.empty() && x <= blk.back()) throw ParseError(lineno, "block entries not strictly ascending");
      blk.push_back(static_cast<Point>(x));
    }
    if (!seen.insert(blk).second) throw ParseError(lineno, "duplicate block");
    blocks.push_back(std::move(blk));
  }
  if (!have_header) throw ParseError(lineno, "missing header");
  return UnitalFile{Incidence::make(v, std::move(blocks)), k};
}

UnitalFile parse_unital_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_unital(in);
}

Unital read_unital(std::istream& in) {
  auto f = parse_unital(in);
  if (f.k < 3) throw std::invalid_argument("block size k must be at least 3");
  return Unital(std::move(f.incidence), f.k - 1);
}

Unital read_unital_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_unital(in);
}

void write_unital(const Incidence& inc, std::ostream& out) {
  const auto k = inc.constant_block_size();
  out << "unital v=" << inc.num_points() << " k=" << (k ? *k : 0) << '\n';
  for (const auto& blk : inc.blocks()) {
    for (std::size_t i = 0; i < blk.size(); ++i) out << (i ? " " : "") << blk[i];
    out << '\n';
  }
}

void write_unital_file(const Incidence& inc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_unital(inc, out);
  if (!out) throw std::runtime_error("error writing " + path);
}

}  // namespace unital
