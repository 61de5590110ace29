#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "latdeg/constructions.hpp"

namespace latdeg {

std::string format_pointset(std::span<const LatticePoint> points, std::size_t d, std::int64_t n,
                            const std::string& family, std::uint64_t seed) {
  std::vector<LatticePoint> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream out;
  out << "# latdeg v1 d=" << d << " n=" << n << " family=" << family << " seed=" << seed << "\n";
  for (const auto& p : sorted) {
    if (p.dim() != d) throw std::invalid_argument("dimension mismatch");
    for (std::size_t i = 0; i < d; ++i) out << (i ? " " : "") << p[i];
    out << "\n";
  }
  return out.str();
}

void write_pointset(const std::string& path, std::span<const LatticePoint> points, std::size_t d, std::int64_t n,
                    const std::string& family, std::uint64_t seed) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path + " for writing");
  f << format_pointset(points, d, n, family, seed);
  if (!f) throw Error("write failed: " + path);
}

PointSetFile parse_pointset(const std::string& text) {
  PointSetFile out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string tok;
      hs >> tok;
      if (tok != "latdeg") continue;
      while (hs >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        const std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
        try {
          if (k == "d") out.d = std::stoul(v);
          else if (k == "n") out.n = std::stoll(v);
          else if (k == "family") out.family = v;
          else if (k == "seed") out.seed = std::stoull(v);
        } catch (const std::logic_error&) {
          throw std::invalid_argument("bad header field '" + tok + "' on line " + std::to_string(lineno));
        }
      }
      continue;
    }
    std::istringstream ls(line);
    std::vector<Coord> c;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      Coord v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::logic_error&) {
        used = 0;
      }
      if (used != tok.size()) throw std::invalid_argument("bad coordinate '" + tok + "' on line " + std::to_string(lineno));
      c.push_back(v);
    }
    out.points.emplace_back(std::move(c));
  }
  if (!out.points.empty()) {
    const std::size_t d = common_dimension(out.points);
    if (out.d != 0 && out.d != d) throw std::invalid_argument("dimension mismatch");
    out.d = d;
  }
  return out;
}

PointSetFile read_pointset(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_pointset(ss.str());
}

}  // namespace latdeg
