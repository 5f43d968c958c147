#include "relicut/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string_view>

#include "relicut/errors.hpp"
#include "relicut/random.hpp"

namespace relicut {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

class LineError {
 public:
  LineError(const std::string& source, std::size_t line) : prefix_(source + ":" + std::to_string(line) + ": ") {}
  [[noreturn]] void fail(const std::string& what) const { throw InputError(prefix_ + what); }

  std::uint64_t count(std::string_view s, const char* what) const {
    std::uint64_t x = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || end != s.data() + s.size())
      fail(std::string("expected a nonnegative integer for ") + what + ", got '" + std::string(s) + "'");
    return x;
  }

  double probability(std::string_view s) const {
    double x = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || end != s.data() + s.size()) fail("expected a probability, got '" + std::string(s) + "'");
    if (!(x >= 0.0 && x <= 1.0)) fail("probability " + std::string(s) + " outside [0, 1]");
    return x;
  }

 private:
  std::string prefix_;
};

std::string format_p(double p) {
  std::ostringstream out;
  out << std::setprecision(std::numeric_limits<double>::max_digits10) << p;
  return out.str();
}

}  // namespace

Multigraph GraphFile::graph() const {
  if (directed) throw InputError("expected an undirected graph ('e' lines), file has arcs");
  return Multigraph::build(n, edges);
}

Digraph GraphFile::digraph() const {
  if (!directed) throw InputError("expected a directed graph ('a' lines), file has undirected edges");
  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  for (const Edge& e : edges) arcs.push_back({e.u, e.v, e.p_fail});
  return Digraph::build(n, std::move(arcs));
}

GraphFile parse_graph(std::istream& in, std::optional<double> default_p, const std::string& source) {
  if (default_p && !(*default_p >= 0.0 && *default_p <= 1.0))
    throw InputError("default probability outside [0, 1]");
  GraphFile file;
  bool have_header = false;
  bool have_kind = false;
  std::size_t declared = 0;
  std::size_t line_no = 0;
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto fields = split(line);
    if (fields.empty()) continue;
    const LineError err(source, line_no);
    if (fields[0] == "p") {
      if (have_header) err.fail("duplicate header line");
      if (fields.size() != 4 || fields[1] != "reliability") err.fail("header must read 'p reliability <n> <m>'");
      file.n = err.count(fields[2], "n");
      declared = err.count(fields[3], "m");
      if (file.n == 0) err.fail("vertex count must be positive");
      have_header = true;
      continue;
    }
    if (fields[0] != "e" && fields[0] != "a") err.fail("unknown line type '" + std::string(fields[0]) + "'");
    if (!have_header) err.fail("edge line before the 'p reliability' header");
    const bool arc = fields[0] == "a";
    if (have_kind && arc != file.directed) err.fail("mixed 'e' and 'a' lines");
    have_kind = true;
    file.directed = arc;
    if (fields.size() < 3 || fields.size() > 4) err.fail("expected '" + std::string(fields[0]) + " <u> <v> [p_fail]'");
    const std::uint64_t u = err.count(fields[1], "u");
    const std::uint64_t v = err.count(fields[2], "v");
    if (u < 1 || u > file.n) err.fail("vertex " + std::to_string(u) + " outside [1, " + std::to_string(file.n) + "]");
    if (v < 1 || v > file.n) err.fail("vertex " + std::to_string(v) + " outside [1, " + std::to_string(file.n) + "]");
    if (u == v) err.fail("self-loop at vertex " + std::to_string(u));
    double p = 0.0;
    if (fields.size() == 4)
      p = err.probability(fields[3]);
    else if (default_p)
      p = *default_p;
    else
      err.fail("no failure probability on the line and no default (--p) given");
    if (file.edges.size() == declared) err.fail("more edge lines than the declared m = " + std::to_string(declared));
    file.edges.push_back({static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1), p});
  }
  if (!have_header) throw InputError(source + ": missing 'p reliability <n> <m>' header");
  if (file.edges.size() != declared)
    throw InputError(source + ": header declares m = " + std::to_string(declared) + " but file has " +
                     std::to_string(file.edges.size()) + " edge lines");
  return file;
}

GraphFile parse_graph_file(const std::string& path, std::optional<double> default_p) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  return parse_graph(in, default_p, path);
}

std::string format_graph(const Multigraph& g) {
  std::ostringstream out;
  out << "p reliability " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << format_p(e.p_fail) << '\n';
  return out.str();
}

std::string format_digraph(const Digraph& g) {
  std::ostringstream out;
  out << "p reliability " << g.vertex_count() << ' ' << g.arc_count() << '\n';
  for (const Arc& a : g.arcs()) out << "a " << a.tail + 1 << ' ' << a.head + 1 << ' ' << format_p(a.p_fail) << '\n';
  return out.str();
}

Multigraph make_path(std::size_t n, double p) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({VertexId(i), VertexId(i + 1), p});
  return Multigraph::build(n, std::move(edges));
}

Multigraph make_cycle(std::size_t n, double p) { return make_bundled_cycle(n, 1, p); }

Multigraph make_clique(std::size_t n, double p) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({VertexId(i), VertexId(j), p});
  return Multigraph::build(n, std::move(edges));
}

Multigraph make_bundled_cycle(std::size_t n, std::size_t bundle, double p) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  if (bundle < 1) throw InputError("bundle size must be at least 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < bundle; ++b) edges.push_back({VertexId(i), VertexId((i + 1) % n), p});
  return Multigraph::build(n, std::move(edges));
}

Multigraph make_random_graph(std::size_t n, std::size_t m, double p, std::uint64_t seed) {
  if (n == 0) throw InputError("vertex count must be positive");
  if (m + 1 < n) throw InputError("a connected graph on n vertices needs at least n - 1 edges");
  if (n == 1 && m > 0) throw InputError("a single vertex admits no edges");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.push_back({VertexId(rng.below(v)), VertexId(v), p});
  while (edges.size() < m) {
    const auto u = static_cast<VertexId>(rng.below(n));
    const auto v = static_cast<VertexId>(rng.below(n));
    if (u != v) edges.push_back({std::min(u, v), std::max(u, v), p});
  }
  return Multigraph::build(n, std::move(edges));
}

Digraph make_bidirected_cycle(std::size_t n, std::size_t bundle, double p) {
  if (n < 2) throw InputError("a directed cycle needs at least 2 vertices");
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < bundle; ++b) {
      arcs.push_back({VertexId(i), VertexId((i + 1) % n), p});
      arcs.push_back({VertexId((i + 1) % n), VertexId(i), p});
    }
  return Digraph::build(n, std::move(arcs));
}

}  // namespace relicut
