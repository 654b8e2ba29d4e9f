#include "sqc/topology.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <sstream>

#include "sqc/error.hpp"

namespace sqc {

Edge::Edge(std::string x, std::string y) {
  if (natural_less(y, x)) std::swap(x, y);
  a = std::move(x);
  b = std::move(y);
}

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      auto strip = [](std::string_view s) {
        const auto k = s.find_first_not_of('0');
        return k == std::string_view::npos ? std::string_view{} : s.substr(k);
      };
      const auto na = strip(a.substr(i, ie - i)), nb = strip(b.substr(j, je - j));
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

std::string qubit_id(int index) { return "Q" + std::to_string(index); }

bool Topology::has_edge(const std::string& x, const std::string& y) const {
  const Edge e(x, y);
  return std::binary_search(edges.begin(), edges.end(), e);
}

std::vector<std::string> Topology::row_major_ids() const {
  std::vector<std::pair<LatticeCoord, std::string>> order;
  for (const auto& [id, c] : qubits) order.push_back({{c.col, c.row}, id});
  std::sort(order.begin(), order.end(), [](const auto& l, const auto& r) {
    if (l.first.row != r.first.row) return l.first.row < r.first.row;
    return l.first.col < r.first.col;
  });
  std::vector<std::string> ids;
  for (auto& [c, id] : order) ids.push_back(id);
  return ids;
}

std::vector<std::string> Topology::row_ids(int r) const {
  std::vector<std::pair<int, std::string>> order;
  for (const auto& [id, c] : qubits)
    if (c.row == r) order.push_back({c.col, id});
  std::sort(order.begin(), order.end());
  std::vector<std::string> ids;
  for (auto& [c, id] : order) ids.push_back(id);
  return ids;
}

Topology generate_grid(int rows, int cols) {
  if (rows < 1 || cols < 1)
    fail(ErrorCode::InvalidDimension, "grid dimensions must be >= 1, got " + std::to_string(rows) + "x" +
                                          std::to_string(cols));
  Topology t;
  t.grid = GridDims{rows, cols};
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.qubits[qubit_id(r * cols + c)] = {c, r};
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int i = r * cols + c;
      if (c + 1 < cols) t.edges.emplace_back(qubit_id(i), qubit_id(i + 1));
      if (r + 1 < rows) t.edges.emplace_back(qubit_id(i), qubit_id(i + cols));
    }
  }
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

namespace {

Topology embed(std::set<std::string> ids, std::set<Edge> edges) {
  std::vector<std::string> order(ids.begin(), ids.end());
  std::sort(order.begin(), order.end(), [](const auto& l, const auto& r) { return natural_less(l, r); });
  const int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(order.size())) - 1e-12));
  Topology t;
  for (std::size_t i = 0; i < order.size(); ++i)
    t.qubits[order[i]] = {static_cast<int>(i) % side, static_cast<int>(i) / side};
  t.edges.assign(edges.begin(), edges.end());
  return t;
}

}  // namespace

Topology from_gate_list(const GateList& gates) {
  if (gates.empty()) fail(ErrorCode::EmptyGateList, "circuit-defined topology needs at least one gate");
  std::set<std::string> ids;
  std::set<Edge> edges;
  for (const auto& g : gates) {
    if (g.a == g.b) fail(ErrorCode::InvalidArguments, "gate acts twice on qubit " + g.a);
    ids.insert(g.a);
    ids.insert(g.b);
    edges.emplace(g.a, g.b);
  }
  return embed(std::move(ids), std::move(edges));
}

std::vector<Violation> validate(const Topology& t) {
  std::vector<Violation> out;
  std::map<LatticeCoord, std::vector<std::string>> by_coord;
  for (const auto& [id, c] : t.qubits) by_coord[c].push_back(id);
  for (const auto& [c, ids] : by_coord)
    if (ids.size() > 1) out.push_back({"unique-coordinates", ids});

  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : t.edges) {
    if (e.a == e.b) out.push_back({"no-self-loop", {e.a}});
    for (const auto* id : {&e.a, &e.b})
      if (!t.qubits.contains(*id)) out.push_back({"edge-endpoint-exists", {*id}});
    auto key = natural_less(e.b, e.a) ? std::pair{e.b, e.a} : std::pair{e.a, e.b};
    if (!seen.insert(key).second) out.push_back({"no-duplicate-edge", {key.first, key.second}});
  }

  if (t.grid) {
    const auto [m, n] = *t.grid;
    if (m < 1 || n < 1 || t.qubits.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(n)) {
      out.push_back({"grid-qubit-count", {}});
    }
    for (const auto& [id, c] : t.qubits)
      if (c.col < 0 || c.col >= n || c.row < 0 || c.row >= m) out.push_back({"grid-coordinate-range", {id}});
  }
  return out;
}

Topology parse_edge_list(std::string_view text) {
  std::set<std::string> ids;
  std::set<Edge> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b) || (fields >> extra))
      fail(ErrorCode::ParseError, "edge list line " + std::to_string(lineno) + ": expected 'idA idB'");
    if (a == b) fail(ErrorCode::ParseError, "edge list line " + std::to_string(lineno) + ": self-loop");
    ids.insert(a);
    ids.insert(b);
    edges.emplace(a, b);
  }
  if (edges.empty()) fail(ErrorCode::EmptyGateList, "edge list contains no edges");
  return embed(std::move(ids), std::move(edges));
}

}  // namespace sqc
