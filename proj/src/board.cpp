#include "hyptile/board.hpp"

#include <algorithm>

namespace hyptile {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Full: return "full";
    case Variant::A: return "a";
    case Variant::B: return "b";
    case Variant::C: return "c";
    case Variant::Path: return "path";
  }
  return "?";
}

CellGraph::CellGraph(BoardSpec spec, std::vector<CellInfo> cells, std::vector<Edge> edges,
                     int id_space, bool with_cuts)
    : spec_(spec), cells_(std::move(cells)), edges_(std::move(edges)) {
  std::sort(cells_.begin(), cells_.end(),
            [](const CellInfo& x, const CellInfo& y) { return x.id < y.id; });
  std::sort(edges_.begin(), edges_.end());
  adjacency_.assign(id_space, {});
  present_.assign(id_space, false);
  for (const CellInfo& c : cells_) present_[c.id] = true;
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

  if (with_cuts) {
    // An edge is severed at position i iff its endpoints straddle columns
    // i and i+1.  Column lookup by id.
    std::vector<int> column(id_space, 0);
    for (const CellInfo& c : cells_) column[c.id] = c.column;
    for (int pos = 1; pos <= spec_.n - 1; ++pos) cuts_[pos] = {};
    for (const Edge& e : edges_) {
      int lo = std::min(column[e.u], column[e.v]);
      int hi = std::max(column[e.u], column[e.v]);
      for (int pos = lo; pos < hi; ++pos) cuts_[pos].push_back(e);
    }
  }
}

bool CellGraph::has_cell(int id) const {
  return id >= 0 && id < static_cast<int>(present_.size()) && present_[id];
}

const std::vector<int>& CellGraph::neighbors(int id) const {
  if (id < 0 || id >= static_cast<int>(adjacency_.size()))
    throw ParameterError("neighbors: cell id " + std::to_string(id) + " out of range");
  return adjacency_[id];
}

std::pair<int, int> CellGraph::level_counts() const {
  int l1 = 0, l2 = 0;
  for (const CellInfo& c : cells_) (c.level == 1 ? l1 : l2)++;
  return {l1, l2};
}

CellGraph build_board(const BoardSpec& spec) {
  if (spec.variant == Variant::Path) {
    const int m = spec.n;
    if (m < 0) throw ParameterError("build_board: path length must be >= 0");
    std::vector<CellInfo> cells;
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) cells.push_back({i, 1, i + 1});
    for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    return CellGraph(spec, std::move(cells), std::move(edges), m, /*with_cuts=*/false);
  }

  if (spec.q < 4) throw ParameterError("build_board: q must be >= 4");
  if (spec.n < 0) throw ParameterError("build_board: n must be >= 0");
  if (spec.variant != Variant::Full && spec.n == 0)
    throw ParameterError("build_board: variants A, B, C require n >= 1");

  const int n = spec.n;
  const int block = spec.q - 3;  // level-2 cells per column
  const int t_total = n * block;
  const int id_space = n + t_total;

  // s_i -> id i-1; t_j -> id n+j-1.
  auto s_id = [&](int i) { return i - 1; };
  auto t_id = [&](int j) { return n + j - 1; };

  std::vector<CellInfo> cells;
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) cells.push_back({s_id(i), 1, i});
  for (int j = 1; j <= t_total; ++j) cells.push_back({t_id(j), 2, (j - 1) / block + 1});
  for (int i = 1; i < n; ++i) edges.emplace_back(s_id(i), s_id(i + 1));
  for (int j = 1; j < t_total; ++j) edges.emplace_back(t_id(j), t_id(j + 1));
  for (int i = 1; i <= n; ++i) edges.emplace_back(s_id(i), t_id((i - 1) * block + 1));

  // Variants drop the trailing cell(s) together with incident edges.
  std::vector<int> removed;
  if (spec.variant == Variant::A || spec.variant == Variant::C) removed.push_back(t_id(t_total));
  if (spec.variant == Variant::B || spec.variant == Variant::C) removed.push_back(s_id(n));
  if (!removed.empty()) {
    auto gone = [&](int id) {
      return std::find(removed.begin(), removed.end(), id) != removed.end();
    };
    std::erase_if(cells, [&](const CellInfo& c) { return gone(c.id); });
    std::erase_if(edges, [&](const Edge& e) { return gone(e.u) || gone(e.v); });
  }

  return CellGraph(spec, std::move(cells), std::move(edges), id_space, /*with_cuts=*/true);
}

std::vector<Edge> cut_edges(const CellGraph& g, int position) {
  auto it = g.cuts().find(position);
  if (it == g.cuts().end())
    throw ParameterError("cut_edges: position " + std::to_string(position) +
                         " out of range 1.." + std::to_string(g.spec().n - 1));
  return it->second;
}

BoardStats board_stats(const CellGraph& g) {
  auto [l1, l2] = g.level_counts();
  return {l1, l2, static_cast<int>(g.edges().size()), static_cast<int>(g.cuts().size())};
}

CellGraph mirror(const CellGraph& g) {
  const BoardSpec& spec = g.spec();
  if (spec.variant != Variant::Full && spec.variant != Variant::Path)
    throw ParameterError("mirror: only full boards and paths");

  const int n = spec.n;
  if (spec.variant == Variant::Path) {
    std::vector<CellInfo> cells;
    std::vector<Edge> edges;
    for (const CellInfo& c : g.cells()) cells.push_back({n - 1 - c.id, 1, n + 1 - c.column});
    for (const Edge& e : g.edges()) edges.emplace_back(n - 1 - e.u, n - 1 - e.v);
    return CellGraph(spec, std::move(cells), std::move(edges), n, /*with_cuts=*/false);
  }

  const int t_total = n * (spec.q - 3);
  // s-id x -> n-1-x, t-id y -> 2n-1+t_total-y (whole level-2 path reversed).
  auto perm = [&](int id) { return id < n ? n - 1 - id : 2 * n - 1 + t_total - id; };
  std::vector<CellInfo> cells;
  std::vector<Edge> edges;
  for (const CellInfo& c : g.cells()) cells.push_back({perm(c.id), c.level, n + 1 - c.column});
  for (const Edge& e : g.edges()) edges.emplace_back(perm(e.u), perm(e.v));
  return CellGraph(spec, std::move(cells), std::move(edges), n + t_total, /*with_cuts=*/true);
}

}  // namespace hyptile
