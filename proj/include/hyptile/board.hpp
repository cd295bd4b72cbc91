#ifndef HYPTILE_BOARD_HPP
#define HYPTILE_BOARD_HPP

#include <map>
#include <string>
#include <vector>

#include "hyptile/errors.hpp"

namespace hyptile {

// Boards live on the square mosaic {4,q}, q >= 4 (Euclidean grid when q = 4).
// A (2 x n)-board has two levels of unit cells:
//
//   level 1:  s_1 - s_2 - ... - s_n          (one cell per column)
//   level 2:  t_1 - t_2 - ... - t_{n(q-3)}   (a single path)
//
// Column i owns the level-2 block t_{(i-1)(q-3)+1} .. t_{i(q-3)}: the cell
// directly above s_i followed by the q-4 fan cells around the column's top
// vertex.  s_i is adjacent to the first cell of its block, and consecutive
// blocks are chained, so the second level is one path of n(q-3) cells.
// Breaking between columns i and i+1 severs exactly the two edges
// s_i - s_{i+1} and t_{i(q-3)} - t_{i(q-3)+1}.
//
// Subboard variants drop trailing cells of the full board:
//   A: the last level-2 cell,  B: the last level-1 cell,  C: both.
// Path(m) is the plain (1 x m)-strip, kept here because the (2 x 1)-board
// is itself a path of q-2 cells.
//
// Cell ids are deterministic: s_i gets id i-1, t_j gets id n+j-1; variants
// keep the surviving ids.  Everything is purely combinatorial; there is no
// geometric embedding.

enum class Variant { Full, A, B, C, Path };

std::string variant_name(Variant v);

struct BoardSpec {
  int q = 4;
  int n = 0;
  Variant variant = Variant::Full;

  static BoardSpec full(int q, int n) { return {q, n, Variant::Full}; }
  static BoardSpec sub_a(int q, int n) { return {q, n, Variant::A}; }
  static BoardSpec sub_b(int q, int n) { return {q, n, Variant::B}; }
  static BoardSpec sub_c(int q, int n) { return {q, n, Variant::C}; }
  // Path(m) ignores q; n carries the strip length.
  static BoardSpec path(int m) { return {4, m, Variant::Path}; }
};

struct CellInfo {
  int id;
  int level;   // 1 or 2
  int column;  // 1..n
  friend bool operator==(const CellInfo&, const CellInfo&) = default;
};

// Undirected edge, normalized so that u < v.
struct Edge {
  int u;
  int v;
  Edge(int x, int y) : u(x < y ? x : y), v(x < y ? y : x) {}
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class CellGraph {
public:
  const BoardSpec& spec() const { return spec_; }
  int num_cells() const { return static_cast<int>(cells_.size()); }
  const std::vector<CellInfo>& cells() const { return cells_; }  // ascending id
  const std::vector<Edge>& edges() const { return edges_; }      // sorted
  bool has_cell(int id) const;
  int id_space() const { return static_cast<int>(adjacency_.size()); }
  const std::vector<int>& neighbors(int id) const;  // ascending

  // position -> edges severed by breaking between columns position, position+1
  const std::map<int, std::vector<Edge>>& cuts() const { return cuts_; }

  std::pair<int, int> level_counts() const;

private:
  CellGraph(BoardSpec spec, std::vector<CellInfo> cells, std::vector<Edge> edges, int id_space,
            bool with_cuts);

  friend CellGraph build_board(const BoardSpec& spec);
  friend CellGraph mirror(const CellGraph& g);

  BoardSpec spec_;
  std::vector<CellInfo> cells_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<bool> present_;
  std::map<int, std::vector<Edge>> cuts_;
};

CellGraph build_board(const BoardSpec& spec);

// The two edges crossing the break between columns `position` and
// `position + 1` (1 <= position <= n-1).
std::vector<Edge> cut_edges(const CellGraph& g, int position);

struct BoardStats {
  int level1_cells = 0;
  int level2_cells = 0;
  int edge_count = 0;
  int cut_count = 0;
  friend bool operator==(const BoardStats&, const BoardStats&) = default;
};

BoardStats board_stats(const CellGraph& g);

// Left-right reflection: s_i -> s_{n+1-i}, the level-2 path reversed.  The
// result is a relabeling of the same abstract graph (cross edges attach to
// the last cell of each mirrored block instead of the first).
CellGraph mirror(const CellGraph& g);

}  // namespace hyptile

#endif
