#include "hyptile/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>

namespace hyptile {

int Tiling::monomer_count() const {
  int k = 0;
  for (const Piece& p : pieces) k += p.is_monomer();
  return k;
}

int Tiling::dimer_count() const { return static_cast<int>(pieces.size()) - monomer_count(); }

namespace {

void check_limit(const CellGraph& g, int cell_limit) {
  if (g.num_cells() > cell_limit) throw CellLimitError(g.num_cells(), cell_limit);
  if (g.id_space() > 63)
    throw ParameterError("enumeration supports at most 63 cells regardless of the limit");
}

// Shared backtracking core.  `leaf` gets the monomer/dimer tally and the set
// of cut positions crossed by the dimers placed so far.
template <typename Leaf>
void backtrack(const CellGraph& g, std::vector<Piece>* pieces, Leaf&& leaf) {
  const int ids = g.id_space();
  uint64_t covered = 0;
  for (int id = 0; id < ids; ++id)
    if (!g.has_cell(id)) covered |= uint64_t(1) << id;
  const uint64_t full = ids >= 64 ? ~uint64_t(0) : (uint64_t(1) << ids) - 1;

  // position of each cut edge, keyed by packed (u,v)
  std::map<std::pair<int, int>, int> cut_pos;
  for (const auto& [pos, es] : g.cuts())
    for (const Edge& e : es) cut_pos[{e.u, e.v}] = pos;

  int monomers = 0, dimers = 0;

  // `crossed` travels by value: several dimers may cross the same position
  auto rec = [&](auto&& self, int from, uint32_t crossed) -> void {
    if (covered == full) {
      leaf(monomers, dimers, crossed);
      return;
    }
    int cell = from;
    while (covered & (uint64_t(1) << cell)) ++cell;

    // monomer first
    covered |= uint64_t(1) << cell;
    if (pieces) pieces->push_back({cell, -1});
    ++monomers;
    self(self, cell + 1, crossed);
    --monomers;
    if (pieces) pieces->pop_back();

    // then dimers by ascending neighbor id; neighbors below `cell` are
    // already covered, so pairs always come out normalized
    for (int nb : g.neighbors(cell)) {
      if (nb < cell || (covered & (uint64_t(1) << nb))) continue;
      covered |= uint64_t(1) << nb;
      if (pieces) pieces->push_back({cell, nb});
      ++dimers;
      auto it = cut_pos.find({cell, nb});
      const uint32_t bit = it == cut_pos.end() ? 0 : uint32_t(1) << it->second;
      self(self, cell + 1, crossed | bit);
      --dimers;
      if (pieces) pieces->pop_back();
      covered &= ~(uint64_t(1) << nb);
    }
    covered &= ~(uint64_t(1) << cell);
  };
  rec(rec, 0, 0);
}

}  // namespace

long enumerate_tilings(const CellGraph& g, const std::function<void(const Tiling&)>& visit,
                       int cell_limit) {
  check_limit(g, cell_limit);
  long count = 0;
  std::vector<Piece> pieces;
  backtrack(g, &pieces, [&](int, int, uint32_t) {
    ++count;
    visit(Tiling{pieces});
  });
  return count;
}

std::vector<Tiling> enumerate_tilings(const CellGraph& g, int cell_limit) {
  std::vector<Tiling> out;
  enumerate_tilings(
      g, [&](const Tiling& t) { out.push_back(t); }, cell_limit);
  return out;
}

BiPoly weighted_count(const CellGraph& g, int cell_limit) {
  check_limit(g, cell_limit);
  std::map<std::pair<int, int>, Int> tally;
  backtrack(g, nullptr, [&](int m, int d, uint32_t) { tally[{m, d}] += 1; });
  BiPoly sum;
  for (const auto& [md, c] : tally) sum += BiPoly::monomial(c, md.first, md.second);
  return sum;
}

bool is_breakable_at(const CellGraph& g, const Tiling& t, int position) {
  const std::vector<Edge> cut = cut_edges(g, position);
  for (const Piece& p : t.pieces) {
    if (p.is_monomer()) continue;
    for (const Edge& e : cut)
      if (p.u == e.u && p.v == e.v) return false;
  }
  return true;
}

BiPoly unbreakable_count(const CellGraph& g, int cell_limit) {
  check_limit(g, cell_limit);
  // unbreakable everywhere = some dimer crosses every position
  uint32_t want = 0;
  for (const auto& [pos, es] : g.cuts()) want |= uint32_t(1) << pos;
  std::map<std::pair<int, int>, Int> tally;
  backtrack(g, nullptr, [&](int m, int d, uint32_t crossed) {
    if ((crossed & want) == want) tally[{m, d}] += 1;
  });
  BiPoly sum;
  for (const auto& [md, c] : tally) sum += BiPoly::monomial(c, md.first, md.second);
  return sum;
}

namespace {

// Weighted covers of a single column (s plus its q-3 block cells on a path),
// given which boundary cells arrive pre-covered and which outgoing cut edges
// are used.  Computed by the same kind of brute-force recursion as the main
// oracle.
struct ColumnModel {
  int cells;  // 1 + (q-3); local 0 = s, locals 1..q-3 = block path
  // trans[in][out], in/out bits: 1 = s side, 2 = t side
  BiPoly trans[4][4];

  explicit ColumnModel(int q) : cells(q - 2) {
    std::vector<std::vector<int>> adj(cells);
    auto link = [&](int x, int y) {
      adj[x].push_back(y);
      adj[y].push_back(x);
    };
    link(0, 1);
    for (int i = 1; i + 1 < cells; ++i) link(i, i + 1);

    for (int in = 0; in < 4; ++in) {
      for (int out = 0; out < 4; ++out) {
        uint32_t covered = 0;
        if (in & 1) covered |= 1u << 0;
        if (in & 2) covered |= 1u << 1;
        bool clash = false;
        if (out & 1) {  // dimer s_j - s_{j+1}
          if (covered & (1u << 0)) clash = true;
          covered |= 1u << 0;
        }
        if (out & 2) {  // dimer t_last - t_next
          if (covered & (1u << (cells - 1))) clash = true;
          covered |= 1u << (cells - 1);
        }
        if (clash) continue;
        int bridge = (out & 1 ? 1 : 0) + (out & 2 ? 1 : 0);
        BiPoly acc;
        const uint32_t full = (1u << cells) - 1;
        auto rec = [&](auto&& self, uint32_t cov, int m, int d) -> void {
          if (cov == full) {
            acc += BiPoly::monomial(1, m, d);
            return;
          }
          int c = 0;
          while (cov & (1u << c)) ++c;
          self(self, cov | (1u << c), m + 1, d);
          for (int nb : adj[c])
            if (nb > c && !(cov & (1u << nb))) self(self, cov | (1u << c) | (1u << nb), m, d + 1);
        };
        rec(rec, covered, 0, bridge);
        trans[in][out] = acc;
      }
    }
  }
};

}  // namespace

BiPoly weighted_count_frontier(const CellGraph& g) {
  const BoardSpec& spec = g.spec();
  if (spec.variant != Variant::Full)
    throw ParameterError("weighted_count_frontier: full boards only");
  const int n = spec.n;
  if (n == 0) return BiPoly(1);

  ColumnModel col(spec.q);
  BiPoly state[4];
  state[0] = BiPoly(1);
  for (int j = 1; j <= n; ++j) {
    BiPoly next[4];
    const int out_max = j < n ? 4 : 1;  // the last column has no outgoing edges
    for (int in = 0; in < 4; ++in) {
      if (state[in].is_zero()) continue;
      for (int out = 0; out < out_max; ++out) {
        if (col.trans[in][out].is_zero()) continue;
        next[out] += state[in] * col.trans[in][out];
      }
    }
    for (int k = 0; k < 4; ++k) state[k] = std::move(next[k]);
  }
  return state[0];
}

}  // namespace hyptile
