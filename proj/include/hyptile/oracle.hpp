#ifndef HYPTILE_ORACLE_HPP
#define HYPTILE_ORACLE_HPP

#include <functional>
#include <vector>

#include "hyptile/bipoly.hpp"
#include "hyptile/board.hpp"

namespace hyptile {

// Ground-truth enumeration of monomer-dimer covers.  Plain backtracking over
// the lowest-index uncovered cell, deliberately sharing no logic with the
// recurrence machinery it is used to verify.

struct Piece {
  int u;  // covered cell (the smaller id for a dimer)
  int v;  // second cell of a dimer, -1 for a monomer
  bool is_monomer() const { return v < 0; }
  friend bool operator==(const Piece&, const Piece&) = default;
};

struct Tiling {
  std::vector<Piece> pieces;  // sorted by minimum cell id
  int monomer_count() const;
  int dimer_count() const;
  friend bool operator==(const Tiling&, const Tiling&) = default;
};

// Counts explode like c^n; the cap keeps desk runs short.
inline constexpr int kDefaultCellLimit = 26;

// Visits every tiling exactly once in deterministic order: always expand the
// lowest uncovered cell, monomer before dimers, dimers by neighbor id.
// Returns the number of tilings.  Throws CellLimitError over the cap.
long enumerate_tilings(const CellGraph& g, const std::function<void(const Tiling&)>& visit,
                       int cell_limit = kDefaultCellLimit);

std::vector<Tiling> enumerate_tilings(const CellGraph& g, int cell_limit = kDefaultCellLimit);

// Sum over tilings of a^{#monomers} * b^{#dimers}.
BiPoly weighted_count(const CellGraph& g, int cell_limit = kDefaultCellLimit);

// True iff no dimer of the tiling lies on a cut edge of the position.
bool is_breakable_at(const CellGraph& g, const Tiling& t, int position);

// Weighted count of the tilings unbreakable at every position 1..n-1
// (enumeration with an inline cut-edge filter; no recurrence involved).
BiPoly unbreakable_count(const CellGraph& g, int cell_limit = kDefaultCellLimit);

// Column-profile dynamic program for full boards of any length.  The
// column-to-column transfer weights are themselves obtained by brute-force
// enumeration of one column, so this stays independent of the closed
// recurrences; it is validated against the backtracking count on small
// boards, which remains the ground truth.
BiPoly weighted_count_frontier(const CellGraph& g);

}  // namespace hyptile

#endif
