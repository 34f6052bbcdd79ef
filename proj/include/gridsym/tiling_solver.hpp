#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridsym/board.hpp"
#include "gridsym/polyomino.hpp"

namespace gridsym {

struct TilingPlacement {
  int piece_instance = 0;  // index into the type-major piece-set expansion
  CellSet cells;
};

// A complete tiling of a board's open cells.
struct Tiling {
  std::vector<TilingPlacement> placements;
};

struct SolveOptions {
  // Attempted placements allowed before the search aborts with
  // NodeCapError. 0 means unlimited. Aborting is an error, never a verdict.
  std::uint64_t node_cap = 0;
};

struct SolveStats {
  std::uint64_t nodes = 0;
};

// Exact-cover search for one (dimensions, piece multiset) configuration,
// reusable across any number of blocked-cell patterns. One constraint
// column per cell plus one multiplicity-bounded column per piece type;
// identical pieces share their column, so permutations of equal pieces are
// never explored. The search fills the open cell with the fewest candidate
// placements first, and prunes any open component whose area is not a
// subset sum of the remaining piece orders.
//
// Deterministic: fixed placement order, lowest-index tie-breaks. A solve
// call restores the engine exactly, so instances are reusable; they are
// single-threaded, so build one per worker.
class TilingEngine {
 public:
  TilingEngine(int rows, int cols, PieceSet pieces);

  // True iff the open cells of (rows x cols minus blocked) admit a tiling.
  // Throws AreaMismatchError unless piece area == open-cell count, and
  // NodeCapError when opts.node_cap is exhausted.
  bool solve(const CellSet& blocked, const SolveOptions& opts = {},
             Tiling* witness = nullptr, SolveStats* stats = nullptr);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const PieceSet& pieces() const { return pieces_; }

 private:
  enum class Outcome { kFound, kExhausted, kAborted };

  void cover(int c);
  void uncover(int c);
  Outcome search();
  bool components_feasible() const;

  int rows_, cols_, ncells_, ntypes_;
  PieceSet pieces_;

  // Dancing-links arena. Nodes 0..ncols-1 are column headers (cells, then
  // piece types); node ncols is the header-ring root; row nodes follow.
  std::vector<int> up_, down_, left_, right_, col_of_, row_of_;
  std::vector<int> size_;       // per column: linked row count
  std::vector<int> remaining_;  // per type: instances still to place
  std::vector<int> row_type_;
  std::vector<CellSet> row_mask_;
  std::vector<int> piece_order_;       // per type
  std::vector<std::array<int, 4>> nbr_;
  std::vector<int> nbr_count_;

  // per-solve state
  CellSet occupied_;
  int open_cells_ = 0;
  std::uint64_t nodes_ = 0, node_cap_ = 0;
  bool want_witness_ = false;
  std::vector<int> chosen_rows_;
};

// One-off conveniences over a fresh engine.
bool solvable(const Board& b, const PieceSet& ps, const SolveOptions& opts = {});
std::optional<Tiling> solve_witness(const Board& b, const PieceSet& ps,
                                    const SolveOptions& opts = {});

// Independent checker for the Tiling contract: placements pairwise
// disjoint, union exactly the open cells, per-type usage equal to the
// multiplicities, and every placement congruent to its piece. Throws
// ConfigError with a description on any violation.
void validate_tiling(const Board& b, const PieceSet& ps, const Tiling& t);

// ASCII rendering: one letter per piece instance, '#' for blockers.
std::string render_tiling(const Board& b, const Tiling& t);

}  // namespace gridsym
