#include "gridsym/tiling_solver.hpp"

#include <cassert>

#include "gridsym/errors.hpp"

namespace gridsym {

namespace {

// Bit set over achievable area sums, 0..512.
struct SumReach {
  std::uint64_t w[9] = {};

  void set0() { w[0] = 1; }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }

  // reach |= reach << k, saturating at the top: one more copy of a piece.
  void shift_or(int k) {
    const int words = k >> 6, bits = k & 63;
    for (int i = 8; i >= 0; --i) {
      std::uint64_t v = 0;
      if (i - words >= 0) v = w[i - words] << bits;
      if (bits && i - words - 1 >= 0) v |= w[i - words - 1] >> (64 - bits);
      w[i] |= v;
    }
  }
};

}  // namespace

TilingEngine::TilingEngine(int rows, int cols, PieceSet pieces)
    : rows_(rows), cols_(cols), ncells_(rows * cols),
      ntypes_(static_cast<int>(pieces.pieces.size())), pieces_(std::move(pieces)) {
  if (rows < 1 || cols < 1 || ncells_ > CellSet::kMaxCells)
    throw ConfigError("unsupported board dimensions");
  if (ntypes_ == 0) throw ConfigError("piece set is empty");

  const int ncols = ncells_ + ntypes_;
  const int root = ncols;
  up_.resize(ncols + 1);
  down_.resize(ncols + 1);
  left_.resize(ncols + 1);
  right_.resize(ncols + 1);
  col_of_.resize(ncols + 1);
  row_of_.assign(ncols + 1, -1);
  size_.assign(ncols, 0);
  remaining_.assign(ntypes_, 0);

  for (int c = 0; c < ncols; ++c) {
    up_[c] = down_[c] = c;
    left_[c] = right_[c] = c;
    col_of_[c] = c;
  }
  // Header ring holds the cell columns only; type columns are satisfied as
  // a side effect of covering every open cell.
  for (int c = 0; c < ncells_; ++c) {
    left_[c] = (c == 0) ? root : c - 1;
    right_[c] = (c == ncells_ - 1) ? root : c + 1;
  }
  left_[root] = ncells_ - 1;
  right_[root] = 0;
  col_of_[root] = root;

  for (int t = 0; t < ntypes_; ++t) {
    piece_order_.push_back(pieces_.pieces[t].piece.order());
    remaining_[t] = pieces_.pieces[t].multiplicity;
  }

  // Placement rows over the empty board, type-major; insertion order fixes
  // the search order.
  const Board empty(rows_, cols_);
  for (int t = 0; t < ntypes_; ++t) {
    for (const CellSet& mask : placements(pieces_.pieces[t].piece, empty)) {
      const int row_id = static_cast<int>(row_type_.size());
      row_type_.push_back(t);
      row_mask_.push_back(mask);
      int first = -1, prev = -1;
      auto append_node = [&](int column) {
        const int node = static_cast<int>(up_.size());
        up_.push_back(up_[column]);
        down_.push_back(column);
        down_[up_[column]] = node;
        up_[column] = node;
        col_of_.push_back(column);
        row_of_.push_back(row_id);
        if (first < 0) {
          first = prev = node;
          left_.push_back(node);
          right_.push_back(node);
        } else {
          left_.push_back(prev);
          right_.push_back(first);
          right_[prev] = node;
          left_[first] = node;
          prev = node;
        }
        size_[column]++;
      };
      mask.for_each([&](int cell) { append_node(cell); });
      append_node(ncells_ + t);
    }
  }

  nbr_.resize(ncells_);
  nbr_count_.assign(ncells_, 0);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      const int idx = r * cols_ + c;
      auto add = [&](int rr, int cc) {
        if (rr >= 0 && rr < rows_ && cc >= 0 && cc < cols_)
          nbr_[idx][nbr_count_[idx]++] = rr * cols_ + cc;
      };
      add(r - 1, c);
      add(r + 1, c);
      add(r, c - 1);
      add(r, c + 1);
    }
  }
}

void TilingEngine::cover(int c) {
  if (c < ncells_) {
    right_[left_[c]] = right_[c];
    left_[right_[c]] = left_[c];
  }
  for (int i = down_[c]; i != c; i = down_[i]) {
    for (int j = right_[i]; j != i; j = right_[j]) {
      up_[down_[j]] = up_[j];
      down_[up_[j]] = down_[j];
      size_[col_of_[j]]--;
    }
  }
}

void TilingEngine::uncover(int c) {
  for (int i = up_[c]; i != c; i = up_[i]) {
    for (int j = left_[i]; j != i; j = left_[j]) {
      size_[col_of_[j]]++;
      up_[down_[j]] = j;
      down_[up_[j]] = j;
    }
  }
  if (c < ncells_) {
    right_[left_[c]] = c;
    left_[right_[c]] = c;
  }
}

bool TilingEngine::components_feasible() const {
  SumReach reach;
  reach.set0();
  for (int t = 0; t < ntypes_; ++t)
    for (int k = 0; k < remaining_[t]; ++k) reach.shift_or(piece_order_[t]);

  CellSet visited = occupied_;
  int stack[CellSet::kMaxCells];
  for (int start = 0; start < ncells_; ++start) {
    if (visited.test(start)) continue;
    int area = 0, top = 0;
    stack[top++] = start;
    visited.set(start);
    while (top) {
      const int cell = stack[--top];
      ++area;
      for (int k = 0; k < nbr_count_[cell]; ++k) {
        const int next = nbr_[cell][k];
        if (!visited.test(next)) {
          visited.set(next);
          stack[top++] = next;
        }
      }
    }
    if (!reach.test(area)) return false;
  }
  return true;
}

TilingEngine::Outcome TilingEngine::search() {
  const int root = ncells_ + ntypes_;
  if (right_[root] == root) {
#ifndef NDEBUG
    for (int t = 0; t < ntypes_; ++t) assert(remaining_[t] == 0);
#endif
    return Outcome::kFound;
  }
  // most-constrained open cell; ties to the lowest cell index
  int best = -1, best_size = INT32_MAX;
  for (int c = right_[root]; c != root; c = right_[c]) {
    if (size_[c] < best_size || (size_[c] == best_size && c < best)) {
      best = c;
      best_size = size_[c];
      if (best_size == 0) return Outcome::kExhausted;
    }
  }

  cover(best);
  Outcome outcome = Outcome::kExhausted;
  for (int i = down_[best]; i != best; i = down_[i]) {
    if (node_cap_ && ++nodes_ > node_cap_) {
      outcome = Outcome::kAborted;
      break;
    }
    if (!node_cap_) ++nodes_;
    const int row = row_of_[i];
    const int type = row_type_[row];

    for (int j = right_[i]; j != i; j = right_[j]) {
      const int c = col_of_[j];
      if (c < ncells_)
        cover(c);
      else if (--remaining_[type] == 0)
        cover(c);
    }
    occupied_ |= row_mask_[row];
    if (want_witness_) chosen_rows_.push_back(row);

    const bool feasible = components_feasible();
    if (feasible) outcome = search();

    if (want_witness_ && outcome != Outcome::kFound) chosen_rows_.pop_back();
    occupied_.subtract(row_mask_[row]);
    for (int j = left_[i]; j != i; j = left_[j]) {
      const int c = col_of_[j];
      if (c < ncells_)
        uncover(c);
      else if (remaining_[type]++ == 0)
        uncover(c);
    }
    if (outcome != Outcome::kExhausted) break;
  }
  uncover(best);
  return outcome;
}

bool TilingEngine::solve(const CellSet& blocked, const SolveOptions& opts,
                         Tiling* witness, SolveStats* stats) {
  const int blocked_count = blocked.count();
  open_cells_ = ncells_ - blocked_count;
  if (pieces_.total_area() != open_cells_)
    throw AreaMismatchError("piece area " + std::to_string(pieces_.total_area()) +
                            " != open cells " + std::to_string(open_cells_));
#ifndef NDEBUG
  {
    CellSet in_range;
    for (int i = 0; i < ncells_; ++i) in_range.set(i);
    in_range &= blocked;
    assert(in_range == blocked);
  }
#endif

  occupied_ = blocked;
  nodes_ = 0;
  node_cap_ = opts.node_cap;
  want_witness_ = witness != nullptr;
  chosen_rows_.clear();

  std::vector<int> covered;
  covered.reserve(blocked_count);
  blocked.for_each([&](int cell) {
    cover(cell);
    covered.push_back(cell);
  });

  Outcome outcome = components_feasible() ? search() : Outcome::kExhausted;

  for (auto it = covered.rbegin(); it != covered.rend(); ++it) uncover(*it);
  if (stats) stats->nodes = nodes_;
  if (outcome == Outcome::kAborted)
    throw NodeCapError("tiling search exceeded its node cap of " +
                       std::to_string(node_cap_));

  if (outcome == Outcome::kFound && witness) {
    witness->placements.clear();
    std::vector<int> instance_base(ntypes_, 0);
    for (int t = 1; t < ntypes_; ++t)
      instance_base[t] = instance_base[t - 1] + pieces_.pieces[t - 1].multiplicity;
    std::vector<int> used(ntypes_, 0);
    for (int row : chosen_rows_) {
      const int t = row_type_[row];
      witness->placements.push_back({instance_base[t] + used[t]++, row_mask_[row]});
    }
  }
  return outcome == Outcome::kFound;
}

bool solvable(const Board& b, const PieceSet& ps, const SolveOptions& opts) {
  TilingEngine engine(b.rows, b.cols, ps);
  return engine.solve(b.blocked, opts);
}

std::optional<Tiling> solve_witness(const Board& b, const PieceSet& ps,
                                    const SolveOptions& opts) {
  TilingEngine engine(b.rows, b.cols, ps);
  Tiling t;
  if (!engine.solve(b.blocked, opts, &t)) return std::nullopt;
  return t;
}

void validate_tiling(const Board& b, const PieceSet& ps, const Tiling& t) {
  CellSet covered;
  int covered_area = 0;
  std::vector<int> usage(ps.pieces.size(), 0);
  std::vector<int> instance_base(ps.pieces.size(), 0);
  for (std::size_t i = 1; i < ps.pieces.size(); ++i)
    instance_base[i] = instance_base[i - 1] + ps.pieces[i - 1].multiplicity;

  for (const TilingPlacement& placement : t.placements) {
    if (placement.cells.intersects(covered))
      throw ConfigError("tiling placements overlap");
    if (placement.cells.intersects(b.blocked))
      throw ConfigError("tiling covers a blocked cell");
    covered |= placement.cells;
    covered_area += placement.cells.count();

    // locate the piece type from the expansion index
    int type = -1;
    for (std::size_t i = 0; i < ps.pieces.size(); ++i) {
      const int end = instance_base[i] + ps.pieces[i].multiplicity;
      if (placement.piece_instance >= instance_base[i] && placement.piece_instance < end)
        type = static_cast<int>(i);
    }
    if (type < 0) throw ConfigError("tiling references an unknown piece instance");
    usage[type]++;

    std::vector<Cell> cells;
    placement.cells.for_each(
        [&](int idx) { cells.push_back({idx / b.cols, idx % b.cols}); });
    if (!(FreePolyomino::from_cells(cells) == ps.pieces[type].piece))
      throw ConfigError("tiling placement is not congruent to its piece");
  }
  if (covered_area != b.cell_count() - b.blocked_count())
    throw ConfigError("tiling does not cover every open cell");
  for (std::size_t i = 0; i < ps.pieces.size(); ++i)
    if (usage[i] != ps.pieces[i].multiplicity)
      throw ConfigError("tiling uses piece '" + ps.pieces[i].piece.name() +
                        "' " + std::to_string(usage[i]) + " times, expected " +
                        std::to_string(ps.pieces[i].multiplicity));
}

std::string render_tiling(const Board& b, const Tiling& t) {
  static const char* kLetters =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
  std::vector<char> grid(static_cast<std::size_t>(b.rows) * b.cols, '.');
  b.blocked.for_each([&](int i) { grid[i] = '#'; });
  for (std::size_t p = 0; p < t.placements.size(); ++p) {
    const char letter = kLetters[t.placements[p].piece_instance % 62];
    t.placements[p].cells.for_each([&](int i) { grid[i] = letter; });
  }
  std::string out;
  for (int r = 0; r < b.rows; ++r) {
    out.append(&grid[static_cast<std::size_t>(r) * b.cols], b.cols);
    out += '\n';
  }
  return out;
}

}  // namespace gridsym
