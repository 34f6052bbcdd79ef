#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gridsym {

// Cell coordinates: row 0 is the top row, column 0 the leftmost column.
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

// A set of cell indices on a fixed grid, packed into machine words.
// Cell index = row * cols + col (row-major). Capacity covers every board
// size this project enumerates (the sweep cap is 484 cells).
class CellSet {
 public:
  static constexpr int kMaxCells = 512;
  static constexpr int kWords = kMaxCells / 64;

  constexpr CellSet() = default;

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const;
  bool empty() const;
  bool intersects(const CellSet& o) const;
  bool contains(const CellSet& o) const;  // o subset of *this

  CellSet& operator|=(const CellSet& o);
  CellSet& operator&=(const CellSet& o);
  CellSet& subtract(const CellSet& o);
  friend CellSet operator|(CellSet a, const CellSet& b) { return a |= b; }
  friend CellSet operator&(CellSet a, const CellSet& b) { return a &= b; }

  bool operator==(const CellSet&) const = default;

  // Order of blocked sets read as sorted index lists: the set owning the
  // lowest differing index is the smaller one.
  static bool lex_less(const CellSet& a, const CellSet& b);

  int lowest() const;  // lowest set index, -1 when empty
  std::vector<int> indices() const;

  // First machine word; the whole set when the board has at most 64 cells.
  std::uint64_t low64() const { return words_[0]; }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        int bit = std::countr_zero(word);
        fn(w * 64 + bit);
        word &= word - 1;
      }
    }
  }

  std::size_t hash() const;

 private:
  std::array<std::uint64_t, kWords> words_{};
};

// An m x n grid with a set of blocked cells. Value type; operations that
// produce new boards never mutate their input.
struct Board {
  int rows = 1;
  int cols = 1;
  CellSet blocked;

  Board() = default;
  Board(int m, int n);  // empty board, validates dimensions
  Board(int m, int n, const std::vector<Cell>& cells);

  int cell_count() const { return rows * cols; }
  int blocked_count() const { return blocked.count(); }
  int index_of(Cell c) const { return c.row * cols + c.col; }
  bool is_blocked(int row, int col) const { return blocked.test(row * cols + col); }

  std::vector<Cell> blocked_cells() const;

  bool operator==(const Board&) const = default;
};

struct BoardHash {
  std::size_t operator()(const Board& b) const;
};

// Text formats:
//   grid    "m n\n" then m lines of n characters, '#' blocked, '.' open
//   compact "m n: r1,c1 r2,c2 ..."
Board parse_board(std::string_view text);
std::string render_board_grid(const Board& b);
std::string render_board_compact(const Board& b);

}  // namespace gridsym
