#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gridsym/board.hpp"

namespace gridsym {

// A free polyomino: an edge-connected cell shape considered up to rotation
// and reflection. Stored as the canonical representative (the minimum over
// the eight dihedral images of the normalized, sorted cell list).
class FreePolyomino {
 public:
  // Throws FormatError when the cells are empty or not 4-connected.
  static FreePolyomino from_cells(std::vector<Cell> cells, std::string name = "");
  // Parses an ASCII grid ('#' = cell, '.' = empty), rows separated by '\n'.
  static FreePolyomino from_ascii(std::string_view art, std::string name = "");

  int order() const { return static_cast<int>(cells_.size()); }
  int height() const { return height_; }
  int width() const { return width_; }
  const std::vector<Cell>& cells() const { return cells_; }
  const std::string& name() const { return name_; }

  // The distinct dihedral images, each normalized and sorted, in a fixed
  // order. Size is 8 / |symmetry group of the shape|.
  std::vector<std::vector<Cell>> distinct_images() const;

  std::string ascii() const;

  bool operator==(const FreePolyomino& o) const { return cells_ == o.cells_; }
  bool operator<(const FreePolyomino& o) const { return cells_ < o.cells_; }

 private:
  std::vector<Cell> cells_;  // canonical: sorted, min row = min col = 0
  int height_ = 0, width_ = 0;
  std::string name_;
};

// Built-in shapes: "monomino", "domino", "tromino-I", "tromino-L",
// "tetromino-I/L/O/S/T" ("tetromino-Z" aliases S), "pentomino-F".."pentomino-Z".
const FreePolyomino& builtin_piece(std::string_view name);
bool is_builtin_piece(std::string_view name);

// A multiset of free polyominoes.
struct PieceSet {
  struct Entry {
    FreePolyomino piece;
    int multiplicity = 1;
  };
  std::vector<Entry> pieces;

  int total_area() const;
  int piece_instances() const;
  void add(const FreePolyomino& piece, int multiplicity);  // merges duplicates
  std::string canonical_description() const;  // stable over piece order
};

// Piece file format, line oriented:
//   name              one builtin piece or preset, multiplicity 1
//   name:count        same with a multiplicity
//   label:count       followed by ASCII grid lines, terminated by a blank
//                     line or end of input, when label is not builtin
// Presets: "genius-square" (orders 1..4, one each), "pentominoes-all".
PieceSet parse_pieces(std::string_view text);
bool is_piece_preset(std::string_view name);

// Every placement of any distinct image of p fitting entirely in the open
// cells of b; deterministic order (image, then row-major offset).
std::vector<CellSet> placements(const FreePolyomino& p, const Board& b);

}  // namespace gridsym
