#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gridsym/board.hpp"

namespace gridsym {

// The eight symmetries of a rectangle/square. Rotations are counter-
// clockwise; D reflects across the main diagonal (top-left to bottom-right),
// Dp across the anti-diagonal. R90/R270/D/Dp apply to square boards only.
enum class Symmetry : std::uint8_t { R0, R90, R180, R270, H, V, D, Dp };

inline constexpr int kSymmetryCount = 8;

const char* symmetry_name(Symmetry g);
Symmetry symmetry_from_name(std::string_view name);
bool requires_square(Symmetry g);

// Image of (row, col) on an m x n board. Fixed convention:
//   H:    (i,j) -> (m-1-i, j)        rows swap
//   V:    (i,j) -> (i, n-1-j)        columns swap
//   R180: (i,j) -> (m-1-i, n-1-j)
//   R90:  (i,j) -> (n-1-j, i)        square only
//   R270: (i,j) -> (j, n-1-i)        square only
//   D:    (i,j) -> (j, i)            square only
//   Dp:   (i,j) -> (n-1-j, n-1-i)    square only
Cell apply_to_cell(Symmetry g, int m, int n, Cell c);

// g then h composed as functions: (compose(g,h))(x) = g(h(x)).
Symmetry compose(Symmetry g, Symmetry h);
Symmetry inverse(Symmetry g);

// An ordered subgroup of the square's symmetry group. Always contains R0
// first; element order is fixed so reports are reproducible.
class SymmetryGroup {
 public:
  SymmetryGroup() : elems_{Symmetry::R0}, size_(1) {}
  explicit SymmetryGroup(std::span<const Symmetry> elems);

  // G for an m x n board: D4 when m == n > 1, <H,V> when m != n and both
  // sides exceed 1, <R180> when exactly one side is 1, trivial for 1 x 1.
  static SymmetryGroup of_board(int m, int n);

  std::span<const Symmetry> elements() const { return {elems_.data(), size_}; }
  int order() const { return static_cast<int>(size_); }
  bool contains(Symmetry g) const;

  // "D4", "<H,V>", "<D>", "<e>", ... using generator notation.
  std::string describe() const;
  // "{R0,D}" style element list.
  std::string element_list() const;

  bool operator==(const SymmetryGroup&) const = default;

 private:
  std::array<Symmetry, kSymmetryCount> elems_{};
  std::size_t size_ = 0;
};

// Precomputed cell-index permutations for every symmetry applicable to an
// m x n board; the workhorse behind orbit/canonical-form loops.
class BoardAction {
 public:
  BoardAction(int m, int n);

  const SymmetryGroup& group() const { return group_; }
  CellSet apply(Symmetry g, const CellSet& cells) const;
  Board apply(Symmetry g, const Board& b) const;

 private:
  int rows_, cols_;
  SymmetryGroup group_;
  // perm_[g][i] = image index of cell i under g (only for members of group_)
  std::array<std::vector<int>, kSymmetryCount> perm_;
};

Board apply_symmetry(Symmetry g, const Board& b);
std::vector<Board> orbit(const Board& b);
SymmetryGroup stabilizer(const Board& b);

// The orbit element whose blocked set, read as a sorted list of row-major
// indices, is lexicographically smallest. Idempotent and constant on orbits.
Board canonical_form(const Board& b);

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

// Enumerates all C(mn, r) boards and keeps each orbit's canonical
// representative. Independent oracle for the partition reduction and the
// Burnside counts; guarded by a cap on C(mn, r).
std::vector<Board> brute_force_orbit_classes(int m, int n, int r,
                                             std::uint64_t cap = kDefaultEnumerationCap);

// Same enumeration but only counts the classes.
std::uint64_t brute_force_orbit_count(int m, int n, int r,
                                      std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace gridsym
