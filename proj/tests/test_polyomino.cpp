#include "gridsym/polyomino.hpp"

#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "gridsym/errors.hpp"
#include "gridsym/symmetry.hpp"

using namespace gridsym;

namespace {

// Random connected shape grown cell by cell.
FreePolyomino random_polyomino(std::mt19937& rng, int order) {
  std::set<std::pair<int, int>> cells{{0, 0}};
  while (static_cast<int>(cells.size()) < order) {
    std::vector<std::pair<int, int>> frontier;
    for (auto [r, c] : cells)
      for (auto [dr, dc] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}})
        if (!cells.count({r + dr, c + dc})) frontier.push_back({r + dr, c + dc});
    cells.insert(frontier[rng() % frontier.size()]);
  }
  std::vector<Cell> out;
  for (auto [r, c] : cells) out.push_back({r, c});
  return FreePolyomino::from_cells(out);
}

std::vector<Cell> transformed(const std::vector<Cell>& cells, int rot, bool flip) {
  std::vector<Cell> out;
  for (Cell c : cells) {
    if (flip) c = {c.row, -c.col};
    for (int t = 0; t < rot; ++t) c = {c.col, -c.row};
    out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("free polyominoes identify dihedral classes") {
  auto mono = FreePolyomino::from_cells({{0, 0}});
  CHECK(mono.order() == 1);
  CHECK(FreePolyomino::from_cells({{0, 0}, {0, 1}}) ==
        FreePolyomino::from_cells({{0, 0}, {1, 0}}));
  // the four L-tromino rotations collapse to one value of order 3
  auto l1 = FreePolyomino::from_ascii("#.\n##");
  auto l2 = FreePolyomino::from_ascii(".#\n##");
  auto l3 = FreePolyomino::from_ascii("##\n#.");
  auto l4 = FreePolyomino::from_ascii("##\n.#");
  CHECK(l1 == l2);
  CHECK(l2 == l3);
  CHECK(l3 == l4);
  CHECK(l1.order() == 3);
  CHECK_THROWS_AS(FreePolyomino::from_cells({{0, 0}, {1, 1}}), FormatError);
  CHECK_THROWS_AS(FreePolyomino::from_cells({}), FormatError);
  CHECK_THROWS_AS(FreePolyomino::from_cells({{0, 0}, {0, 0}}), FormatError);
}

TEST_CASE("canonicalization is idempotent and constant on dihedral images") {
  std::mt19937 rng(31);
  for (int order = 1; order <= 6; ++order) {
    for (int trial = 0; trial < 40; ++trial) {
      FreePolyomino p = random_polyomino(rng, order);
      CHECK(FreePolyomino::from_cells(p.cells()) == p);
      for (int rot = 0; rot < 4; ++rot)
        for (bool flip : {false, true})
          CHECK(FreePolyomino::from_cells(transformed(p.cells(), rot, flip)) == p);
    }
  }
}

TEST_CASE("distinct image counts match the shapes' symmetries") {
  const std::map<std::string, int> expected = {
      {"monomino", 1},    {"domino", 2},      {"tromino-I", 2},  {"tromino-L", 4},
      {"tetromino-I", 2}, {"tetromino-L", 8}, {"tetromino-O", 1}, {"tetromino-S", 4},
      {"tetromino-T", 4}, {"pentomino-P", 8}, {"pentomino-X", 1}, {"pentomino-F", 8},
      {"pentomino-Z", 4},
  };
  for (const auto& [name, images] : expected)
    CHECK(builtin_piece(name).distinct_images().size() == static_cast<std::size_t>(images));
}

TEST_CASE("piece parsing: presets, counts, inline shapes, merging") {
  PieceSet gs = parse_pieces("genius-square");
  CHECK(gs.pieces.size() == 9);
  CHECK(gs.total_area() == 29);
  std::multiset<int> orders;
  for (const auto& e : gs.pieces) {
    CHECK(e.multiplicity == 1);
    orders.insert(e.piece.order());
  }
  CHECK(orders == std::multiset<int>{1, 2, 3, 3, 4, 4, 4, 4, 4});

  PieceSet pent = parse_pieces("pentominoes-all");
  CHECK(pent.pieces.size() == 12);
  CHECK(pent.total_area() == 60);
  for (const auto& e : pent.pieces) CHECK(e.piece.order() == 5);

  PieceSet inline_p = parse_pieces("P:2\n##\n##\n#.\n");
  REQUIRE(inline_p.pieces.size() == 1);
  CHECK(inline_p.pieces[0].multiplicity == 2);
  CHECK(inline_p.pieces[0].piece == builtin_piece("pentomino-P"));

  PieceSet merged = parse_pieces("domino\ndomino:2\ntetromino-Z\ntetromino-S");
  REQUIRE(merged.pieces.size() == 2);
  CHECK(merged.pieces[0].multiplicity == 3);
  CHECK(merged.pieces[1].multiplicity == 2);
  CHECK(merged.piece_instances() == 5);

  CHECK(parse_pieces("tromino-L:10").total_area() == 30);

  CHECK_THROWS_AS(parse_pieces("no-such-piece"), FormatError);
  CHECK_THROWS_AS(parse_pieces("bad:1\n#x\n"), FormatError);
  // counts must be whole numbers, not prefixes of something else
  CHECK_THROWS_AS(parse_pieces("tetromino-I:2;tetromino-L:2"), FormatError);
  CHECK_THROWS_AS(parse_pieces("domino:2x"), FormatError);
  CHECK(parse_pieces("domino: 3 ").pieces[0].multiplicity == 3);
  CHECK_THROWS_AS(parse_pieces("gap:1\n#.#\n"), FormatError);
  CHECK_THROWS_AS(parse_pieces("domino:0"), FormatError);
  CHECK_THROWS_AS(parse_pieces(""), FormatError);
  CHECK_THROWS_AS(parse_pieces("empty-shape:1\n\n"), FormatError);
}

TEST_CASE("canonical description is order-independent") {
  PieceSet a = parse_pieces("domino\ntromino-I:2");
  PieceSet b = parse_pieces("tromino-I:2\ndomino");
  CHECK(a.canonical_description() == b.canonical_description());
  PieceSet c = parse_pieces("tromino-I:3\ndomino");
  CHECK(a.canonical_description() != c.canonical_description());
}

TEST_CASE("placements enumerate fitting translates of distinct images") {
  CHECK(placements(builtin_piece("tetromino-O"), Board(2, 2)).size() == 1);
  CHECK(placements(builtin_piece("domino"), Board(2, 2)).size() == 4);
  CHECK(placements(builtin_piece("tetromino-I"), Board(1, 4)).size() == 1);
  CHECK(placements(builtin_piece("tetromino-I"), Board(1, 3)).empty());

  Board blocked(3, 3, {{1, 1}});
  for (const CellSet& mask : placements(builtin_piece("tromino-L"), blocked)) {
    CHECK(!mask.intersects(blocked.blocked));
    CHECK(mask.count() == 3);
  }

  // placement counts are symmetry-invariant
  std::mt19937 rng(17);
  for (auto [m, n] : {std::pair{4, 5}, {5, 5}}) {
    Board b(m, n);
    for (int i = 0; i < m * n; ++i)
      if (rng() % 4 == 0) b.blocked.set(i);
    for (const char* name : {"tromino-L", "tetromino-S", "pentomino-Y"}) {
      const auto base = placements(builtin_piece(name), b).size();
      for (Symmetry g : SymmetryGroup::of_board(m, n).elements())
        CHECK(placements(builtin_piece(name), apply_symmetry(g, b)).size() == base);
    }
  }
}
