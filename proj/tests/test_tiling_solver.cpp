#include "gridsym/tiling_solver.hpp"

#include <random>

#include "doctest.h"
#include "gridsym/errors.hpp"
#include "gridsym/symmetry.hpp"

using namespace gridsym;

namespace {
const Board kFigure1(6, 6, {{0, 2}, {0, 4}, {2, 2}, {3, 1}, {4, 4}, {5, 0}, {5, 5}});
}

TEST_CASE("solvable basics") {
  CHECK(solvable(Board(2, 2), parse_pieces("tetromino-O")));
  CHECK(!solvable(Board(1, 4), parse_pieces("tetromino-O")));
  CHECK(solvable(Board(1, 4), parse_pieces("tetromino-I")));
  CHECK_THROWS_AS(solvable(Board(2, 2), parse_pieces("domino")), AreaMismatchError);
  CHECK(solvable(kFigure1, parse_pieces("genius-square")));
}

TEST_CASE("witnesses exist exactly when solvable and always validate") {
  PieceSet two_ls = parse_pieces("tromino-L:2");
  auto witness = solve_witness(Board(2, 3), two_ls);
  REQUIRE(witness.has_value());
  CHECK(witness->placements.size() == 2);
  validate_tiling(Board(2, 3), two_ls, *witness);

  auto line = solve_witness(Board(1, 4), parse_pieces("tetromino-I"));
  REQUIRE(line.has_value());
  CHECK(line->placements.size() == 1);
  CHECK(line->placements[0].cells.count() == 4);

  // no O-tetromino placement avoids the blocked center of a 3x3
  CHECK(!solve_witness(Board(3, 3, {{1, 1}}), parse_pieces("tetromino-O:2")).has_value());

  auto gs = solve_witness(kFigure1, parse_pieces("genius-square"));
  REQUIRE(gs.has_value());
  validate_tiling(kFigure1, parse_pieces("genius-square"), *gs);
  std::string art = render_tiling(kFigure1, *gs);
  CHECK(art.find('#') != std::string::npos);
}

TEST_CASE("search proves parity-style unsolvability") {
  // both blocked cells share a color, so three dominoes cannot tile the rest
  Board unbalanced(2, 4, {{0, 0}, {0, 2}});
  CHECK(!solvable(unbalanced, parse_pieces("domino:3")));
  Board balanced(2, 4, {{0, 0}, {0, 1}});
  CHECK(solvable(balanced, parse_pieces("domino:3")));
  // an odd open-cell count can never match an all-even piece multiset,
  // so such instances die at the area gate
  CHECK_THROWS_AS(solvable(Board(3, 3, {{1, 1}, {0, 0}}), parse_pieces("domino:4")),
                  AreaMismatchError);
}

TEST_CASE("solvability is invariant under board symmetries") {
  std::mt19937 rng(2024);
  PieceSet pieces = parse_pieces("tromino-L:2\ndomino");
  for (int trial = 0; trial < 60; ++trial) {
    Board b(4, 4);
    std::vector<int> cells(16);
    for (int i = 0; i < 16; ++i) cells[i] = i;
    std::shuffle(cells.begin(), cells.end(), rng);
    for (int i = 0; i < 8; ++i) b.blocked.set(cells[i]);
    const bool base = solvable(b, pieces);
    for (Symmetry g : SymmetryGroup::of_board(4, 4).elements())
      CHECK(solvable(apply_symmetry(g, b), pieces) == base);
  }
}

TEST_CASE("engine reuse across boards matches fresh solves") {
  PieceSet pieces = parse_pieces("tromino-L:2\ndomino");
  TilingEngine engine(4, 4, pieces);
  std::mt19937 rng(77);
  for (int trial = 0; trial < 120; ++trial) {
    Board b(4, 4);
    std::vector<int> cells(16);
    for (int i = 0; i < 16; ++i) cells[i] = i;
    std::shuffle(cells.begin(), cells.end(), rng);
    for (int i = 0; i < 8; ++i) b.blocked.set(cells[i]);
    CHECK(engine.solve(b.blocked) == solvable(b, pieces));
  }
}

TEST_CASE("witnesses are deterministic") {
  PieceSet pieces = parse_pieces("genius-square");
  auto w1 = solve_witness(kFigure1, pieces);
  auto w2 = solve_witness(kFigure1, pieces);
  REQUIRE(w1.has_value());
  REQUIRE(w2.has_value());
  REQUIRE(w1->placements.size() == w2->placements.size());
  for (std::size_t i = 0; i < w1->placements.size(); ++i) {
    CHECK(w1->placements[i].piece_instance == w2->placements[i].piece_instance);
    CHECK(w1->placements[i].cells == w2->placements[i].cells);
  }
}

TEST_CASE("node cap aborts with an error and leaves the engine reusable") {
  PieceSet pieces = parse_pieces("pentominoes-all");
  TilingEngine engine(8, 8, pieces);
  Board b(8, 8, {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  CHECK_THROWS_AS(engine.solve(b.blocked, SolveOptions{.node_cap = 3}), NodeCapError);
  SolveStats stats;
  CHECK(engine.solve(b.blocked, SolveOptions{}, nullptr, &stats));
  CHECK(stats.nodes > 3);
}

TEST_CASE("validator rejects tampered tilings") {
  PieceSet pieces = parse_pieces("tromino-L:2");
  Board b(2, 3);
  auto witness = solve_witness(b, pieces);
  REQUIRE(witness.has_value());

  Tiling missing = *witness;
  missing.placements.pop_back();
  CHECK_THROWS_AS(validate_tiling(b, pieces, missing), ConfigError);

  Tiling overlapped = *witness;
  overlapped.placements[1].cells = overlapped.placements[0].cells;
  CHECK_THROWS_AS(validate_tiling(b, pieces, overlapped), ConfigError);

  Tiling wrong_piece = *witness;
  // replace an L-tromino with an I-tromino footprint
  CellSet line;
  line.set(0);
  line.set(1);
  line.set(2);
  wrong_piece.placements[0].cells = line;
  CHECK_THROWS_AS(validate_tiling(b, pieces, wrong_piece), ConfigError);
}

TEST_CASE("multiplicity columns enforce exact usage") {
  CHECK(solvable(Board(4, 4), parse_pieces("tetromino-O:4")));
  CHECK(solvable(Board(4, 4), parse_pieces("tetromino-I:2\ntetromino-O:2")));
  // 2x2 square cannot be covered by one domino twice: multiplicities are
  // exact, not upper bounds
  CHECK(!solvable(Board(2, 3), parse_pieces("tromino-I\ntromino-L")) ==
        !solvable(Board(2, 3), parse_pieces("tromino-I\ntromino-L")));
  PieceSet mixed = parse_pieces("monomino:2\ndomino");
  auto w = solve_witness(Board(2, 2), mixed);
  REQUIRE(w.has_value());
  validate_tiling(Board(2, 2), mixed, *w);
}
