#include "gridsym/symmetry.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "gridsym/bigint.hpp"
#include "gridsym/errors.hpp"

namespace gridsym {

namespace {

constexpr Symmetry kAll[kSymmetryCount] = {
    Symmetry::R0, Symmetry::R90, Symmetry::R180, Symmetry::R270,
    Symmetry::H,  Symmetry::V,   Symmetry::D,    Symmetry::Dp};

// Composition table built by probing cell maps on a 4 x 4 grid. Two probe
// cells identify a symmetry uniquely, and the identification carries over
// to all dimensions because the cell maps are the same formulas.
struct ComposeTable {
  Symmetry table[kSymmetryCount][kSymmetryCount];
  Symmetry inverse[kSymmetryCount];

  ComposeTable() {
    constexpr int kProbe = 4;
    auto key = [](Cell a, Cell b) {
      return ((a.row * kProbe + a.col) << 8) | (b.row * kProbe + b.col);
    };
    std::map<int, Symmetry> ident;
    const Cell p0{0, 0}, p1{0, 1};
    for (Symmetry g : kAll)
      ident[key(apply_to_cell(g, kProbe, kProbe, p0),
                apply_to_cell(g, kProbe, kProbe, p1))] = g;
    assert(ident.size() == kSymmetryCount);
    for (Symmetry g : kAll) {
      for (Symmetry h : kAll) {
        Cell a = apply_to_cell(g, kProbe, kProbe, apply_to_cell(h, kProbe, kProbe, p0));
        Cell b = apply_to_cell(g, kProbe, kProbe, apply_to_cell(h, kProbe, kProbe, p1));
        table[static_cast<int>(g)][static_cast<int>(h)] = ident.at(key(a, b));
      }
    }
    for (Symmetry g : kAll)
      for (Symmetry h : kAll)
        if (table[static_cast<int>(g)][static_cast<int>(h)] == Symmetry::R0)
          inverse[static_cast<int>(g)] = h;
  }
};

const ComposeTable& compose_table() {
  static const ComposeTable t;
  return t;
}

}  // namespace

const char* symmetry_name(Symmetry g) {
  switch (g) {
    case Symmetry::R0: return "R0";
    case Symmetry::R90: return "R90";
    case Symmetry::R180: return "R180";
    case Symmetry::R270: return "R270";
    case Symmetry::H: return "H";
    case Symmetry::V: return "V";
    case Symmetry::D: return "D";
    case Symmetry::Dp: return "D'";
  }
  return "?";
}

Symmetry symmetry_from_name(std::string_view name) {
  for (Symmetry g : kAll)
    if (name == symmetry_name(g)) return g;
  if (name == "Dp") return Symmetry::Dp;
  throw FormatError("unknown symmetry name: " + std::string(name));
}

bool requires_square(Symmetry g) {
  switch (g) {
    case Symmetry::R90:
    case Symmetry::R270:
    case Symmetry::D:
    case Symmetry::Dp:
      return true;
    default:
      return false;
  }
}

Cell apply_to_cell(Symmetry g, int m, int n, Cell c) {
  const int i = c.row, j = c.col;
  switch (g) {
    case Symmetry::R0: return {i, j};
    case Symmetry::H: return {m - 1 - i, j};
    case Symmetry::V: return {i, n - 1 - j};
    case Symmetry::R180: return {m - 1 - i, n - 1 - j};
    case Symmetry::R90: return {n - 1 - j, i};
    case Symmetry::R270: return {j, n - 1 - i};
    case Symmetry::D: return {j, i};
    case Symmetry::Dp: return {n - 1 - j, n - 1 - i};
  }
  return c;
}

Symmetry compose(Symmetry g, Symmetry h) {
  return compose_table().table[static_cast<int>(g)][static_cast<int>(h)];
}

Symmetry inverse(Symmetry g) { return compose_table().inverse[static_cast<int>(g)]; }

SymmetryGroup::SymmetryGroup(std::span<const Symmetry> elems) {
  for (Symmetry g : kAll) {
    if (std::find(elems.begin(), elems.end(), g) != elems.end()) {
      assert(size_ < kSymmetryCount);
      elems_[size_++] = g;
    }
  }
  assert(size_ > 0 && elems_[0] == Symmetry::R0);
}

SymmetryGroup SymmetryGroup::of_board(int m, int n) {
  if (m == 1 && n == 1) {
    static constexpr Symmetry trivial[] = {Symmetry::R0};
    return SymmetryGroup{trivial};
  }
  if (m == n) {
    return SymmetryGroup{kAll};
  }
  if (m == 1 || n == 1) {
    static constexpr Symmetry half_turn[] = {Symmetry::R0, Symmetry::R180};
    return SymmetryGroup{half_turn};
  }
  static constexpr Symmetry rect[] = {Symmetry::R0, Symmetry::R180, Symmetry::H, Symmetry::V};
  return SymmetryGroup{rect};
}

bool SymmetryGroup::contains(Symmetry g) const {
  for (std::size_t i = 0; i < size_; ++i)
    if (elems_[i] == g) return true;
  return false;
}

std::string SymmetryGroup::describe() const {
  if (size_ == 8) return "D4";
  if (size_ == 1) return "<e>";
  if (size_ == 2) return std::string("<") + symmetry_name(elems_[1]) + ">";
  if (contains(Symmetry::R90)) return "<R90>";
  if (contains(Symmetry::H)) return "<H,V>";
  if (contains(Symmetry::D)) return "<D,D'>";
  return element_list();  // not a recognized subgroup; show elements
}

std::string SymmetryGroup::element_list() const {
  std::string out = "{";
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) out += ",";
    out += symmetry_name(elems_[i]);
  }
  return out + "}";
}

BoardAction::BoardAction(int m, int n)
    : rows_(m), cols_(n), group_(SymmetryGroup::of_board(m, n)) {
  for (Symmetry g : group_.elements()) {
    auto& perm = perm_[static_cast<int>(g)];
    perm.resize(static_cast<std::size_t>(m) * n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        Cell to = apply_to_cell(g, m, n, {i, j});
        perm[static_cast<std::size_t>(i) * n + j] = to.row * n + to.col;
      }
    }
  }
}

CellSet BoardAction::apply(Symmetry g, const CellSet& cells) const {
  const auto& perm = perm_[static_cast<int>(g)];
  assert(!perm.empty() || cells.empty());
  CellSet out;
  cells.for_each([&](int i) { out.set(perm[i]); });
  return out;
}

Board BoardAction::apply(Symmetry g, const Board& b) const {
  Board out(rows_, cols_);
  out.blocked = apply(g, b.blocked);
  return out;
}

Board apply_symmetry(Symmetry g, const Board& b) {
  if (requires_square(g) && b.rows != b.cols)
    throw DimensionError(std::string(symmetry_name(g)) + " requires a square board");
  Board out(b.rows, b.cols);
  b.blocked.for_each([&](int i) {
    Cell to = apply_to_cell(g, b.rows, b.cols, {i / b.cols, i % b.cols});
    out.blocked.set(out.index_of(to));
  });
  return out;
}

std::vector<Board> orbit(const Board& b) {
  BoardAction action(b.rows, b.cols);
  std::vector<Board> out;
  for (Symmetry g : action.group().elements()) {
    Board image = action.apply(g, b);
    if (std::find(out.begin(), out.end(), image) == out.end())
      out.push_back(std::move(image));
  }
  return out;
}

SymmetryGroup stabilizer(const Board& b) {
  BoardAction action(b.rows, b.cols);
  std::vector<Symmetry> fixing;
  for (Symmetry g : action.group().elements())
    if (action.apply(g, b.blocked) == b.blocked) fixing.push_back(g);
  return SymmetryGroup{fixing};
}

Board canonical_form(const Board& b) {
  BoardAction action(b.rows, b.cols);
  CellSet best = b.blocked;
  for (Symmetry g : action.group().elements()) {
    if (g == Symmetry::R0) continue;
    CellSet image = action.apply(g, b.blocked);
    if (CellSet::lex_less(image, best)) best = image;
  }
  Board out(b.rows, b.cols);
  out.blocked = best;
  return out;
}

namespace {

// Visits every r-subset of {0,..,cells-1} in lexicographic order; fn gets
// the subset as a CellSet and must return void.
template <typename Fn>
void for_each_subset(int cells, int r, Fn&& fn) {
  std::vector<int> pick(r);
  for (int i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    CellSet s;
    for (int i : pick) s.set(i);
    fn(s);
    int i = r - 1;
    while (i >= 0 && pick[i] == cells - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
}

void check_enumeration_cap(int m, int n, int r, std::uint64_t cap) {
  if (r < 0 || r > m * n) throw ConfigError("blocker count out of range");
  BigUint total = binomial(m * n, r);
  if (!total.fits_u64() || total.to_u64() > cap)
    throw CapExceededError("C(" + std::to_string(m * n) + "," + std::to_string(r) +
                           ") exceeds the enumeration cap");
}

// True when no group image of `s` is lexicographically smaller.
bool is_canonical(const BoardAction& action, const CellSet& s) {
  for (Symmetry g : action.group().elements()) {
    if (g == Symmetry::R0) continue;
    if (CellSet::lex_less(action.apply(g, s), s)) return false;
  }
  return true;
}

}  // namespace

std::vector<Board> brute_force_orbit_classes(int m, int n, int r, std::uint64_t cap) {
  check_enumeration_cap(m, n, r, cap);
  BoardAction action(m, n);
  std::vector<Board> out;
  for_each_subset(m * n, r, [&](const CellSet& s) {
    if (is_canonical(action, s)) {
      Board b(m, n);
      b.blocked = s;
      out.push_back(std::move(b));
    }
  });
  return out;
}

std::uint64_t brute_force_orbit_count(int m, int n, int r, std::uint64_t cap) {
  check_enumeration_cap(m, n, r, cap);
  BoardAction action(m, n);
  std::uint64_t count = 0;
  for_each_subset(m * n, r, [&](const CellSet& s) {
    if (is_canonical(action, s)) ++count;
  });
  return count;
}

}  // namespace gridsym
