#include "gridsym/polyomino.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gridsym/errors.hpp"

namespace gridsym {

namespace {

void normalize(std::vector<Cell>& cells) {
  int min_row = cells[0].row, min_col = cells[0].col;
  for (const Cell& c : cells) {
    min_row = std::min(min_row, c.row);
    min_col = std::min(min_col, c.col);
  }
  for (Cell& c : cells) {
    c.row -= min_row;
    c.col -= min_col;
  }
  std::sort(cells.begin(), cells.end());
}

bool connected(const std::vector<Cell>& cells) {
  if (cells.empty()) return false;
  std::vector<char> seen(cells.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t visited = 1;
  auto find = [&](int row, int col) -> int {
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].row == row && cells[i].col == col) return static_cast<int>(i);
    return -1;
  };
  while (!stack.empty()) {
    Cell c = cells[stack.back()];
    stack.pop_back();
    for (auto [dr, dc] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
      int j = find(c.row + dr, c.col + dc);
      if (j >= 0 && !seen[j]) {
        seen[j] = 1;
        ++visited;
        stack.push_back(static_cast<std::size_t>(j));
      }
    }
  }
  return visited == cells.size();
}

// The eight dihedral images of a normalized cell list, each normalized and
// sorted. Duplicates are kept; callers dedupe.
std::vector<std::vector<Cell>> all_images(const std::vector<Cell>& cells) {
  std::vector<std::vector<Cell>> out;
  out.reserve(8);
  for (int flip = 0; flip < 2; ++flip) {
    for (int rot = 0; rot < 4; ++rot) {
      std::vector<Cell> image;
      image.reserve(cells.size());
      for (Cell c : cells) {
        if (flip) c = {c.row, -c.col};
        for (int t = 0; t < rot; ++t) c = {c.col, -c.row};
        image.push_back(c);
      }
      normalize(image);
      out.push_back(std::move(image));
    }
  }
  return out;
}

}  // namespace

FreePolyomino FreePolyomino::from_cells(std::vector<Cell> cells, std::string name) {
  if (cells.empty()) throw FormatError("polyomino needs at least one cell");
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
    throw FormatError("polyomino has duplicate cells");
  normalize(cells);
  if (!connected(cells)) throw FormatError("polyomino cells are not edge-connected");
  auto images = all_images(cells);
  FreePolyomino p;
  p.cells_ = *std::min_element(images.begin(), images.end());
  p.name_ = std::move(name);
  for (const Cell& c : p.cells_) {
    p.height_ = std::max(p.height_, c.row + 1);
    p.width_ = std::max(p.width_, c.col + 1);
  }
  return p;
}

FreePolyomino FreePolyomino::from_ascii(std::string_view art, std::string name) {
  std::vector<Cell> cells;
  int row = 0, col = 0;
  for (char ch : art) {
    if (ch == '\n') {
      ++row;
      col = 0;
      continue;
    }
    if (ch == '#')
      cells.push_back({row, col});
    else if (ch != '.' && ch != ' ')
      throw FormatError(std::string("bad piece character '") + ch + "'");
    ++col;
  }
  return from_cells(std::move(cells), std::move(name));
}

std::vector<std::vector<Cell>> FreePolyomino::distinct_images() const {
  auto images = all_images(cells_);
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

std::string FreePolyomino::ascii() const {
  std::string out;
  for (int r = 0; r < height_; ++r) {
    for (int c = 0; c < width_; ++c)
      out += std::binary_search(cells_.begin(), cells_.end(), Cell{r, c}) ? '#' : '.';
    if (r + 1 < height_) out += '\n';
  }
  return out;
}

namespace {

const std::vector<std::pair<std::string, const char*>>& builtin_art() {
  static const std::vector<std::pair<std::string, const char*>> table = {
      {"monomino", "#"},
      {"domino", "##"},
      {"tromino-I", "###"},
      {"tromino-L", "#.\n##"},
      {"tetromino-I", "####"},
      {"tetromino-L", "#..\n###"},
      {"tetromino-O", "##\n##"},
      {"tetromino-S", ".##\n##."},
      {"tetromino-T", "###\n.#."},
      {"pentomino-F", ".##\n##.\n.#."},
      {"pentomino-I", "#####"},
      {"pentomino-L", "####\n#..."},
      {"pentomino-N", "..##\n###."},
      {"pentomino-P", "##\n##\n#."},
      {"pentomino-T", "###\n.#.\n.#."},
      {"pentomino-U", "#.#\n###"},
      {"pentomino-V", "#..\n#..\n###"},
      {"pentomino-W", "#..\n##.\n.##"},
      {"pentomino-X", ".#.\n###\n.#."},
      {"pentomino-Y", "..#.\n####"},
      {"pentomino-Z", "##.\n.#.\n.##"},
  };
  return table;
}

const std::map<std::string, FreePolyomino>& builtin_map() {
  static const std::map<std::string, FreePolyomino> table = [] {
    std::map<std::string, FreePolyomino> out;
    for (const auto& [name, art] : builtin_art())
      out.emplace(name, FreePolyomino::from_ascii(art, name));
    out.emplace("tetromino-Z", FreePolyomino::from_ascii(".##\n##.", "tetromino-S"));
    out.emplace("square-tetromino", FreePolyomino::from_ascii("##\n##", "tetromino-O"));
    return out;
  }();
  return table;
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& presets() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> table = {
      {"genius-square",
       {"monomino", "domino", "tromino-I", "tromino-L", "tetromino-I", "tetromino-L",
        "tetromino-O", "tetromino-S", "tetromino-T"}},
      {"pentominoes-all",
       {"pentomino-F", "pentomino-I", "pentomino-L", "pentomino-N", "pentomino-P",
        "pentomino-T", "pentomino-U", "pentomino-V", "pentomino-W", "pentomino-X",
        "pentomino-Y", "pentomino-Z"}},
  };
  return table;
}

}  // namespace

bool is_builtin_piece(std::string_view name) {
  return builtin_map().count(std::string(name)) > 0;
}

const FreePolyomino& builtin_piece(std::string_view name) {
  auto it = builtin_map().find(std::string(name));
  if (it == builtin_map().end())
    throw FormatError("unknown piece name: " + std::string(name));
  return it->second;
}

bool is_piece_preset(std::string_view name) {
  for (const auto& [preset, _] : presets())
    if (preset == name) return true;
  return false;
}

int PieceSet::total_area() const {
  int area = 0;
  for (const Entry& e : pieces) area += e.piece.order() * e.multiplicity;
  return area;
}

int PieceSet::piece_instances() const {
  int count = 0;
  for (const Entry& e : pieces) count += e.multiplicity;
  return count;
}

void PieceSet::add(const FreePolyomino& piece, int multiplicity) {
  if (multiplicity < 1) throw FormatError("piece multiplicity must be positive");
  for (Entry& e : pieces) {
    if (e.piece == piece) {
      e.multiplicity += multiplicity;
      return;
    }
  }
  pieces.push_back({piece, multiplicity});
}

std::string PieceSet::canonical_description() const {
  std::vector<std::pair<std::vector<Cell>, int>> entries;
  for (const Entry& e : pieces) entries.push_back({e.piece.cells(), e.multiplicity});
  std::sort(entries.begin(), entries.end());
  std::string out;
  for (const auto& [cells, mult] : entries) {
    out += std::to_string(mult) + "x[";
    for (const Cell& c : cells)
      out += std::to_string(c.row) + "," + std::to_string(c.col) + ";";
    out += "]";
  }
  return out;
}

namespace {

void add_named(PieceSet& set, const std::string& name, int count) {
  for (const auto& [preset, members] : presets()) {
    if (preset == name) {
      for (const std::string& member : members) set.add(builtin_piece(member), count);
      return;
    }
  }
  set.add(builtin_piece(name), count);
}

}  // namespace

PieceSet parse_pieces(std::string_view text) {
  PieceSet set;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto colon = line.find(':');
    std::string name = line.substr(0, colon);
    // trim
    while (!name.empty() && name.back() == ' ') name.pop_back();
    while (!name.empty() && name.front() == ' ') name.erase(name.begin());
    if (name.empty()) throw FormatError("piece line " + std::to_string(line_no) + ": empty name");
    int count = 1;
    if (colon != std::string::npos) {
      std::string count_text = line.substr(colon + 1);
      while (!count_text.empty() && count_text.front() == ' ') count_text.erase(count_text.begin());
      while (!count_text.empty() && count_text.back() == ' ') count_text.pop_back();
      if (count_text.empty() ||
          count_text.find_first_not_of("0123456789") != std::string::npos)
        throw FormatError("piece line " + std::to_string(line_no) + ": bad count '" +
                          count_text + "'");
      try {
        count = std::stoi(count_text);
      } catch (const std::exception&) {
        throw FormatError("piece line " + std::to_string(line_no) + ": bad count");
      }
      if (count < 1)
        throw FormatError("piece line " + std::to_string(line_no) + ": count must be positive");
    }
    if (is_builtin_piece(name) || is_piece_preset(name)) {
      add_named(set, name, count);
      continue;
    }
    // Inline shape: the following grid lines up to a blank line.
    if (colon == std::string::npos)
      throw FormatError("unknown piece name: " + name);
    std::string art;
    bool any = false;
    std::string grid_line;
    while (std::getline(in, grid_line)) {
      ++line_no;
      if (!grid_line.empty() && grid_line.back() == '\r') grid_line.pop_back();
      if (grid_line.empty()) break;
      if (grid_line.find_first_not_of("#. ") != std::string::npos)
        throw FormatError("unknown piece name: " + name);
      if (any) art += '\n';
      art += grid_line;
      any = true;
    }
    if (!any) throw FormatError("piece '" + name + "' has no shape grid");
    set.add(FreePolyomino::from_ascii(art, name), count);
  }
  if (set.pieces.empty()) throw FormatError("piece list is empty");
  return set;
}

std::vector<CellSet> placements(const FreePolyomino& p, const Board& b) {
  std::vector<CellSet> out;
  for (const auto& image : p.distinct_images()) {
    int h = 0, w = 0;
    for (const Cell& c : image) {
      h = std::max(h, c.row + 1);
      w = std::max(w, c.col + 1);
    }
    for (int dr = 0; dr + h <= b.rows; ++dr) {
      for (int dc = 0; dc + w <= b.cols; ++dc) {
        CellSet mask;
        for (const Cell& c : image) mask.set((c.row + dr) * b.cols + (c.col + dc));
        if (!mask.intersects(b.blocked)) out.push_back(mask);
      }
    }
  }
  return out;
}

}  // namespace gridsym
