#include "gridsym/board.hpp"

#include <bit>
#include <cassert>
#include <sstream>

#include "gridsym/errors.hpp"

namespace gridsym {

int CellSet::count() const {
  int n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

bool CellSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool CellSet::intersects(const CellSet& o) const {
  for (int i = 0; i < kWords; ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

bool CellSet::contains(const CellSet& o) const {
  for (int i = 0; i < kWords; ++i)
    if ((words_[i] & o.words_[i]) != o.words_[i]) return false;
  return true;
}

CellSet& CellSet::operator|=(const CellSet& o) {
  for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
  return *this;
}

CellSet& CellSet::operator&=(const CellSet& o) {
  for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
  return *this;
}

CellSet& CellSet::subtract(const CellSet& o) {
  for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
  return *this;
}

bool CellSet::lex_less(const CellSet& a, const CellSet& b) {
  for (int i = 0; i < kWords; ++i) {
    std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff) {
      std::uint64_t low = diff & (~diff + 1);
      return (a.words_[i] & low) != 0;
    }
  }
  return false;
}

int CellSet::lowest() const {
  for (int i = 0; i < kWords; ++i)
    if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
  return -1;
}

std::vector<int> CellSet::indices() const {
  std::vector<int> out;
  out.reserve(count());
  for_each([&](int i) { out.push_back(i); });
  return out;
}

std::size_t CellSet::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

Board::Board(int m, int n) : rows(m), cols(n) {
  if (m < 1 || n < 1) throw ConfigError("board dimensions must be positive");
  if (m * n > CellSet::kMaxCells)
    throw ConfigError("board exceeds the supported cell count (" +
                      std::to_string(CellSet::kMaxCells) + ")");
}

Board::Board(int m, int n, const std::vector<Cell>& cells) : Board(m, n) {
  for (const Cell& c : cells) {
    if (c.row < 0 || c.row >= m || c.col < 0 || c.col >= n)
      throw ConfigError("blocked cell out of bounds");
    int idx = index_of(c);
    if (blocked.test(idx)) throw ConfigError("duplicate blocked cell");
    blocked.set(idx);
  }
}

std::vector<Cell> Board::blocked_cells() const {
  std::vector<Cell> out;
  out.reserve(blocked_count());
  blocked.for_each([&](int i) { out.push_back({i / cols, i % cols}); });
  return out;
}

std::size_t BoardHash::operator()(const Board& b) const {
  return b.blocked.hash() * 1000003u + static_cast<std::size_t>(b.rows * 8191 + b.cols);
}

namespace {

Board parse_compact(int m, int n, const std::string& rest) {
  std::istringstream in(rest);
  std::vector<Cell> cells;
  std::string tok;
  while (in >> tok) {
    auto comma = tok.find(',');
    if (comma == std::string::npos) throw FormatError("expected 'row,col' in compact board");
    try {
      cells.push_back({std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1))});
    } catch (const std::exception&) {
      throw FormatError("bad coordinate in compact board: " + tok);
    }
  }
  try {
    return Board(m, n, cells);
  } catch (const ConfigError& e) {
    throw FormatError(e.what());
  }
}

}  // namespace

Board parse_board(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header)) throw FormatError("empty board text");
  int m = 0, n = 0;
  std::istringstream hs(header);
  if (!(hs >> m >> n) || m < 1 || n < 1) throw FormatError("bad board header: " + header);
  std::string tail;
  if (hs >> tail) {
    if (tail[0] != ':') throw FormatError("bad board header: " + header);
    std::string rest = tail.substr(1);
    std::string extra;
    while (hs >> extra) rest += " " + extra;
    return parse_compact(m, n, rest);
  }
  auto colon = header.find(':');
  if (colon != std::string::npos) return parse_compact(m, n, header.substr(colon + 1));

  Board b(m, n);
  for (int r = 0; r < m; ++r) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("board grid ended early");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (static_cast<int>(line.size()) != n)
      throw FormatError("board row " + std::to_string(r) + " has wrong length");
    for (int c = 0; c < n; ++c) {
      if (line[c] == '#')
        b.blocked.set(b.index_of({r, c}));
      else if (line[c] != '.')
        throw FormatError(std::string("bad board character '") + line[c] + "'");
    }
  }
  return b;
}

std::string render_board_grid(const Board& b) {
  std::string out = std::to_string(b.rows) + " " + std::to_string(b.cols) + "\n";
  for (int r = 0; r < b.rows; ++r) {
    for (int c = 0; c < b.cols; ++c) out += b.is_blocked(r, c) ? '#' : '.';
    out += '\n';
  }
  return out;
}

std::string render_board_compact(const Board& b) {
  std::string out = std::to_string(b.rows) + " " + std::to_string(b.cols) + ":";
  b.blocked.for_each([&](int i) {
    out += " " + std::to_string(i / b.cols) + "," + std::to_string(i % b.cols);
  });
  return out;
}

}  // namespace gridsym
