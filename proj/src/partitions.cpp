#include "gridsym/partitions.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "gridsym/errors.hpp"

namespace gridsym {

const char* case_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::SquareEven: return "square-even";
    case CaseTag::SquareOdd: return "square-odd";
    case CaseTag::RectEven: return "rect-even";
    case CaseTag::RectOdd: return "rect-odd";
    case CaseTag::RectMixed: return "rect-mixed";
    case CaseTag::SingleRowEven: return "single-row-even";
    case CaseTag::SingleRowOdd: return "single-row-odd";
  }
  return "?";
}

const char* region_name(Region r) {
  switch (r) {
    case Region::L1: return "L1";
    case Region::L2: return "L2";
    case Region::L3: return "L3";
    case Region::L4: return "L4";
    case Region::D1: return "D1";
    case Region::D2: return "D2";
    case Region::D3: return "D3";
    case Region::D4: return "D4";
    case Region::C: return "C";
  }
  return "?";
}

namespace {

CaseTag classify(int m, int n) {
  if (m == 1 || n == 1) {
    int len = std::max(m, n);
    return (len % 2 == 0) ? CaseTag::SingleRowEven : CaseTag::SingleRowOdd;
  }
  const bool m_even = m % 2 == 0, n_even = n % 2 == 0;
  if (m == n) return m_even ? CaseTag::SquareEven : CaseTag::SquareOdd;
  if (m_even && n_even) return CaseTag::RectEven;
  if (!m_even && !n_even) return CaseTag::RectOdd;
  return CaseTag::RectMixed;
}

Region classify_cell(CaseTag tag, int m, int n, int i, int j) {
  switch (tag) {
    case CaseTag::SingleRowEven:
    case CaseTag::SingleRowOdd: {
      const int pos = (m == 1) ? j : i;
      const int len = std::max(m, n);
      const int half = len / 2;
      if (pos < half) return Region::L1;
      if (pos >= len - half) return Region::L2;
      return Region::C;
    }
    case CaseTag::SquareEven:
    case CaseTag::RectEven: {
      const int k = m / 2, l = n / 2;
      if (i < k) return (j < l) ? Region::L1 : Region::L2;
      return (j < l) ? Region::L4 : Region::L3;
    }
    case CaseTag::SquareOdd:
    case CaseTag::RectOdd: {
      const int k = m / 2, l = n / 2;
      if (i == k && j == l) return Region::C;
      if (j == l) return (i < k) ? Region::D1 : Region::D3;
      if (i == k) return (j < l) ? Region::D4 : Region::D2;
      if (i < k) return (j < l) ? Region::L1 : Region::L2;
      return (j < l) ? Region::L4 : Region::L3;
    }
    case CaseTag::RectMixed: {
      if (m % 2 == 0) {
        // even rows, odd columns: split middle column
        const int k = m / 2, l = n / 2;
        if (j == l) return (i < k) ? Region::D1 : Region::D2;
        if (i < k) return (j < l) ? Region::L1 : Region::L2;
        return (j < l) ? Region::L4 : Region::L3;
      }
      // odd rows, even columns: split middle row
      const int k = m / 2, l = n / 2;
      if (i == k) return (j < l) ? Region::D1 : Region::D2;
      if (i < k) return (j < l) ? Region::L1 : Region::L2;
      return (j < l) ? Region::L4 : Region::L3;
    }
  }
  return Region::C;
}

std::vector<Region> used_labels(CaseTag tag) {
  switch (tag) {
    case CaseTag::SquareEven:
    case CaseTag::RectEven:
      return {Region::L1, Region::L2, Region::L3, Region::L4};
    case CaseTag::SquareOdd:
    case CaseTag::RectOdd:
      return {Region::L1, Region::L2, Region::L3, Region::L4,
              Region::D1, Region::D2, Region::D3, Region::D4, Region::C};
    case CaseTag::RectMixed:
      return {Region::L1, Region::L2, Region::L3, Region::L4, Region::D1, Region::D2};
    case CaseTag::SingleRowEven:
      return {Region::L1, Region::L2};
    case CaseTag::SingleRowOdd:
      return {Region::L1, Region::L2, Region::C};
  }
  return {};
}

}  // namespace

RegionScheme region_scheme(int m, int n) {
  if (m < 1 || n < 1) throw ConfigError("board dimensions must be positive");
  RegionScheme s;
  s.tag = classify(m, n);
  s.rows = m;
  s.cols = n;
  s.used = used_labels(s.tag);
  s.region_of.resize(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      Region r = classify_cell(s.tag, m, n, i, j);
      const int idx = i * n + j;
      s.region_of[idx] = r;
      s.sizes[static_cast<int>(r)]++;
      s.cells[static_cast<int>(r)].push_back(idx);
    }
  }
  return s;
}

int BoardPartition::count(Region r) const {
  switch (r) {
    case Region::L1: return lambda[0];
    case Region::L2: return lambda[1];
    case Region::L3: return lambda[2];
    case Region::L4: return lambda[3];
    case Region::D1: return delta[0];
    case Region::D2: return delta[1];
    case Region::D3: return delta[2];
    case Region::D4: return delta[3];
    case Region::C: return center;
  }
  return 0;
}

void BoardPartition::set_count(Region r, int v) {
  switch (r) {
    case Region::L1: lambda[0] = v; return;
    case Region::L2: lambda[1] = v; return;
    case Region::L3: lambda[2] = v; return;
    case Region::L4: lambda[3] = v; return;
    case Region::D1: delta[0] = v; return;
    case Region::D2: delta[1] = v; return;
    case Region::D3: delta[2] = v; return;
    case Region::D4: delta[3] = v; return;
    case Region::C: center = v; return;
  }
}

int BoardPartition::total() const {
  return lambda[0] + lambda[1] + lambda[2] + lambda[3] + delta[0] + delta[1] +
         delta[2] + delta[3] + center;
}

std::string BoardPartition::describe() const {
  const bool has_delta = tag == CaseTag::SquareOdd || tag == CaseTag::RectOdd ||
                         tag == CaseTag::RectMixed;
  const bool has_center = tag == CaseTag::SquareOdd || tag == CaseTag::RectOdd ||
                          tag == CaseTag::SingleRowOdd;
  std::string out = "(";
  if (tag == CaseTag::SingleRowEven || tag == CaseTag::SingleRowOdd) {
    out += std::to_string(lambda[0]) + "," + std::to_string(lambda[1]);
  } else {
    for (int i = 0; i < 4; ++i) {
      if (i) out += ",";
      out += std::to_string(lambda[i]);
    }
  }
  if (has_delta) {
    out += "|";
    const int strips = (tag == CaseTag::RectMixed) ? 2 : 4;
    for (int i = 0; i < strips; ++i) {
      if (i) out += ",";
      out += std::to_string(delta[i]);
    }
  }
  out += ")";
  if (has_center) out += "_" + std::to_string(center);
  return out;
}

BoardPartition partition_of(const RegionScheme& scheme, const CellSet& blocked) {
  BoardPartition p;
  p.tag = scheme.tag;
  p.rows = scheme.rows;
  p.cols = scheme.cols;
  blocked.for_each([&](int idx) {
    Region r = scheme.region_at(idx);
    p.set_count(r, p.count(r) + 1);
  });
  return p;
}

BoardPartition partition_of(const Board& b) {
  return partition_of(region_scheme(b.rows, b.cols), b.blocked);
}

namespace {

bool square_even_ok(const std::array<int, 4>& l) {
  if (l[0] < l[1] || l[0] < l[2] || l[0] < l[3]) return false;
  if (l[1] < l[3]) return false;
  if (l[0] == l[1] && l[2] < l[3]) return false;
  return true;
}

bool square_odd_ok(const std::array<int, 4>& l, const std::array<int, 4>& d) {
  if (!square_even_ok(l)) return false;  // (i)-(iii) are shared
  if (l[0] == l[2] && l[1] != l[3]) {
    if (d[0] < d[1]) return false;
    if (d[0] == d[1] && d[2] < d[3]) return false;
  }
  if (l[1] == l[3] && l[0] != l[2]) {
    if (d[0] < d[3]) return false;
    if (d[0] == d[3] && d[1] < d[2]) return false;
  }
  if (l[0] == l[1] && l[1] > l[2] && l[2] == l[3]) {
    if (d[1] < d[3]) return false;
  }
  if (l[0] == l[2] && l[2] > l[1] && l[1] == l[3]) {
    if (d[0] < d[1] || d[0] < d[2] || d[0] < d[3]) return false;
    if (d[0] == d[1] && d[2] < d[3]) return false;
    if (d[0] == d[2] && d[1] < d[3]) return false;
    if (d[0] == d[3] && d[1] < d[2]) return false;
  }
  if (l[0] == l[1] && l[1] == l[2] && l[2] == l[3]) {
    if (d[0] < d[1] || d[0] < d[2] || d[0] < d[3]) return false;
    if (d[1] < d[3]) return false;
    if (d[0] == d[1] && d[2] < d[3]) return false;
  }
  return true;
}

bool rect_even_ok(const std::array<int, 4>& l) {
  if (l[0] < l[1] || l[0] < l[2] || l[0] < l[3]) return false;
  if (l[0] == l[1] && l[2] < l[3]) return false;
  if (l[0] == l[2] && l[1] < l[3]) return false;
  if (l[0] == l[3] && l[1] < l[2]) return false;
  return true;
}

bool rect_odd_ok(const std::array<int, 4>& l, const std::array<int, 4>& d) {
  if (l[0] < l[1] || l[0] < l[2] || l[0] < l[3]) return false;
  if (l[0] == l[2]) {
    if (l[1] < l[3]) return false;
    if (l[1] == l[3]) {
      if (d[0] < d[2]) return false;
      if (d[0] == d[2] && d[1] < d[3]) return false;
    }
  }
  if (l[0] == l[1]) {
    if (l[2] < l[3]) return false;
    if (l[2] == l[3] && d[1] < d[3]) return false;
  }
  if (l[0] == l[3]) {
    if (l[1] < l[2]) return false;
    if (l[1] == l[2] && d[0] < d[2]) return false;
  }
  return true;
}

bool rect_mixed_ok(int l1, int l2, int l3, int l4, int d1, int d2) {
  if (l1 < l2 || l1 < l3 || l1 < l4) return false;
  if (l1 == l2 && l3 < l4) return false;
  if (l1 == l3) {
    if (l2 < l4) return false;
    if (l2 == l4 && d1 < d2) return false;
  }
  if (l1 == l4) {
    if (l2 < l3) return false;
    if (l2 == l3 && d1 < d2) return false;
  }
  return true;
}

}  // namespace

bool is_admissible(const BoardPartition& p) {
  switch (p.tag) {
    case CaseTag::SquareEven:
      return square_even_ok(p.lambda);
    case CaseTag::SquareOdd:
      return square_odd_ok(p.lambda, p.delta);
    case CaseTag::RectEven:
      return rect_even_ok(p.lambda);
    case CaseTag::RectOdd:
      return rect_odd_ok(p.lambda, p.delta);
    case CaseTag::RectMixed:
      // The split strip is vertical when rows are even (the layout the
      // predicate is stated for). The odd-rows layout is its transpose,
      // which exchanges the roles of L2 and L4.
      if (p.rows % 2 == 0)
        return rect_mixed_ok(p.lambda[0], p.lambda[1], p.lambda[2], p.lambda[3],
                             p.delta[0], p.delta[1]);
      return rect_mixed_ok(p.lambda[0], p.lambda[3], p.lambda[2], p.lambda[1],
                           p.delta[0], p.delta[1]);
    case CaseTag::SingleRowEven:
    case CaseTag::SingleRowOdd:
      return p.lambda[0] >= p.lambda[1];
  }
  return false;
}

std::array<Region, kRegionCount> region_permutation(const RegionScheme& scheme, Symmetry g) {
  std::array<Region, kRegionCount> perm{};
  for (int r = 0; r < kRegionCount; ++r) perm[r] = static_cast<Region>(r);
  for (Region r : scheme.used) {
    const auto& cells = scheme.cells[static_cast<int>(r)];
    if (cells.empty()) continue;
    const int idx = cells.front();
    Cell image = apply_to_cell(g, scheme.rows, scheme.cols,
                               {idx / scheme.cols, idx % scheme.cols});
    perm[static_cast<int>(r)] = scheme.region_at(image.row * scheme.cols + image.col);
  }
  return perm;
}

SymmetryGroup partition_stabilizer_group(const BoardPartition& p) {
  const RegionScheme scheme = region_scheme(p.rows, p.cols);
  const SymmetryGroup group = SymmetryGroup::of_board(p.rows, p.cols);
  std::vector<Symmetry> fixing;
  for (Symmetry g : group.elements()) {
    const auto perm = region_permutation(scheme, g);
    bool fixes = true;
    for (Region r : scheme.used) {
      if (p.count(r) != p.count(perm[static_cast<int>(r)])) {
        fixes = false;
        break;
      }
    }
    if (fixes) fixing.push_back(g);
  }
  return SymmetryGroup{fixing};
}

std::pair<SymmetryGroup, int> partition_stabilizer(const BoardPartition& p) {
  SymmetryGroup k = partition_stabilizer_group(p);
  const int g_order = SymmetryGroup::of_board(p.rows, p.cols).order();
  assert(g_order % k.order() == 0);
  return {k, g_order / k.order()};
}

BigUint partition_board_count(const BoardPartition& p) {
  const RegionScheme scheme = region_scheme(p.rows, p.cols);
  BigUint out{1};
  for (Region r : scheme.used)
    out = out * binomial(scheme.sizes[static_cast<int>(r)], p.count(r));
  return out;
}

std::vector<PartitionClass> admissible_partitions(int m, int n, int r) {
  if (r < 0 || r > m * n) throw ConfigError("blocker count out of range");
  const RegionScheme scheme = region_scheme(m, n);
  const SymmetryGroup group = SymmetryGroup::of_board(m, n);
  const int g_order = group.order();

  // Label permutations and binomial rows are shared by every partition.
  std::vector<std::pair<Symmetry, std::array<Region, kRegionCount>>> perms;
  for (Symmetry g : group.elements()) perms.emplace_back(g, region_permutation(scheme, g));
  std::map<int, std::vector<BigUint>> rows;
  for (Region reg : scheme.used) {
    const int size = scheme.sizes[static_cast<int>(reg)];
    if (rows.count(size)) continue;
    auto& row = rows[size];
    row.reserve(size + 1);
    for (int k = 0; k <= size; ++k) row.push_back(binomial(size, k));
  }

  std::vector<PartitionClass> out;
  const int regions = static_cast<int>(scheme.used.size());
  std::vector<int> counts(regions, 0);

  auto emit = [&]() {
    BoardPartition p;
    p.tag = scheme.tag;
    p.rows = m;
    p.cols = n;
    for (int i = 0; i < regions; ++i) p.set_count(scheme.used[i], counts[i]);
    if (!is_admissible(p)) return;
    PartitionClass pc;
    pc.board_count = BigUint{1};
    for (int i = 0; i < regions; ++i) {
      const int size = scheme.sizes[static_cast<int>(scheme.used[i])];
      pc.board_count = pc.board_count * rows[size][counts[i]];
    }
    std::vector<Symmetry> fixing;
    for (const auto& [g, perm] : perms) {
      bool fixes = true;
      for (Region reg : scheme.used) {
        if (p.count(reg) != p.count(perm[static_cast<int>(reg)])) {
          fixes = false;
          break;
        }
      }
      if (fixes) fixing.push_back(g);
    }
    pc.partition = std::move(p);
    pc.stabilizer = SymmetryGroup{fixing};
    pc.weight = g_order / pc.stabilizer.order();
    assert(pc.weight * pc.stabilizer.order() == g_order);
    out.push_back(std::move(pc));
  };

  // Lexicographic enumeration of count tuples summing to r under the
  // per-region capacities.
  auto recurse = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == regions) {
      if (remaining == 0) emit();
      return;
    }
    int tail_capacity = 0;
    for (int i = slot + 1; i < regions; ++i)
      tail_capacity += scheme.sizes[static_cast<int>(scheme.used[i])];
    const int size = scheme.sizes[static_cast<int>(scheme.used[slot])];
    const int low = std::max(0, remaining - tail_capacity);
    const int high = std::min(size, remaining);
    for (int c = low; c <= high; ++c) {
      counts[slot] = c;
      self(self, slot + 1, remaining - c);
    }
    counts[slot] = 0;
  };
  recurse(recurse, 0, r);
  (void)g_order;
  return out;
}

BigUint reduced_size(int m, int n, int r) {
  BigUint total;
  for (const PartitionClass& pc : admissible_partitions(m, n, r)) total += pc.board_count;
  return total;
}

BigUint weighted_total(int m, int n, int r) {
  BigUint total;
  for (const PartitionClass& pc : admissible_partitions(m, n, r))
    total += pc.board_count * static_cast<std::uint32_t>(pc.weight);
  return total;
}

PartitionEnumerator::PartitionEnumerator(const BoardPartition& p)
    : partition_(p), scheme_(region_scheme(p.rows, p.cols)), size_(1) {
  for (Region r : scheme_.used) {
    RegionSlot slot;
    slot.region = r;
    slot.choose = p.count(r);
    const int region_size = scheme_.sizes[static_cast<int>(r)];
    if (slot.choose < 0 || slot.choose > region_size)
      throw ConfigError("partition count exceeds region size");
    slot.combinations = binomial(region_size, slot.choose);
    size_ = size_ * slot.combinations;
    slots_.push_back(std::move(slot));
  }
}

namespace {

// Lexicographically next k-combination over {0..size-1}; false on wrap.
bool next_combination(std::vector<int>& pick, int size) {
  const int k = static_cast<int>(pick.size());
  int i = k - 1;
  while (i >= 0 && pick[i] == size - k + i) --i;
  if (i < 0) {
    for (int j = 0; j < k; ++j) pick[j] = j;
    return false;
  }
  ++pick[i];
  for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  return true;
}

// Combination with the given lexicographic rank.
std::vector<int> unrank_combination(const BigUint& rank, int size, int k) {
  std::vector<int> pick(k);
  BigUint rest = rank;
  int next = 0;
  for (int slot = 0; slot < k; ++slot) {
    for (int candidate = next;; ++candidate) {
      BigUint block = binomial(size - candidate - 1, k - slot - 1);
      if (rest < block) {
        pick[slot] = candidate;
        next = candidate + 1;
        break;
      }
      rest -= block;
    }
  }
  return pick;
}

}  // namespace

void PartitionEnumerator::for_each(const BigUint& begin, const BigUint& end,
                                   const std::function<void(const Board&)>& fn) const {
  if (size_.is_zero() || !(begin < size_) || !(begin < end)) return;
  const BigUint stop = (end < size_) ? end : size_;

  // Mixed-radix unranking: earlier regions are more significant.
  const int regions = static_cast<int>(slots_.size());
  std::vector<BigUint> suffix(regions + 1, BigUint{1});
  for (int i = regions - 1; i >= 0; --i)
    suffix[i] = suffix[i + 1] * slots_[i].combinations;

  auto region_cells = [&](int i) -> const std::vector<int>& {
    return scheme_.cells[static_cast<int>(slots_[i].region)];
  };

  std::vector<std::vector<int>> picks(regions);
  BigUint rest = begin;
  for (int i = 0; i < regions; ++i) {
    BigUint digit, rem;
    BigUint::divmod(rest, suffix[i + 1], digit, rem);
    picks[i] = unrank_combination(digit, static_cast<int>(region_cells(i).size()),
                                  slots_[i].choose);
    rest = std::move(rem);
  }

  BigUint remaining = stop;
  remaining -= begin;
  Board board(partition_.rows, partition_.cols);
  while (true) {
    board.blocked = CellSet{};
    for (int i = 0; i < regions; ++i)
      for (int pos : picks[i]) board.blocked.set(region_cells(i)[pos]);
    fn(board);
    remaining -= BigUint{1};
    if (remaining.is_zero()) break;
    int slot = regions - 1;
    while (slot >= 0 &&
           !next_combination(picks[slot], static_cast<int>(region_cells(slot).size())))
      --slot;
    if (slot < 0) break;  // unreachable: remaining > 0 cannot outlive the odometer
  }
}

void PartitionEnumerator::for_each(const std::function<void(const Board&)>& fn) const {
  for_each(BigUint{0}, size_, fn);
}

std::vector<Board> boards_with_partition(const BoardPartition& p) {
  PartitionEnumerator en(p);
  std::vector<Board> out;
  en.for_each([&](const Board& b) { out.push_back(b); });
  return out;
}

void for_each_reduced_board(int m, int n, int r,
                            const std::function<void(const Board&)>& fn) {
  for (const PartitionClass& pc : admissible_partitions(m, n, r)) {
    PartitionEnumerator en(pc.partition);
    en.for_each(fn);
  }
}

}  // namespace gridsym
