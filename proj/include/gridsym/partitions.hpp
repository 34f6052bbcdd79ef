#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gridsym/bigint.hpp"
#include "gridsym/board.hpp"
#include "gridsym/symmetry.hpp"

namespace gridsym {

// Dimension parity cases. Each one carries its own region layout and
// admissibility predicate.
enum class CaseTag {
  SquareEven,     // 2k x 2k: four k x k quadrants
  SquareOdd,      // (2k+1)^2: four corners, four strips, center
  RectEven,       // 2k x 2l, k != l: four k x l quadrants
  RectOdd,        // (2k+1) x (2l+1), k != l: nine regions
  RectMixed,      // one side even, one odd (both > 1): corners + split strip
  SingleRowEven,  // 1 x 2l or 2l x 1: two halves
  SingleRowOdd,   // 1 x (2l+1) or (2l+1) x 1: two halves + center
};

enum class Region : std::uint8_t { L1, L2, L3, L4, D1, D2, D3, D4, C };
inline constexpr int kRegionCount = 9;

const char* case_name(CaseTag tag);
const char* region_name(Region r);

// Region layout for an m x n board. L1..L4 are the corner blocks (top-left,
// top-right, bottom-right, bottom-left); D1..D4 the mid strips (top, right,
// bottom, left); C the center cell. A RectMixed board has a single split
// middle strip: D1 the top/left half, D2 the bottom/right half.
struct RegionScheme {
  CaseTag tag;
  int rows, cols;
  std::vector<Region> region_of;                       // per cell index
  std::array<int, kRegionCount> sizes{};               // 0 for unused labels
  std::array<std::vector<int>, kRegionCount> cells;    // row-major, per region
  std::vector<Region> used;                            // labels of this case

  Region region_at(int cell) const { return region_of[cell]; }
};

RegionScheme region_scheme(int m, int n);

// Blocked-cell counts per region: (lambda1..4, delta1..4)_c.
struct BoardPartition {
  CaseTag tag = CaseTag::SingleRowOdd;
  int rows = 1, cols = 1;
  std::array<int, 4> lambda{};
  std::array<int, 4> delta{};
  int center = 0;

  int count(Region r) const;
  void set_count(Region r, int v);
  int total() const;
  std::string describe() const;  // "(3,1,2,1)" / "(1,0,1,0|2,0,1,0)_1"

  bool operator==(const BoardPartition&) const = default;
};

BoardPartition partition_of(const Board& b);
BoardPartition partition_of(const RegionScheme& scheme, const CellSet& blocked);

// The case-specific reduced-set membership predicate.
bool is_admissible(const BoardPartition& p);

// Symmetries permute region labels; K is the subgroup whose induced label
// permutation fixes the count tuple. Computed from the geometry, never from
// a table. Returns (K, [G:K]).
SymmetryGroup partition_stabilizer_group(const BoardPartition& p);
std::pair<SymmetryGroup, int> partition_stabilizer(const BoardPartition& p);

// Label permutation induced by g: out[region] = region its cells land in.
std::array<Region, kRegionCount> region_permutation(const RegionScheme& scheme, Symmetry g);

// Number of boards with this exact partition: product of C(size, count).
BigUint partition_board_count(const BoardPartition& p);

struct PartitionClass {
  BoardPartition partition;
  SymmetryGroup stabilizer;
  int weight = 1;
  BigUint board_count;
};

// All admissible partitions for (m, n, r), lexicographic in the
// (lambda, delta, c) tuple, each annotated with K, weight and |pi|.
std::vector<PartitionClass> admissible_partitions(int m, int n, int r);

// Sum of board counts / weighted board counts over the admissible
// partitions. The weighted total equals C(mn, r) (the reduction identity).
BigUint reduced_size(int m, int n, int r);
BigUint weighted_total(int m, int n, int r);

// Indexed enumeration of the boards carrying a fixed partition. Boards are
// ordered region by region (L1 block most significant), lexicographic cell
// combinations inside each region; the order is stable across runs, which
// makes ranges resumable.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(const BoardPartition& p);

  const BigUint& size() const { return size_; }

  // Visits boards with rank in [begin, end), clamped to size().
  void for_each(const BigUint& begin, const BigUint& end,
                const std::function<void(const Board&)>& fn) const;
  void for_each(const std::function<void(const Board&)>& fn) const;

 private:
  struct RegionSlot {
    Region region;
    int choose;
    BigUint combinations;
  };

  BoardPartition partition_;
  RegionScheme scheme_;
  std::vector<RegionSlot> slots_;
  BigUint size_;
};

std::vector<Board> boards_with_partition(const BoardPartition& p);

// Streams the reduced set: boards of every admissible partition, partition
// order as in admissible_partitions.
void for_each_reduced_board(int m, int n, int r,
                            const std::function<void(const Board&)>& fn);

}  // namespace gridsym
