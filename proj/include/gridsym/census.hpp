#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridsym/bigint.hpp"
#include "gridsym/partitions.hpp"
#include "gridsym/polyomino.hpp"

namespace gridsym {

struct CensusConfig {
  int rows = 0, cols = 0, blockers = 0;
  PieceSet pieces;
  std::string pieces_label;  // how the pieces were specified, for reports
  int jobs = 1;
  std::string checkpoint_path;    // empty = no checkpointing
  std::uint64_t node_cap = 0;     // per tiling instance, 0 = unlimited
  std::uint64_t chunk = 4096;     // boards per work unit; fixed across runs
};

// Per-partition tally: |pi|, |S| and the weight that lifts both to the
// full board space.
struct CensusRecord {
  BoardPartition partition;
  SymmetryGroup stabilizer;
  int weight = 1;
  std::uint64_t board_count = 0;
  std::uint64_t solvable_count = 0;
  std::uint64_t unsolvable_count = 0;
  bool complete = false;
};

struct CensusReport {
  int rows = 0, cols = 0, blockers = 0;
  std::string pieces_label;
  std::vector<CensusRecord> records;

  BigUint reduced_total, reduced_solvable, reduced_unsolvable;
  BigUint weighted_total, weighted_solvable, weighted_unsolvable;
  BigUint orbit_count;
  Ratio ratio;  // reduced_total / orbit_count

  std::string human_table() const;
  std::string csv() const;
  std::string summary_line() const;
};

// Classifies every board of the reduced set as solvable or unsolvable and
// recovers full-space totals by weighted counting. Deterministic for a
// fixed config regardless of worker count; resumable from the checkpoint
// with an identical final report.
CensusReport run_census(const CensusConfig& cfg);

// Work units are (partition, contiguous rank range) pairs; the checkpoint
// is an append-only log of finished units under a config-hash header.
std::uint64_t census_config_hash(const CensusConfig& cfg);

}  // namespace gridsym
