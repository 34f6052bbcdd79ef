#include "gridsym/census.hpp"

#include <atomic>
#include <cassert>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "gridsym/board.hpp"
#include "gridsym/burnside.hpp"
#include "gridsym/errors.hpp"
#include "gridsym/tiling_solver.hpp"

namespace gridsym {

namespace {

constexpr const char* kCheckpointMagic = "gridsym-census-v1";

struct WorkUnit {
  int record;
  std::uint64_t begin, end;
  std::uint64_t solvable = 0;
  bool done = false;
};

void validate_config(const CensusConfig& cfg) {
  if (cfg.rows < 1 || cfg.cols < 1) throw ConfigError("bad board dimensions");
  if (cfg.blockers < 0 || cfg.blockers > cfg.rows * cfg.cols)
    throw ConfigError("blocker count out of range");
  if (cfg.pieces.pieces.empty()) throw ConfigError("piece set is empty");
  if (cfg.jobs < 1) throw ConfigError("worker count must be positive");
  if (cfg.chunk < 1) throw ConfigError("chunk size must be positive");
  const int open = cfg.rows * cfg.cols - cfg.blockers;
  if (cfg.pieces.total_area() != open)
    throw AreaMismatchError("piece area " + std::to_string(cfg.pieces.total_area()) +
                            " != open cells " + std::to_string(open));
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string checkpoint_header(const CensusConfig& cfg, std::size_t units) {
  std::ostringstream out;
  out << kCheckpointMagic << " hash=" << std::hex << census_config_hash(cfg) << std::dec
      << " units=" << units;
  return out.str();
}

// Marks completed units from an existing checkpoint. A short or cut-off
// final line is tolerated (the unit is simply redone); anything
// inconsistent with the current config is an error.
void load_checkpoint(const std::string& path, const CensusConfig& cfg,
                     std::vector<WorkUnit>& units) {
  std::ifstream in(path);
  if (!in) return;
  std::string header;
  if (!std::getline(in, header)) return;  // empty file: treat as fresh
  if (header != checkpoint_header(cfg, units.size()))
    throw CheckpointError("checkpoint does not match this census configuration");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    char tag = 0;
    std::size_t idx = 0;
    int record = -1;
    std::uint64_t begin = 0, end = 0, solvable = 0;
    if (!(ls >> tag >> idx >> record >> begin >> end >> solvable)) {
      if (in.eof()) break;  // truncated trailing record: redo that unit
      throw CheckpointError("unreadable checkpoint line: " + line);
    }
    if (tag != 'U' || idx >= units.size()) throw CheckpointError("bad checkpoint record");
    WorkUnit& unit = units[idx];
    if (unit.record != record || unit.begin != begin || unit.end != end)
      throw CheckpointError("checkpoint unit " + std::to_string(idx) +
                            " does not match the configured work layout");
    if (solvable > end - begin) throw CheckpointError("checkpoint tally out of range");
    unit.solvable = solvable;
    unit.done = true;
  }
}

}  // namespace

std::uint64_t census_config_hash(const CensusConfig& cfg) {
  std::ostringstream key;
  key << "m=" << cfg.rows << ";n=" << cfg.cols << ";r=" << cfg.blockers
      << ";chunk=" << cfg.chunk << ";pieces=" << cfg.pieces.canonical_description();
  return fnv1a(key.str());
}

CensusReport run_census(const CensusConfig& cfg) {
  validate_config(cfg);

  CensusReport report;
  report.rows = cfg.rows;
  report.cols = cfg.cols;
  report.blockers = cfg.blockers;
  report.pieces_label = cfg.pieces_label;
  for (char& c : report.pieces_label)
    if (c == '\n' || c == '\r') c = ';';  // keep report lines one line

  std::vector<PartitionEnumerator> enumerators;
  for (PartitionClass& pc : admissible_partitions(cfg.rows, cfg.cols, cfg.blockers)) {
    CensusRecord rec;
    if (!pc.board_count.fits_u64())
      throw ConfigError("partition too large for a census: " + pc.partition.describe());
    rec.partition = pc.partition;
    rec.stabilizer = pc.stabilizer;
    rec.weight = pc.weight;
    rec.board_count = pc.board_count.to_u64();
    enumerators.emplace_back(rec.partition);
    report.records.push_back(std::move(rec));
  }

  std::vector<WorkUnit> units;
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const std::uint64_t count = report.records[i].board_count;
    for (std::uint64_t begin = 0; begin < count; begin += cfg.chunk)
      units.push_back({static_cast<int>(i), begin, std::min(begin + cfg.chunk, count)});
  }

  const bool use_checkpoint = !cfg.checkpoint_path.empty();
  if (use_checkpoint) load_checkpoint(cfg.checkpoint_path, cfg, units);

  std::ofstream log;
  std::mutex log_mutex;
  if (use_checkpoint) {
    const bool fresh = [&] {
      std::ifstream probe(cfg.checkpoint_path);
      std::string first;
      return !probe || !std::getline(probe, first) || first.empty();
    }();
    log.open(cfg.checkpoint_path, fresh ? std::ios::trunc : std::ios::app);
    if (!log) throw CheckpointError("cannot open checkpoint " + cfg.checkpoint_path);
    if (fresh) log << checkpoint_header(cfg, units.size()) << "\n" << std::flush;
  }

  std::atomic<std::size_t> next_unit{0};
  std::atomic<bool> abort{false};
  std::mutex error_mutex;
  std::string error_board;

  auto worker = [&]() {
    TilingEngine engine(cfg.rows, cfg.cols, cfg.pieces);
    const SolveOptions opts{.node_cap = cfg.node_cap};
    while (!abort.load(std::memory_order_relaxed)) {
      const std::size_t idx = next_unit.fetch_add(1);
      if (idx >= units.size()) return;
      WorkUnit& unit = units[idx];
      if (unit.done) continue;
      std::uint64_t solvable_here = 0;
      try {
        enumerators[unit.record].for_each(
            BigUint{unit.begin}, BigUint{unit.end}, [&](const Board& b) {
              if (abort.load(std::memory_order_relaxed)) throw CapExceededError("aborted");
              if (engine.solve(b.blocked, opts)) ++solvable_here;
            });
      } catch (const NodeCapError&) {
        std::lock_guard<std::mutex> lock(error_mutex);
        abort.store(true);
        if (error_board.empty()) {
          // re-find the offending board: the first in this unit that trips
          // the cap; cheap relative to the search that just hit it
          enumerators[unit.record].for_each(
              BigUint{unit.begin}, BigUint{unit.end}, [&](const Board& b) {
                if (!error_board.empty()) return;
                try {
                  engine.solve(b.blocked, opts);
                } catch (const NodeCapError&) {
                  error_board = render_board_compact(b);
                }
              });
        }
        return;
      } catch (const CapExceededError&) {
        return;  // cooperative cancellation
      }
      unit.solvable = solvable_here;
      unit.done = true;
      if (use_checkpoint) {
        std::lock_guard<std::mutex> lock(log_mutex);
        log << "U " << idx << " " << unit.record << " " << unit.begin << " " << unit.end
            << " " << unit.solvable << "\n"
            << std::flush;
      }
    }
  };

  {
    std::vector<std::thread> pool;
    const int jobs = cfg.jobs;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (abort.load())
    throw NodeCapError("census aborted: node cap exceeded on board " + error_board);

  for (const WorkUnit& unit : units) {
    assert(unit.done);
    report.records[unit.record].solvable_count += unit.solvable;
  }
  for (CensusRecord& rec : report.records) {
    rec.unsolvable_count = rec.board_count - rec.solvable_count;
    rec.complete = true;

    report.reduced_total += BigUint{rec.board_count};
    report.reduced_solvable += BigUint{rec.solvable_count};
    report.reduced_unsolvable += BigUint{rec.unsolvable_count};
    const auto w = static_cast<std::uint32_t>(rec.weight);
    report.weighted_total += BigUint{rec.board_count} * w;
    report.weighted_solvable += BigUint{rec.solvable_count} * w;
    report.weighted_unsolvable += BigUint{rec.unsolvable_count} * w;
  }
  if (report.weighted_total != binomial(cfg.rows * cfg.cols, cfg.blockers))
    throw std::logic_error("census weighted total does not equal C(mn, r)");
  report.orbit_count = orbit_count_closed_form(cfg.rows, cfg.cols, cfg.blockers);
  report.ratio = Ratio(report.reduced_total, report.orbit_count);
  return report;
}

std::string CensusReport::human_table() const {
  std::ostringstream out;
  out << "census " << rows << "x" << cols << " r=" << blockers << " pieces="
      << pieces_label << "\n";
  out << "partition                K        weight      boards    solvable  unsolvable\n";
  for (const CensusRecord& rec : records) {
    std::string part = rec.partition.describe();
    part.resize(24, ' ');
    std::string k = rec.stabilizer.describe();
    k.resize(8, ' ');
    out << part << " " << k << " " << rec.weight << "     ";
    std::string b = std::to_string(rec.board_count);
    std::string s = std::to_string(rec.solvable_count);
    std::string u = std::to_string(rec.unsolvable_count);
    out << std::string(12 - std::min<std::size_t>(12, b.size()), ' ') << b
        << std::string(12 - std::min<std::size_t>(12, s.size()), ' ') << s
        << std::string(12 - std::min<std::size_t>(12, u.size()), ' ') << u << "\n";
  }
  out << "reduced:  total=" << reduced_total.to_decimal()
      << " solvable=" << reduced_solvable.to_decimal()
      << " unsolvable=" << reduced_unsolvable.to_decimal() << "\n";
  out << "weighted: total=" << weighted_total.to_decimal()
      << " solvable=" << weighted_solvable.to_decimal()
      << " unsolvable=" << weighted_unsolvable.to_decimal() << "\n";
  out << "classes=" << orbit_count.to_decimal() << " ratio=" << ratio.decimal(4) << "\n";
  return out.str();
}

std::string CensusReport::csv() const {
  std::ostringstream out;
  out << "case,lambda1,lambda2,lambda3,lambda4,delta1,delta2,delta3,delta4,c,"
         "board_count,solvable,unsolvable,K,weight\n";
  for (const CensusRecord& rec : records) {
    const BoardPartition& p = rec.partition;
    out << case_name(p.tag);
    for (int i = 0; i < 4; ++i) out << "," << p.lambda[i];
    for (int i = 0; i < 4; ++i) out << "," << p.delta[i];
    out << "," << p.center << "," << rec.board_count << "," << rec.solvable_count << ","
        << rec.unsolvable_count << ",";
    std::string k = rec.stabilizer.element_list();
    for (char& c : k)
      if (c == ',') c = '+';
    out << k << "," << rec.weight << "\n";
  }
  return out.str();
}

std::string CensusReport::summary_line() const {
  std::ostringstream out;
  out << "census m=" << rows << " n=" << cols << " r=" << blockers
      << " pieces=" << pieces_label << " reduced_total=" << reduced_total.to_decimal()
      << " reduced_solvable=" << reduced_solvable.to_decimal()
      << " reduced_unsolvable=" << reduced_unsolvable.to_decimal()
      << " weighted_total=" << weighted_total.to_decimal()
      << " weighted_solvable=" << weighted_solvable.to_decimal()
      << " weighted_unsolvable=" << weighted_unsolvable.to_decimal()
      << " orbit_count=" << orbit_count.to_decimal() << " ratio=" << ratio.decimal(4);
  return out.str();
}

}  // namespace gridsym
