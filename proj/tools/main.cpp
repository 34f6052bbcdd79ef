// gridsym: symmetry-reduced enumeration and tiling censuses of blocked
// rectangular boards.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gridsym/burnside.hpp"
#include "gridsym/census.hpp"
#include "gridsym/errors.hpp"
#include "gridsym/partitions.hpp"
#include "gridsym/polyomino.hpp"
#include "gridsym/symmetry.hpp"
#include "gridsym/tiling_solver.hpp"

namespace {

using namespace gridsym;

constexpr int kExitConfig = 2;
constexpr int kExitNodeCap = 3;
constexpr int kExitCheckpoint = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// --pieces accepts a file path, a preset name, or an inline list such as
// "pentomino-P:9" (';' separates lines).
PieceSet load_pieces(const std::string& arg) {
  if (std::filesystem::exists(arg)) return parse_pieces(read_file(arg));
  std::string text = arg;
  for (char& c : text)
    if (c == ';') c = '\n';
  return parse_pieces(text);
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw ConfigError("cannot write " + path);
  return file;
}

std::string region_sizes_column(const RegionScheme& scheme) {
  std::string out;
  for (Region r : scheme.used) {
    if (!out.empty()) out += "|";
    out += std::to_string(scheme.sizes[static_cast<int>(r)]);
  }
  return out;
}

int cmd_reduce(int m, int n, int r, const std::string& out_path, bool grid) {
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  std::uint64_t count = 0;
  for_each_reduced_board(m, n, r, [&](const Board& b) {
    if (grid)
      out << render_board_grid(b) << "\n";
    else
      out << render_board_compact(b) << "\n";
    ++count;
  });
  std::cerr << "reduced boards: " << count << "\n";
  return 0;
}

int cmd_partitions(int m, int n, int r, const std::string& csv_path) {
  std::ofstream file;
  std::ostream& out = open_out(file, csv_path);
  const RegionScheme scheme = region_scheme(m, n);
  out << "case,lambda1,lambda2,lambda3,lambda4,delta1,delta2,delta3,delta4,c,"
         "region_sizes,K,weight,board_count\n";
  BigUint total, weighted;
  std::size_t rows = 0;
  for (const PartitionClass& pc : admissible_partitions(m, n, r)) {
    const BoardPartition& p = pc.partition;
    out << case_name(p.tag);
    for (int i = 0; i < 4; ++i) out << "," << p.lambda[i];
    for (int i = 0; i < 4; ++i) out << "," << p.delta[i];
    out << "," << p.center << "," << region_sizes_column(scheme) << ",";
    std::string k = pc.stabilizer.element_list();
    for (char& c : k)
      if (c == ',') c = '+';
    out << k << "," << pc.weight << "," << pc.board_count.to_decimal() << "\n";
    total += pc.board_count;
    weighted += pc.board_count * static_cast<std::uint32_t>(pc.weight);
    ++rows;
  }
  std::cerr << "partitions: " << rows << "  reduced boards: " << total.to_decimal()
            << "  weighted: " << weighted.to_decimal() << "\n";
  return 0;
}

int cmd_burnside(int m, int n, int r) {
  BigUint count = orbit_count(m, n, r);
  if (count != orbit_count_closed_form(m, n, r))
    throw std::logic_error("closed form disagrees with the Burnside average");
  std::cout << count.to_decimal() << "\n";
  return 0;
}

int cmd_ratio(int m, int n, int r_max) {
  std::cout << "m,n,r,reduced_size,orbit_count,ratio\n";
  const int full = (m * n + 1) / 2;
  if (r_max > 0 && r_max < full) {
    for (int r = 1; r <= r_max; ++r) {
      RatioReport rep = ratio(m, n, r);
      std::cout << m << "," << n << "," << r << "," << rep.reduced_size.to_decimal()
                << "," << rep.orbit_count.to_decimal() << "," << rep.ratio.decimal(4)
                << "\n";
    }
    std::cerr << "(partial range: conjecture checks need the full sweep)\n";
    return 0;
  }
  SweepResult sweep = ratio_sweep(m, n);
  for (const RatioReport& rep : sweep.reports)
    std::cout << m << "," << n << "," << rep.blockers << ","
              << rep.reduced_size.to_decimal() << "," << rep.orbit_count.to_decimal()
              << "," << rep.ratio.decimal(4) << "\n";
  for (const SweepCheck& check : sweep.checks)
    std::cout << "# " << check.name << ": " << (check.pass ? "pass" : "FAIL")
              << (check.detail.empty() ? "" : " (" + check.detail + ")") << "\n";
  return 0;
}

int cmd_solve(const std::string& board_path, const std::string& pieces_arg,
              bool witness, std::uint64_t node_cap) {
  Board board = parse_board(read_file(board_path));
  PieceSet pieces = load_pieces(pieces_arg);
  SolveOptions opts{.node_cap = node_cap};
  if (!witness) {
    std::cout << (solvable(board, pieces, opts) ? "solvable" : "unsolvable") << "\n";
    return 0;
  }
  auto tiling = solve_witness(board, pieces, opts);
  if (!tiling.has_value()) {
    std::cout << "unsolvable\n";
    return 0;
  }
  validate_tiling(board, pieces, *tiling);
  std::cout << "solvable\n" << render_tiling(board, *tiling);
  return 0;
}

int cmd_census(int m, int n, int r, const std::string& pieces_arg, int jobs,
               const std::string& checkpoint, std::uint64_t node_cap,
               const std::string& csv_path) {
  CensusConfig cfg;
  cfg.rows = m;
  cfg.cols = n;
  cfg.blockers = r;
  cfg.pieces = load_pieces(pieces_arg);
  cfg.pieces_label = pieces_arg;
  cfg.jobs = jobs;
  cfg.checkpoint_path = checkpoint;
  cfg.node_cap = node_cap;
  CensusReport report = run_census(cfg);
  std::cout << report.human_table();
  if (!csv_path.empty()) {
    std::ofstream file;
    open_out(file, csv_path) << report.csv();
  }
  std::cout << report.summary_line() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetry-reduced blocked-board enumeration and tiling censuses"};
  app.require_subcommand(1);

  int m = 0, n = 0, r = 0, jobs = 1, r_max = 0;
  std::string out_path, csv_path, board_path, pieces_arg, checkpoint;
  std::uint64_t node_cap = 0;
  bool grid = false, witness = false;

  auto* reduce = app.add_subcommand("reduce", "stream the reduced board set");
  reduce->add_option("-m", m, "rows")->required();
  reduce->add_option("-n", n, "columns")->required();
  reduce->add_option("-r", r, "blocked cells")->required();
  reduce->add_option("--out", out_path, "output file (default stdout)");
  reduce->add_flag("--grid", grid, "emit grid form instead of compact");

  auto* partitions = app.add_subcommand("partitions", "admissible partitions with weights");
  partitions->add_option("-m", m, "rows")->required();
  partitions->add_option("-n", n, "columns")->required();
  partitions->add_option("-r", r, "blocked cells")->required();
  partitions->add_option("--csv", csv_path, "write CSV here instead of stdout");

  auto* burnside = app.add_subcommand("burnside", "number of board equivalence classes");
  burnside->add_option("-m", m, "rows")->required();
  burnside->add_option("-n", n, "columns")->required();
  burnside->add_option("-r", r, "blocked cells")->required();

  auto* ratio_cmd = app.add_subcommand("ratio", "reduction ratio sweep with conjecture checks");
  ratio_cmd->add_option("-m", m, "rows")->required();
  ratio_cmd->add_option("-n", n, "columns")->required();
  ratio_cmd->add_option("--r-max", r_max, "sweep only r = 1..R");

  auto* solve = app.add_subcommand("solve", "decide one tiling instance");
  solve->add_option("--board", board_path, "board file")->required();
  solve->add_option("--pieces", pieces_arg, "piece file, preset, or inline list")->required();
  solve->add_flag("--witness", witness, "print a tiling when solvable");
  solve->add_option("--node-cap", node_cap, "abort after this many search nodes");

  auto* census = app.add_subcommand("census", "solve the whole reduced set and weight the totals");
  census->add_option("-m", m, "rows")->required();
  census->add_option("-n", n, "columns")->required();
  census->add_option("-r", r, "blocked cells")->required();
  census->add_option("--pieces", pieces_arg, "piece file, preset, or inline list")->required();
  census->add_option("--jobs", jobs, "worker threads")->default_val(1);
  census->add_option("--checkpoint", checkpoint, "append-only resume log");
  census->add_option("--node-cap", node_cap, "per-instance node budget");
  census->add_option("--csv", csv_path, "write the per-partition CSV here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (reduce->parsed()) return cmd_reduce(m, n, r, out_path, grid);
    if (partitions->parsed()) return cmd_partitions(m, n, r, csv_path);
    if (burnside->parsed()) return cmd_burnside(m, n, r);
    if (ratio_cmd->parsed()) return cmd_ratio(m, n, r_max);
    if (solve->parsed()) return cmd_solve(board_path, pieces_arg, witness, node_cap);
    if (census->parsed())
      return cmd_census(m, n, r, pieces_arg, jobs, checkpoint, node_cap, csv_path);
  } catch (const NodeCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNodeCap;
  } catch (const CheckpointError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckpoint;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
