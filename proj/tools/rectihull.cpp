// rectihull command-line tool: hull, angle, sample, distance, experiment.
//
// Exit codes: 0 ok, 2 usage or parse error, 3 empty input, 4 rejection
// sampling stalled, 1 anything else.

#include "rectihull/rectihull.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace rectihull;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitEmpty = 3;
constexpr int kExitStall = 4;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ParseError("cannot write " + path);
  return out;
}

// A distance operand: "csv:FILE", "region:FILE.json" or "hull:FILE.json".
struct Operand {
  MembershipFn fn;
  std::vector<Point2> points; // set only for csv operands
  bool finite = false;
};

Operand load_operand(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw ParseError("operand \"" + spec + "\" must look like csv:FILE, region:FILE or hull:FILE");
  const std::string kind = spec.substr(0, colon), path = spec.substr(colon + 1);
  if (kind == "csv") {
    Operand op;
    op.points = io::read_points_csv_file(path);
    if (op.points.empty())
      throw EmptySet("no points in " + path);
    op.finite = true;
    // A finite set has no area; its members enter Hausdorff distances as curves.
    auto pts = std::make_shared<std::vector<Point2>>(op.points);
    op.fn.contains = [pts](Point2 p) { return std::find(pts->begin(), pts->end(), p) != pts->end(); };
    op.fn.window = bounding_box(op.points);
    for (const auto& p : op.points)
      op.fn.curves.push_back({{p}, false});
    return op;
  }
  if (kind == "region")
    return {membership_of(io::read_region_file(path)), {}, false};
  if (kind == "hull")
    return {membership_of(io::read_hull_file(path)), {}, false};
  throw ParseError("unknown operand kind \"" + kind + "\"");
}

std::string sibling_path(const std::string& csv, const std::string& suffix) {
  fs::path p(csv);
  const std::string stem = p.stem().string();
  return (p.parent_path() / (stem + suffix + p.extension().string())).string();
}

void write_experiment_figures(const ExperimentConfig& cfg, const std::string& dir) {
  fs::create_directories(dir);
  const Region region = *experiment_region(cfg.name);
  for (std::size_t n : cfg.ns) {
    const auto batch = uniform_sample(region, n, cfg.first_seed);
    const auto hull = build_hull(batch.points, cfg.theta);
    const AlphaHull alpha({batch.points, cfg.alpha, cfg.center_grid});
    const std::string base = cfg.name + "_n" + std::to_string(n) + "_seed" + std::to_string(cfg.first_seed);
    auto est = open_out((fs::path(dir) / (base + ".svg")).string());
    svg::write_estimate_svg(est, region, batch.points, hull, &alpha);
    auto hs = open_out((fs::path(dir) / (base + "_hull.svg")).string());
    svg::write_hull_svg(hs, hull);
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biconvex (rectilinear convex) hulls of planar samples"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  // hull
  std::string points_path, out_path, svg_path;
  double theta = 0.0;
  auto* hull_cmd = app.add_subcommand("hull", "Compute the theta-biconvex hull of a point CSV");
  hull_cmd->add_option("--points", points_path, "Input CSV (x,y per line)")->required();
  hull_cmd->add_option("--theta", theta, "Frame angle in radians")->required();
  hull_cmd->add_option("--out", out_path, "Output hull JSON")->required();
  hull_cmd->add_option("--svg", svg_path, "Optional SVG figure");

  // angle
  std::size_t grid_k = 90;
  bool refine = false;
  auto* angle_cmd = app.add_subcommand("angle", "Estimate the biconvexity angle by minimizing hull area");
  angle_cmd->add_option("--points", points_path, "Input CSV")->required();
  angle_cmd->add_option("--grid", grid_k, "Number of grid angles on [0, pi/2)")
      ->check(CLI::Range(std::size_t{8}, std::size_t{1} << 20));
  angle_cmd->add_flag("--refine", refine, "Golden-section refinement around the grid argmin");
  angle_cmd->add_option("--out", out_path, "Output JSON")->required();

  // sample
  std::string region_path;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  auto* sample_cmd = app.add_subcommand("sample", "Draw a uniform sample from a region");
  sample_cmd->add_option("--region", region_path, "Region JSON")->required();
  sample_cmd->add_option("--n", n, "Sample size")->required()->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", seed, "Seed");
  sample_cmd->add_option("--out", out_path, "Output CSV")->required();

  // distance
  std::string mode, spec_a, spec_b;
  std::size_t mc_n = 50000;
  double pitch = 0.005;
  auto* dist_cmd = app.add_subcommand("distance", "Hausdorff distance or distance in measure");
  dist_cmd->add_option("--mode", mode, "hausdorff or measure")
      ->required()
      ->check(CLI::IsMember({"hausdorff", "measure"}));
  dist_cmd->add_option("--a", spec_a, "csv:FILE, region:FILE or hull:FILE")->required();
  dist_cmd->add_option("--b", spec_b, "csv:FILE, region:FILE or hull:FILE")->required();
  dist_cmd->add_option("--mc", mc_n, "Monte Carlo points for measure mode")
      ->check(CLI::Range(std::size_t{1000}, std::size_t{1} << 40));
  dist_cmd->add_option("--h", pitch, "Lattice pitch for Hausdorff mode")->check(CLI::PositiveNumber);
  dist_cmd->add_option("--seed", seed, "Seed");

  // experiment
  ExperimentConfig cfg;
  std::string svg_dir;
  std::size_t threads = 0;
  auto* exp_cmd = app.add_subcommand("experiment", "Run a named benchmark (s5)");
  exp_cmd->add_option("name", cfg.name, "Experiment name")->required();
  exp_cmd->add_option("--n", cfg.ns, "Sample sizes")->delimiter(',')->check(CLI::PositiveNumber);
  exp_cmd->add_option("--seeds", cfg.seeds, "Number of seeds")->check(CLI::PositiveNumber);
  exp_cmd->add_option("--seed", cfg.first_seed, "First seed");
  exp_cmd->add_option("--alpha", cfg.alpha, "Alpha-hull radius")->check(CLI::PositiveNumber);
  exp_cmd->add_option("--theta", cfg.theta, "Frame angle");
  exp_cmd->add_option("--mc", cfg.convergence.mc_n, "Monte Carlo points")
      ->check(CLI::Range(std::size_t{1000}, std::size_t{1} << 40));
  exp_cmd->add_option("--h", cfg.convergence.h, "Hausdorff lattice pitch")->check(CLI::PositiveNumber);
  exp_cmd->add_option("--out", out_path, "Output CSV")->required();
  exp_cmd->add_option("--svg", svg_dir, "Directory for figures");
  exp_cmd->add_option("--threads", threads, "Worker threads (0 = all cores; RECTIHULL_THREADS caps)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*hull_cmd) {
      const auto pts = io::read_points_csv_file(points_path);
      const auto hull = build_hull(pts, theta);
      auto out = open_out(out_path);
      io::write_hull_json(out, hull);
      if (!svg_path.empty()) {
        auto svg_out = open_out(svg_path);
        svg::write_hull_svg(svg_out, hull);
      }
    } else if (*angle_cmd) {
      const auto pts = io::read_points_csv_file(points_path);
      const auto scan = estimate_angle(pts, grid_k, refine);
      auto out = open_out(out_path);
      io::write_angle_scan_json(out, scan);
      std::cout << "argmin " << io::format_real(scan.argmin_theta) << '\n';
    } else if (*sample_cmd) {
      const Region region = io::read_region_file(region_path);
      const auto batch = uniform_sample(region, n, seed);
      auto out = open_out(out_path);
      io::write_points_csv(out, batch.points);
    } else if (*dist_cmd) {
      const Operand a = load_operand(spec_a), b = load_operand(spec_b);
      DistanceEstimate d;
      if (mode == "hausdorff")
        d = a.finite && b.finite ? hausdorff_points(a.points, b.points)
                                 : hausdorff_memberships(a.fn, b.fn, pitch);
      else
        d = dmu_mc(a.fn, b.fn, a.fn.window.united(b.fn.window), mc_n, seed);
      std::cout << "{\"mode\":\"" << mode << "\",\"value\":" << io::format_real(d.value)
                << ",\"error_bound\":" << io::format_real(d.error_bound) << "}\n";
    } else if (*exp_cmd) {
      if (!experiment_region(cfg.name)) {
        std::cerr << "error: unknown experiment \"" << cfg.name << "\" (known: s5)\n";
        return kExitUsage;
      }
      cfg.convergence.threads = thread_count(threads);
      const auto result = run_experiment(cfg);
      {
        auto out = open_out(out_path);
        io::write_convergence_csv(out, result.rows);
      }
      {
        auto out = open_out(sibling_path(out_path, "_alpha"));
        io::write_alpha_csv(out, result.alpha_rows);
      }
      if (!svg_dir.empty())
        write_experiment_figures(cfg, svg_dir);

      std::map<std::size_t, std::pair<double, double>> means; // n -> (biconvex, alpha)
      for (const auto& r : result.rows)
        means[r.n].first += r.dmu / static_cast<double>(cfg.seeds);
      for (const auto& r : result.alpha_rows)
        means[r.n].second += r.dmu / static_cast<double>(cfg.seeds);
      for (const auto& [size, m] : means)
        std::cout << "n=" << size << " mean dmu biconvex " << m.first << " alpha " << m.second << '\n';
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EmptySample& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitEmpty;
  } catch (const EmptySet& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitEmpty;
  } catch (const RejectionStall& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitStall;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
