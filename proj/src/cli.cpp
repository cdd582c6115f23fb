#include "hopfcert/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "hopfcert/degree.hpp"
#include "hopfcert/pipeline.hpp"
#include "hopfcert/regions.hpp"

namespace hopfcert {

namespace {

void write_file(const std::string& path, const std::string& content) {
  // build the full content first, then a single atomic-ish replace
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

std::string default_out(const std::string& problem_path, const std::string& suffix) {
  return std::filesystem::path(problem_path).stem().string() + suffix;
}

int cmd_check(const std::string& file, std::string out_path, int depth_limit,
              int jmax, bool quiet) {
  ProblemSpec spec = load_problem(file);
  if (depth_limit > 0) spec.limits.depth_limit = depth_limit;
  if (jmax > 0) spec.limits.jmax = jmax;
  Certificate cert = verify(spec);
  if (out_path.empty()) out_path = default_out(file, ".cert.json");
  write_file(out_path, cert.text);
  if (!quiet) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(cert.text);
    std::cout << "problem: " << doc.value("name", std::string{}) << "\n";
    for (const auto& c : doc.at("conditions"))
      std::cout << "  " << c.at("id").get<std::string>() << ": "
                << c.at("verdict").get<std::string>() << "\n";
    std::cout << "overall: " << doc.at("overall").get<std::string>() << "\n";
    std::cout << "certificate written to " << out_path << "\n";
  }
  return exit_code_for(cert.overall);
}

int cmd_regions(const std::string& file, std::string out_path, int resolution,
                int jmax, const std::string& svg_path, bool quiet) {
  ProblemSpec spec = load_problem(file);
  RegionGrid grid = grid_sample(spec.family, resolution, jmax);
  if (out_path.empty()) out_path = default_out(file, ".regions.csv");
  write_file(out_path, grid_to_csv(grid));
  if (!svg_path.empty())
    write_file(svg_path, grid_to_svg(grid, spec.r5.disks, spec.family));
  if (!quiet) std::cout << "region grid written to " << out_path << "\n";
  return 0;
}

int cmd_roots(const std::string& file, std::string out_path, int grid, bool quiet) {
  ProblemSpec spec = load_problem(file);
  RootPath path = track_roots(spec.representative, spec.family.alpha_range(), grid);
  if (out_path.empty()) out_path = default_out(file, ".roots.csv");
  write_file(out_path, root_path_to_csv(path));
  if (!quiet) {
    for (const auto& ev : path.events)
      std::cout << (ev.crossing ? "crossing" : "contact") << " at alpha=" << ev.alpha
                << " beta=" << ev.beta << " (branch " << ev.branch << ")\n";
    for (const auto& sl : path.sliding)
      std::cout << "sliding on branch " << sl.branch << " over alpha ["
                << sl.alpha_begin << ", " << sl.alpha_end << "]\n";
    for (const auto& r : find_resonances(path, 9))
      std::cout << "resonance " << r.j << ":1 at alpha=" << r.alpha
                << " beta=" << r.beta_small << "\n";
    std::cout << "root paths written to " << out_path << "\n";
  }
  return 0;
}

int cmd_kharitonov(const std::string& file, const std::vector<std::string>& alphas) {
  ProblemSpec spec = load_problem(file);
  for (const std::string& text : alphas) {
    Rational alpha = parse_rational(text);
    FixedFamily fixed = spec.family.instantiate(alpha);
    std::cout << "alpha = " << to_string(alpha) << ":\n";
    const char* names[4] = {"g1+h1", "g1+h2", "g2+h1", "g2+h2"};
    int idx = 0;
    bool all = true;
    for (const QPoly& k : kharitonov_polynomials(fixed)) {
      RootCount rc = root_count(k);
      bool hz = rc.hurwitz(k.degree());
      all = all && hz;
      std::cout << "  " << names[idx++] << ": (" << rc.n_neg << ", " << rc.n_imag
                << ", " << rc.n_pos << ")" << (hz ? "  Hurwitz" : "") << "\n";
    }
    std::cout << "  family Hurwitz stable: " << (all ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_winding(const std::string& file) {
  ProblemSpec spec = load_problem(file);
  if (spec.r5.disks.empty())
    throw std::runtime_error("winding needs a problem with r5 mode 'disks'");
  CrossingIdentity ci = crossing_identity_check(
      spec.representative, spec.family.alpha_range(), spec.r5.disks);
  for (size_t k = 0; k < ci.per_disk.size(); ++k)
    std::cout << "disk " << k << ": winding " << ci.per_disk[k].winding
              << " (min boundary modulus " << ci.per_disk[k].min_modulus << ")\n";
  std::cout << "t_minus = " << ci.t_minus << ", t_plus = " << ci.t_plus
            << ", winding sum = " << ci.winding_sum << "\n";
  std::cout << "crossing identity (t_- - t_+)/2 = winding sum: "
            << (ci.holds ? "holds" : "VIOLATED") << "\n";
  return ci.holds ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"interval Hopf bifurcation certification"};
  app.require_subcommand(1);

  std::string file, out_path, svg_path;
  int depth_limit = 0, jmax = 0, resolution = 400, grid = 241;
  bool quiet = false;
  std::vector<std::string> alphas;

  CLI::App* check = app.add_subcommand("check", "verify the theorem hypotheses");
  check->add_option("problem", file, "problem file")->required();
  check->add_option("--out", out_path, "certificate output path");
  check->add_option("--depth-limit", depth_limit, "branch-and-bound depth limit");
  check->add_option("--jmax", jmax, "frequency cap override");
  check->add_flag("--quiet", quiet, "suppress the summary");

  CLI::App* regions = app.add_subcommand("regions", "export the fR / fS grid");
  regions->add_option("problem", file)->required();
  regions->add_option("--resolution", resolution, "cells per axis");
  regions->add_option("--jmax", jmax, "largest shadow frequency to classify");
  regions->add_option("--out", out_path, "CSV output path");
  regions->add_option("--svg", svg_path, "optional SVG rendering");
  regions->add_flag("--quiet", quiet);

  CLI::App* roots = app.add_subcommand("roots", "track representative eigenvalues");
  roots->add_option("problem", file)->required();
  roots->add_option("--grid", grid, "alpha samples");
  roots->add_option("--out", out_path, "CSV output path");
  roots->add_flag("--quiet", quiet);

  CLI::App* kh = app.add_subcommand("kharitonov", "four-corner stability report");
  kh->add_option("problem", file)->required();
  kh->add_option("--alpha", alphas, "parameter values to test")->required();

  CLI::App* wind = app.add_subcommand("winding", "disk winding numbers");
  wind->add_option("problem", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (check->parsed()) return cmd_check(file, out_path, depth_limit, jmax, quiet);
    if (regions->parsed())
      return cmd_regions(file, out_path, resolution, jmax, svg_path, quiet);
    if (roots->parsed()) return cmd_roots(file, out_path, grid, quiet);
    if (kh->parsed()) return cmd_kharitonov(file, alphas);
    if (wind->parsed()) return cmd_winding(file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace hopfcert
