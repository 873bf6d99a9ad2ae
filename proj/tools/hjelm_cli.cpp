// Command-line front end: builds rings, planes, conics, arcs, MUB sets and
// correspondence certificates, and writes the JSON/CSV/DOT artifacts.
// Repeated runs with the same flags produce byte-identical files.
//
// Exit codes: 0 success, 1 domain failure, 2 configuration failure.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hjelm/arc.hpp"
#include "hjelm/classical.hpp"
#include "hjelm/conic.hpp"
#include "hjelm/correspondence.hpp"
#include "hjelm/io.hpp"
#include "hjelm/mub.hpp"

namespace {

namespace fs = std::filesystem;
using namespace hjelm;

struct CommonArgs {
  int p = 2;
  int r = 1;
  std::string kind = "galois";
  std::string out_dir;
};

RingKind parse_kind(const std::string& kind) {
  if (kind == "galois") return RingKind::GaloisRing;
  if (kind == "dual") return RingKind::DualNumbers;
  if (kind == "field") return RingKind::Field;
  fail(Errc::ConfigParse, "unknown ring kind '" + kind + "'");
}

fs::path resolve_out_dir(const CommonArgs& args) {
  if (!args.out_dir.empty()) return args.out_dir;
  if (const char* env = std::getenv("HJELM_OUT_DIR"); env && *env) return env;
  return ".";
}

fs::path write_artifact(const CommonArgs& args, const std::string& name,
                        const std::string& content) {
  const fs::path dir = resolve_out_dir(args);
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
  std::cout << "wrote " << path.string() << "\n";
  return path;
}

void add_common(CLI::App* cmd, CommonArgs& args, bool with_kind = true) {
  cmd->add_option("--p", args.p, "characteristic prime");
  cmd->add_option("--r", args.r, "rank (q = p^r)");
  if (with_kind)
    cmd->add_option("--kind", args.kind, "ring kind: galois | dual | field");
  cmd->add_option("--out-dir", args.out_dir,
                  "output directory (default: $HJELM_OUT_DIR or .)");
}

RingPtr make_ring(const CommonArgs& args) {
  return Ring::make(args.p, args.r, parse_kind(args.kind));
}

int run(int argc, char** argv) {
  CLI::App app{"finite local rings, projective Hjelmslev planes, conics, arcs "
               "and mutually unbiased bases"};
  app.require_subcommand(1);

  CommonArgs ring_args;
  auto* ring_cmd = app.add_subcommand("ring", "build a ring descriptor");
  add_common(ring_cmd, ring_args);

  CommonArgs plane_args;
  std::string plane_format = "json";
  auto* plane_cmd = app.add_subcommand("plane", "enumerate the plane over the ring");
  add_common(plane_cmd, plane_args);
  plane_cmd->add_option("--format", plane_format, "json | csv | dot");

  CommonArgs conic_args;
  std::vector<long> conic_coeffs;
  bool pairwise = false;
  auto* conic_cmd = app.add_subcommand("conic", "conic point sets and classes");
  add_common(conic_cmd, conic_args);
  conic_cmd->add_option("--coeffs", conic_coeffs,
                        "six constants c11,c22,c33,c12,c13,c23 (default: canonical)")
      ->delimiter(',')
      ->expected(6);
  conic_cmd->add_flag("--pairwise", pairwise,
                      "intersect the five reference conics pairwise");

  CommonArgs arc_args;
  std::optional<int> arc_target;
  std::optional<long> arc_budget;
  auto* arc_cmd = app.add_subcommand("arc", "exhaustive maximum-arc search");
  add_common(arc_cmd, arc_args);
  arc_cmd->add_option("--target", arc_target, "stop at the first arc of this size");
  arc_cmd->add_option("--time-budget-ms", arc_budget, "search cutoff in milliseconds");

  CommonArgs mub_args;
  double mub_tol = 1e-9;
  double mub_ortho_tol = 1e-12;
  auto* mub_cmd = app.add_subcommand("mub", "complete set of q+1 mutually unbiased bases");
  add_common(mub_cmd, mub_args, /*with_kind=*/false);
  mub_cmd->add_option("--tol", mub_tol, "unbiasedness tolerance");
  mub_cmd->add_option("--ortho-tol", mub_ortho_tol, "orthonormality tolerance");

  CommonArgs cor_args;
  double cor_tol = 1e-9;
  auto* cor_cmd = app.add_subcommand(
      "correspond", "certify the MUB / conic neighbour-class correspondence");
  add_common(cor_cmd, cor_args);
  cor_cmd->add_option("--tol", cor_tol, "unbiasedness tolerance");

  CommonArgs exp_args;
  std::string exp_format = "all";
  auto* exp_cmd = app.add_subcommand("export", "write ring + plane artifacts");
  add_common(exp_cmd, exp_args);
  exp_cmd->add_option("--format", exp_format, "all | json | csv | dot");

  app.parse(argc, argv);

  if (*ring_cmd) {
    auto ring = make_ring(ring_args);
    write_artifact(ring_args, "ring.json", ring_json(*ring));
    std::cout << ring->name() << ": " << ring->counts().total << " elements, "
              << ring->counts().zero_divisors << " zero divisors, "
              << ring->counts().units << " units\n";
  } else if (*plane_cmd) {
    auto plane = Plane::enumerate(make_ring(plane_args));
    if (plane_format == "json")
      write_artifact(plane_args, "plane.json", plane_json(*plane));
    else if (plane_format == "csv")
      write_artifact(plane_args, "incidence.csv", incidence_csv(*plane));
    else if (plane_format == "dot")
      write_artifact(plane_args, "neighbours.dot", neighbour_graph_dot(*plane));
    else
      fail(Errc::ConfigParse, "unknown format '" + plane_format + "'");
    std::cout << plane->ring()->name() << ": " << plane->point_count()
              << " points, " << plane->line_count() << " lines, "
              << plane->point_classes().size() << " neighbour classes\n";
  } else if (*conic_cmd) {
    auto ring = make_ring(conic_args);
    auto plane = Plane::enumerate(ring);
    if (pairwise) {
      auto report = conic_pairwise_intersections(reference_conics(ring), *plane);
      write_artifact(conic_args, "conic_intersections.json",
                     intersection_report_json(report, *plane));
      for (const auto& pr : report.pairs)
        std::cout << report.conics[pr.a].label << " / " << report.conics[pr.b].label
                  << ": " << pr.common.size() << " common points\n";
    } else {
      Conic conic = conic_coeffs.empty()
                        ? Conic::canonical(ring)
                        : Conic::from_constants(
                              ring, {conic_coeffs[0], conic_coeffs[1], conic_coeffs[2],
                                     conic_coeffs[3], conic_coeffs[4], conic_coeffs[5]});
      write_artifact(conic_args, "conic.json", conic_report_json(conic, *plane));
      std::cout << (conic.label.empty() ? "conic" : conic.label) << ": "
                << conic_points(conic, *plane).size() << " points, "
                << to_string(is_proper(conic, *plane)) << "\n";
    }
  } else if (*arc_cmd) {
    auto plane = Plane::enumerate(make_ring(arc_args));
    ArcSearchOptions opts;
    opts.target = arc_target;
    opts.time_budget_ms = arc_budget;
    auto result = max_arc_search(*plane, opts);
    write_artifact(arc_args, "arc.json", arc_result_json(result, *plane));
    if (arc_target && result.max_size < *arc_target)
      std::cout << "no " << *arc_target << "-arc"
                << (result.exhausted ? ", exhausted" : ", search cut off") << "\n";
    else
      std::cout << "max arc " << result.max_size
                << (result.exhausted ? " (exhausted)" : " (partial)") << ", census "
                << result.census << "\n";
  } else if (*mub_cmd) {
    auto set = build_mub_set(mub_args.p, mub_args.r, mub_tol, mub_ortho_tol);
    write_artifact(mub_args, "mub.json", mub_json(set));
    std::cout << "q = " << set.q << ": " << set.bases.size()
              << " bases, all_pass = " << (set.all_pass ? "true" : "false")
              << ", exact = " << (set.exact_verified ? "true" : "false") << "\n";
    std::cout << "deviation matrix (diagonal: orthonormality)\n";
    for (const auto& row : set.deviation) {
      for (double d : row) std::printf("  %.3e", d);
      std::printf("\n");
    }
  } else if (*cor_cmd) {
    auto ring = make_ring(cor_args);
    auto plane = Plane::enumerate(ring);
    auto conic = Conic::canonical(ring);
    auto mubs = build_mub_set(cor_args.p, cor_args.r, cor_tol);
    auto cert = certify(mubs, conic, *plane);
    write_artifact(cor_args, "certificate.json", certificate_json(cert, mubs, conic));
    for (const auto& c : cert.checks)
      std::cout << (c.pass ? "[pass] " : "[fail] ") << c.name << ": " << c.detail << "\n";
  } else if (*exp_cmd) {
    auto plane = Plane::enumerate(make_ring(exp_args));
    if (exp_format == "all" || exp_format == "json") {
      write_artifact(exp_args, "ring.json", ring_json(*plane->ring()));
      write_artifact(exp_args, "plane.json", plane_json(*plane));
    }
    if (exp_format == "all" || exp_format == "csv")
      write_artifact(exp_args, "incidence.csv", incidence_csv(*plane));
    if (exp_format == "all" || exp_format == "dot")
      write_artifact(exp_args, "neighbours.dot", neighbour_graph_dot(*plane));
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    CLI::App dummy;
    dummy.exit(e);
    return 2;
  } catch (const Error& e) {
    if (e.code() == Errc::ConfigParse) {
      std::cerr << "{\"error\": {\"code\": \"" << to_string(e.code())
                << "\", \"message\": \"" << e.what() << "\"}}\n";
      return 2;
    }
    std::cerr << "{\"error\": {\"code\": \"" << to_string(e.code())
              << "\", \"message\": \"" << e.what() << "\"}}\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\": {\"code\": \"internal\", \"message\": \"" << e.what()
              << "\"}}\n";
    return 1;
  }
}
