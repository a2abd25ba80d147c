#include "convex_blockers/cli.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "convex_blockers/blockers.h"
#include "convex_blockers/errors.h"
#include "convex_blockers/json_io.h"
#include "convex_blockers/limits.h"
#include "convex_blockers/matchings.h"
#include "convex_blockers/oracle.h"
#include "convex_blockers/render.h"
#include "convex_blockers/verify.h"

namespace convex_blockers {
namespace {

struct Options {
  int m = 0;
  int l = 0;
  std::string format = "lines";
  std::vector<int> triple;
  std::string edges;
  bool by_spine = false;
  std::string mode = "pruned";
  int m_min = 2;
  int m_max = 2;
  int naive_up_to = 4;
  std::vector<int> blocker_spec;
  std::string context;
  std::string thick;
  bool no_labels = false;
  std::string out_path;
};

void PrintSets(std::ostream& out, const std::vector<EdgeSet>& sets,
               const std::string& format) {
  if (format == "json") {
    out << EdgeSetsToJson(sets).dump() << '\n';
    return;
  }
  for (const EdgeSet& set : sets) out << FormatEdgeList(set) << '\n';
}

int BlockerCheck(const Options& opt, const Limits& limits, std::ostream& out) {
  const PolygonContext ctx(opt.m);
  const EdgeSet edges = ParseEdgeList(ctx, opt.edges);
  Json doc{{"m", ctx.m()}, {"edges", EdgesToJson(edges)}};
  bool ok = false;
  if (edges.size() != static_cast<std::size_t>(ctx.m())) {
    doc.update(FindingToJson({Violation::kWrongCardinality, edges}));
  } else {
    const ParseResult parsed = ParseBlocker(ctx, edges);
    if (const auto* spec = std::get_if<BlockerSpec>(&parsed)) {
      ok = true;
      doc["ok"] = true;
      doc["blocker"] = BlockerToJson(ctx, *spec);
    } else {
      doc.update(FindingToJson(std::get<Finding>(parsed)));
    }
  }
  doc["caterpillar"] = CaterpillarReportToJson(ValidateCaterpillar(ctx, edges));
  bool blocking = true;
  if (ctx.m() <= limits.spm_max_m) {
    const SpmFamilyIndex index = BuildFamilyIndex(ctx, limits);
    const auto missed = MissedSpms(index, edges);
    blocking = missed.empty();
    doc["blocking"] = blocking;
    if (!missed.empty()) doc["missed_spm"] = EdgesToJson(missed.front());
  } else {
    doc["blocking"] = nullptr;
  }
  out << doc.dump() << '\n';
  return ok && blocking ? kExitOk : kExitFailure;
}

int Render(const Options& opt, std::ostream& out, std::ostream& err) {
  const PolygonContext ctx(opt.m);
  RenderSpec spec{opt.m, {}, !opt.no_labels};
  if (!opt.edges.empty() && !opt.blocker_spec.empty()) {
    throw InputError("--edges and --blocker-spec are mutually exclusive");
  }
  if (!opt.edges.empty()) {
    spec.layers.push_back({ParseEdgeList(ctx, opt.edges), EdgeStyle::kSolid});
  } else if (!opt.blocker_spec.empty()) {
    if (opt.blocker_spec.size() < 2) {
      throw InputError("--blocker-spec needs START,T[,EPS...]");
    }
    BlockerSpec blocker{opt.blocker_spec[0], opt.blocker_spec[1],
                        {opt.blocker_spec.begin() + 2, opt.blocker_spec.end()}};
    spec.layers.push_back({GenerateBlocker(ctx, blocker), EdgeStyle::kSolid});
  }
  if (!opt.context.empty()) {
    spec.layers.push_back({ParseEdgeList(ctx, opt.context), EdgeStyle::kDotted});
  }
  if (!opt.thick.empty()) {
    spec.layers.push_back({ParseEdgeList(ctx, opt.thick), EdgeStyle::kThick});
  }
  const std::string svg = RenderFigure(spec);
  if (opt.out_path == "-") {
    out << svg;
    return kExitOk;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) throw InputError("cannot open " + opt.out_path + " for writing");
  file << svg;
  if (!file.flush()) throw InputError("failed writing " + opt.out_path);
  err << "wrote " << opt.out_path << '\n';
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Minimum blocking sets of simple perfect matchings in CK(2m)",
               "convex_blockers"};
  app.require_subcommand(1);
  Options opt;
  const Limits limits = Limits::FromEnvironment();
  std::function<int()> action;

  const auto add_m = [&](CLI::App* cmd) {
    cmd->add_option("--m", opt.m, "half the vertex count")
        ->required()
        ->check(CLI::PositiveNumber);
  };
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "lines"}));
  };

  auto* spm = app.add_subcommand("spm", "simple perfect matchings");
  spm->require_subcommand(1);
  auto* spm_enum = spm->add_subcommand("enumerate", "list every SPM");
  add_m(spm_enum);
  add_format(spm_enum);
  spm_enum->callback([&] {
    action = [&] {
      PrintSets(out, EnumerateSpms(PolygonContext(opt.m), limits), opt.format);
      return kExitOk;
    };
  });
  auto* spm_par = spm->add_subcommand("parallel", "parallel SPM M_l");
  add_m(spm_par);
  add_format(spm_par);
  spm_par->add_option("--l", opt.l, "index 1..m")->required();
  spm_par->callback([&] {
    action = [&] {
      PrintSets(out, {ParallelSpm(PolygonContext(opt.m), opt.l)}, opt.format);
      return kExitOk;
    };
  });
  auto* spm_tri = spm->add_subcommand(
      "triangular", "triangular SPM through three boundary edges");
  add_m(spm_tri);
  add_format(spm_tri);
  spm_tri->add_option("--edges", opt.triple, "I1,I2,I3 naming [I-1,I]")
      ->required()
      ->delimiter(',')
      ->expected(3);
  spm_tri->callback([&] {
    action = [&] {
      PrintSets(out, {TriangularSpm(PolygonContext(opt.m), opt.triple[0],
                                    opt.triple[1], opt.triple[2])},
                opt.format);
      return kExitOk;
    };
  });

  auto* blocker = app.add_subcommand("blocker", "blockers (minimum blocking sets)");
  blocker->require_subcommand(1);
  auto* b_enum = blocker->add_subcommand("enumerate", "list every blocker");
  add_m(b_enum);
  add_format(b_enum);
  b_enum->callback([&] {
    action = [&] {
      const PolygonContext ctx(opt.m);
      if (opt.format == "json") {
        Json all = Json::array();
        for (const BlockerSpec& spec : EnumerateBlockerSpecs(ctx)) {
          all.push_back(BlockerToJson(ctx, spec));
        }
        out << all.dump() << '\n';
      } else {
        PrintSets(out, EnumerateBlockers(ctx), opt.format);
      }
      return kExitOk;
    };
  });
  auto* b_count = blocker->add_subcommand("count", "number of blockers");
  add_m(b_count);
  b_count->add_flag("--by-spine", opt.by_spine,
                    "per spine length t=2..m, for one oriented spine start");
  b_count->callback([&] {
    action = [&] {
      if (opt.by_spine) {
        for (int t = 2; t <= opt.m; ++t) {
          out << CountBlockersBySpine(opt.m, t) << '\n';
        }
      } else {
        out << CountBlockers(opt.m) << '\n';
      }
      return kExitOk;
    };
  });
  auto* b_check = blocker->add_subcommand(
      "check", "parse, structure report and blocking check for an edge set");
  add_m(b_check);
  b_check->add_option("--edges", opt.edges, "a-b,c-d,...")->required();
  b_check->callback([&] {
    action = [&] { return BlockerCheck(opt, limits, out); };
  });

  auto* oracle = app.add_subcommand("oracle", "brute-force minimum blocking sets");
  add_m(oracle);
  oracle->add_option("--mode", opt.mode, "search mode")
      ->check(CLI::IsMember({"naive", "pruned"}));
  oracle->callback([&] {
    action = [&] {
      const PolygonContext ctx(opt.m);
      const OracleMode mode =
          opt.mode == "naive" ? OracleMode::kNaive : OracleMode::kClassPruned;
      // Check the cap before paying for the SPM index.
      const int cap = mode == OracleMode::kNaive ? limits.naive_max_m
                                                 : limits.pruned_max_m;
      if (opt.m > cap) {
        throw ResourceError("oracle for m=" + std::to_string(opt.m) +
                            " exceeds the cap m<=" + std::to_string(cap));
      }
      const SpmFamilyIndex index = BuildFamilyIndex(ctx, limits);
      out << OracleResultToJson(ctx, FindMinimumBlockers(index, mode, limits))
                 .dump()
          << '\n';
      return kExitOk;
    };
  });

  auto* verify = app.add_subcommand("verify", "compare generator and oracle");
  verify->add_option("--m-min", opt.m_min)->required();
  verify->add_option("--m-max", opt.m_max)->required();
  verify->add_option("--naive-up-to", opt.naive_up_to, "largest m for the naive oracle");
  verify->callback([&] {
    action = [&] {
      const auto reports =
          VerifyTheorem(opt.m_min, opt.m_max, opt.naive_up_to, limits);
      Json all = Json::array();
      bool pass = true;
      for (const auto& report : reports) {
        all.push_back(ReportToJson(report));
        pass = pass && report.passed();
        err << "m=" << report.m << ' ' << (report.passed() ? "PASS" : "FAIL")
            << '\n';
      }
      out << all.dump(2) << '\n';
      return pass ? kExitOk : kExitFailure;
    };
  });

  auto* render = app.add_subcommand("render", "SVG drawing of edge sets");
  add_m(render);
  render->add_option("--edges", opt.edges, "solid edges a-b,c-d,...");
  render->add_option("--blocker-spec", opt.blocker_spec, "START,T,EPS...")
      ->delimiter(',');
  render->add_option("--context", opt.context, "dotted context edges");
  render->add_option("--thick", opt.thick, "emphasized edges");
  render->add_flag("--no-labels", opt.no_labels, "omit vertex labels");
  render->add_option("--out", opt.out_path, "output file, or - for stdout")
      ->required();
  render->callback([&] {
    action = [&] { return Render(opt, out, err); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  if (!action) {
    err << app.help();
    return kExitUsage;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace convex_blockers
