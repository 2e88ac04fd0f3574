#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "golden.hpp"
#include "graph_source.hpp"
#include "json_io.hpp"
#include "parallel.hpp"

#ifndef CHIPFIRE_VERSION
#define CHIPFIRE_VERSION "0.0.0"
#endif

namespace chipfire::cli {
namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Context {
  bool json = false;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> cutoff;
  std::string strategy;
  std::ostream& out;
  std::ostream& err;
};

struct Outcome {
  int code = kOk;
  json graph = nullptr;
  json result = json::object();
};

std::string fixed(double v, int digits = 3) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

std::string sci(double v) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(2) << v;
  return s.str();
}

std::optional<std::int64_t> parse_cutoff(const std::string& text) {
  if (text == "auto") return std::nullopt;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || v < 0) {
    throw UsageError("--cutoff expects a non-negative integer or 'auto', got '" + text + "'");
  }
  return v;
}

double pinv_for_residual(const Graph& g, Eigen::MatrixXd& ldag) {
  auto spec = spectral::eigendecompose(laplacian(g));
  ldag = spectral::pinv_spectral(spec).ldag;
  return spec.lambda2();
}

// generate ------------------------------------------------------------------

Outcome cmd_generate(const Context& ctx, const std::string& family, const std::string& path) {
  auto gen = generate(FamilySpec::parse(family));
  {
    std::ofstream f(path);
    if (!f) throw std::ios_base::failure("cannot write " + path);
    write_edge_list(f, gen.graph);
    if (!f) throw std::ios_base::failure("write failed: " + path);
  }
  json tag = to_json(gen.tag);
  tag["n"] = gen.graph.vertex_count();
  tag["m"] = gen.graph.edge_count();
  const std::string sidecar = path + ".tag.json";
  {
    std::ofstream f(sidecar);
    if (!f) throw std::ios_base::failure("cannot write " + sidecar);
    f << tag.dump(2) << '\n';
  }
  if (!ctx.json) {
    ctx.out << "wrote " << gen.tag.display_name << " (n=" << gen.graph.vertex_count()
            << ", m=" << gen.graph.edge_count() << ") to " << path << "\n";
  }
  Outcome o;
  o.graph = {{"kind", "family"},
             {"family", gen.tag.spec.to_string()},
             {"display_name", gen.tag.display_name},
             {"n", gen.graph.vertex_count()},
             {"m", gen.graph.edge_count()}};
  o.result = {{"path", path}, {"sidecar", sidecar}, {"tag", tag}};
  return o;
}

// play ----------------------------------------------------------------------

Outcome cmd_play(const Context& ctx, const std::string& source, const std::string& chips,
                 const std::string& strategy_pos) {
  auto lg = load_graph(source);
  const auto& g = lg.graph;
  std::string name = strategy_pos.empty() ? ctx.strategy : strategy_pos;
  if (name.empty()) name = "min-index";
  const auto strategy = FiringStrategy::parse(name, ctx.seed);
  const auto a = parse_chip_config(chips, g);
  PlayOptions opts;
  opts.cutoff = ctx.cutoff;
  const auto outcome = play(g, a, strategy, opts);
  const auto cls = termination_class(g, a.total());

  Outcome o;
  o.graph = lg.provenance;
  o.result = {{"N", a.total()}, {"termination_class", to_string(cls)}};
  if (!ctx.json) {
    ctx.out << lg.display_name << ": n=" << g.vertex_count() << " m=" << g.edge_count() << " N=" << a.total()
            << " (" << to_string(cls) << ")\n";
    ctx.out << "strategy " << strategy.to_string() << ", cutoff " << outcome.cutoff_used() << "\n";
  }
  if (!outcome.terminated()) {
    const auto& d = outcome.divergence();
    o.code = kDiverged;
    o.result["divergence"] = to_json(d);
    if (!ctx.json) {
      ctx.out << "diverged: " << to_string(d.reason) << " after " << d.moves_played << " moves\n";
    }
    return o;
  }
  const auto& t = outcome.trace();
  std::vector<Vertex> unfired;
  for (std::size_t v = 0; v < t.x.size(); ++v)
    if (t.x[v] == 0) unfired.push_back(static_cast<Vertex>(v));
  Eigen::MatrixXd ldag;
  pinv_for_residual(g, ldag);
  const bool firing_ok = verify_firing_identity(g, t);
  const double residual = verify_duration_identity(g, t, ldag);
  o.result["trace"] = to_json(t, strategy, outcome.cutoff_used());
  o.result["unfired"] = unfired;
  o.result["residuals"] = {{"firing_identity_holds", firing_ok}, {"duration_identity", residual}};
  if (!firing_ok) o.code = kVerifyFailed;
  if (!ctx.json) {
    ctx.out << "s = " << t.s << "\n";
    ctx.out << "unfired vertices:";
    for (auto v : unfired) ctx.out << ' ' << v;
    ctx.out << "\n";
    ctx.out << "Lx = a - b: " << (firing_ok ? "holds" : "VIOLATED") << "\n";
    ctx.out << "s = -n e_k^T Ldag (a - b), max residual over unfired k: " << sci(residual) << "\n";
  }
  return o;
}

// bounds --------------------------------------------------------------------

void print_bound_table(std::ostream& out, const BoundTable& t) {
  out << "| bound | value | floor | applicable |\n|---|---:|---:|---|\n";
  for (const auto& b : t.all) {
    if (b.applicable) {
      out << "| " << to_string(b.name) << " | " << fixed(b.value) << " | " << b.floor_value << " | yes |\n";
    } else {
      out << "| " << to_string(b.name) << " | - | - | no: " << b.reason << " |\n";
    }
  }
  out << "\nbest: " << to_string(t.best.name) << " = " << t.best.floor_value << "\n";
}

Outcome cmd_bounds(const Context& ctx, const std::string& source, std::int64_t N) {
  auto lg = load_graph(source);
  const auto t = best_bound(lg.graph, N);
  Outcome o;
  o.graph = lg.provenance;
  o.result = to_json(t);
  o.result["N"] = N;
  if (!ctx.json) {
    ctx.out << lg.display_name << ", N = " << N << "\n\n";
    print_bound_table(ctx.out, t);
  }
  return o;
}

// table ---------------------------------------------------------------------

struct TableRow {
  std::int64_t tardos = 0, bls = 0, main_implicit = 0, srg = 0, s = -1;
};

Outcome cmd_table(const Context& ctx, int which) {
  std::vector<TableRow> rows(kGoldenRows.size());
  parallel_for(rows.size(), [&](std::size_t i) {
    const auto& gold = kGoldenRows[i];
    const auto gen = generate(FamilySpec::parse(gold.family));
    const auto an = analyze(gen.graph);
    const auto t = bound_table(an, gold.N);
    auto& r = rows[i];
    r.tardos = t.get(BoundName::Tardos).floor_value;
    r.bls = t.get(BoundName::BLS).floor_value;
    r.main_implicit = t.get(BoundName::MainImplicit).floor_value;
    const auto& sb = t.get(BoundName::Srg);
    r.srg = sb.applicable ? sb.floor_value : -1;
    const auto game = play(gen.graph, single_vertex_config(gen.graph, 0, gold.N), FiringStrategy::min_index());
    if (game.terminated()) r.s = game.trace().s;
  });

  struct Column {
    const char* name;
    std::int64_t TableRow::*got;
    std::int64_t GoldenRow::*want;
  };
  std::vector<Column> cols{{"Tardos", &TableRow::tardos, &GoldenRow::tardos}, {"BLS", &TableRow::bls, &GoldenRow::bls}};
  if (which == 2) {
    cols.push_back({"Main", &TableRow::main_implicit, &GoldenRow::main_implicit});
    cols.push_back({"SRG", &TableRow::srg, &GoldenRow::srg});
  }
  cols.push_back({"s", &TableRow::s, &GoldenRow::s});

  json jrows = json::array();
  json mismatches = json::array();
  std::ostringstream md;
  md << "| Graph | N |";
  for (const auto& c : cols) md << ' ' << c.name << " |";
  md << "\n|---|---:|";
  for (std::size_t i = 0; i < cols.size(); ++i) md << "---:|";
  md << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& gold = kGoldenRows[i];
    json cells = json::object();
    md << "| " << gold.label << " | " << gold.N << " |";
    for (const auto& c : cols) {
      const auto got = rows[i].*(c.got);
      const auto want = gold.*(c.want);
      cells[c.name] = got;
      md << ' ' << got << " |";
      if (got != want) {
        mismatches.push_back({{"graph", gold.label}, {"column", c.name}, {"expected", want}, {"got", got}});
      }
    }
    md << "\n";
    jrows.push_back({{"graph", gold.label}, {"family", gold.family}, {"N", gold.N}, {"cells", cells}});
  }

  Outcome o;
  o.result = {{"table", which}, {"rows", jrows}, {"mismatches", mismatches}, {"matches_golden", mismatches.empty()}};
  json columns = json::array({"Graph", "N"});
  for (const auto& c : cols) columns.push_back(c.name);
  o.result["columns"] = columns;
  if (!ctx.json) ctx.out << md.str();
  if (!mismatches.empty()) {
    o.code = kVerifyFailed;
    for (const auto& m : mismatches) {
      ctx.err << "- " << m["graph"].get<std::string>() << " / " << m["column"].get<std::string>()
              << ": expected " << m["expected"] << "\n+ got " << m["got"] << "\n";
    }
  }
  return o;
}

// verify --------------------------------------------------------------------

struct Check {
  std::string name;
  bool passed = false;
  std::optional<double> value;
  std::optional<double> limit;
  std::string detail;
};

json to_json(const Check& c) {
  return {{"name", c.name},
          {"passed", c.passed},
          {"value", c.value ? json(*c.value) : json(nullptr)},
          {"limit", c.limit ? json(*c.limit) : json(nullptr)},
          {"detail", c.detail}};
}

struct GameCheck {
  bool agree = false;
  std::string mismatch;
  std::int64_t N = 0;
  std::int64_t s = 0;
  bool firing_ok = false;
  bool has_unfired = false;
  double residual = 0.0;
  bool sound = false;
  std::string unsound;
};

Outcome cmd_verify(const Context& ctx, const std::string& source, int games, const std::string& dump_path) {
  auto lg = load_graph(source);
  const auto& g = lg.graph;
  Outcome o;
  o.graph = lg.provenance;
  std::vector<Check> checks;
  auto add = [&](Check c) { checks.push_back(std::move(c)); };

  const bool connected = g.vertex_count() >= 2 && is_connected(g);
  add({"connected", connected, std::nullopt, std::nullopt,
       connected ? "" : (g.vertex_count() < 2 ? "fewer than two vertices" : "graph is disconnected")});

  if (connected) {
    const auto an = analyze(g);
    const auto n = static_cast<std::size_t>(an.n);
    const Eigen::MatrixXd L = laplacian_real(g);
    const double scale = an.spectrum.scale();

    const double recon = spectral::reconstruction_residual(an.spectrum, L);
    add({"eigendecomposition", recon <= 1e-9 * scale, recon, 1e-9 * scale,
         std::to_string(an.spectrum.sweeps) + " Jacobi sweeps"});

    const auto pen = spectral::penrose_residuals(L, an.pinv.ldag);
    add({"penrose", pen.within_tolerance(n), std::max({pen.lxl, pen.xlx}), 1e-8 * static_cast<double>(n),
         "asymmetry " + sci(std::max(pen.lx_asymmetry, pen.xl_asymmetry))});

    const auto shifted = spectral::pinv_shift(laplacian(g), spectral::default_shift(an.spectrum));
    const double agree = (shifted.ldag - an.pinv.ldag).cwiseAbs().maxCoeff();
    add({"spectral_vs_shift", agree < 1e-7, agree, 1e-7, ""});

    const double rows = spectral::max_row_sum(an.pinv.ldag);
    add({"ldag_row_sums", rows < 1e-9, rows, 1e-9, ""});

    add({"f_ge_o", an.pinv.f >= an.pinv.o, an.pinv.f - an.pinv.o, 0.0, "f=" + sci(an.pinv.f) + " o=" + sci(an.pinv.o)});
    const double inv_l2 = 1.0 / an.spectrum.lambda2();
    add({"f_le_inv_lambda2", an.pinv.f <= inv_l2 + 1e-9, an.pinv.f, inv_l2 + 1e-9, ""});

    if (lg.tag && lg.tag->vertex_transitive) {
      add({"diag_uniform", an.diag_uniform, std::nullopt, std::nullopt, "vertex-transitive family"});
    }

    std::vector<GameCheck> results(static_cast<std::size_t>(std::max(games, 0)));
    const std::vector<FiringStrategy> strategies{FiringStrategy::min_index(),      FiringStrategy::max_chips(),
                                                 FiringStrategy::fifo(),           FiringStrategy::random(ctx.seed + 1),
                                                 FiringStrategy::random(ctx.seed + 2), FiringStrategy::random(ctx.seed + 3)};
    parallel_for(results.size(), [&](std::size_t i) {
      CounterRng rng(ctx.seed, i);
      auto& r = results[i];
      r.N = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(an.m)));
      ChipConfig a{std::vector<std::int64_t>(n, 0)};
      for (std::int64_t c = 0; c < r.N; ++c) ++a.chips[rng.below(n)];
      const auto rep = confluence_check(g, a, strategies);
      r.agree = rep.agree;
      r.mismatch = rep.mismatch;
      const auto& t = rep.traces.front();
      r.s = t.s;
      r.firing_ok = std::all_of(rep.traces.begin(), rep.traces.end(),
                                [&](const GameTrace& tr) { return verify_firing_identity(g, tr); });
      r.has_unfired = std::all_of(rep.traces.begin(), rep.traces.end(), [](const GameTrace& tr) {
        return std::find(tr.x.begin(), tr.x.end(), 0) != tr.x.end();
      });
      if (r.has_unfired) r.residual = verify_duration_identity(g, t, an.pinv.ldag);
      r.sound = true;
      for (const auto& b : bound_table(an, r.N).all) {
        if (b.applicable && static_cast<double>(t.s) > b.value + 1e-9) {
          r.sound = false;
          r.unsound = to_string(b.name);
        }
      }
    });
    if (!results.empty()) {
      const auto detail = std::to_string(results.size()) + " configurations x " + std::to_string(strategies.size()) +
                          " strategies";
      bool agree = true, firing = true, unfired = true, sound = true;
      double residual = 0.0;
      std::string first_mismatch, first_unsound;
      for (const auto& r : results) {
        if (!r.agree && first_mismatch.empty()) first_mismatch = r.mismatch;
        if (!r.sound && first_unsound.empty()) first_unsound = r.unsound + " < s at N=" + std::to_string(r.N);
        agree = agree && r.agree;
        firing = firing && r.firing_ok;
        unfired = unfired && r.has_unfired;
        sound = sound && r.sound;
        residual = std::max(residual, r.residual);
      }
      add({"confluence", agree, std::nullopt, std::nullopt, agree ? detail : first_mismatch});
      add({"firing_identity", firing, std::nullopt, std::nullopt, "Lx = a - b in exact integers"});
      add({"unfired_vertex", unfired, std::nullopt, std::nullopt, "some x_k = 0 in every trace"});
      add({"duration_identity", unfired && residual < 1e-8, residual, 1e-8, ""});
      add({"bound_soundness", sound, std::nullopt, std::nullopt, sound ? "" : first_unsound});
    }

    if (lg.tag && lg.tag->claimed_srg) {
      const bool same = an.srg == lg.tag->claimed_srg;
      add({"srg_recognized", same, std::nullopt, std::nullopt, ""});
    }
    if (an.srg) {
      const auto& p = *an.srg;
      const auto rep = srg::lemma_suite(p);
      std::string failed;
      for (const auto& c : rep.checks)
        if (c.status == srg::CheckStatus::Fail) failed += (failed.empty() ? "" : ", ") + c.name;
      add({"srg_lemmas", rep.all_passed(), std::nullopt, std::nullopt, failed});

      const auto e = srg::ldag_entries(p);
      const double diag = e.diag.convert_to<double>();
      const double adj = e.adj.convert_to<double>();
      const double nonadj = e.nonadj.convert_to<double>();
      double worst = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const double want = i == j ? diag : (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? adj : nonadj);
          worst = std::max(worst, std::abs(an.pinv.ldag(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) - want));
        }
      }
      add({"srg_exact_entries", worst < 1e-9, worst, 1e-9, ""});
      o.result["srg"] = srg_report(p);
    } else {
      o.result["srg"] = nullptr;
    }
    o.result["spectral"] = spectral_report(an, pen);

    if (!dump_path.empty()) {
      std::ofstream f(dump_path);
      if (!f) throw std::ios_base::failure("cannot write " + dump_path);
      spectral::write_matrix(f, an.pinv.ldag);
    }
  }

  json jchecks = json::array();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    jchecks.push_back(to_json(c));
    if (!c.passed) ++failed;
  }
  o.result["checks"] = jchecks;
  o.result["all_passed"] = failed == 0;
  if (failed != 0) o.code = kVerifyFailed;

  if (!ctx.json) {
    ctx.out << lg.display_name << ": n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
    for (const auto& c : checks) {
      ctx.out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (c.value) ctx.out << "  " << sci(*c.value);
      if (c.limit) ctx.out << " (limit " << sci(*c.limit) << ")";
      if (!c.detail.empty()) ctx.out << "  " << c.detail;
      ctx.out << "\n";
    }
    if (failed == 0) {
      ctx.out << "all " << checks.size() << " checks passed\n";
    } else {
      ctx.out << failed << " of " << checks.size() << " checks failed\n";
    }
  }
  return o;
}

json run_report(const std::string& command, const std::vector<std::string>& args, const Outcome& o,
                double wall_ms) {
  return {{"schema_version", "1"},
          {"tool", "chipfire"},
          {"version", CHIPFIRE_VERSION},
          {"command", {{"name", command}, {"args", args}}},
          {"graph", o.graph},
          {"exit_code", o.code},
          {"result", o.result},
          {"wall_time_ms", wall_ms}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chip-firing game simulator and move-count bounds", "chipfire"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::string out_path;
  std::uint64_t seed = 0;
  std::string cutoff_text = "auto";
  std::string strategy;
  app.add_flag("--json", as_json, "Print the JSON run report instead of text");
  app.add_option("--out", out_path, "Also write the JSON run report to this path");
  app.add_option("--seed", seed, "Seed for random strategies and sampled configurations");
  app.add_option("--cutoff", cutoff_text, "Move cutoff for play: integer or 'auto'");
  app.add_option("--strategy", strategy, "Firing order for play")
      ->check(CLI::IsMember({"min-index", "max-chips", "fifo", "random"}));

  std::string family, el_path;
  auto* gen = app.add_subcommand("generate", "Write a named graph as an edge list");
  gen->add_option("family", family, "Family spec, e.g. petersen or paley:109")->required();
  gen->add_option("out", el_path, "Edge-list path")->required();

  std::string graph_src, chips, strategy_pos;
  auto* play_cmd = app.add_subcommand("play", "Play one game");
  play_cmd->add_option("graph", graph_src, "Family spec or edge-list file")->required();
  play_cmd->add_option("chips", chips, "single:<v>:<N> or csv:<c0>,<c1>,...")->required();
  play_cmd->add_option("strategy", strategy_pos, "Firing order")
      ->check(CLI::IsMember({"min-index", "max-chips", "fifo", "random"}));

  std::int64_t N = 0;
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate every bound for N chips");
  bounds_cmd->add_option("graph", graph_src, "Family spec or edge-list file")->required();
  bounds_cmd->add_option("N", N, "Number of chips")->required()->check(CLI::NonNegativeNumber);

  int which = 0;
  auto* table_cmd = app.add_subcommand("table", "Reproduce a reference table and compare with the golden cells");
  table_cmd->add_option("which", which, "1 or 2")->required()->check(CLI::Range(1, 2));

  int games = 5;
  std::string dump_path;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite on a graph");
  verify_cmd->add_option("graph", graph_src, "Family spec or edge-list file")->required();
  verify_cmd->add_option("--games", games, "Random terminating configurations to play")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--dump-ldag", dump_path, "Write the pseudo-inverse matrix to this path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const auto* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    Context ctx{as_json, seed, parse_cutoff(cutoff_text), strategy, out, err};
    if (sub == gen) {
      o = cmd_generate(ctx, family, el_path);
    } else if (sub == play_cmd) {
      o = cmd_play(ctx, graph_src, chips, strategy_pos);
    } else if (sub == bounds_cmd) {
      o = cmd_bounds(ctx, graph_src, N);
    } else if (sub == table_cmd) {
      o = cmd_table(ctx, which);
    } else {
      o = cmd_verify(ctx, graph_src, games, dump_path);
    }
  } catch (const UsageError& e) {
    o.code = kUsage;
    o.result = {{"error", e.what()}};
  } catch (const GeneratorError& e) {
    o.code = kUsage;
    o.result = {{"error", e.what()}};
  } catch (const EngineError& e) {
    o.code = kUsage;
    o.result = {{"error", e.what()}};
  } catch (const std::exception& e) {
    o.code = kIoError;
    o.result = {{"error", e.what()}};
  }
  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (o.result.contains("error")) err << "error: " << o.result["error"].get<std::string>() << "\n";

  const json report = run_report(command, args, o, wall_ms);
  if (as_json) out << report.dump(2) << "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      err << "error: cannot write " << out_path << "\n";
      return kIoError;
    }
    f << report.dump(2) << "\n";
  }
  return o.code;
}

}  // namespace chipfire::cli
