#include "commands.hpp"

#include "rectpack/container_search.hpp"
#include "rectpack/gap.hpp"
#include "rectpack/greedy.hpp"
#include "rectpack/instance_lab.hpp"
#include "rectpack/json_io.hpp"
#include "rectpack/oracle.hpp"
#include "rectpack/parallel.hpp"
#include "rectpack/render.hpp"
#include "rectpack/transforms.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

namespace rectpack::cli {

namespace {

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

// The summary goes to stdout unless stdout already carries the JSON.
void summary(const Config& cfg, i64 profit, std::size_t items, bool certified) {
  std::ostream& os = cfg.output == "-" ? std::cerr : std::cout;
  os << "profit=" << profit << " items=" << items << " certified=" << (certified ? "true" : "false") << "\n";
}

std::string parent_dir(const std::string& path) { return std::filesystem::path(path).parent_path().string(); }

struct LoadedPacking {
  Json json;
  Packing packing;
};

LoadedPacking load_packing(const std::string& path) {
  if (path.empty()) throw InvalidArgument("a packing file is required");
  LoadedPacking lp;
  lp.json = read_json_file(path);
  lp.packing = packing_from_json(lp.json, parent_dir(path));
  return lp;
}

Instance load_instance(const std::string& path) {
  if (path.empty()) throw InvalidArgument("an instance file is required");
  return instance_from_json(read_json_file(path));
}

std::vector<Container> containers_of(const Json& j, const std::string& aux) {
  if (!aux.empty()) return containers_from_json(read_json_file(aux));
  if (!j.contains("containers")) throw SchemaError("the packing carries no 'containers' field");
  return containers_from_json(j.at("containers"));
}

LShape lshape_of(const Json& j, const std::string& aux) {
  const Json src = aux.empty() ? j : read_json_file(aux);
  if (!src.contains("lshape")) throw SchemaError("no 'lshape' field");
  return lshape_from_json(src.at("lshape"));
}

SearchOptions search_options(const Config& cfg) {
  SearchOptions o;
  o.grid = cfg.grid;
  return o;
}

std::vector<PlacedItem> items_in(const Packing& p, const Container& c) {
  std::vector<PlacedItem> out;
  for (const auto& it : placed_items(p)) {
    if (contains(c.rect(), it.rect())) out.push_back(it);
  }
  return out;
}

const Container& pick_container(const std::vector<Container>& cs, int index) {
  if (index < 0 || static_cast<std::size_t>(index) >= cs.size()) {
    throw InvalidArgument("container index " + std::to_string(index) + " out of range");
  }
  return cs[static_cast<std::size_t>(index)];
}

std::string fmt_ratio(i64 profit, i64 reference) {
  if (reference == 0) return profit == 0 ? "1.0000" : "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", static_cast<double>(profit) / static_cast<double>(reference));
  return buf;
}

}  // namespace

int cmd_generate(const Config& cfg) {
  if (cfg.family == "random") {
    RandomSpec spec;
    spec.profile = parse_profile(cfg.profile);
    spec.n = cfg.n;
    spec.N = cfg.N;
    spec.seed = cfg.seed;
    spec.rotation_allowed = cfg.rotation;
    write_text(cfg.output, dump(to_json(gen_random(spec))));
    return kOk;
  }
  if (cfg.family == "hardness") {
    PartSumInstance ps;
    std::optional<EqualSplit> split;
    if (!cfg.values.empty()) {
      ps = cfg.ksum ? reduce_ksum_to_partsum(cfg.values, cfg.k) : PartSumInstance{cfg.values, cfg.k};
      if (!cfg.split_path.empty()) split = split_from_json(read_json_file(cfg.split_path));
    } else {
      YesInstance yes = gen_yes_partsum(cfg.k, cfg.max_value, cfg.distractors, cfg.seed);
      ps = yes.ps;
      split = yes.split;
    }
    const Instance inst = gen_hardness_2dkr(ps, cfg.rotation, cfg.force);
    write_text(cfg.output, dump(to_json(inst)));
    if (!cfg.split_out.empty()) {
      if (!split) throw InvalidArgument("no split known; pass --split with --values");
      write_json_file(cfg.split_out, to_json(*split));
    }
    if (!cfg.packing_out.empty()) {
      if (!split) throw InvalidArgument("no split known; pass --split with --values");
      write_json_file(cfg.packing_out, to_json(construct_yes_packing(ps, *split, cfg.rotation)));
    }
    return kOk;
  }
  if (cfg.family == "lowerbound") {
    const Instance inst = gen_lowerbound_family(static_cast<int>(cfg.n));
    write_text(cfg.output, dump(to_json(inst)));
    if (!cfg.packing_out.empty()) write_json_file(cfg.packing_out, to_json(construct_lowerbound_packing(inst)));
    return kOk;
  }
  if (cfg.family == "corridor") {
    const CorridorFixture fx = gen_corridor_fixture(cfg.seed, cfg.N, cfg.bends, cfg.closed);
    write_text(cfg.output, dump(to_json(fx.corridor)));
    if (!cfg.packing_out.empty()) write_json_file(cfg.packing_out, to_json(fx.packing));
    return kOk;
  }
  throw InvalidArgument("unknown family '" + cfg.family + "'");
}

int cmd_solve(const Config& cfg) {
  const Instance inst = load_instance(cfg.input);
  const Rational eps = parse_rational(cfg.eps);
  Json out;
  Packing packing;
  bool certified = false;
  if (cfg.algo == "container") {
    const ContainerPacking r = solve_container(inst, cfg.c, eps, cfg.budget, search_options(cfg));
    packing = r.packing;
    out = to_json(packing);
    out["containers"] = containers_to_json(r.containers);
  } else if (cfg.algo == "lc_star") {
    const LcPacking r = solve_lc_star(inst, cfg.c, eps, cfg.budget, search_options(cfg));
    packing = r.packing;
    out = to_json(packing);
    out["containers"] = containers_to_json(r.containers);
    out["lshape"] = to_json(r.lshape);
  } else if (cfg.algo == "nfdh" || cfg.algo == "steinberg") {
    const Container knapsack{0, 0, inst.N, inst.N, ContainerLabel::Area};
    const PackResult r = cfg.algo == "nfdh" ? nfdh(knapsack, inst.items) : steinberg(knapsack, inst.items);
    packing = Packing{inst, r.placements};
    out = to_json(r, inst);
  } else if (cfg.algo == "oracle") {
    OracleLimits limits;
    limits.max_items = cfg.max_items;
    limits.time_budget_s = cfg.time_budget;
    const OracleResult r = solve_exact(inst, limits);
    packing = r.packing;
    certified = r.certified;
    out = to_json(packing);
    out["certified"] = certified;
  } else {
    throw InvalidArgument("unknown algorithm '" + cfg.algo + "'");
  }
  write_text(cfg.output, dump(out));
  summary(cfg, packing.profit(), packing.placements.size(), certified);
  return cfg.algo == "oracle" && !certified ? kBudget : kOk;
}

int cmd_verify(const Config& cfg) {
  const LoadedPacking lp = load_packing(cfg.input);
  const Rational eps = parse_rational(cfg.eps);
  ValidationReport report;
  if (cfg.lcstar) {
    report = validate_lc_packing(lp.packing, lshape_of(lp.json, cfg.aux), containers_of(lp.json, cfg.aux), eps);
  } else {
    report = validate_packing(lp.packing);
    if (cfg.containers) report.merge(validate_container_packing(lp.packing, containers_of(lp.json, cfg.aux), eps));
  }
  const std::string text = dump(to_json(report));
  std::cerr << text;
  if (!cfg.report.empty()) write_text(cfg.report, text);
  return report.valid() ? kOk : kInvalid;
}

int cmd_transform(const Config& cfg) {
  const std::string& op = cfg.op;
  if (op == "corridor") {
    if (cfg.corridor.empty()) throw InvalidArgument("--corridor is required");
    const Corridor corr = corridor_from_json(read_json_file(cfg.corridor));
    const LoadedPacking lp = load_packing(cfg.packing);
    const auto out = process_corridor(corr, lp.packing, parse_rational(cfg.eps), parse_rational(cfg.eps_thin));
    write_text(cfg.output, dump(to_json(out)));
    return kOk;
  }
  const LoadedPacking lp = load_packing(cfg.packing);
  const i64 N = lp.packing.instance.N;
  if (op == "random-strip") {
    const i64 t = floor_mul(parse_rational(cfg.thickness), N);
    write_text(cfg.output,
               dump(to_json(delete_random_strip(lp.packing, parse_orientation(cfg.orientation), t, cfg.seed))));
    return kOk;
  }
  const std::vector<Container> cs = containers_of(lp.json, cfg.aux);
  if (op == "shrink" || op == "split" || op == "box") {
    const Container& C = pick_container(cs, cfg.container);
    const auto items = items_in(lp.packing, C);
    const Rational delta = parse_rational(cfg.delta);
    if (op == "shrink") write_text(cfg.output, dump(to_json(shrink_container(C, items, delta, parse_mode(cfg.mode)))));
    else if (op == "split") write_text(cfg.output, dump(to_json(split_container(C, items, delta))));
    else write_text(cfg.output, dump(to_json(box_to_containers(C, items, delta))));
    return kOk;
  }
  if (op == "compact") {
    std::vector<ContainerContents> contents;
    for (const auto& c : cs) contents.push_back({c, items_in(lp.packing, c)});
    contents = compact(contents);
    std::vector<PlacedItem> items;
    std::vector<Container> moved;
    for (const auto& cc : contents) {
      moved.push_back(cc.container);
      items.insert(items.end(), cc.items.begin(), cc.items.end());
    }
    Json out = to_json(make_packing(lp.packing.instance, items));
    out["containers"] = containers_to_json(moved);
    write_text(cfg.output, dump(out));
    return kOk;
  }
  if (op == "free-strip" || op == "chain") {
    const Rational t = parse_rational(cfg.thickness) * N;
    Json out{{"strip", free_strip_name(find_free_strip(cs, N, t))}};
    if (op == "chain") {
      const auto chain = extract_chain(cs, N, t);
      out["chain"] = chain ? containers_to_json(*chain) : Json(nullptr);
    }
    write_text(cfg.output, dump(out));
    return kOk;
  }
  if (op == "classify") {
    const auto classes = classify_containers(cs, N, parse_rational(cfg.small), parse_rational(cfg.large));
    Json arr = Json::array();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      Json c = to_json(cs[i]);
      c["class"] = container_class_name(classes[i]);
      arr.push_back(c);
    }
    write_text(cfg.output, dump(Json{{"containers", arr}}));
    return kOk;
  }
  if (op == "thresholds") {
    std::vector<i64> profits;
    for (const auto& c : cs) {
      i64 p = 0;
      for (const auto& it : items_in(lp.packing, c)) p += it.item.p;
      profits.push_back(p);
    }
    const auto t = choose_container_thresholds(cs, profits, N, parse_rational(cfg.eps), parse_rational(cfg.eps_large));
    write_text(cfg.output, dump(Json{{"eps_c_small", to_string(t.eps_c_small)},
                                     {"eps_c_large", to_string(t.eps_c_large)},
                                     {"band", t.band}}));
    return kOk;
  }
  if (op == "contract") {
    ContractionParams params;
    params.eps = parse_rational(cfg.eps);
    params.eps_large = parse_rational(cfg.eps_large);
    params.eps_thin = parse_rational(cfg.eps_thin);
    params.mode = parse_mode(cfg.mode);
    if (!cfg.mu.empty()) params.mu = parse_rational(cfg.mu);
    write_text(cfg.output, dump(to_json(resource_contraction(lp.packing, cs, params))));
    return kOk;
  }
  throw InvalidArgument("unknown transform '" + op + "'");
}

int cmd_gap(const Config& cfg) {
  if (cfg.input.empty()) throw InvalidArgument("a GAP instance file is required");
  const GapInstance g = gap_instance_from_json(read_json_file(cfg.input));
  GapOptions opts;
  opts.k_max = cfg.k_max;
  opts.state_budget = cfg.state_budget;
  opts.coarsen = cfg.coarsen;
  const GapSolution sol = solve_gap(g, opts);
  write_text(cfg.output, dump(to_json(sol)));
  (cfg.output == "-" ? std::cerr : std::cout) << "profit=" << sol.profit << "\n";
  return kOk;
}

int cmd_oracle(const Config& cfg) {
  const Instance inst = load_instance(cfg.input);
  OracleLimits limits;
  limits.max_items = cfg.max_items;
  limits.time_budget_s = cfg.time_budget;
  Json out;
  Packing packing;
  bool certified = false;
  if (cfg.oracle_c >= 0) {
    const auto r = solve_exact_container(inst, cfg.oracle_c, parse_rational(cfg.eps), limits);
    packing = r.packing;
    certified = r.certified;
    out = to_json(packing);
    out["containers"] = containers_to_json(r.containers);
  } else {
    const auto r = solve_exact(inst, limits);
    packing = r.packing;
    certified = r.certified;
    out = to_json(packing);
  }
  out["certified"] = certified;
  write_text(cfg.output, dump(out));
  summary(cfg, packing.profit(), packing.placements.size(), certified);
  return certified ? kOk : kBudget;
}

int cmd_extract(const Config& cfg) {
  const LoadedPacking lp = load_packing(cfg.input);
  try {
    write_text(cfg.output, dump(to_json(extract_partition(lp.packing, cfg.extract_k))));
  } catch (const NotExtractable& e) {
    std::cerr << "not extractable: " << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}

int cmd_render(const Config& cfg) {
  const LoadedPacking lp = load_packing(cfg.input);
  RenderOptions opts;
  if (lp.json.contains("containers")) opts.containers = containers_from_json(lp.json.at("containers"));
  if (lp.json.contains("lshape")) opts.lshape = lshape_from_json(lp.json.at("lshape"));
  if (!cfg.overlay.empty()) {
    if (cfg.overlay != "strips") throw InvalidArgument("unknown overlay '" + cfg.overlay + "'");
    opts.overlay_strips = true;
  }
  opts.strip_thickness = parse_rational(cfg.thickness);
  opts.size = cfg.size;
  write_text(cfg.output, render_svg(lp.packing, opts));
  return kOk;
}

namespace {

struct BenchRow {
  std::string instance;
  std::string algo;
  i64 profit = 0;
  std::optional<i64> reference;
  double wall_ms = 0;
};

template <class F>
BenchRow timed(const std::string& instance, const std::string& algo, std::optional<i64> reference, F&& run) {
  const auto t0 = std::chrono::steady_clock::now();
  const i64 profit = run();
  const auto t1 = std::chrono::steady_clock::now();
  return {instance, algo, profit, reference, std::chrono::duration<double, std::milli>(t1 - t0).count()};
}

std::vector<std::vector<BenchRow>> bench_suite(const Config& cfg) {
  const Rational eps = parse_rational(cfg.eps);
  std::vector<std::vector<BenchRow>> rows;
  if (cfg.suite == "empty") return rows;
  if (cfg.suite == "hardness-roundtrip") {
    rows.resize(cfg.count);
    parallel_for(cfg.count, [&](std::size_t i) {
      const YesInstance yes = gen_yes_partsum(cfg.k, cfg.max_value, cfg.distractors, cfg.seed + i);
      const Packing original = construct_yes_packing(yes.ps, yes.split);
      rows[i].push_back(timed("hardness-" + std::to_string(cfg.seed + i), "yes-roundtrip", original.profit(), [&] {
        const EqualSplit back = extract_partition(original, yes.ps.k);
        return construct_yes_packing(yes.ps, back).profit();
      }));
    });
    return rows;
  }
  if (cfg.suite == "lowerbound-sweep") {
    const std::vector<int> ns{3, 5, 7, 9, 11, 13, 15};
    rows.resize(ns.size());
    parallel_for(ns.size(), [&](std::size_t i) {
      const Instance inst = gen_lowerbound_family(ns[i]);
      const i64 reference = construct_lowerbound_packing(inst).profit();
      rows[i].push_back(timed("lowerbound-" + std::to_string(ns[i]), "container", reference, [&] {
        return solve_container(inst, cfg.c, eps, cfg.budget, search_options(cfg)).packing.profit();
      }));
    });
    return rows;
  }
  if (cfg.suite == "random-small") {
    rows.resize(cfg.count);
    parallel_for(cfg.count, [&](std::size_t i) {
      RandomSpec spec;
      spec.n = std::min<std::size_t>(cfg.n, 8);
      spec.N = std::min<std::int64_t>(cfg.N, 16);
      spec.seed = cfg.seed + i;
      const Instance inst = gen_random(spec);
      const std::string name = "random-" + std::to_string(spec.seed);
      OracleLimits limits;
      limits.time_budget_s = cfg.time_budget;
      const i64 opt = solve_exact(inst, limits).packing.profit();
      const Container knapsack{0, 0, inst.N, inst.N, ContainerLabel::Area};
      rows[i].push_back(timed(name, "nfdh", opt, [&] {
        return Packing{inst, nfdh(knapsack, inst.items).placements}.profit();
      }));
      rows[i].push_back(timed(name, "container", opt, [&] {
        return solve_container(inst, cfg.c, eps, cfg.budget, search_options(cfg)).packing.profit();
      }));
      rows[i].push_back(timed(name, "lc_star", opt, [&] {
        return solve_lc_star(inst, cfg.c, eps, cfg.budget, search_options(cfg)).packing.profit();
      }));
      rows[i].push_back(timed(name, "oracle", opt, [&] { return opt; }));
    });
    return rows;
  }
  throw InvalidArgument("unknown suite '" + cfg.suite + "'");
}

}  // namespace

int cmd_bench(const Config& cfg) {
  const auto rows = bench_suite(cfg);
  std::string csv = "instance,algo,profit,oracle_profit,ratio,wall_ms\n";
  for (const auto& group : rows) {
    for (const auto& r : group) {
      char ms[32];
      std::snprintf(ms, sizeof ms, "%.3f", r.wall_ms);
      csv += r.instance + "," + r.algo + "," + std::to_string(r.profit) + "," +
             (r.reference ? std::to_string(*r.reference) : "") + "," +
             (r.reference ? fmt_ratio(r.profit, *r.reference) : "") + "," + ms + "\n";
    }
  }
  write_text(cfg.output, csv);
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Two-dimensional geometric knapsack toolkit"};
  app.require_subcommand(1);
  Config cfg;

  auto* gen = app.add_subcommand("generate", "Generate instances and fixtures");
  gen->add_option("--family", cfg.family, "random | hardness | lowerbound | corridor")->capture_default_str();
  gen->add_option("--profile", cfg.profile, "uniform | skewed | cardinality")->capture_default_str();
  gen->add_option("-n,--n", cfg.n, "Item count or family size")->capture_default_str();
  gen->add_option("--N", cfg.N, "Knapsack side")->capture_default_str();
  gen->add_option("--seed", cfg.seed)->capture_default_str();
  gen->add_flag("--rotation", cfg.rotation, "Allow 90-degree rotations");
  gen->add_option("--values", cfg.values, "Values of A (hardness)")->delimiter(',');
  gen->add_option("--k", cfg.k)->capture_default_str();
  gen->add_flag("--ksum", cfg.ksum, "Treat --values as a k-Sum instance and reduce it first");
  gen->add_flag("--force", cfg.force, "Allow k below the construction's regime");
  gen->add_option("--split", cfg.split_path, "Equal split for --values");
  gen->add_option("--split-out", cfg.split_out, "Write the planted split");
  gen->add_option("--packing-out", cfg.packing_out, "Write the reference packing");
  gen->add_option("--max-value", cfg.max_value)->capture_default_str();
  gen->add_option("--distractors", cfg.distractors)->capture_default_str();
  gen->add_option("--bends", cfg.bends)->capture_default_str();
  gen->add_flag("--closed", cfg.closed, "Closed corridor");
  gen->add_option("-o,--output", cfg.output)->capture_default_str();

  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("input", cfg.input, "Instance JSON")->required();
  solve->add_option("--algo", cfg.algo, "container | lc_star | nfdh | steinberg | oracle")->capture_default_str();
  solve->add_option("--c", cfg.c, "Container count")->capture_default_str();
  solve->add_option("--eps", cfg.eps)->capture_default_str();
  solve->add_option("--grid", cfg.grid)->capture_default_str();
  solve->add_option("--budget", cfg.budget, "Candidate container tuples")->capture_default_str();
  solve->add_option("--max-items", cfg.max_items)->capture_default_str();
  solve->add_option("--time-budget", cfg.time_budget, "Oracle seconds")->capture_default_str();
  solve->add_option("-o,--output", cfg.output)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Validate a packing");
  verify->add_option("input", cfg.input, "Packing JSON")->required();
  verify->add_flag("--containers", cfg.containers, "Also check container rules");
  verify->add_flag("--lcstar", cfg.lcstar, "Check the L&C* rules");
  verify->add_option("--aux", cfg.aux, "JSON with containers/lshape overriding the packing's");
  verify->add_option("--eps", cfg.eps)->capture_default_str();
  verify->add_option("--report", cfg.report, "Also write the report here");

  auto* transform = app.add_subcommand("transform", "Structural transformations");
  transform->add_option("op", cfg.op,
                        "shrink | split | box | compact | free-strip | chain | classify | thresholds | contract | "
                        "corridor | random-strip")
      ->required();
  transform->add_option("--packing", cfg.packing, "Packing JSON (with containers)");
  transform->add_option("--aux", cfg.aux, "JSON with containers overriding the packing's");
  transform->add_option("--container", cfg.container, "Container index")->capture_default_str();
  transform->add_option("--delta", cfg.delta)->capture_default_str();
  transform->add_option("--mode", cfg.mode, "cardinality | weighted")->capture_default_str();
  transform->add_option("--eps", cfg.eps)->capture_default_str();
  transform->add_option("--eps-large", cfg.eps_large)->capture_default_str();
  transform->add_option("--eps-thin", cfg.eps_thin)->capture_default_str();
  transform->add_option("--mu", cfg.mu);
  transform->add_option("--thickness", cfg.thickness, "Strip thickness relative to N")->capture_default_str();
  transform->add_option("--orientation", cfg.orientation)->capture_default_str();
  transform->add_option("--seed", cfg.seed)->capture_default_str();
  transform->add_option("--corridor", cfg.corridor, "Corridor JSON");
  transform->add_option("--small", cfg.small)->capture_default_str();
  transform->add_option("--large", cfg.large)->capture_default_str();
  transform->add_option("-o,--output", cfg.output)->capture_default_str();

  auto* gap = app.add_subcommand("gap", "Solve a generalized assignment instance");
  gap->add_option("input", cfg.input, "GAP instance JSON")->required();
  gap->add_option("--k-max", cfg.k_max)->capture_default_str();
  gap->add_option("--state-budget", cfg.state_budget)->capture_default_str();
  gap->add_option("--coarsen", cfg.coarsen)->capture_default_str();
  gap->add_option("-o,--output", cfg.output)->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "Exact solver for small instances");
  oracle->add_option("input", cfg.input, "Instance JSON")->required();
  oracle->add_option("--c", cfg.oracle_c, "Restrict to packings with at most c containers");
  oracle->add_option("--eps", cfg.eps)->capture_default_str();
  oracle->add_option("--max-items", cfg.max_items)->capture_default_str();
  oracle->add_option("--time-budget", cfg.time_budget)->capture_default_str();
  oracle->add_option("-o,--output", cfg.output)->capture_default_str();

  auto* extract = app.add_subcommand("extract", "Recover an equal split from a hardness packing");
  extract->add_option("input", cfg.input, "Packing JSON")->required();
  extract->add_option("--k", cfg.extract_k, "Expected k (0 infers it)")->capture_default_str();
  extract->add_option("-o,--output", cfg.output)->capture_default_str();

  auto* render = app.add_subcommand("render", "Draw a packing as SVG");
  render->add_option("input", cfg.input, "Packing JSON")->required();
  render->add_option("--overlay", cfg.overlay, "strips");
  render->add_option("--thickness", cfg.thickness, "Overlay strip thickness relative to N")->capture_default_str();
  render->add_option("--size", cfg.size)->capture_default_str();
  render->add_option("-o,--output", cfg.output)->capture_default_str();

  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  bench->add_option("--suite", cfg.suite, "hardness-roundtrip | lowerbound-sweep | random-small | empty")->required();
  bench->add_option("--seed", cfg.seed)->capture_default_str();
  bench->add_option("--count", cfg.count)->capture_default_str();
  bench->add_option("--c", cfg.c)->capture_default_str();
  bench->add_option("--eps", cfg.eps)->capture_default_str();
  bench->add_option("--k", cfg.k)->capture_default_str();
  bench->add_option("--n", cfg.n)->capture_default_str();
  bench->add_option("--N", cfg.N)->capture_default_str();
  bench->add_option("--budget", cfg.budget)->capture_default_str();
  bench->add_option("--time-budget", cfg.time_budget)->capture_default_str();
  bench->add_option("-o,--output", cfg.output)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_generate(cfg);
    if (*solve) return cmd_solve(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*transform) return cmd_transform(cfg);
    if (*gap) return cmd_gap(cfg);
    if (*oracle) return cmd_oracle(cfg);
    if (*extract) return cmd_extract(cfg);
    if (*render) return cmd_render(cfg);
    if (*bench) return cmd_bench(cfg);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const StateBudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace rectpack::cli
