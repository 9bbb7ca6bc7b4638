#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "render_svg.hpp"
#include "warnet/analytics.hpp"
#include "warnet/dataset_io.hpp"
#include "warnet/econ.hpp"
#include "warnet/error.hpp"
#include "warnet/graph.hpp"
#include "warnet/ingest.hpp"
#include "warnet/serialize.hpp"

namespace warnet::cli {
namespace {

/// Failure that maps to kExitFatal with a message already formatted.
struct Fatal {
  std::string message;
};

struct RunConfig {
  std::string dataset;
  std::string raw;
  std::string aliases;
  std::string registry;
  std::string gdp;
  std::string out = "-";
  std::string report;
  std::string render;
  std::string window_text = "1500:2020";
  std::string format_text = "delimited";
  std::string metric_text = "war";
  std::string mode_text = "active";
  std::string yearly_count_text = "edge";
  std::string entity;
  std::string a;
  std::string b;
  std::size_t top = 10;
  std::int64_t min_degree = 40;
  double scale = 1.0;
  bool no_terror = false;
  bool exclude_terror = false;
  std::uint64_t seed = 0;  // reserved; nothing is randomized

  YearInterval window = kFullWindow;
  OutputFormat format = OutputFormat::kDelimited;
  DegreeMetric metric = DegreeMetric::kWar;
  DegreeMode mode = DegreeMode::kActive;
};

YearInterval parse_window(const std::string& text) {
  const auto colon = text.find(':');
  YearInterval w;
  try {
    if (colon == std::string::npos) throw std::invalid_argument("no colon");
    std::size_t used = 0;
    w.start = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("trailing");
    const std::string tail = text.substr(colon + 1);
    w.end = std::stoi(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw Fatal{"--window must be START:END, got '" + text + "'"};
  }
  if (w.start > w.end || !kFullWindow.contains(w.start) || !kFullWindow.contains(w.end)) {
    throw Fatal{"--window must lie within " + std::to_string(kHorizonStart) + ":" +
                std::to_string(kHorizonEnd) + " with START <= END"};
  }
  return w;
}

void finalize(RunConfig& cfg) {
  cfg.window = parse_window(cfg.window_text);
  cfg.format = cfg.format_text == "structured" ? OutputFormat::kStructured : OutputFormat::kDelimited;
  cfg.metric = cfg.metric_text == "edge" ? DegreeMetric::kEdge : DegreeMetric::kWar;
  cfg.mode = cfg.mode_text == "started" ? DegreeMode::kStarted : DegreeMode::kActive;
  if (cfg.top < 1) throw Fatal{"--top must be at least 1"};
}

std::ifstream open_input(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Fatal{std::string("cannot open ") + what + " file '" + path + "'"};
  return in;
}

template <typename Fn>
auto parse_file(const std::string& path, const char* what, Fn&& fn) {
  auto in = open_input(path, what);
  try {
    return fn(in);
  } catch (const Error& e) {
    throw Fatal{path + ": " + e.what()};
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Fatal{"cannot write '" + path + "'"};
  file << text;
  if (!file) throw Fatal{"failed writing '" + path + "'"};
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out == "-" || cfg.out.empty()) {
    out << text;
  } else {
    write_text_file(cfg.out, text);
  }
}

AliasMap load_aliases(const RunConfig& cfg) {
  if (cfg.aliases.empty()) return {};
  return parse_file(cfg.aliases, "alias", [](std::istream& in) { return read_alias_map(in); });
}

TemporalMultiGraph load_graph(const RunConfig& cfg) {
  if (cfg.dataset.empty()) throw Fatal{"--dataset is required"};
  return parse_file(cfg.dataset, "dataset",
                    [](std::istream& in) { return TemporalMultiGraph::build(read_dataset(in)); });
}

EntityId resolve(const TemporalMultiGraph& g, const AliasMap& aliases, const std::string& name) {
  std::string canonical = clean_name(name);
  if (auto mapped = aliases.find(canonical)) canonical = std::string(*mapped);
  if (auto id = g.find(canonical)) return *id;

  std::vector<std::pair<std::size_t, std::string>> ranked;
  for (const auto& e : g.entities()) ranked.emplace_back(edit_distance(canonical, e.canonical_name), e.canonical_name);
  std::sort(ranked.begin(), ranked.end());
  std::string message = "unknown entity '" + name + "'";
  if (!ranked.empty()) {
    message += "; did you mean:";
    for (std::size_t i = 0; i < std::min<std::size_t>(3, ranked.size()); ++i) message += " '" + ranked[i].second + "'";
  }
  throw Fatal{message};
}

void render(const RunConfig& cfg, const std::string& title, const std::vector<ChartSeries>& series) {
  if (cfg.render.empty()) return;
  std::ostringstream svg;
  render_line_chart(svg, title, series);
  write_text_file(cfg.render, svg.str());
}

ChartSeries chart_of(const YearSeries& s) {
  ChartSeries c{s.label, {}};
  for (int y = s.first_year; y <= s.last_year(); ++y) c.points.emplace_back(y, static_cast<double>(s.at(y)));
  return c;
}

int cmd_ingest(const RunConfig& cfg, std::ostream& out) {
  if (cfg.raw.empty()) throw Fatal{"--raw is required"};
  if (cfg.out.empty() || cfg.out == "-") throw Fatal{"--out must name the dataset file"};
  const auto records = parse_file(cfg.raw, "raw-record", [](std::istream& in) { return read_raw_records(in); });
  const AliasMap aliases = load_aliases(cfg);
  const EntityRegistry registry =
      cfg.registry.empty() ? EntityRegistry{}
                           : parse_file(cfg.registry, "registry", [](std::istream& in) { return read_registry(in); });

  const MergeResult merged = merge_records(records, aliases, registry);
  std::ostringstream dataset_text;
  write_dataset(dataset_text, merged.dataset);
  std::ostringstream report_text;
  if (cfg.format == OutputFormat::kStructured) {
    write_report_json(report_text, merged.report);
  } else {
    write_report_text(report_text, merged.report);
  }
  const std::string report_path =
      !cfg.report.empty() ? cfg.report
                          : cfg.out + (cfg.format == OutputFormat::kStructured ? ".report.json" : ".report.txt");
  write_text_file(cfg.out, dataset_text.str());
  write_text_file(report_path, report_text.str());

  const auto& r = merged.report;
  out << "records " << r.records_read << ", dropped " << r.records_dropped << ", wars "
      << merged.dataset.wars.size() << ", excluded wars " << r.wars_excluded << ", entities "
      << merged.dataset.entities.size() << ", notes " << r.notes.size() << '\n';
  return r.degraded() ? kExitDegraded : kExitOk;
}

int cmd_analysis(const std::string& command, const RunConfig& cfg, std::ostream& out) {
  const TemporalMultiGraph g = load_graph(cfg);
  const AliasMap aliases = load_aliases(cfg);
  std::ostringstream text;

  if (command == "stats") {
    write_summary(text, summarize(g), cfg.format);
  } else if (command == "degree-dist") {
    write_histogram(text, degree_distribution(g, cfg.window, cfg.metric), cfg.format);
  } else if (command == "yearly") {
    const auto series = cfg.yearly_count_text == "war" ? yearly_war_counts(g, !cfg.no_terror)
                                                         : yearly_edge_counts(g, !cfg.no_terror);
    write_series(text, series, cfg.format);
    render(cfg, "Year-wise " + series.label, {chart_of(series)});
  } else if (command == "continents") {
    const auto series = continent_yearly(g, cfg.min_degree);
    write_series(text, series, cfg.format);
    std::vector<ChartSeries> charts;
    for (const auto& s : series) charts.push_back(chart_of(s));
    render(cfg, "Edges per continent (war degree > " + std::to_string(cfg.min_degree) + ")", charts);
  } else if (command == "top") {
    const std::string count_col = cfg.metric == DegreeMetric::kWar ? "wars" : "edges";
    write_ranked(text, top_nodes(g, cfg.window, cfg.top, cfg.metric, cfg.mode), {"entity", count_col}, cfg.format);
  } else if (command == "rivals") {
    write_ranked(text, rival_pairs(g, cfg.window, cfg.top, cfg.mode), {"a", "b", "wars"}, cfg.format);
  } else if (command == "allies") {
    write_ranked(text, common_side_pairs(g, cfg.window, cfg.top, cfg.mode), {"a", "b", "wars"}, cfg.format);
  } else if (command == "relation") {
    if (cfg.a.empty() || cfg.b.empty()) throw Fatal{"--a and --b are required"};
    const EntityId a = resolve(g, aliases, cfg.a);
    const EntityId b = resolve(g, aliases, cfg.b);
    if (a == b) throw Fatal{"--a and --b name the same entity"};
    const auto timeline = relation_timeline(g, a, b);
    const auto& an = g.entity(a).canonical_name;
    const auto& bn = g.entity(b).canonical_name;
    write_relation(text, timeline, an, bn, cfg.format);
    ChartSeries opposed{"opposed", {}};
    ChartSeries allied{"allied", {}};
    for (int y = kHorizonStart; y <= kHorizonEnd; ++y) {
      opposed.points.emplace_back(y, timeline.opposed_in(y) ? 1.0 : 0.0);
      allied.points.emplace_back(y, timeline.allied_in(y) ? 1.0 : 0.0);
    }
    render(cfg, an + " / " + bn, {opposed, allied});
  } else if (command == "history") {
    if (cfg.entity.empty()) throw Fatal{"--entity is required"};
    const auto series = entity_yearly(g, resolve(g, aliases, cfg.entity), cfg.exclude_terror);
    write_series(text, series, cfg.format);
    render(cfg, "Wars per year: " + series.label, {chart_of(series)});
  } else if (command == "terror") {
    write_terror(text, terror_stats(g, cfg.top, cfg.window), cfg.format);
  } else if (command == "econ-overlay") {
    if (cfg.entity.empty() || cfg.gdp.empty()) throw Fatal{"--entity and --gdp are required"};
    if (!(cfg.scale > 0.0)) throw Fatal{"--scale must be positive"};
    const EntityId id = resolve(g, aliases, cfg.entity);
    const auto all = parse_file(cfg.gdp, "gdp", [&](std::istream& in) { return load_gdp(in, aliases); });
    const auto& name = g.entity(id).canonical_name;
    const auto it = std::find_if(all.begin(), all.end(), [&](const GdpSeries& s) { return s.entity == name; });
    const GdpSeries series = it == all.end() ? GdpSeries{name, {}} : *it;
    const OverlaySeries o = overlay(g, series, cfg.scale);
    std::optional<double> corr;
    std::string note;
    try {
      corr = dip_correlation(o);
    } catch (const Error& e) {
      note = std::string(to_string(e.kind()));
    }
    write_overlay(text, o, corr, note, cfg.format);
    ChartSeries gdp_line{"gdp / " + format_double(cfg.scale), {}};
    ChartSeries wars_line{"wars, last 3 years", {}};
    for (const auto& row : o.rows) {
      gdp_line.points.emplace_back(row.year, row.gdp_scaled);
      wars_line.points.emplace_back(row.year, static_cast<double>(row.wars_last3));
    }
    render(cfg, name + ": GDP vs wars", {gdp_line, wars_line});
  }
  emit(cfg, text.str(), out);
  return kExitOk;
}

}  // namespace

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Temporal war-network ingestion and analytics", "warnet"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::vector<std::string> formats{"delimited", "structured"};
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format_text, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out,-o", cfg.out, "Output file ('-' for stdout)");
    sub->add_option("--seed", cfg.seed, "Reserved; no command is randomized");
  };
  auto add_dataset = [&](CLI::App* sub) {
    sub->add_option("--dataset,-d", cfg.dataset, "Canonical dataset file written by 'ingest'")->required();
    sub->add_option("--aliases", cfg.aliases, "Alias map used to resolve entity arguments");
    add_output(sub);
  };
  auto add_window = [&](CLI::App* sub) {
    sub->add_option("--window", cfg.window_text, "Inclusive year window START:END (default 1500:2020)");
  };
  auto add_metric = [&](CLI::App* sub) {
    sub->add_option("--metric", cfg.metric_text, "Degree metric: war (distinct wars) or edge (pairwise edges)")
        ->check(CLI::IsMember({"war", "edge"}));
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode_text, "Window membership: active (overlapping) or started (start inside)")
        ->check(CLI::IsMember({"active", "started"}));
  };
  auto add_top = [&](CLI::App* sub) { sub->add_option("--top,-k", cfg.top, "Number of rows (>= 1)"); };
  auto add_render = [&](CLI::App* sub) { sub->add_option("--render", cfg.render, "Also write an SVG line chart"); };

  auto* ingest = app.add_subcommand("ingest", "Parse raw war records into a canonical dataset and validation report");
  ingest->add_option("--raw", cfg.raw, "Raw-record CSV (source_page,war_name,timeline_text,allies,opponents)")->required();
  ingest->add_option("--aliases", cfg.aliases, "Alias map CSV (variant,canonical)");
  ingest->add_option("--registry", cfg.registry, "Entity registry CSV (canonical,kind,continent)");
  ingest->add_option("--report", cfg.report, "Validation report path (default: <out>.report.txt/.json)");
  add_output(ingest);

  auto* stats = app.add_subcommand("stats", "Node/edge counts and average, max, min edge degree");
  add_dataset(stats);

  auto* degree_dist = app.add_subcommand("degree-dist", "Degree histogram and cumulative threshold counts");
  add_dataset(degree_dist);
  add_window(degree_dist);
  add_metric(degree_dist);

  auto* yearly = app.add_subcommand("yearly", "Active edges (or wars with --metric war) per year, 1500-2020");
  add_dataset(yearly);
  yearly->add_option("--metric", cfg.yearly_count_text, "Count edge (default) or war")->check(CLI::IsMember({"war", "edge"}));
  yearly->add_flag("--no-terror", cfg.no_terror, "Skip edges/wars involving terror organizations");
  add_render(yearly);

  auto* continents = app.add_subcommand("continents", "Per-continent active edges per year for high-degree nodes");
  add_dataset(continents);
  continents->add_option("--min-degree", cfg.min_degree, "Only endpoints with war degree above this count (default 40)");
  add_render(continents);

  auto* top = app.add_subcommand("top", "Highest-degree entities in a window");
  add_dataset(top);
  add_window(top);
  add_metric(top);
  add_mode(top);
  add_top(top);

  auto* rivals = app.add_subcommand("rivals", "Pairs fighting the most wars against each other");
  add_dataset(rivals);
  add_window(rivals);
  add_mode(rivals);
  add_top(rivals);

  auto* allies = app.add_subcommand("allies", "Pairs fighting the most wars on the same side");
  add_dataset(allies);
  add_window(allies);
  add_mode(allies);
  add_top(allies);

  auto* relation = app.add_subcommand("relation", "Per-year opposed/allied flags for two entities");
  add_dataset(relation);
  relation->add_option("--a", cfg.a, "First entity (alias accepted)")->required();
  relation->add_option("--b", cfg.b, "Second entity (alias accepted)")->required();
  add_render(relation);

  auto* history = app.add_subcommand("history", "Distinct wars per year for one entity");
  add_dataset(history);
  history->add_option("--entity", cfg.entity, "Entity (alias accepted)")->required();
  history->add_flag("--exclude-terror", cfg.exclude_terror, "Ignore wars with a terror-organization participant");
  add_render(history);

  auto* terror = app.add_subcommand("terror", "Terror-organization rankings and yearly terror wars (1950-2020)");
  add_dataset(terror);
  add_window(terror);
  add_top(terror);

  auto* econ = app.add_subcommand("econ-overlay", "GDP per capita against wars in the trailing 3 years");
  add_dataset(econ);
  econ->add_option("--entity", cfg.entity, "Entity (alias accepted)")->required();
  econ->add_option("--gdp", cfg.gdp, "GDP CSV (country,year,gdp_per_capita, header required)")->required();
  econ->add_option("--scale", cfg.scale, "Divide GDP by this display constant (default 1)");
  add_render(econ);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFatal;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    finalize(cfg);
    if (chosen == ingest) return cmd_ingest(cfg, out);
    return cmd_analysis(chosen->get_name(), cfg, out);
  } catch (const Fatal& f) {
    err << "error: " << f.message << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitFatal;
}

}  // namespace warnet::cli
