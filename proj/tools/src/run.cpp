#include "systolic_cli/run.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "systolic/hyperbolic_block.hpp"
#include "systolic/systole_census.hpp"
#include "systolic/upper_bound.hpp"
#include "systolic_cli/svg.hpp"

namespace systolic::cli {
namespace {

constexpr int kMaxPunctures = 10000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Results in index order whatever the scheduling.
template <typename Result>
std::vector<Result> sweep(IntRange range, unsigned threads, const std::function<Result(int)>& work) {
  const auto count = static_cast<std::size_t>(range.last - range.first + 1);
  std::vector<Result> results(count);
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1u, std::min<unsigned>(
      threads == 0 ? std::thread::hardware_concurrency() : threads, static_cast<unsigned>(count)));
  const auto drain = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      results[i] = work(range.first + static_cast<int>(i));
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(drain);
  drain();
  return results;
}

SphereModel default_model(int n) {
  return build(SurfaceParams::standard(n), n >= 5 ? BuildMode::strict : BuildMode::exploratory);
}

void require_range(IntRange range, int lo, int hi, const char* what) {
  if (range.first < lo || range.last > hi || range.first > range.last) {
    throw UsageError(std::string(what) + " must lie within " + std::to_string(lo) + ".." +
                     std::to_string(hi));
  }
}

struct Report {
  nlohmann::json json;
  std::string text;
  int status = kExitSuccess;
};

Report census_report(const RunConfig& config) {
  require_range(config.n, 3, kMaxPunctures, "--n for census");
  const auto results = sweep<Census>(config.n, config.threads,
                                     [](int n) { return census(default_model(n)); });
  Report report;
  std::ostringstream text;
  nlohmann::json items = nlohmann::json::array();
  for (const Census& c : results) {
    items.push_back(to_json(c));
    text << "n=" << c.n << " kissing=" << c.counts.total << " systole="
         << (c.classes.empty() ? std::string("none") : c.systole_length.to_string())
         << " belts=" << c.counts.belts_adjacent << " meridians=" << c.counts.meridians_remaining
         << " merged=" << c.counts.merged << '\n';
    if (config.n.first == config.n.last) {
      for (const GeodesicClass& g : c.classes) {
        text << "  " << to_string(g.kind) << " {";
        for (std::size_t i = 0; i < g.partition.size(); ++i) text << (i ? "," : "") << g.partition[i];
        text << "}\n";
      }
    }
  }
  report.json = config.n.first == config.n.last ? items.front() : items;
  report.text = text.str();
  return report;
}

Report verify_report(const RunConfig& config, std::ostream& err) {
  require_range(config.n, 5, kMaxPunctures, "--n for verify");
  struct Row {
    int n = 0;
    int total = 0;
    int counted = 0;
  };
  const auto rows = sweep<Row>(config.n, config.threads, [](int n) {
    const SphereModel model = default_model(n);
    return Row{n, census(model).counts.total, meridian_exclusion_report(model).counted};
  });
  Report report;
  std::ostringstream text;
  nlohmann::json items = nlohmann::json::array();
  std::vector<int> failed;
  for (const Row& row : rows) {
    const int expected = 4 * row.n - 11;
    const bool ok = row.total == expected && row.counted == row.n - 5;
    if (!ok) failed.push_back(row.n);
    items.push_back({{"n", row.n}, {"kissing", row.total}, {"expected", expected}, {"ok", ok}});
    text << "n=" << row.n << " kissing=" << row.total << " expected=" << expected
         << (ok ? " ok" : " MISMATCH") << '\n';
  }
  for (int n : failed) err << "verify: census total differs from 4n - 11 at n = " << n << '\n';
  report.json = {{"command", "verify"}, {"ok", failed.empty()}, {"results", items}};
  report.text = text.str();
  report.status = failed.empty() ? kExitSuccess : kExitAssertion;
  return report;
}

Report upper_bound_report(const RunConfig& config, std::ostream& err) {
  require_range(config.n, 5, kMaxPunctures, "--n for upper-bound");
  if (config.brute_max < 5 || config.brute_max > 16) {
    throw UsageError("--brute-max must lie within 5..16");
  }
  const auto results = sweep<Tightness>(config.n, config.threads, [&](int n) {
    const SphereModel model = default_model(n);
    return construction_tightness(model, census(model), config.brute_max);
  });
  Report report;
  std::ostringstream text;
  nlohmann::json items = nlohmann::json::array();
  bool all = true;
  for (const Tightness& t : results) {
    items.push_back(to_json(t));
    all = all && t.attains;
    if (!t.attains) err << "upper-bound: construction misses the bound at n = " << t.n << '\n';
    text << "n=" << t.n << " pairs=" << t.pair_classes << "/" << t.pair_bound
         << " others=" << t.other_classes << "/" << t.other_bound << " laminar_max="
         << (t.laminar_maximum ? std::to_string(*t.laminar_maximum) : std::string("not computed"))
         << " total=" << t.pair_classes + t.other_classes << "/" << t.total_bound
         << (t.attains ? " attained" : " NOT ATTAINED") << '\n';
  }
  report.json = config.n.first == config.n.last ? items.front() : items;
  report.text = text.str();
  report.status = all ? kExitSuccess : kExitAssertion;
  return report;
}

Report rows_report(const RunConfig& config) {
  require_range(config.k, 1, 99, "--k");
  Report report;
  std::ostringstream text;
  nlohmann::json items = nlohmann::json::array();
  for (int k = config.k.first; k <= config.k.last; ++k) {
    if (k % 2 == 0) {
      items.push_back({{"k", k}, {"feasible", false}, {"error", "not a lattice translation"}});
      text << "k=" << k << " not a lattice translation\n";
      continue;
    }
    const RowFeasibility row = row_feasibility(k);
    items.push_back(to_json(row));
    text << "k=" << k << (row.feasible ? " feasible" : " infeasible")
         << " r=" << row.radius.to_string() << " (" << row.radius.to_double() << ")";
    for (Obstruction o : row.obstructions) text << ' ' << to_string(o);
    if (row.blocked_meridian_length) {
      text << " blocked_meridian=" << *row.blocked_meridian_length << " > "
           << row.meridian_length.to_double();
    }
    text << '\n';
  }
  report.json = items;
  report.text = text.str();
  return report;
}

Report block_report(std::ostream& err) {
  const BlockCheck check = block_check();
  Report report;
  report.json = to_json(check);
  std::ostringstream text;
  text << "piece area " << check.piece_area.to_string() << "\nblock area "
       << check.block_area.to_string() << (check.area_is_two_pi ? " = 2*pi" : " != 2*pi")
       << "\ncorner angle " << check.corner_angle.to_string()
       << "\nexterior turning " << check.exterior_turning.to_string() << '\n';
  report.text = text.str();
  const bool ok = check.area_is_two_pi && check.corner_is_two_thirds_pi && check.turning_is_two_pi;
  if (!ok) err << "block: Gauss-Bonnet identity failed\n";
  report.status = ok ? kExitSuccess : kExitAssertion;
  return report;
}

Report svg_report(const RunConfig& config) {
  if (config.n.first != config.n.last) throw UsageError("svg takes a single --n");
  require_range(config.n, 3, 200, "--n for svg");
  const SphereModel model = default_model(config.n.first);
  const Census c = census(model);
  Report report;
  report.text = config.figure == Figure::systoles ? systoles_svg(model, c) : sphere_svg(model, c);
  return report;
}

}  // namespace

std::optional<IntRange> parse_range(const std::string& text) {
  const auto parse_int = [](const std::string& s) -> std::optional<int> {
    if (s.empty() || s.size() > 9) return std::nullopt;
    std::size_t used = 0;
    try {
      const int value = std::stoi(s, &used);
      if (used != s.size()) return std::nullopt;
      return value;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto value = parse_int(text);
    if (!value) return std::nullopt;
    return IntRange{*value, *value};
  }
  const auto first = parse_int(text.substr(0, dots));
  const auto last = parse_int(text.substr(dots + 2));
  if (!first || !last || *first > *last) return std::nullopt;
  return IntRange{*first, *last};
}

std::variant<RunConfig, ParseExit> parse_args(int argc, const char* const* argv) {
  CLI::App app{"Systole census of the flat punctured-sphere construction"};
  app.require_subcommand(1);
  RunConfig config;
  std::string n_text;
  std::string range_text;
  std::string k_text = "1..9";
  std::string format_text = "json";
  std::string figure_text = "systoles";
  std::string out_path;

  const std::map<std::string, Command> commands{
      {"census", Command::census},   {"verify", Command::verify}, {"upper-bound", Command::upper_bound},
      {"rows", Command::rows},       {"block", Command::block},   {"svg", Command::svg}};
  const std::map<std::string, std::string> blurbs{
      {"census", "List the systole classes"},
      {"verify", "Check the kissing number 4n - 11 over a range of n"},
      {"upper-bound", "Compare the census with the combinatorial upper bound"},
      {"rows", "Test constructions with k rows of chimneys"},
      {"block", "Gauss-Bonnet arithmetic of the hexagonal cusp block"},
      {"svg", "Draw the chart or the capped cylinder"}};
  for (const auto& [name, command] : commands) {
    CLI::App* sub = app.add_subcommand(name, blurbs.at(name));
    sub->add_option("--format", format_text, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", out_path, "Write the report to PATH");
    if (command == Command::census || command == Command::verify ||
        command == Command::upper_bound || command == Command::svg) {
      auto* n_opt = sub->add_option("--n", n_text, "Number of punctures, N or A..B");
      sub->add_option("--n-range", range_text, "Range of punctures A..B")->excludes(n_opt);
      sub->add_option("--threads", config.threads, "Worker threads (0: all cores)");
    }
    if (command == Command::upper_bound) {
      sub->add_option("--brute-max", config.brute_max, "Largest n for the laminar search");
    }
    if (command == Command::rows) sub->add_option("--k", k_text, "Row counts, K or A..B");
    if (command == Command::svg) {
      sub->add_option("--figure", figure_text, "systoles or sphere")
          ->check(CLI::IsMember({"systoles", "sphere"}));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    return ParseExit{code == 0 ? kExitSuccess : kExitUsage, out.str() + err.str()};
  }

  for (const auto& [name, command] : commands) {
    if (app.got_subcommand(name)) config.command = command;
  }
  config.format = format_text == "text" ? Format::text : Format::json;
  config.figure = figure_text == "sphere" ? Figure::sphere : Figure::systoles;
  if (!out_path.empty()) config.out = out_path;

  const std::string& chosen = range_text.empty() ? n_text : range_text;
  if (!chosen.empty()) {
    const auto range = parse_range(chosen);
    if (!range) return ParseExit{kExitUsage, "invalid --n value: " + chosen + "\n"};
    config.n = *range;
  } else if (config.command == Command::verify || config.command == Command::upper_bound) {
    return ParseExit{kExitUsage, "--n or --n-range is required\n"};
  } else if (config.command == Command::svg) {
    config.n = {8, 8};
  }
  const auto k_range = parse_range(k_text);
  if (!k_range) return ParseExit{kExitUsage, "invalid --k value: " + k_text + "\n"};
  config.k = *k_range;
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report report;
  try {
    switch (config.command) {
      case Command::census: report = census_report(config); break;
      case Command::verify: report = verify_report(config, err); break;
      case Command::upper_bound: report = upper_bound_report(config, err); break;
      case Command::rows: report = rows_report(config); break;
      case Command::block: report = block_report(err); break;
      case Command::svg: report = svg_report(config); break;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitAssertion;
  }

  const bool raw = config.command == Command::svg;
  const std::string body =
      raw || config.format == Format::text ? report.text : report.json.dump(2) + "\n";
  if (config.out) {
    std::ofstream file(*config.out);
    if (!file) {
      err << "cannot write " << *config.out << '\n';
      return kExitUsage;
    }
    file << body;
  } else {
    out << body;
  }
  return report.status;
}

}  // namespace systolic::cli
