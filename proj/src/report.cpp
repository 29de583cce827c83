#include "avl/bench/report.hpp"

#include <cmath>
#include <string>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace avl::bench {

namespace {

using Json = nlohmann::ordered_json;

// 18775 -> "18,775"
std::string group_thousands(long value) {
  std::string digits = std::to_string(value < 0 ? -value : value);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && (digits.size() - i) % 3 == 0) out += ',';
    out += digits[i];
  }
  return value < 0 ? "-" + out : out;
}

std::string render_table(const BenchmarkReport& report) {
  constexpr auto kRow = "{:<20}|{:>9} |{:>9} |{:>9} |{:>9} |{:>10}\n";
  std::string out;
  out += fmt::format("Delete-phase rotations per iteration ({} iterations, {} words, seed {})\n\n",
                     report.config.iterations, report.config.word_count, report.config.seed);
  out += fmt::format(kRow, "Algorithm", "LL", "LR", "RL", "RR", "Sum");
  out += std::string(72, '-') + '\n';
  for (const auto& row : report.rows) {
    const auto& a = row.delete_average;
    out += fmt::format(kRow, display_name(row.tally.strategy), group_thousands(std::lround(a.ll)),
                       group_thousands(std::lround(a.lr)), group_thousands(std::lround(a.rl)),
                       group_thousands(std::lround(a.rr)), group_thousands(std::lround(a.sum())));
  }
  if (report.percentages) {
    const auto p = report.percentages->rounded();
    out += std::string(72, '-') + '\n';
    out += fmt::format(kRow, "Percentage", p[0], p[1], p[2], p[3], p[4]);
  }
  return out;
}

std::string render_csv(const BenchmarkReport& report) {
  std::string out = "algorithm,ll,lr,rl,rr,sum\n";
  for (const auto& row : report.rows) {
    const auto& a = row.delete_average;
    out += fmt::format("{},{},{},{},{},{}\n", to_string(row.tally.strategy), a.ll, a.lr, a.rl, a.rr, a.sum());
  }
  if (report.percentages) {
    const auto& p = *report.percentages;
    out += fmt::format("percentage,{},{},{},{},{}\n", p.ll, p.lr, p.rl, p.rr, p.sum);
  }
  return out;
}

template <class T>
Json counters_json(const BasicRotationCounters<T>& c) {
  return Json{{"ll", c.ll}, {"lr", c.lr}, {"rl", c.rl}, {"rr", c.rr}, {"sum", c.sum()}};
}

template <class T>
BasicRotationCounters<T> counters_from_json(const Json& j) {
  return {j.at("ll").get<T>(), j.at("lr").get<T>(), j.at("rl").get<T>(), j.at("rr").get<T>()};
}

std::string render_json(const BenchmarkReport& report) {
  Json config{{"seed", report.config.seed},
              {"iterations", report.config.iterations},
              {"corpus_sha256", report.config.corpus_sha256},
              {"sample_size", nullptr},
              {"word_count", report.config.word_count}};
  if (report.config.sample_size) config["sample_size"] = *report.config.sample_size;

  Json rows = Json::array();
  for (const auto& row : report.rows) {
    rows.push_back(Json{{"strategy", to_string(row.tally.strategy)},
                        {"label", display_name(row.tally.strategy)},
                        {"iterations", row.tally.iterations},
                        {"insert", {{"totals", counters_json(row.tally.insert_counters)},
                                    {"average", counters_json(row.insert_average)}}},
                        {"delete", {{"totals", counters_json(row.tally.delete_counters)},
                                    {"average", counters_json(row.delete_average)}}}});
  }

  Json percentages = nullptr;
  if (report.percentages) {
    const auto& p = *report.percentages;
    percentages = Json{{"ll", p.ll}, {"lr", p.lr}, {"rl", p.rl}, {"rr", p.rr}, {"sum", p.sum}};
  }
  return Json{{"config", config}, {"rows", rows}, {"percentages", percentages}}.dump(2) + "\n";
}

}  // namespace

ReportFormat parse_format(std::string_view name) {
  if (name == "table") return ReportFormat::Table;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  throw PreconditionError("unknown report format: " + std::string(name));
}

std::string render_report(const BenchmarkReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Table: return render_table(report);
    case ReportFormat::Csv: return render_csv(report);
    case ReportFormat::Json: return render_json(report);
  }
  return {};
}

BenchmarkReport parse_json_report(std::string_view text) {
  const auto j = Json::parse(text);
  BenchmarkReport report;
  const auto& config = j.at("config");
  report.config.seed = config.at("seed").get<std::uint64_t>();
  report.config.iterations = config.at("iterations").get<std::uint64_t>();
  report.config.corpus_sha256 = config.at("corpus_sha256").get<std::string>();
  if (!config.at("sample_size").is_null()) report.config.sample_size = config.at("sample_size").get<std::size_t>();
  report.config.word_count = config.at("word_count").get<std::size_t>();

  for (const auto& row : j.at("rows")) {
    StrategyRow parsed;
    parsed.tally.strategy = parse_strategy(row.at("strategy").get<std::string>());
    parsed.tally.iterations = row.at("iterations").get<std::uint64_t>();
    parsed.tally.insert_counters = counters_from_json<std::uint64_t>(row.at("insert").at("totals"));
    parsed.tally.delete_counters = counters_from_json<std::uint64_t>(row.at("delete").at("totals"));
    parsed.insert_average = counters_from_json<double>(row.at("insert").at("average"));
    parsed.delete_average = counters_from_json<double>(row.at("delete").at("average"));
    report.rows.push_back(parsed);
  }

  if (const auto& p = j.at("percentages"); !p.is_null()) {
    report.percentages = PercentageRow{p.at("ll").get<double>(), p.at("lr").get<double>(), p.at("rl").get<double>(),
                                       p.at("rr").get<double>(), p.at("sum").get<double>()};
  }
  return report;
}

}  // namespace avl::bench
