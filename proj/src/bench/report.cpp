#include "pnapsac/bench/benchmark.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace pnapsac::bench {

namespace {

std::string num(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

std::string fixed(double v, int digits) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, v);
  return buffer;
}

}  // namespace

const char* format_name(ReportFormat format) {
  switch (format) {
    case ReportFormat::kCsv: return "csv";
    case ReportFormat::kJson: return "json";
    case ReportFormat::kMarkdown: return "markdown-table";
  }
  return "unknown";
}

std::optional<ReportFormat> format_from_name(const std::string& name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  if (name == "markdown-table" || name == "markdown" || name == "md")
    return ReportFormat::kMarkdown;
  return std::nullopt;
}

std::string raw_csv(const std::vector<RunResult>& raw) {
  std::string out =
      "scene,sampler,run,seed,error,inlier_pct,failure,time_ms,iterations\n";
  for (const auto& r : raw) {
    out += r.scene + ',' + r.sampler + ',' + std::to_string(r.run) + ',' +
           std::to_string(r.seed) + ',' + num(r.error) + ',' +
           num(r.inlier_pct) + ',' + (r.failure ? "1" : "0") + ',' +
           num(r.time_ms) + ',' + std::to_string(r.iterations) + '\n';
  }
  return out;
}

std::string aggregate_csv(const std::vector<AggregateRow>& rows) {
  std::string out =
      "scene,sampler,runs,mean_error,median_error,mean_inlier_pct,"
      "median_inlier_pct,failure_pct,mean_time_ms,median_time_ms,"
      "mean_iterations,median_iterations\n";
  for (const auto& r : rows) {
    out += r.scene + ',' + r.sampler + ',' + std::to_string(r.runs) + ',' +
           num(r.mean_error) + ',' + num(r.median_error) + ',' +
           num(r.mean_inlier_pct) + ',' + num(r.median_inlier_pct) + ',' +
           num(r.failure_pct) + ',' + num(r.mean_time_ms) + ',' +
           num(r.median_time_ms) + ',' + num(r.mean_iterations) + ',' +
           num(r.median_iterations) + '\n';
  }
  return out;
}

std::string aggregate_markdown(const std::vector<AggregateRow>& rows) {
  std::string out =
      "| scene | sampler | error | inlier % | fail % | time ms | iters |\n"
      "|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    out += "| " + r.scene + " | " + r.sampler + " | " +
           fixed(r.mean_error, 3) + " (" + fixed(r.median_error, 3) + ") | " +
           fixed(r.mean_inlier_pct, 1) + " (" +
           fixed(r.median_inlier_pct, 1) + ") | " + fixed(r.failure_pct, 1) +
           " | " + fixed(r.mean_time_ms, 2) + " (" +
           fixed(r.median_time_ms, 2) + ") | " + fixed(r.mean_iterations, 1) +
           " (" + fixed(r.median_iterations, 1) + ") |\n";
  }
  return out;
}

std::string aggregate_json(const std::vector<AggregateRow>& rows) {
  nlohmann::json array = nlohmann::json::array();
  for (const auto& r : rows) {
    array.push_back({{"scene", r.scene},
                     {"sampler", r.sampler},
                     {"runs", r.runs},
                     {"mean_error", r.mean_error},
                     {"median_error", r.median_error},
                     {"mean_inlier_pct", r.mean_inlier_pct},
                     {"median_inlier_pct", r.median_inlier_pct},
                     {"failure_pct", r.failure_pct},
                     {"mean_time_ms", r.mean_time_ms},
                     {"median_time_ms", r.median_time_ms},
                     {"mean_iterations", r.mean_iterations},
                     {"median_iterations", r.median_iterations}});
  }
  return array.dump(2) + "\n";
}

std::vector<AggregateRow> aggregates_from_json(const std::string& text) {
  const auto array = nlohmann::json::parse(text);
  std::vector<AggregateRow> rows;
  rows.reserve(array.size());
  for (const auto& item : array) {
    AggregateRow r;
    r.scene = item.at("scene").get<std::string>();
    r.sampler = item.at("sampler").get<std::string>();
    r.runs = item.at("runs").get<int>();
    r.mean_error = item.at("mean_error").get<double>();
    r.median_error = item.at("median_error").get<double>();
    r.mean_inlier_pct = item.at("mean_inlier_pct").get<double>();
    r.median_inlier_pct = item.at("median_inlier_pct").get<double>();
    r.failure_pct = item.at("failure_pct").get<double>();
    r.mean_time_ms = item.at("mean_time_ms").get<double>();
    r.median_time_ms = item.at("median_time_ms").get<double>();
    r.mean_iterations = item.at("mean_iterations").get<double>();
    r.median_iterations = item.at("median_iterations").get<double>();
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepPoint>& points) {
  std::string out =
      "gamma,mean_iterations,rel_iterations,mean_error,rel_error,"
      "failure_pct,failure_delta_pp,mean_time_ms,rel_time\n";
  for (const auto& p : points) {
    out += num(p.gamma) + ',' + num(p.stats.mean_iterations) + ',' +
           num(p.rel_iterations) + ',' + num(p.stats.mean_error) + ',' +
           num(p.rel_error) + ',' + num(p.stats.failure_pct) + ',' +
           num(p.failure_delta_pp) + ',' + num(p.stats.mean_time_ms) + ',' +
           num(p.rel_time) + '\n';
  }
  return out;
}

void emit_report(const std::vector<AggregateRow>& rows, ReportFormat format,
                 const std::string& path) {
  if (rows.empty()) throw ConfigError("refusing to emit an empty report");
  std::string text;
  switch (format) {
    case ReportFormat::kCsv: text = aggregate_csv(rows); break;
    case ReportFormat::kJson: text = aggregate_json(rows); break;
    case ReportFormat::kMarkdown: text = aggregate_markdown(rows); break;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report to " + path);
  out << text;
  if (!out.flush())
    throw std::runtime_error("failed while writing report to " + path);
}

}  // namespace pnapsac::bench
