#include "pnapsac/dataset_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

namespace pnapsac {

const char* problem_name(ProblemKind problem) {
  switch (problem) {
    case ProblemKind::kLine2D: return "line";
    case ProblemKind::kHomography: return "homography";
    case ProblemKind::kFundamentalMatrix: return "fundamental";
  }
  return "unknown";
}

std::optional<ProblemKind> problem_from_name(const std::string& name) {
  if (name == "line" || name == "line2d") return ProblemKind::kLine2D;
  if (name == "homography" || name == "h") return ProblemKind::kHomography;
  if (name == "fundamental" || name == "f")
    return ProblemKind::kFundamentalMatrix;
  return std::nullopt;
}

namespace {

bool parse_double(const std::string& token, double& out) {
  const char* s = token.c_str();
  char* end = nullptr;
  errno = 0;
  out = std::strtod(s, &end);
  return end == s + token.size() && errno == 0;
}

bool parse_int(const std::string& token, int& out) {
  const char* s = token.c_str();
  char* end = nullptr;
  errno = 0;
  const long value = std::strtol(s, &end, 10);
  if (end != s + token.size() || errno != 0) return false;
  out = static_cast<int>(value);
  return true;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

DataSet load_dataset(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'");

  std::vector<Correspondence> points;
  ImageSizes sizes;
  std::string line;
  int line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      auto tokens = split_ws(line.substr(first + 1));
      if (!tokens.empty() && tokens[0] == "size") {
        if (tokens.size() != 5) fail(line_no, "size header needs w1 h1 w2 h2");
        double dims[4];
        for (int i = 0; i < 4; ++i) {
          if (!parse_double(tokens[i + 1], dims[i]))
            fail(line_no, "bad size value '" + tokens[i + 1] + "'");
        }
        sizes = ImageSizes{dims[0], dims[1], dims[2], dims[3]};
      }
      continue;
    }

    auto tokens = split_ws(line.substr(first));
    if (tokens.size() < 4 || tokens.size() > 6)
      fail(line_no, "expected 4 to 6 fields, got " +
                        std::to_string(tokens.size()));
    Correspondence c;
    double* coords[4] = {&c.u1, &c.v1, &c.u2, &c.v2};
    for (int i = 0; i < 4; ++i) {
      if (!parse_double(tokens[i], *coords[i]))
        fail(line_no, "bad coordinate '" + tokens[i] + "'");
    }
    if (tokens.size() >= 5) {
      int label = 0;
      if (!parse_int(tokens[4], label))
        fail(line_no, "bad label '" + tokens[4] + "'");
      c.gt_label = label;
    }
    if (tokens.size() == 6) {
      if (!parse_double(tokens[5], c.quality))
        fail(line_no, "bad quality '" + tokens[5] + "'");
    }
    points.push_back(c);
  }
  return DataSet(std::move(points), sizes);
}

void save_dataset(const DataSet& data, const std::string& path) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");

  bool annotated = false;
  for (const auto& c : data.points()) {
    if (c.gt_label.has_value() || c.quality != 1.0) {
      annotated = true;
      break;
    }
  }

  char buffer[256];
  const auto& sizes = data.image_sizes();
  if (sizes.declared()) {
    std::snprintf(buffer, sizeof(buffer), "# size %.17g %.17g %.17g %.17g\n",
                  sizes.w1, sizes.h1, sizes.w2, sizes.h2);
    file << buffer;
  }
  for (const auto& c : data.points()) {
    std::snprintf(buffer, sizeof(buffer), "%.17g %.17g %.17g %.17g", c.u1,
                  c.v1, c.u2, c.v2);
    file << buffer;
    if (annotated) {
      std::snprintf(buffer, sizeof(buffer), " %d %.17g",
                    c.gt_label.value_or(-1), c.quality);
      file << buffer;
    }
    file << '\n';
  }
  if (!file) throw std::runtime_error("write failed for '" + path + "'");
}

std::string ValidationResult::message() const {
  if (ok) return "ok";
  std::ostringstream out;
  out << issues.size() << " issue(s):";
  for (const auto& issue : issues) {
    out << ' ';
    if (issue.index >= 0) out << "point " << issue.index << ": ";
    out << issue.what << ';';
  }
  return out.str();
}

ValidationResult validate_dataset(const DataSet& data, ProblemKind problem) {
  ValidationResult result;
  const int m = minimal_sample_size(problem);
  if (data.size() < m) {
    result.issues.push_back(
        {-1, "needs at least " + std::to_string(m) + " points, has " +
                 std::to_string(data.size())});
  }
  const auto& sizes = data.image_sizes();
  for (int i = 0; i < data.size(); ++i) {
    const auto& c = data[i];
    const double coords[4] = {c.u1, c.v1, c.u2, c.v2};
    bool finite = true;
    for (double value : coords) {
      if (!std::isfinite(value)) finite = false;
    }
    if (!finite) {
      result.issues.push_back({i, "non-finite coordinate"});
      continue;
    }
    if (!std::isfinite(c.quality) || c.quality < 0.0 || c.quality > 1.0)
      result.issues.push_back({i, "quality outside [0,1]"});
    if (sizes.declared()) {
      if (c.u1 < 0 || c.u1 >= sizes.w1 || c.v1 < 0 || c.v1 >= sizes.h1 ||
          c.u2 < 0 || c.u2 >= sizes.w2 || c.v2 < 0 || c.v2 >= sizes.h2)
        result.issues.push_back({i, "coordinate outside declared image"});
    }
  }
  result.ok = result.issues.empty();
  return result;
}

}  // namespace pnapsac
