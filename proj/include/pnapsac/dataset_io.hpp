#pragma once

#include <string>
#include <vector>

#include "pnapsac/types.hpp"

namespace pnapsac {

// Text format, one correspondence per line:
//   u1 v1 u2 v2 [gt_label] [quality]
// Lines starting with '#' are comments; a `# size w1 h1 w2 h2` comment
// declares the image sizes. Throws ParseError with the offending line
// number on malformed input.
DataSet load_dataset(const std::string& path);

// Writes the same format in full precision so coordinates round-trip
// bit-exactly. When any point carries a label or an informative quality,
// all six fields are written; unknown membership serializes as -1.
void save_dataset(const DataSet& data, const std::string& path);

struct ValidationIssue {
  int index = -1;  // -1 for dataset-level problems
  std::string what;
};

struct ValidationResult {
  bool ok = true;
  std::vector<ValidationIssue> issues;
  std::string message() const;
};

// Checks coordinate finiteness, in-bounds coordinates when image sizes are
// declared, and that the dataset can feed a minimal solver for `problem`.
ValidationResult validate_dataset(const DataSet& data, ProblemKind problem);

}  // namespace pnapsac
