#pragma once

#include <string>
#include <vector>

#include "conceptdim/diameter.hpp"

namespace conceptdim {

// Identity of the artifact a dimension was computed from, for reports.
struct SourceInfo {
  std::string input;
  std::string label;
  int n = 0;  // n-gram order; 0 = unspecified
  int d = 0;  // embedding dimension / attribute count
  std::string measure_type = "cardinality";  // "cardinality" | "interval"
  double theta = 0.0;
  std::vector<double> weights;  // empty = uniform / not applicable
};

struct DimensionResult {
  double dim = 0.0;
  bool infinite = false;  // zero trapezoid sum sentinel
  DiameterProfile profile;
  SourceInfo source;
};

// Trapezoid rule over the profile grid, raised to the power -2. A zero sum
// yields the +infinity sentinel with the diagnostic flag instead of a crash.
// Profiles carrying exact extent counts are integrated in integer arithmetic.
DimensionResult intrinsic_dimension(DiameterProfile profile);

// Deterministically ordered JSON document for a result (schema_version 1).
std::string dimension_result_to_json(const DimensionResult& result);
void write_dimension_result_file(const std::string& path, const DimensionResult& result);

// The fields cmd_report consumes back out of a result document.
struct ResultFileData {
  int schema_version = 0;
  std::string label;
  int n = 0;
  int d = 0;
  double dim = 0.0;
  bool infinite = false;
  std::string mode;
};

ResultFileData read_dimension_result_file(const std::string& path);

}  // namespace conceptdim
