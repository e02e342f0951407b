#include "conceptdim/dimension.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "conceptdim/errors.hpp"
#include "conceptdim/io_util.hpp"

namespace conceptdim {

DimensionResult intrinsic_dimension(DiameterProfile profile) {
  const std::size_t ell = profile.ell;
  if (profile.diam.size() != ell + 1)
    throw InvalidInputError("profile has the wrong number of grid values");
  DimensionResult result;

  bool have_counts = profile.denom > 0 && profile.diam_counts.size() == ell + 1;
  if (have_counts) {
    // Sum of [D((i-1)/l) + D(i/l)] telescopes to counts[0] + counts[l] plus
    // twice the interior counts, all over the common denominator |G|.
    std::int64_t sum = profile.diam_counts.front() + profile.diam_counts.back();
    for (std::size_t i = 1; i < ell; ++i) sum += 2 * profile.diam_counts[i];
    if (sum == 0) {
      result.infinite = true;
      result.dim = std::numeric_limits<double>::infinity();
    } else {
      double q = static_cast<double>(2 * static_cast<std::int64_t>(ell) * profile.denom) /
                 static_cast<double>(sum);
      result.dim = q * q;
    }
  } else {
    double sum = 0.0;
    for (std::size_t i = 1; i <= ell; ++i) sum += profile.diam[i - 1] + profile.diam[i];
    double t = sum / (2.0 * static_cast<double>(ell));
    if (t == 0.0) {
      result.infinite = true;
      result.dim = std::numeric_limits<double>::infinity();
    } else {
      result.dim = 1.0 / (t * t);
    }
  }
  result.profile = std::move(profile);
  return result;
}

std::string dimension_result_to_json(const DimensionResult& result) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["mode"] = to_string(result.profile.mode);
  j["ell"] = result.profile.ell;
  j["alphas"] = result.profile.alphas;
  j["diam"] = result.profile.diam;
  if (result.infinite)
    j["dim"] = nullptr;
  else
    j["dim"] = result.dim;
  j["dim_infinite"] = result.infinite;
  j["prime_ops"] = result.profile.prime_ops;
  nlohmann::ordered_json measure;
  measure["type"] = result.source.measure_type;
  if (result.source.measure_type == "interval") {
    measure["theta"] = result.source.theta;
    if (!result.source.weights.empty()) measure["weights"] = result.source.weights;
  }
  j["measure"] = std::move(measure);
  nlohmann::ordered_json source;
  source["input"] = result.source.input;
  source["label"] = result.source.label;
  source["n"] = result.source.n;
  source["d"] = result.source.d;
  j["source"] = std::move(source);
  return j.dump(2) + "\n";
}

void write_dimension_result_file(const std::string& path, const DimensionResult& result) {
  atomic_write_file(path, dimension_result_to_json(result));
}

ResultFileData read_dimension_result_file(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError("cannot parse result file " + path + ": " + e.what());
  }
  ResultFileData data;
  try {
    data.schema_version = j.at("schema_version").get<int>();
    data.infinite = j.at("dim_infinite").get<bool>();
    data.dim = data.infinite ? std::numeric_limits<double>::infinity()
                             : j.at("dim").get<double>();
    data.mode = j.at("mode").get<std::string>();
    const auto& source = j.at("source");
    data.label = source.at("label").get<std::string>();
    data.n = source.at("n").get<int>();
    data.d = source.at("d").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError("result file " + path + " is missing fields: " + e.what());
  }
  if (data.schema_version != 1)
    throw InvalidInputError("result file " + path + " has unsupported schema_version");
  return data;
}

}  // namespace conceptdim
