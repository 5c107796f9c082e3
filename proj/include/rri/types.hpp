#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace rri {

using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;
using RowVecX = Eigen::RowVectorXd;

/// One raw accelerometer reading in the device frame.
struct AccelSample {
  std::int64_t t_ms{};
  double ax{}, ay{}, az{};
};

/// One inertial-profiler reading: roughness at a point along the route.
struct IriRecord {
  std::int64_t t_ms{};
  double chainage_m{};
  double iri{};
};

struct StreamMeta {
  std::string device_label;
  std::string source_path;
  std::size_t sample_count{};
  std::int64_t t_start_ms{};
  std::int64_t t_end_ms{};
};

/// Per-second aggregate of one accelerometer stream. Stores both the mean of
/// per-sample magnitudes and the per-axis means so the aggregation choice
/// stays auditable downstream.
struct SecondFeature {
  std::int64_t second_index{};
  double mean_magnitude{};
  double mean_ax{}, mean_ay{}, mean_az{};
  std::size_t n_samples{};
};

enum class ValidationKind { standstill, shake };

struct ValidationVerdict {
  ValidationKind kind{};
  double observed_min{};
  double observed_max{};
  bool passed{};
};

/// One second of survey data: acceleration feature joined with the mean of
/// the profiler records that fall in that second.
struct PairedSample {
  std::int64_t second_index{};
  double accel_feature{};
  double iri_mean{};
  int n_iri{};
  double chainage_start_m{};
};

struct SurveyGeometry {
  double speed_mps{15.0};
  double iri_spacing_m{5.0};
};

// Per-axis readings beyond this are treated as corrupt input, not motion.
inline constexpr double kAccelSanityLimitMps2 = 200.0;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Validation or data-content failure. Maps to process exit code 2.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file; carries the 1-based line number when known.
class ParseError : public DataError {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : DataError(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  explicit ParseError(const std::string& msg) : DataError(msg) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_{};
};

/// Numeric failure such as training divergence. Maps to process exit code 3.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace rri
