#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace apnlab {

inline constexpr const char* kToolVersion = "apnlab 0.1.0";

// Raised when a request exceeds a configured resource ceiling.
// The CLI maps it to exit code 3.
class CeilingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when two routes that must agree disagree (cross-checks, fixture
// certificates). The CLI maps it to exit code 1.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int max_n = 16;              // exhaustive field-scan ceiling (APN, point counts)
  int max_root_field = 24;     // largest GF(2^m) for root-of-unity work
  int max_trial_deg = 6;       // trial factor search degree ceiling
  int max_poly_degree = 512;   // bivariate total-degree ceiling
  int bezout_scan_degree = 16; // ambient field degree for intersection sums
  unsigned workers = 0;        // 0 = hardware concurrency
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  std::string format = "text"; // text | csv | json
  std::string out_path;        // empty = report to stdout
  std::string fixture_dir;     // defaults to the build-time fixtures path

  void set(const std::string& key, const std::string& value);
  // "key=value" lines; '#' comments and blank lines ignored.
  void load_file(const std::string& path);
  // Stable key=value listing, embedded in report headers.
  std::map<std::string, std::string> items() const;
  std::string summary() const;
};

}  // namespace apnlab
