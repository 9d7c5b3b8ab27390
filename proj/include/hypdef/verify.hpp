#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypdef/halfspace.hpp"

namespace hypdef {

enum class Status { Pass, Fail, Diverges };
const char* to_string(Status s);
Status status_from_string(const std::string& s);

struct CheckReport {
  std::string check_id;
  Status status = Status::Pass;
  double max_error = 0.0;
  std::optional<double> tolerance;  // empty for informational checks
  int samples = 0;
  std::uint64_t seed = 0;
  nlohmann::ordered_json details = nlohmann::ordered_json::array();
};

struct VerifyConfig {
  std::uint64_t seed = 0;
  int samples = 20;
  std::optional<double> tol;  // overrides every asserted tolerance
  cplx tau{0.0, 1.0};
  cplx b1{1.0, 0.0}, b2{0.0, 0.0};
  double k1 = 1.5, k2 = 0.7;
  double alpha = 2.0 * M_PI, eps = 1.0;
  std::optional<std::string> field;
};

const std::vector<std::string>& suite_names();
// Throws ConfigError for an unknown suite and ParseError for a bad field.
std::vector<CheckReport> run_suite(const std::string& suite, const VerifyConfig& config);

std::string emit_json(const std::vector<CheckReport>& reports);
std::string emit_text(const std::vector<CheckReport>& reports);
std::vector<CheckReport> parse_json(const std::string& text);
// 0 when every check passed or diverged as expected, 1 otherwise.
int exit_code(const std::vector<CheckReport>& reports);

// w uniform in the unit square, t log-uniform in [0.05, 2].
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  HPoint point();
  double uniform(double a, double b);
  cplx complex(double r = 1.0);  // both parts uniform in [-r, r]
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hypdef
