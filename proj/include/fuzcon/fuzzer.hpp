#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fuzcon/config.hpp"
#include "fuzcon/functions.hpp"
#include "fuzcon/report.hpp"

namespace fuzcon {

/// SplitMix64. uniform() = (next() >> 11) * 2^-53.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

/// m x m node values, non-decreasing along both axes, read by bilinear
/// interpolation. values[i * m + j] sits at (i/(m-1), j/(m-1)).
struct MonotoneGridFunction {
  int m = 0;
  std::vector<double> values;
  Kind kind = Kind::conjunction;

  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * m + j]; }
  double operator()(double x, double y) const;
  bool monotone() const;
};

enum class Discontinuity { none, zero_rectangle, lift_rectangle, cut };

std::string to_string(Discontinuity d);

struct GeneratorParams {
  int m = 17;
  Kind kind = Kind::conjunction;
  bool commutative = false;
  /// Conjunctions read the grid through max(0, (v - theta) / (1 - theta))
  /// (disjunctions through the dual), so zero sets have curved boundaries.
  double theta = 0.5;
  /// Probability of applying one discontinuity mode.
  double discontinuity = 0.5;
};

struct GeneratedConnective {
  std::uint64_t seed = 0;
  MonotoneGridFunction grid;
  Discontinuity mode = Discontinuity::none;
  std::vector<double> mode_params;
  BinaryConnective connective;
};

GeneratedConnective generate_connective(std::uint64_t seed, const GeneratorParams& params);

BinaryConnective random_monotone_connective(std::uint64_t seed, int m, Kind kind,
                                            bool commutative);

struct Counterexample {
  std::uint64_t seed = 0;
  GeneratedConnective instance;
  CheckResult result;
};

struct SearchOptions {
  GeneratorParams generator;
  std::uint64_t first_seed = 1;
  int budget = 100;
  int threads = 0;  // 0: hardware concurrency
  NumericConfig config;
};

/// Targets: THM_3_1 / THM_3_2 (four-flag agreement of the induced negation,
/// commutativity not required), LEM (with N := N_D, fails while LEM_INEQ
/// holds), or any law / theorem id taking one connective of the generated
/// kind. Returns the failing instance with the lowest seed.
std::optional<Counterexample> search_counterexample(std::string_view target,
                                                    const SearchOptions& options);

/// Runs the target check on one generated instance.
CheckResult run_target(std::string_view target, const GeneratedConnective& g,
                       const NumericConfig& cfg);

bool is_counterexample(std::string_view target, const CheckResult& r);

/// Grid nodes as CSV with header `x,y,value`.
void write_grid_csv(const MonotoneGridFunction& g, std::ostream& out);

/// Samples b on an n x n uniform grid as CSV with header `x,y,value`.
void write_samples_csv(const BinaryConnective& b, int n, std::ostream& out);

}  // namespace fuzcon
