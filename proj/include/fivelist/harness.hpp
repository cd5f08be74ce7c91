#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fivelist/oracle.hpp"
#include "fivelist/solver.hpp"
#include "fivelist/validity.hpp"

namespace fivelist {

/// mt19937_64 with its own bounded draws; the standard distributions are
/// not specified bit for bit, so they would break cross-platform
/// determinism.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  int uniform(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
  bool chance(double p) { return static_cast<double>(eng_() >> 11) * 0x1.0p-53 < p; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }
  /// k distinct values of {lo..hi}, sorted.
  std::vector<int> sample(int lo, int hi, int k);

 private:
  std::mt19937_64 eng_;
};

/// Seed of the i-th item of a batch started from `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

enum class Family { Triangulation, Grid, WheelStack, NearPlanar, Thm5NSet };
enum class Base { Triangulation, Grid, Strip };

const char* to_string(Family f);
std::optional<Family> family_from_name(std::string_view name);
const char* to_string(Base b);
std::optional<Base> base_from_name(std::string_view name);

struct ListProfile {
  int interior = 5;  // off the outer face
  int outer = 3;     // on the outer face, off the path
  int special = 4;   // N vertices
  int palette = 8;   // colors are drawn from 1..palette
};

/// Size parameters by family:
///   TRIANGULATION  n >= 3 vertices, `flips` random edge flips
///   GRID           width x height >= 2 x 2
///   WHEEL_STACK    hub plus `rings` rings of `spokes` >= 3 vertices
///   NEAR_PLANAR    `crossings` planted on a grid (width x height) or
///                  triangulation (n) base, pairwise at distance >= min_distance
///   THM5_NSET      `n_count` vertices of N on a grid, triangulation or strip
///                  (spine of `width` vertices, n - width ears) base
struct GenSpec {
  Family family = Family::Triangulation;
  int n = 20;
  int width = 5;
  int height = 5;
  int rings = 3;
  int spokes = 6;
  int flips = 0;
  int crossings = 0;
  int n_count = 0;
  int min_distance = -1;  // -1: what the theorem needs
  Base base = Base::Grid;
  int path_length = -1;   // -1: the theorem's default
  std::optional<Theorem> theorem;  // hypotheses to satisfy; default by family
  std::uint64_t seed = 1;
  ListProfile lists;
};

/// The statement whose hypotheses a spec is generated for.
Theorem target_theorem(const GenSpec& spec);

class InfeasibleSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Deterministic in the spec. The result passes check_theorem for
/// target_theorem(spec); InfeasibleSpec when that cannot be arranged.
Instance gen_instance(const GenSpec& spec);

/// Building blocks, exposed for tests.
PlaneGraph random_triangulation(int n, Rng& rng, int flips = 0);
PlaneGraph grid_graph(int width, int height);
PlaneGraph wheel_stack(int rings, int spokes);

/// Instances for color_basic with at most `max_n` vertices: triangulations
/// thinned by random edge deletions, every precolored path of length 0..2
/// along the outer face, and `lists_per_path` random list assignments per
/// path. Every instance passes check_basic.
struct SweepSpec {
  int count = 10000;
  int max_n = 11;
  int palette = 6;
  int lists_per_path = 2;
  std::uint64_t seed = 1;
};
std::vector<Instance> basic_sweep(const SweepSpec& spec);

enum class RunOutcome { Solved, Uncolorable, Skipped, Limit, Error };
const char* to_string(RunOutcome o);

enum class SolverChoice { Auto, Constructive, Oracle };
const char* to_string(SolverChoice s);
std::optional<SolverChoice> solver_from_name(std::string_view name);

struct InstanceRecord {
  int index = 0;
  std::uint64_t seed = 0;
  RunOutcome outcome = RunOutcome::Error;
  std::string solver;        // "color_basic", "oracle", ...
  int vertices = 0;
  int crossings = 0;
  double seconds = 0;
  SearchStats stats;         // oracle runs only
  ValidityReport report;     // hypothesis failures when skipped
  std::string detail;
  std::string reproducer;    // file written for falsifications and errors
};

struct RunReport {
  std::string theorem;
  std::vector<InstanceRecord> instances;
  std::vector<int> falsifications;  // uncolorable although the hypotheses hold
  int count(RunOutcome o) const;
  /// {"instances": [...], "summary": {...}}
  std::string to_json(int indent = 2) const;
};

struct RunOptions {
  SolverChoice solver = SolverChoice::Auto;
  std::uint64_t node_limit = kDefaultNodeLimit;
  int workers = 1;
  std::string reproducer_dir;  // empty: write nothing
};

/// check -> solve -> verify on each instance. Constructive solvers exist for
/// thomassen, basic and one-crossing; everything else goes to the oracle.
RunReport run_instances(const std::vector<Instance>& instances, Theorem which, const RunOptions& opts = {},
                        const std::vector<std::uint64_t>& seeds = {});
/// Generates each spec first; a spec that fails to generate is an ERROR record.
RunReport run_experiment(const std::vector<GenSpec>& specs, Theorem which, const RunOptions& opts = {});

}  // namespace fivelist
