#ifndef GTS_VERIFIER_HPP
#define GTS_VERIFIER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gts/free_algebra.hpp"

namespace gts {

/// Deterministic cross-platform generator (splitmix64). Standard-library
/// distributions are implementation defined, so sampling goes through this.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

struct SamplerConfig {
  int nL = 10;
  int nR = 10;
  int k = 2;
  int richness = 4;  // max blades per sampled homogeneous element
  int trials = 500;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Random sum of at most `richness` distinct basis blades of the requested
/// bidegree with nonzero coefficients. Blade sizes are biased small so that
/// products of several samples stay nonzero often, which is what gives the
/// falsifier teeth. Deterministic given the generator state.
TensorElement sample_homogeneous(const Bidegree& d, const FieldConfig& cfg,
                                 const SamplerConfig& sc, SplitMix64& rng);

/// Same idea one factor down: a random multivector, optionally restricted to
/// zero scalar term or to a grading component.
Multivector sample_multivector(const FieldConfig& cfg, int n, int richness, SplitMix64& rng,
                               bool zero_scalar_term = false);

struct VerdictReport {
  std::string name;
  std::string poly;
  int p = 0;
  std::int64_t q = 0;
  int k = 0;
  int nL = 0, nR = 0;
  int trials_requested = 0;
  int trials_run = 0;
  std::uint64_t seed = 0;
  bool counterexample = false;
  std::optional<EvaluationMap> witness;
  std::string witness_value;

  std::string verdict() const { return counterexample ? "counterexample" : "no-counterexample"; }
};

/// Evaluates f on independently sampled graded substitutions; stops at the
/// first nonzero value. "no-counterexample" is evidence, not proof: the check
/// is sampled at a finite truncation. Per-trial seeds are derived from the
/// master seed by counter hashing, so trials are order independent.
VerdictReport check_identity(const GPolynomial& f, const SamplerConfig& sc,
                             const std::string& name = "");

/// The builtin corpus: the seven classical identity families, v^{pq} - v^p,
/// and the derived x^{p+1}, y^{p+1}, with schematic variables instantiated
/// over all four kinds.
std::vector<std::pair<std::string, GPolynomial>> corpus_builtin(const FieldConfig& cfg, int k);

/// Single-factor checks on the truncated Grassmann algebra: t^p on the
/// non-unital part, the scalar image of p-th powers, t^{pq} - t^p, and the
/// non-identity t^2 (expected counterexample).
std::vector<VerdictReport> check_grassmann_props(const FieldConfig& cfg, int n, int richness,
                                                 int trials, std::uint64_t seed);

}  // namespace gts

#endif
