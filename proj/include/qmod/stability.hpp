#pragma once

// King stability of explicit modules and theta-stable decompositions of
// components.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qmod/components.hpp"
#include "qmod/homalg.hpp"

namespace qmod {

long long weight_pairing(const Weight& theta, const DimVector& d);

// Oracle regime: exhaustive over submodules.
bool is_semistable(const Module& m, const Weight& theta);
bool is_stable(const Module& m, const Weight& theta);
bool is_semistable(const std::set<DimVector>& submodule_dims, const DimVector& d, const Weight& theta);
bool is_stable(const std::set<DimVector>& submodule_dims, const DimVector& d, const Weight& theta);

struct PolystableFactor {
  Module module;
  int multiplicity = 1;
};

// Jordan-Hoelder factors in the semistable category. Ties among minimal
// theta-zero submodules go to the lexicographically least dimension vector,
// or to a seeded random choice when `tie_break` is given.
std::vector<PolystableFactor> gr_theta(const Module& m, const Weight& theta,
                                       std::optional<std::uint64_t> tie_break = std::nullopt);
bool is_polystable(const std::vector<PolystableFactor>& factors, const Weight& theta);

// One-sided screen at any scale: checks submodules generated by, and largest
// submodules inside, the coordinate subspaces of vertex subsets. Returns a
// submodule violating semistability (or stability when `strict`).
std::optional<Submodule> find_destabilizer(const Module& m, const Weight& theta, bool strict);

struct StabilityOptions {
  int trials = 5;
  std::uint64_t seed = 0;
  std::uint32_t prime = kDefaultPrime;
  std::uint32_t oracle_prime = 5;
  int oracle_samples = 20;
};

struct StableFactor {
  int multiplicity = 1;
  DimVector dim;
  RankSequence ranks;
  bool orbit_closure = false;
  friend bool operator==(const StableFactor&, const StableFactor&) = default;
};

struct StableDecomposition {
  bool semistable = false;
  std::vector<StableFactor> factors;  // sorted by (dim, ranks)
  // "oracle" when every verdict came from exhaustive enumeration, "screen"
  // when some summand exceeded the oracle limits.
  std::string regime = "oracle";
  int trials = 0;
  int resamples = 0;
  bool ext1_certified = false;
};

// Shared memo of theta-independent work; safe to use from several threads.
class StabilityCache {
 public:
  explicit StabilityCache(StabilityOptions options) : options_(options) {}
  const StabilityOptions& options() const noexcept { return options_; }

  const GenericDecomposition& decomposition(const Component& c);
  bool orbit_closure(const Component& c);

  struct Sample {
    std::optional<Module> module;  // absent when the field was too small
    std::set<DimVector> submodule_dims;
    std::size_t endomorphism_dim = 0;
  };
  // i-th oracle-regime specialization of a component.
  const Sample& oracle_sample(const Component& c, int i);
  const Module& screen_sample(const Component& c);

 private:
  struct SampleList {
    std::mutex mutex;
    std::vector<std::unique_ptr<Sample>> samples;
  };
  static std::string key(const Component& c);

  StabilityOptions options_;
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const GenericDecomposition>> decompositions_;
  std::map<std::string, bool> orbit_;
  std::map<std::string, std::shared_ptr<SampleList>> oracle_;
  std::map<std::string, std::shared_ptr<const Module>> screen_;
};

struct SummandVerdict {
  bool semistable = false;
  bool stable = false;
  bool oracle = true;
  // Jordan-Hoelder factors (dim, ranks, multiplicity) when strictly semistable.
  std::vector<StableFactor> refinement;
};

SummandVerdict summand_verdict(const Component& summand, const Weight& theta, StabilityCache& cache);

// Throws NotSemistable when the generic module of c is not theta-semistable.
StableDecomposition stable_decomposition(const Component& c, const Weight& theta, StabilityCache& cache);
StableDecomposition stable_decomposition(const Component& c, const Weight& theta, const StabilityOptions& options);

bool is_theta_semistable_dimvec(AlgebraPtr algebra, const DimVector& d, const Weight& theta, std::uint64_t seed);

}  // namespace qmod
