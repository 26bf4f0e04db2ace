#include "qmod/stability.hpp"

#include <algorithm>
#include <tuple>

#include "qmod/error.hpp"
#include "qmod/rng.hpp"

namespace qmod {

long long weight_pairing(const Weight& theta, const DimVector& d) { return pairing(theta, d); }

bool is_semistable(const std::set<DimVector>& subs, const DimVector& d, const Weight& theta) {
  if (pairing(theta, d) != 0) return false;
  return std::all_of(subs.begin(), subs.end(), [&](const DimVector& u) { return pairing(theta, u) <= 0; });
}

bool is_stable(const std::set<DimVector>& subs, const DimVector& d, const Weight& theta) {
  if (d.is_zero() || pairing(theta, d) != 0) return false;
  return std::all_of(subs.begin(), subs.end(),
                     [&](const DimVector& u) { return u.is_zero() || u == d || pairing(theta, u) < 0; });
}

bool is_semistable(const Module& m, const Weight& theta) {
  return is_semistable(submodule_dimension_vectors(m), m.dim(), theta);
}

bool is_stable(const Module& m, const Weight& theta) {
  // A proper submodule can share the full dimension vector only if it is M.
  return is_stable(submodule_dimension_vectors(m), m.dim(), theta);
}

std::vector<PolystableFactor> gr_theta(const Module& m, const Weight& theta, std::optional<std::uint64_t> tie_break) {
  if (!is_semistable(m, theta)) throw Error(ErrorCode::NotSemistable, "gr requires a semistable module");
  Rng rng(tie_break.value_or(0));
  std::vector<Module> factors;
  Module current = m;
  while (current.total_dim() > 0) {
    long long best = current.total_dim() + 1;
    std::vector<Submodule> candidates;
    for_each_submodule(current, [&](const Submodule& u) {
      const DimVector d = u.dim();
      if (d.is_zero() || pairing(theta, d) != 0) return;
      if (d.total() < best) {
        best = d.total();
        candidates.clear();
      }
      if (d.total() == best) candidates.push_back(u);
    });
    std::size_t pick = 0;
    if (tie_break) {
      pick = static_cast<std::size_t>(rng.below(candidates.size()));
    } else {
      for (std::size_t i = 1; i < candidates.size(); ++i)
        if (candidates[i].dim() < candidates[pick].dim()) pick = i;
    }
    factors.push_back(restrict_to(current, candidates[pick]));
    current = quotient(current, candidates[pick]);
  }
  std::vector<PolystableFactor> out;
  for (Module& f : factors) {
    auto it = std::find_if(out.begin(), out.end(), [&](const PolystableFactor& p) {
      return p.module.dim() == f.dim() && isomorphic(p.module, f, rng);
    });
    if (it != out.end())
      ++it->multiplicity;
    else
      out.push_back({std::move(f), 1});
  }
  std::sort(out.begin(), out.end(), [](const PolystableFactor& a, const PolystableFactor& b) {
    return a.module.dim() < b.module.dim();
  });
  return out;
}

bool is_polystable(const std::vector<PolystableFactor>& factors, const Weight& theta) {
  return std::all_of(factors.begin(), factors.end(),
                     [&](const PolystableFactor& f) { return is_stable(f.module, theta); });
}

std::optional<Submodule> find_destabilizer(const Module& m, const Weight& theta, bool strict) {
  const Quiver& q = m.algebra().quiver();
  const Field& f = m.field();
  const std::size_t n = q.vertex_count();
  if (n > 20) throw Error(ErrorCode::InvalidArgument, "screen supports at most 20 vertices");
  const auto& topo = q.topological_order();
  auto violates = [&](const Submodule& u) {
    const DimVector d = u.dim();
    if (d.is_zero()) return false;
    const long long v = pairing(theta, d);
    if (strict) return d != m.dim() && v >= 0;
    return v > 0;
  };
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Matrix> generators;
    Submodule inside;
    for (std::size_t x = 0; x < n; ++x) {
      const bool in = (mask >> x) & 1u;
      generators.push_back(in ? Matrix::identity(m.dim(x)) : empty_basis(m.dim(x)));
      inside.basis.push_back(generators.back());
    }
    Submodule generated = generated_submodule(m, std::move(generators));
    if (violates(generated)) return generated;
    for (auto it = topo.rbegin(); it != topo.rend(); ++it)
      for (std::size_t a : q.arrows_from(*it)) {
        const Matrix pre = preimage(f, m.map(a), inside.basis[q.arrow(a).head]);
        inside.basis[*it] = subspace_intersection(f, inside.basis[*it], pre);
      }
    if (violates(inside)) return inside;
  }
  return std::nullopt;
}

std::string StabilityCache::key(const Component& c) { return to_string(c.dim) + to_string(c.ranks); }

const GenericDecomposition& StabilityCache::decomposition(const Component& c) {
  const std::string k = key(c);
  {
    std::lock_guard lock(mutex_);
    if (auto it = decompositions_.find(k); it != decompositions_.end()) return *it->second;
  }
  auto value = std::make_shared<const GenericDecomposition>(
      generic_decomposition(c, options_.trials, derive_seed(options_.seed, "decomposition/" + k), options_.prime));
  std::lock_guard lock(mutex_);
  return *decompositions_.emplace(k, std::move(value)).first->second;
}

bool StabilityCache::orbit_closure(const Component& c) {
  const std::string k = key(c);
  {
    std::lock_guard lock(mutex_);
    if (auto it = orbit_.find(k); it != orbit_.end()) return it->second;
  }
  const Field field(options_.prime);
  const std::uint64_t s = derive_seed(options_.seed, "orbit/" + k);
  Rng rng(s);
  const bool value = isomorphic(generic_module(c, field, derive_seed(s, "first")),
                                generic_module(c, field, derive_seed(s, "second")), rng);
  std::lock_guard lock(mutex_);
  return orbit_.emplace(k, value).first->second;
}

const StabilityCache::Sample& StabilityCache::oracle_sample(const Component& c, int i) {
  const std::string k = key(c);
  std::shared_ptr<SampleList> list;
  {
    std::lock_guard lock(mutex_);
    auto& slot = oracle_[k];
    if (!slot) slot = std::make_shared<SampleList>();
    list = slot;
  }
  std::lock_guard lock(list->mutex);
  while (static_cast<int>(list->samples.size()) <= i) {
    const std::size_t idx = list->samples.size();
    auto sample = std::make_unique<Sample>();
    try {
      sample->module = generic_module(c, Field(options_.oracle_prime),
                                      derive_seed(options_.seed, "oracle/" + k + "/" + std::to_string(idx)));
      sample->submodule_dims = submodule_dimension_vectors(*sample->module);
      sample->endomorphism_dim = hom_dim(*sample->module, *sample->module);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::FieldTooSmall) throw;
      sample->module.reset();
    }
    list->samples.push_back(std::move(sample));
  }
  return *list->samples[static_cast<std::size_t>(i)];
}

const Module& StabilityCache::screen_sample(const Component& c) {
  const std::string k = key(c);
  {
    std::lock_guard lock(mutex_);
    if (auto it = screen_.find(k); it != screen_.end()) return *it->second;
  }
  auto value = std::make_shared<const Module>(
      generic_module(c, Field(options_.prime), derive_seed(options_.seed, "screen/" + k)));
  std::lock_guard lock(mutex_);
  return *screen_.emplace(k, std::move(value)).first->second;
}

namespace {

using FactorKey = std::pair<DimVector, RankSequence>;

std::vector<StableFactor> to_factors(const std::map<FactorKey, int>& counts) {
  std::vector<StableFactor> out;
  for (const auto& [key, mult] : counts) out.push_back(StableFactor{mult, key.first, key.second, false});
  return out;
}

long long factor_count(const std::vector<StableFactor>& fs) {
  long long n = 0;
  for (const auto& f : fs) n += f.multiplicity;
  return n;
}

bool coarser(const std::vector<StableFactor>& a, const std::vector<StableFactor>& b) {
  if (factor_count(a) != factor_count(b)) return factor_count(a) < factor_count(b);
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const StableFactor& x, const StableFactor& y) {
                                        return std::tie(x.dim, x.ranks, x.multiplicity) <
                                               std::tie(y.dim, y.ranks, y.multiplicity);
                                      });
}

}  // namespace

SummandVerdict summand_verdict(const Component& summand, const Weight& theta, StabilityCache& cache) {
  SummandVerdict v;
  if (pairing(theta, summand.dim) != 0) return v;
  const StabilityOptions& opt = cache.options();
  const std::uint32_t op = opt.oracle_prime;
  if (summand.dim.total() <= kOracleMaxDimension && (op == 2 || op == 3 || op == 5)) {
    // Both conditions are open, so one passing specialization certifies the
    // generic module. Stability over F_p is geometric only for Schur modules.
    std::vector<int> semistable;
    for (int i = 0; i < opt.oracle_samples; ++i) {
      const auto& s = cache.oracle_sample(summand, i);
      if (!s.module) continue;
      if (s.endomorphism_dim == 1 && is_stable(s.submodule_dims, summand.dim, theta)) {
        v.semistable = v.stable = true;
        return v;
      }
      if (is_semistable(s.submodule_dims, summand.dim, theta)) semistable.push_back(i);
    }
    if (semistable.empty()) return v;
    v.semistable = true;
    std::optional<std::vector<StableFactor>> best;
    for (int i : semistable) {
      std::map<FactorKey, int> counts;
      bool absolute = true;
      for (const PolystableFactor& f : gr_theta(*cache.oracle_sample(summand, i).module, theta)) {
        counts[{f.module.dim(), f.module.rank_sequence()}] += f.multiplicity;
        absolute = absolute && hom_dim(f.module, f.module) == 1;
      }
      if (!absolute) continue;
      auto profile = to_factors(counts);
      if (!best || coarser(profile, *best)) best = std::move(profile);
    }
    if (!best)
      throw Error(ErrorCode::Inconsistent, "no specialization of " + to_string(summand.dim) +
                                               " has a split Jordan-Hoelder filtration over F_" + std::to_string(op));
    v.refinement = std::move(*best);
    return v;
  }
  v.oracle = false;
  const Module& m = cache.screen_sample(summand);
  if (find_destabilizer(m, theta, false)) return v;
  v.semistable = true;
  v.stable = !find_destabilizer(m, theta, true);
  if (!v.stable) v.refinement = {StableFactor{1, summand.dim, summand.ranks, false}};
  return v;
}

StableDecomposition stable_decomposition(const Component& c, const Weight& theta, StabilityCache& cache) {
  if (pairing(theta, c.dim) != 0)
    throw Error(ErrorCode::NotSemistable, "theta does not vanish on " + to_string(c.dim));
  StableDecomposition out;
  out.trials = cache.options().trials;
  if (c.dim.is_zero()) {
    out.semistable = true;
    out.ext1_certified = true;
    return out;
  }
  const GenericDecomposition& g = cache.decomposition(c);
  out.resamples = g.resamples;
  out.ext1_certified = g.ext1_certified;
  std::map<FactorKey, int> counts;
  for (const GenericSummand& s : g.summands) {
    const Component sc{c.algebra, s.dim, s.ranks};
    const SummandVerdict v = summand_verdict(sc, theta, cache);
    if (!v.semistable)
      throw Error(ErrorCode::NotSemistable, "generic summand " + to_string(s.dim) + " is not theta-semistable");
    if (!v.oracle) out.regime = "screen";
    if (v.stable)
      counts[{s.dim, s.ranks}] += s.multiplicity;
    else
      for (const StableFactor& f : v.refinement) counts[{f.dim, f.ranks}] += f.multiplicity * s.multiplicity;
  }
  out.semistable = true;
  out.factors = to_factors(counts);
  DimVector total(c.dim.size());
  for (StableFactor& f : out.factors) {
    f.orbit_closure = cache.orbit_closure(Component{c.algebra, f.dim, f.ranks});
    total += f.multiplicity * f.dim;
    if (pairing(theta, f.dim) != 0) throw Error(ErrorCode::Inconsistent, "stable factor with nonzero pairing");
  }
  if (total != c.dim) throw Error(ErrorCode::Inconsistent, "stable factors do not add up to " + to_string(c.dim));
  return out;
}

StableDecomposition stable_decomposition(const Component& c, const Weight& theta, const StabilityOptions& options) {
  StabilityCache cache(options);
  return stable_decomposition(c, theta, cache);
}

bool is_theta_semistable_dimvec(AlgebraPtr algebra, const DimVector& d, const Weight& theta, std::uint64_t seed) {
  if (pairing(theta, d) != 0) return false;
  StabilityOptions opt;
  opt.seed = seed;
  StabilityCache cache(opt);
  for (const Component& c : enumerate_components(algebra, d)) {
    try {
      stable_decomposition(c, theta, cache);
      return true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotSemistable) throw;
    }
  }
  return false;
}

}  // namespace qmod
