#include "qmod/components.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "qmod/error.hpp"
#include "qmod/homalg.hpp"
#include "qmod/rng.hpp"

namespace qmod {

namespace {

int rank_cap(const Quiver& q, const DimVector& d, std::size_t a) {
  return std::min(d[q.arrow(a).tail], d[q.arrow(a).head]);
}

void check_dims(const Algebra& alg, const DimVector& d) {
  if (d.size() != alg.vertex_count()) throw Error(ErrorCode::InvalidArgument, "dimension vector has wrong length");
  for (int v : d.values())
    if (v < 0) throw Error(ErrorCode::InvalidArgument, "negative dimension");
}

// Maximal sequences for one chain a_1..a_k: r_i <= u_i and
// r_i + r_{i+1} <= d(h a_i).
std::vector<std::vector<int>> chain_maxima(const Algebra& alg, const DimVector& d,
                                           const std::vector<std::size_t>& chain) {
  const Quiver& q = alg.quiver();
  const std::size_t k = chain.size();
  std::vector<int> u(k), cap(k > 0 ? k - 1 : 0);
  for (std::size_t i = 0; i < k; ++i) u[i] = rank_cap(q, d, chain[i]);
  for (std::size_t i = 0; i + 1 < k; ++i) cap[i] = d[q.arrow(chain[i]).head];
  auto saturated = [&](const std::vector<int>& r, std::size_t i) {
    if (r[i] == u[i]) return true;
    if (i > 0 && r[i - 1] + r[i] == cap[i - 1]) return true;
    if (i + 1 < k && r[i] + r[i + 1] == cap[i]) return true;
    return false;
  };
  std::vector<std::vector<int>> out;
  std::vector<int> r(k, 0);
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    if (i == k) {
      if (k == 0 || saturated(r, k - 1)) out.push_back(r);
      return;
    }
    int hi = u[i];
    if (i > 0) hi = std::min(hi, cap[i - 1] - r[i - 1]);
    for (int v = 0; v <= hi; ++v) {
      r[i] = v;
      // Once r_i is fixed, coordinate i - 1 can no longer change.
      if (i > 0 && !saturated(r, i - 1)) continue;
      dfs(i + 1);
    }
    r[i] = 0;
  };
  dfs(0);
  return out;
}

}  // namespace

bool is_valid_rank_sequence(const Algebra& alg, const DimVector& d, const RankSequence& r) {
  const Quiver& q = alg.quiver();
  if (r.size() != q.arrow_count() || d.size() != q.vertex_count()) return false;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    if (r[a] < 0 || r[a] > rank_cap(q, d, a)) return false;
  for (const Relation& rel : alg.relations())
    if (r[rel.first] + r[rel.second] > d[q.arrow(rel.first).head]) return false;
  return true;
}

bool is_maximal_rank_sequence(const Algebra& alg, const DimVector& d, const RankSequence& r) {
  if (!is_valid_rank_sequence(alg, d, r)) return false;
  for (std::size_t a = 0; a < r.size(); ++a) {
    RankSequence s = r;
    ++s[a];
    if (is_valid_rank_sequence(alg, d, s)) return false;
  }
  return true;
}

std::vector<RankSequence> maximal_rank_sequences(const Algebra& alg, const DimVector& d) {
  alg.require_disjoint_chain();
  check_dims(alg, d);
  const Quiver& q = alg.quiver();
  RankSequence base(q.arrow_count());
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    if (!alg.chain_of(a)) base[a] = rank_cap(q, d, a);
  std::vector<RankSequence> result{base};
  for (const auto& chain : alg.chains()) {
    const auto maxima = chain_maxima(alg, d, chain);
    std::vector<RankSequence> next;
    for (const RankSequence& partial : result)
      for (const auto& m : maxima) {
        RankSequence r = partial;
        for (std::size_t i = 0; i < chain.size(); ++i) r[chain[i]] = m[i];
        next.push_back(std::move(r));
      }
    result = std::move(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Component> enumerate_components(AlgebraPtr algebra, const DimVector& d) {
  std::vector<Component> out;
  for (RankSequence& r : maximal_rank_sequences(*algebra, d)) out.push_back(Component{algebra, d, std::move(r)});
  return out;
}

long long component_dimension(const Component& c) {
  const Algebra& alg = *c.algebra;
  alg.require_disjoint_chain();
  if (!is_valid_rank_sequence(alg, c.dim, c.ranks))
    throw Error(ErrorCode::InconsistentRanks, "rank sequence " + to_string(c.ranks) + " is not valid for " +
                                                  to_string(c.dim));
  const Quiver& q = alg.quiver();
  long long total = 0;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const long long t = c.dim[q.arrow(a).tail], h = c.dim[q.arrow(a).head];
    if (!alg.chain_of(a)) {
      total += t * h;
    } else {
      const long long r = c.ranks[a];
      total += r * (t + h - r);
    }
  }
  for (const auto& chain : alg.chains())
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      total -= static_cast<long long>(c.ranks[chain[i]]) * c.ranks[chain[i + 1]];
  return total;
}

long long tangent_space_dimension(const Module& m) {
  const Algebra& alg = m.algebra();
  const Quiver& q = alg.quiver();
  const Field& f = m.field();
  std::vector<std::size_t> offset(q.arrow_count() + 1, 0);
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    offset[a + 1] = offset[a] + m.dim(q.arrow(a).head) * m.dim(q.arrow(a).tail);
  std::size_t rows = 0;
  for (const Relation& rel : alg.relations()) rows += m.dim(q.arrow(rel.second).head) * m.dim(q.arrow(rel.first).tail);
  Matrix sys(rows, offset.back());
  std::size_t row = 0;
  for (const Relation& rel : alg.relations()) {
    // X_s M_f + M_s X_f = 0, entry (i, k).
    const Matrix& mf = m.map(rel.first);
    const Matrix& ms = m.map(rel.second);
    const std::size_t hs = m.dim(q.arrow(rel.second).head), mid = m.dim(q.arrow(rel.first).head),
                      tf = m.dim(q.arrow(rel.first).tail);
    for (std::size_t i = 0; i < hs; ++i)
      for (std::size_t k = 0; k < tf; ++k, ++row)
        for (std::size_t j = 0; j < mid; ++j) {
          Elem& xs = sys(row, offset[rel.second] + i * mid + j);
          xs = f.add(xs, mf(j, k));
          Elem& xf = sys(row, offset[rel.first] + j * tf + k);
          xf = f.add(xf, ms(i, j));
        }
  }
  return static_cast<long long>(offset.back()) - static_cast<long long>(rank(f, sys));
}

long long string_defect(const Component& c) {
  if (!c.algebra->classification().gentle)
    throw Error(ErrorCode::UnsupportedClass, "string defect requires a gentle algebra");
  return c.dim.total() - c.ranks.total();
}

bool is_regular(const Component& c) { return string_defect(c) == 0; }

Module generic_module(const Component& c, Field field, std::uint64_t seed) {
  const Algebra& alg = *c.algebra;
  alg.require_disjoint_chain();
  if (!is_valid_rank_sequence(alg, c.dim, c.ranks))
    throw Error(ErrorCode::InconsistentRanks, "rank sequence " + to_string(c.ranks) + " is not valid for " +
                                                  to_string(c.dim));
  const Quiver& q = alg.quiver();
  Rng rng(seed);
  auto dim = [&](std::size_t x) { return static_cast<std::size_t>(c.dim[x]); };
  // Random matrix of the given rank whose rows lie in the row space of
  // `domain` (a matrix with dim(tail) columns).
  auto sample = [&](std::size_t a, const Matrix& domain) {
    const std::size_t r = static_cast<std::size_t>(c.ranks[a]);
    const std::size_t h = dim(q.arrow(a).head);
    for (int attempt = 0; attempt < 100; ++attempt) {
      Matrix x = multiply(field, multiply(field, random_matrix(field, h, r, rng),
                                          random_matrix(field, r, domain.rows(), rng)),
                          domain);
      if (rank(field, x) == r) return x;
    }
    throw Error(ErrorCode::FieldTooSmall, "could not realize rank " + std::to_string(r) + " on arrow '" +
                                              q.arrow(a).id + "' over F_" + std::to_string(field.prime()));
  };
  std::vector<Matrix> maps(q.arrow_count());
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    if (!alg.chain_of(a)) maps[a] = sample(a, Matrix::identity(dim(q.arrow(a).tail)));
  for (const auto& chain : alg.chains()) {
    Matrix domain = Matrix::identity(dim(q.arrow(chain.front()).tail));
    for (std::size_t i = 0; i < chain.size(); ++i) {
      maps[chain[i]] = sample(chain[i], domain);
      // The next map must vanish on the image of this one.
      domain = kernel(field, maps[chain[i]].transposed()).transposed();
    }
  }
  return Module(c.algebra, field, c.dim, std::move(maps));
}

namespace {

using ProfileKey = std::pair<DimVector, RankSequence>;

}  // namespace

GenericDecomposition generic_decomposition(const Component& c, int trials, std::uint64_t seed, std::uint32_t prime) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "at least one trial is required");
  const Field field(prime);
  const std::string tag = to_string(c.dim) + to_string(c.ranks);
  GenericDecomposition result;
  result.trials = trials;
  struct Trial {
    int attempt = 0;
    std::size_t endo = 0;
    std::map<ProfileKey, GenericSummand> profile;
  };
  // Draws the next sample of trial t that splits over F_p.
  auto draw = [&](int t, Trial& trial) {
    const std::uint64_t trial_seed = derive_seed(seed, tag + "/trial" + std::to_string(t));
    while (true) {
      if (trial.attempt == 200)
        throw Error(ErrorCode::SplitFailure, "no generic sample of " + tag + " over F_" + std::to_string(prime));
      const std::uint64_t s = derive_seed(trial_seed, std::to_string(trial.attempt++));
      const Module m = generic_module(c, field, s);
      std::vector<Summand> parts = decompose(m, derive_seed(s, "decompose"));
      if (!std::all_of(parts.begin(), parts.end(), [](const Summand& x) { return x.absolutely_indecomposable; })) {
        ++result.resamples;
        continue;
      }
      trial.endo = hom_dim(m, m);
      trial.profile.clear();
      for (Summand& x : parts) {
        ProfileKey key{x.module.dim(), x.module.rank_sequence()};
        GenericSummand& g = trial.profile[key];
        g.dim = key.first;
        g.ranks = key.second;
        g.multiplicity += x.multiplicity;
        g.representatives.push_back(std::move(x.module));
      }
      return;
    }
  };
  std::vector<Trial> runs(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) draw(t, runs[static_cast<std::size_t>(t)]);
  // dim End is upper semicontinuous: a sample above the minimum is special.
  while (true) {
    std::size_t least = SIZE_MAX;
    for (const Trial& r : runs) least = std::min(least, r.endo);
    bool redrawn = false;
    for (int t = 0; t < trials; ++t)
      if (runs[static_cast<std::size_t>(t)].endo > least) {
        draw(t, runs[static_cast<std::size_t>(t)]);
        ++result.resamples;
        redrawn = true;
      }
    if (!redrawn) break;
  }
  const std::map<ProfileKey, GenericSummand>& reference = runs.front().profile;
  for (const Trial& r : runs) {
    bool same = r.profile.size() == reference.size();
    for (auto it = r.profile.begin(), jt = reference.begin(); same && it != r.profile.end(); ++it, ++jt)
      same = it->first == jt->first && it->second.multiplicity == jt->second.multiplicity;
    if (!same)
      throw Error(ErrorCode::Inconsistent, "generic decomposition of " + tag + " differs between trials");
  }
  for (auto& [key, g] : runs.front().profile) result.summands.push_back(std::move(g));
  result.ext1_certified = true;
  for (std::size_t i = 0; i < result.summands.size() && result.ext1_certified; ++i)
    for (std::size_t j = 0; j < result.summands.size() && result.ext1_certified; ++j) {
      if (i == j && result.summands[i].multiplicity < 2) continue;
      const Component ci{c.algebra, result.summands[i].dim, result.summands[i].ranks};
      const Component cj{c.algebra, result.summands[j].dim, result.summands[j].ranks};
      result.ext1_certified = ext1_generic(ci, cj, trials, derive_seed(seed, tag + "/ext"), prime) == 0;
    }
  return result;
}

std::size_t ext1_generic(const Component& c, const Component& d, int trials, std::uint64_t seed, std::uint32_t prime) {
  const Field field(prime);
  std::size_t best = SIZE_MAX;
  const std::string tag = to_string(c.dim) + to_string(c.ranks) + "|" + to_string(d.dim) + to_string(d.ranks);
  for (int t = 0; t < std::max(trials, 1) && best > 0; ++t) {
    const std::uint64_t s = derive_seed(seed, tag + "/" + std::to_string(t));
    const Module x = generic_module(c, field, derive_seed(s, "left"));
    const Module y = generic_module(d, field, derive_seed(s, "right"));
    best = std::min(best, ext1_dim(x, y));
  }
  return best;
}

}  // namespace qmod
