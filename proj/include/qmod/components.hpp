#pragma once

// Irreducible components of module varieties of disjoint-chain algebras,
// parameterized by maximal rank sequences.

#include <cstdint>
#include <vector>

#include "qmod/module.hpp"

namespace qmod {

inline constexpr std::uint32_t kDefaultPrime = 10007;

// The closure of the rank stratum {M in mod(A, d) : rank M(a) = r(a)}. For
// maximal r this is an irreducible component of mod(A, d).
struct Component {
  AlgebraPtr algebra;
  DimVector dim;
  RankSequence ranks;
};

bool is_valid_rank_sequence(const Algebra& algebra, const DimVector& d, const RankSequence& r);
// No single coordinate can be raised inside the valid region.
bool is_maximal_rank_sequence(const Algebra& algebra, const DimVector& d, const RankSequence& r);

// Sorted lexicographically by rank sequence.
std::vector<RankSequence> maximal_rank_sequences(const Algebra& algebra, const DimVector& d);
std::vector<Component> enumerate_components(AlgebraPtr algebra, const DimVector& d);

long long component_dimension(const Component& c);
// Dimension of the Zariski tangent space of mod(A, d) at M.
long long tangent_space_dimension(const Module& m);

// total(d) - sum of ranks; gentle algebras only.
long long string_defect(const Component& c);
bool is_regular(const Component& c);

Module generic_module(const Component& c, Field field, std::uint64_t seed);

struct GenericSummand {
  DimVector dim;
  RankSequence ranks;
  // Number of summands (counted with multiplicity) in this rank profile.
  int multiplicity = 0;
  // Summands of one sampled module, one per isomorphism class.
  std::vector<Module> representatives;
};

struct GenericDecomposition {
  std::vector<GenericSummand> summands;  // sorted by (dim, ranks)
  int trials = 0;
  int resamples = 0;  // samples rejected as non-split over F_p or non-generic
  bool ext1_certified = false;
};

// Throws Inconsistent when trials disagree.
GenericDecomposition generic_decomposition(const Component& c, int trials, std::uint64_t seed,
                                           std::uint32_t prime = kDefaultPrime);

// Minimum of dim Ext^1 over sampled generic pairs.
std::size_t ext1_generic(const Component& c, const Component& d, int trials, std::uint64_t seed,
                         std::uint32_t prime = kDefaultPrime);

}  // namespace qmod
