#pragma once

// Exact homological algebra on explicit modules over F_p: projectives and
// syzygies, Hom and Ext, Krull-Schmidt decomposition, isomorphism tests and
// exhaustive submodule enumeration at oracle scale.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "qmod/module.hpp"
#include "qmod/rng.hpp"

namespace qmod {

Module simple_module(AlgebraPtr algebra, Field field, std::size_t vertex);
// Basis: paths starting at `vertex` containing no relation; arrows act by
// path extension.
Module projective(AlgebraPtr algebra, Field field, std::size_t vertex);

Module direct_sum(const Module& m, const Module& n);
Module direct_sum(const std::vector<Module>& parts, AlgebraPtr algebra, Field field);
// (g . M)(a) = g(ha) M(a) g(ta)^{-1}.
Module base_change(const Module& m, const std::vector<Matrix>& g);
std::vector<Matrix> random_base_change(const Module& m, Rng& rng);

bool is_submodule(const Module& m, const Submodule& u);
Module restrict_to(const Module& m, const Submodule& u);
Module quotient(const Module& m, const Submodule& u);
// Smallest submodule containing the given per-vertex vectors.
Submodule generated_submodule(const Module& m, std::vector<Matrix> generators);
Submodule zero_submodule(const Module& m);
Submodule whole_module(const Module& m);

// Per-vertex dimension of top(M) = M / rad(M).
DimVector top_dimension(const Module& m);

struct Syzygy {
  Module cover;             // P_0
  Module kernel;            // Omega(M)
  Morphism inclusion;       // Omega -> P_0
  Morphism cover_map;       // P_0 -> M
  DimVector top;            // P_0 = sum over x of P_x^{top(x)}
};

Syzygy syzygy(const Module& m);
std::size_t projective_dimension(const Module& m);

std::vector<Morphism> hom_space(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);
std::size_t ext_dim(std::size_t degree, const Module& m, const Module& n);
inline std::size_t ext1_dim(const Module& m, const Module& n) { return ext_dim(1, m, n); }
// Sum over l of (-1)^l dim Ext^l(M, N).
long long ext_euler_characteristic(const Module& m, const Module& n);

// Uniformly random element of the span of a nonempty basis.
Morphism random_combination(const Field& f, const std::vector<Morphism>& basis, Rng& rng);
bool is_morphism(const Module& m, const Module& n, const Morphism& phi);
// Isomorphism certificate: Hom dimensions agree, then an invertible
// intertwiner is searched for among random elements of Hom(M, N).
bool isomorphic(const Module& m, const Module& n, Rng& rng);

struct Summand {
  Module module;
  int multiplicity = 1;
  // False when End(M)/rad is a proper extension of F_p, so the summand splits
  // further over the algebraic closure.
  bool absolutely_indecomposable = true;
};

// Krull-Schmidt decomposition into pairwise non-isomorphic indecomposables.
std::vector<Summand> decompose(const Module& m, std::uint64_t seed);

// Exhaustive enumeration (p in {2,3,5}, total dimension <= 8).
inline constexpr long long kOracleMaxDimension = 8;
void require_oracle_scale(const Module& m);
void for_each_submodule(const Module& m, const std::function<void(const Submodule&)>& visit);
std::set<DimVector> submodule_dimension_vectors(const Module& m);

// Dimension vectors of arrow-closed subsets of the standard basis, for
// modules whose matrices have at most one nonzero entry per row and column.
bool is_canonical_form(const Module& m);
std::set<DimVector> coordinate_submodule_dimension_vectors(const Module& m);

}  // namespace qmod
