#pragma once

#include <memory>
#include <vector>

#include "qmod/algebra.hpp"
#include "qmod/linalg.hpp"

namespace qmod {

using AlgebraPtr = std::shared_ptr<const Algebra>;

// A point of mod(A, d) over F_p: one d(ha) x d(ta) matrix per arrow, with
// every relation product M(second) * M(first) equal to zero.
class Module {
 public:
  Module(AlgebraPtr algebra, Field field, DimVector dim, std::vector<Matrix> maps);

  static Module zero(AlgebraPtr algebra, Field field);

  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const Algebra& algebra() const noexcept { return *algebra_; }
  const Field& field() const noexcept { return field_; }
  const DimVector& dim() const noexcept { return dim_; }
  std::size_t dim(std::size_t vertex) const { return static_cast<std::size_t>(dim_[vertex]); }
  long long total_dim() const { return dim_.total(); }
  const Matrix& map(std::size_t arrow) const { return maps_[arrow]; }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }

  std::vector<std::size_t> ranks() const;
  RankSequence rank_sequence() const;

 private:
  AlgebraPtr algebra_;
  Field field_;
  DimVector dim_;
  std::vector<Matrix> maps_;
};

// Vertex-indexed subspaces, each given by a column basis.
struct Submodule {
  std::vector<Matrix> basis;

  DimVector dim() const;
};

// One matrix per vertex, phi(x): M(x) -> N(x).
using Morphism = std::vector<Matrix>;

}  // namespace qmod
