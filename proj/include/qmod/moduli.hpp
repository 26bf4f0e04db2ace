#pragma once

// Moduli spaces of theta-semistable components as products of symmetric
// powers of points and projective lines.

#include <optional>
#include <string>
#include <vector>

#include "qmod/stability.hpp"

namespace qmod {

enum class Base { Point, ProjLine, RationalCurve };
std::string to_string(Base b);

struct ShapeFactor {
  Base base = Base::Point;
  int power = 1;
  // Rational curve reported as a projective line without proof.
  bool conjectural = false;
};

struct ModuliShape {
  bool empty = false;
  std::vector<ShapeFactor> factors;
  // Dimensions m_i of the projective spaces in the normalized product,
  // sorted descending; empty means a point.
  std::vector<int> normalized;
  bool conjectural = false;

  bool is_point() const { return !empty && normalized.empty(); }
  int dimension() const;
  std::string to_string() const;
};

// Throws NotStable unless the generic module of c is theta-stable.
Base classify_stable_component(const Component& c, const Weight& theta, StabilityCache& cache);

ModuliShape compose_moduli(const StableDecomposition& decomposition, const Algebra& algebra);

struct ComponentReport {
  Component component;
  long long dimension = 0;
  long long gl_dimension = 0;
  std::optional<long long> string_defect;
  std::optional<StableDecomposition> decomposition;  // absent when not semistable
  ModuliShape shape;
  std::vector<std::string> assumptions;
};

struct ModuliReport {
  AlgebraPtr algebra;
  DimVector dim;
  Weight theta;
  StabilityOptions options;
  std::vector<ComponentReport> components;
};

ModuliReport moduli_shape(AlgebraPtr algebra, const DimVector& d, const Weight& theta,
                          const StabilityOptions& options, int threads = 1);
// Variant sharing theta-independent work across calls.
ModuliReport moduli_shape(AlgebraPtr algebra, const DimVector& d, const Weight& theta, StabilityCache& cache,
                          int threads = 1);

}  // namespace qmod
