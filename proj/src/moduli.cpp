#include "qmod/moduli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "qmod/error.hpp"

namespace qmod {

std::string to_string(Base b) {
  switch (b) {
    case Base::Point: return "Point";
    case Base::ProjLine: return "ProjLine";
    case Base::RationalCurve: return "RationalCurve";
  }
  return "?";
}

int ModuliShape::dimension() const {
  int n = 0;
  for (int m : normalized) n += m;
  return n;
}

std::string ModuliShape::to_string() const {
  if (empty) return "Empty";
  if (normalized.empty()) return "Point";
  std::string s;
  for (int m : normalized) {
    if (!s.empty()) s += " x ";
    s += "P^" + std::to_string(m);
  }
  return s;
}

Base classify_stable_component(const Component& c, const Weight& theta, StabilityCache& cache) {
  const SummandVerdict v = summand_verdict(c, theta, cache);
  if (!v.stable) throw Error(ErrorCode::NotStable, "component " + to_string(c.dim) + " is not theta-stable");
  if (cache.orbit_closure(c)) return Base::Point;
  return c.algebra->classification().gentle ? Base::ProjLine : Base::RationalCurve;
}

ModuliShape compose_moduli(const StableDecomposition& decomposition, const Algebra& algebra) {
  ModuliShape shape;
  if (!decomposition.semistable) {
    shape.empty = true;
    return shape;
  }
  const bool gentle = algebra.classification().gentle;
  for (const StableFactor& f : decomposition.factors) {
    // Orbit closures contribute a point whatever their multiplicity.
    if (f.orbit_closure) continue;
    ShapeFactor sf;
    sf.base = gentle ? Base::ProjLine : Base::RationalCurve;
    sf.power = f.multiplicity;
    sf.conjectural = !gentle;
    shape.conjectural = shape.conjectural || sf.conjectural;
    shape.factors.push_back(sf);
    // S^m(P^1) = P^m.
    shape.normalized.push_back(f.multiplicity);
  }
  std::sort(shape.normalized.rbegin(), shape.normalized.rend());
  return shape;
}

ModuliReport moduli_shape(AlgebraPtr algebra, const DimVector& d, const Weight& theta,
                          const StabilityOptions& options, int threads) {
  StabilityCache cache(options);
  return moduli_shape(std::move(algebra), d, theta, cache, threads);
}

ModuliReport moduli_shape(AlgebraPtr algebra, const DimVector& d, const Weight& theta, StabilityCache& cache,
                          int threads) {
  const Algebra& alg = *algebra;
  alg.require_disjoint_chain();
  if (theta.size() != alg.vertex_count()) throw Error(ErrorCode::InvalidArgument, "weight has wrong length");
  ModuliReport report{algebra, d, theta, cache.options(), {}};
  for (Component& c : enumerate_components(algebra, d)) {
    ComponentReport r;
    r.component = std::move(c);
    report.components.push_back(std::move(r));
  }
  auto work = [&](ComponentReport& r) {
    const Component& c = r.component;
    r.dimension = component_dimension(c);
    r.gl_dimension = gl_dimension(c.dim);
    if (alg.classification().gentle) r.string_defect = string_defect(c);
    r.assumptions = {"component is normal", "moduli of the non-orbit part is a component of the ambient moduli"};
    if (pairing(theta, d) != 0) {
      r.shape.empty = true;
      return;
    }
    try {
      r.decomposition = stable_decomposition(c, theta, cache);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotSemistable) throw;
      r.shape.empty = true;
      return;
    }
    r.shape = compose_moduli(*r.decomposition, alg);
    if (r.shape.conjectural) r.assumptions.push_back("rational curve factors are projective lines");
  };
  const std::size_t n = report.components.size();
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), n);
  if (workers <= 1) {
    for (ComponentReport& r : report.components) work(r);
    return report;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          work(report.components[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (std::thread& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return report;
}

}  // namespace qmod
