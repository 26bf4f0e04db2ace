#include "qmod/homalg.hpp"

#include <optional>

#include "qmod/error.hpp"

namespace qmod {

namespace {

// Paths from a fixed vertex containing no relation, as a tree: each path is
// its parent extended by one arrow.
struct PathTree {
  struct Node {
    std::size_t end;
    std::size_t local;  // index among paths ending at `end`
    std::optional<std::size_t> parent;
    std::size_t arrow = 0;
  };
  std::vector<Node> nodes;
  std::vector<std::size_t> count;  // paths ending at each vertex
};

PathTree path_tree(const Algebra& alg, std::size_t start) {
  const Quiver& q = alg.quiver();
  PathTree t;
  t.count.assign(q.vertex_count(), 0);
  t.nodes.push_back({start, t.count[start]++, std::nullopt, 0});
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const PathTree::Node node = t.nodes[i];
    for (std::size_t a : q.arrows_from(node.end)) {
      if (node.parent && alg.is_relation(node.arrow, a)) continue;
      const std::size_t y = q.arrow(a).head;
      t.nodes.push_back({y, t.count[y]++, i, a});
    }
  }
  return t;
}

void require_same(const Module& m, const Module& n) {
  if (!(m.field() == n.field())) throw Error(ErrorCode::FieldMismatch, "modules over different fields");
  if (m.algebra_ptr() != n.algebra_ptr() &&
      (m.algebra().name() != n.algebra().name() || m.algebra().arrow_count() != n.algebra().arrow_count() ||
       m.algebra().vertex_count() != n.algebra().vertex_count()))
    throw Error(ErrorCode::InvalidArgument, "modules over different algebras");
}

}  // namespace

Module simple_module(AlgebraPtr algebra, Field field, std::size_t vertex) {
  const Quiver& q = algebra->quiver();
  if (vertex >= q.vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  DimVector d(q.vertex_count());
  d[vertex] = 1;
  std::vector<Matrix> maps;
  for (const Arrow& a : q.arrows()) maps.emplace_back(d[a.head], d[a.tail]);
  return Module(std::move(algebra), field, std::move(d), std::move(maps));
}

Module projective(AlgebraPtr algebra, Field field, std::size_t vertex) {
  const Quiver& q = algebra->quiver();
  if (vertex >= q.vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  algebra->require_acyclic();
  const PathTree t = path_tree(*algebra, vertex);
  DimVector d(q.vertex_count());
  for (std::size_t x = 0; x < q.vertex_count(); ++x) d[x] = static_cast<int>(t.count[x]);
  std::vector<Matrix> maps;
  for (const Arrow& a : q.arrows()) maps.emplace_back(d[a.head], d[a.tail]);
  for (const PathTree::Node& node : t.nodes) {
    if (!node.parent) continue;
    const PathTree::Node& parent = t.nodes[*node.parent];
    maps[node.arrow](node.local, parent.local) = 1;
  }
  return Module(std::move(algebra), field, std::move(d), std::move(maps));
}

Module direct_sum(const Module& m, const Module& n) {
  require_same(m, n);
  const Quiver& q = m.algebra().quiver();
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Matrix& x = m.map(a);
    const Matrix& y = n.map(a);
    Matrix s(x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) s(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.rows(); ++i)
      for (std::size_t j = 0; j < y.cols(); ++j) s(x.rows() + i, x.cols() + j) = y(i, j);
    maps.push_back(std::move(s));
  }
  return Module(m.algebra_ptr(), m.field(), m.dim() + n.dim(), std::move(maps));
}

Module direct_sum(const std::vector<Module>& parts, AlgebraPtr algebra, Field field) {
  Module acc = Module::zero(std::move(algebra), field);
  for (const Module& p : parts) acc = direct_sum(acc, p);
  return acc;
}

Module base_change(const Module& m, const std::vector<Matrix>& g) {
  const Quiver& q = m.algebra().quiver();
  const Field& f = m.field();
  std::vector<Matrix> inv;
  for (const Matrix& gx : g) {
    auto i = inverse(f, gx);
    if (!i) throw Error(ErrorCode::InvalidArgument, "base change is not invertible");
    inv.push_back(std::move(*i));
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    maps.push_back(multiply(f, multiply(f, g[q.arrow(a).head], m.map(a)), inv[q.arrow(a).tail]));
  return Module(m.algebra_ptr(), f, m.dim(), std::move(maps));
}

std::vector<Matrix> random_base_change(const Module& m, Rng& rng) {
  std::vector<Matrix> g;
  for (std::size_t x = 0; x < m.dim().size(); ++x) {
    const std::size_t n = m.dim(x);
    Matrix gx;
    do {
      gx = random_matrix(m.field(), n, n, rng);
    } while (rank(m.field(), gx) != n);
    g.push_back(std::move(gx));
  }
  return g;
}

bool is_submodule(const Module& m, const Submodule& u) {
  const Quiver& q = m.algebra().quiver();
  if (u.basis.size() != q.vertex_count()) return false;
  for (std::size_t x = 0; x < q.vertex_count(); ++x)
    if (u.basis[x].rows() != m.dim(x) || rank(m.field(), u.basis[x]) != u.basis[x].cols()) return false;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    if (!contains(m.field(), u.basis[arrow.head], multiply(m.field(), m.map(a), u.basis[arrow.tail])))
      return false;
  }
  return true;
}

Module restrict_to(const Module& m, const Submodule& u) {
  if (!is_submodule(m, u)) throw Error(ErrorCode::NotSubmodule, "subspace is not arrow-stable");
  const Quiver& q = m.algebra().quiver();
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    const Matrix image = multiply(m.field(), m.map(a), u.basis[arrow.tail]);
    maps.push_back(*solve(m.field(), u.basis[arrow.head], image));
  }
  return Module(m.algebra_ptr(), m.field(), u.dim(), std::move(maps));
}

Module quotient(const Module& m, const Submodule& u) {
  if (!is_submodule(m, u)) throw Error(ErrorCode::NotSubmodule, "subspace is not arrow-stable");
  const Quiver& q = m.algebra().quiver();
  const Field& f = m.field();
  std::vector<Matrix> comp;
  DimVector d(q.vertex_count());
  for (std::size_t x = 0; x < q.vertex_count(); ++x) {
    comp.push_back(complement(f, u.basis[x], m.dim(x)));
    d[x] = static_cast<int>(comp.back().cols());
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    const Matrix full = hstack(u.basis[arrow.head], comp[arrow.head]);
    const Matrix coords = *solve(f, full, multiply(f, m.map(a), comp[arrow.tail]));
    maps.push_back(coords.rows_range(u.basis[arrow.head].cols(), coords.rows()));
  }
  return Module(m.algebra_ptr(), f, std::move(d), std::move(maps));
}

Submodule generated_submodule(const Module& m, std::vector<Matrix> generators) {
  const Algebra& alg = m.algebra();
  const Quiver& q = alg.quiver();
  alg.require_acyclic();
  const Field& f = m.field();
  Submodule u;
  u.basis.resize(q.vertex_count());
  for (std::size_t x : q.topological_order()) {
    Matrix span = generators[x].cols() ? generators[x] : empty_basis(m.dim(x));
    for (std::size_t a : q.arrows_into(x))
      span = hstack(span, multiply(f, m.map(a), u.basis[q.arrow(a).tail]));
    u.basis[x] = column_basis(f, span);
  }
  return u;
}

Submodule zero_submodule(const Module& m) {
  Submodule u;
  for (std::size_t x = 0; x < m.dim().size(); ++x) u.basis.push_back(empty_basis(m.dim(x)));
  return u;
}

Submodule whole_module(const Module& m) {
  Submodule u;
  for (std::size_t x = 0; x < m.dim().size(); ++x) u.basis.push_back(Matrix::identity(m.dim(x)));
  return u;
}

namespace {

std::vector<Matrix> top_generators(const Module& m) {
  const Quiver& q = m.algebra().quiver();
  std::vector<Matrix> gens;
  for (std::size_t x = 0; x < q.vertex_count(); ++x) {
    Matrix rad = empty_basis(m.dim(x));
    for (std::size_t a : q.arrows_into(x)) rad = hstack(rad, m.map(a));
    gens.push_back(complement(m.field(), column_basis(m.field(), rad), m.dim(x)));
  }
  return gens;
}

}  // namespace

DimVector top_dimension(const Module& m) {
  const std::vector<Matrix> gens = top_generators(m);
  DimVector d(gens.size());
  for (std::size_t x = 0; x < gens.size(); ++x) d[x] = static_cast<int>(gens[x].cols());
  return d;
}

Syzygy syzygy(const Module& m) {
  const Algebra& alg = m.algebra();
  alg.require_acyclic();
  const Quiver& q = alg.quiver();
  const Field& f = m.field();
  const std::vector<Matrix> gens = top_generators(m);

  std::vector<Module> parts;
  std::vector<Matrix> cover_map;
  for (std::size_t z = 0; z < q.vertex_count(); ++z) cover_map.emplace_back(m.dim(z), 0);
  DimVector top(q.vertex_count());

  for (std::size_t x = 0; x < q.vertex_count(); ++x) {
    top[x] = static_cast<int>(gens[x].cols());
    if (gens[x].cols() == 0) continue;
    const PathTree t = path_tree(alg, x);
    for (std::size_t g = 0; g < gens[x].cols(); ++g) {
      // Image of each path under P_x -> M, e_x |-> gens[x][:, g].
      std::vector<Matrix> image(t.nodes.size());
      std::vector<Matrix> block;
      for (std::size_t z = 0; z < q.vertex_count(); ++z) block.emplace_back(m.dim(z), t.count[z]);
      for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const PathTree::Node& node = t.nodes[i];
        image[i] = node.parent ? multiply(f, m.map(node.arrow), image[*node.parent]) : gens[x].column(g);
        for (std::size_t r = 0; r < image[i].rows(); ++r) block[node.end](r, node.local) = image[i](r, 0);
      }
      for (std::size_t z = 0; z < q.vertex_count(); ++z) cover_map[z] = hstack(cover_map[z], block[z]);
      parts.push_back(projective(m.algebra_ptr(), f, x));
    }
  }
  Module cover = direct_sum(parts, m.algebra_ptr(), f);

  Submodule k;
  for (std::size_t z = 0; z < q.vertex_count(); ++z) {
    k.basis.push_back(kernel(f, cover_map[z]));
    if (rank(f, cover_map[z]) != m.dim(z))
      throw Error(ErrorCode::InvalidArgument, "projective cover is not surjective");
  }
  Module omega = restrict_to(cover, k);
  return Syzygy{std::move(cover), std::move(omega), k.basis, std::move(cover_map), std::move(top)};
}

std::size_t projective_dimension(const Module& m) {
  std::size_t pd = 0;
  Module cur = m;
  while (true) {
    Syzygy s = syzygy(cur);
    if (s.kernel.total_dim() == 0) return pd;
    cur = std::move(s.kernel);
    ++pd;
  }
}

std::vector<Morphism> hom_space(const Module& m, const Module& n) {
  require_same(m, n);
  const Quiver& q = m.algebra().quiver();
  const Field& f = m.field();
  const std::size_t nv = q.vertex_count();
  // Unknown phi(x) is n.dim(x) x m.dim(x), stored row-major from offset[x].
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t x = 0; x < nv; ++x) offset[x + 1] = offset[x] + n.dim(x) * m.dim(x);
  const std::size_t vars = offset[nv];
  auto var = [&](std::size_t x, std::size_t i, std::size_t j) { return offset[x] + i * m.dim(x) + j; };

  std::size_t eqs = 0;
  for (const Arrow& a : q.arrows()) eqs += n.dim(a.head) * m.dim(a.tail);
  Matrix system(eqs, vars);
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::size_t s = q.arrow(a).tail, t = q.arrow(a).head;
    const Matrix& ma = m.map(a);
    const Matrix& na = n.map(a);
    // (phi(t) M(a) - N(a) phi(s))[i][j] = 0
    for (std::size_t i = 0; i < n.dim(t); ++i) {
      for (std::size_t j = 0; j < m.dim(s); ++j, ++row) {
        for (std::size_t k = 0; k < m.dim(t); ++k)
          if (ma(k, j)) system(row, var(t, i, k)) = f.add(system(row, var(t, i, k)), ma(k, j));
        for (std::size_t k = 0; k < n.dim(s); ++k)
          if (na(i, k)) system(row, var(s, k, j)) = f.sub(system(row, var(s, k, j)), na(i, k));
      }
    }
  }
  const Matrix basis = kernel(f, system);
  std::vector<Morphism> result;
  for (std::size_t b = 0; b < basis.cols(); ++b) {
    Morphism phi;
    for (std::size_t x = 0; x < nv; ++x) {
      Matrix px(n.dim(x), m.dim(x));
      for (std::size_t i = 0; i < n.dim(x); ++i)
        for (std::size_t j = 0; j < m.dim(x); ++j) px(i, j) = basis(var(x, i, j), b);
      phi.push_back(std::move(px));
    }
    result.push_back(std::move(phi));
  }
  return result;
}

std::size_t hom_dim(const Module& m, const Module& n) { return hom_space(m, n).size(); }

std::size_t ext_dim(std::size_t degree, const Module& m, const Module& n) {
  require_same(m, n);
  if (degree == 0) return hom_dim(m, n);
  Module cur = m;
  for (std::size_t i = 1; i < degree; ++i) {
    cur = syzygy(cur).kernel;
    if (cur.total_dim() == 0) return 0;
  }
  const Syzygy s = syzygy(cur);
  long long hom_cover = 0;
  for (std::size_t x = 0; x < s.top.size(); ++x) hom_cover += static_cast<long long>(s.top[x]) * n.dim(x);
  // 0 -> Hom(M,N) -> Hom(P0,N) -> Hom(Omega,N) -> Ext^1(M,N) -> 0
  const long long e = static_cast<long long>(hom_dim(s.kernel, n)) - hom_cover + static_cast<long long>(hom_dim(cur, n));
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative Ext dimension; syzygy sequence is broken");
  return static_cast<std::size_t>(e);
}

long long ext_euler_characteristic(const Module& m, const Module& n) {
  require_same(m, n);
  long long chi = static_cast<long long>(hom_dim(m, n));
  Module cur = m;
  for (std::size_t l = 1;; ++l) {
    const Syzygy s = syzygy(cur);
    long long hom_cover = 0;
    for (std::size_t x = 0; x < s.top.size(); ++x) hom_cover += static_cast<long long>(s.top[x]) * n.dim(x);
    const long long e = static_cast<long long>(hom_dim(s.kernel, n)) - hom_cover + static_cast<long long>(hom_dim(cur, n));
    chi += (l % 2 == 0) ? e : -e;
    if (s.kernel.total_dim() == 0) return chi;
    cur = s.kernel;
  }
}

bool is_morphism(const Module& m, const Module& n, const Morphism& phi) {
  const Quiver& q = m.algebra().quiver();
  const Field& f = m.field();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    if (!(multiply(f, phi[arrow.head], m.map(a)) == multiply(f, n.map(a), phi[arrow.tail]))) return false;
  }
  return true;
}

Morphism random_combination(const Field& f, const std::vector<Morphism>& basis, Rng& rng) {
  Morphism acc;
  for (const Matrix& x : basis.front()) acc.emplace_back(x.rows(), x.cols());
  for (const Morphism& b : basis) {
    const Elem c = f.random(rng);
    if (c == 0) continue;
    for (std::size_t x = 0; x < acc.size(); ++x) acc[x] = add(f, acc[x], scale(f, b[x], c));
  }
  return acc;
}

bool isomorphic(const Module& m, const Module& n, Rng& rng) {
  require_same(m, n);
  if (m.dim() != n.dim()) return false;
  const auto mn = hom_space(m, n);
  if (mn.empty()) return m.total_dim() == 0;
  const std::size_t end_m = hom_dim(m, m);
  if (mn.size() != end_m || hom_dim(n, m) != end_m || hom_dim(n, n) != end_m) return false;
  const Field& f = m.field();
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Morphism phi = random_combination(f, mn, rng);
    bool invertible = true;
    for (std::size_t x = 0; x < phi.size() && invertible; ++x) invertible = rank(f, phi[x]) == m.dim(x);
    if (invertible) return true;
  }
  return false;
}

}  // namespace qmod
