// Exhaustive submodule enumeration over tiny prime fields, and the
// coordinate shortcut for modules in monomial form.

#include <algorithm>

#include "qmod/error.hpp"
#include "qmod/homalg.hpp"

namespace qmod {

namespace {

// Calls visit(w) for every subspace of F_p^k, w a k x r column basis.
void for_each_subspace(const Field& f, std::size_t k, const std::function<void(const Matrix&)>& visit) {
  const Elem p = f.prime();
  for (std::size_t r = 0; r <= k; ++r) {
    std::vector<std::size_t> pivots(r);
    for (std::size_t i = 0; i < r; ++i) pivots[i] = i;
    while (true) {
      // Free positions of the RREF rows given the pivot columns.
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = pivots[i] + 1; j < k; ++j)
          if (!std::binary_search(pivots.begin(), pivots.end(), j)) free.emplace_back(i, j);
      std::vector<Elem> values(free.size(), 0);
      while (true) {
        Matrix w(k, r);
        for (std::size_t i = 0; i < r; ++i) w(pivots[i], i) = 1;
        for (std::size_t t = 0; t < free.size(); ++t) w(free[t].second, free[t].first) = values[t];
        visit(w);
        std::size_t t = 0;
        while (t < values.size() && ++values[t] == p) values[t++] = 0;
        if (t == values.size()) break;
      }
      // Next combination of pivot columns.
      std::size_t i = r;
      while (i > 0 && pivots[i - 1] == k - r + i - 1) --i;
      if (i == 0) break;
      ++pivots[i - 1];
      for (std::size_t j = i; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }
}

void enumerate(const Module& m, const std::vector<std::size_t>& order, std::size_t pos, Submodule& u,
               const std::function<void(const Submodule&)>& visit) {
  if (pos == order.size()) {
    visit(u);
    return;
  }
  const Quiver& q = m.algebra().quiver();
  const Field& f = m.field();
  const std::size_t y = order[pos];
  Matrix lower = empty_basis(m.dim(y));
  for (std::size_t a : q.arrows_into(y))
    lower = hstack(lower, multiply(f, m.map(a), u.basis[q.arrow(a).tail]));
  lower = column_basis(f, lower);
  const Matrix comp = complement(f, lower, m.dim(y));
  for_each_subspace(f, comp.cols(), [&](const Matrix& w) {
    u.basis[y] = hstack(lower, multiply(f, comp, w));
    enumerate(m, order, pos + 1, u, visit);
  });
}

}  // namespace

void require_oracle_scale(const Module& m) {
  const std::uint32_t p = m.field().prime();
  if (p != 2 && p != 3 && p != 5)
    throw Error(ErrorCode::OracleScaleExceeded, "oracle requires p in {2,3,5}, got " + std::to_string(p));
  if (m.total_dim() > kOracleMaxDimension)
    throw Error(ErrorCode::OracleScaleExceeded,
                "oracle requires total dimension <= " + std::to_string(kOracleMaxDimension) + ", got " +
                    std::to_string(m.total_dim()));
}

void for_each_submodule(const Module& m, const std::function<void(const Submodule&)>& visit) {
  require_oracle_scale(m);
  m.algebra().require_acyclic();
  Submodule u = zero_submodule(m);
  enumerate(m, m.algebra().quiver().topological_order(), 0, u, visit);
}

std::set<DimVector> submodule_dimension_vectors(const Module& m) {
  std::set<DimVector> out;
  for_each_submodule(m, [&](const Submodule& u) { out.insert(u.dim()); });
  return out;
}

bool is_canonical_form(const Module& m) {
  for (const Matrix& a : m.maps()) {
    std::vector<int> row(a.rows(), 0), col(a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (a(i, j) && (++row[i] > 1 || ++col[j] > 1)) return false;
  }
  return true;
}

std::set<DimVector> coordinate_submodule_dimension_vectors(const Module& m) {
  if (!is_canonical_form(m))
    throw Error(ErrorCode::NotCanonicalForm, "matrices need at most one nonzero entry per row and column");
  m.algebra().require_acyclic();
  const Quiver& q = m.algebra().quiver();
  // Basis elements (x, i), heads before tails so successors are decided first.
  std::vector<std::pair<std::size_t, std::size_t>> elems;
  std::vector<std::size_t> offset(q.vertex_count(), 0);
  const auto& topo = q.topological_order();
  std::size_t total = 0;
  for (std::size_t x = 0; x < q.vertex_count(); ++x) {
    offset[x] = total;
    total += m.dim(x);
  }
  for (auto it = topo.rbegin(); it != topo.rend(); ++it)
    for (std::size_t i = 0; i < m.dim(*it); ++i) elems.emplace_back(*it, i);
  std::vector<std::vector<std::size_t>> succ(total);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    const Matrix& mat = m.map(a);
    for (std::size_t i = 0; i < mat.rows(); ++i)
      for (std::size_t j = 0; j < mat.cols(); ++j)
        if (mat(i, j)) succ[offset[arrow.tail] + j].push_back(offset[arrow.head] + i);
  }
  std::set<DimVector> out;
  std::vector<char> chosen(total, 0);
  DimVector d(q.vertex_count());
  std::function<void(std::size_t)> dfs = [&](std::size_t k) {
    if (k == elems.size()) {
      out.insert(d);
      return;
    }
    dfs(k + 1);
    const auto [x, i] = elems[k];
    const std::size_t id = offset[x] + i;
    if (std::all_of(succ[id].begin(), succ[id].end(), [&](std::size_t s) { return chosen[s] != 0; })) {
      chosen[id] = 1;
      ++d[x];
      dfs(k + 1);
      --d[x];
      chosen[id] = 0;
    }
  };
  dfs(0);
  return out;
}

}  // namespace qmod
