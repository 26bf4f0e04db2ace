// Krull-Schmidt decomposition by Fitting splitting along random
// endomorphisms.

#include <algorithm>

#include "qmod/error.hpp"
#include "qmod/homalg.hpp"

namespace qmod {

namespace {

using Poly = std::vector<Elem>;  // lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  trim(c);
  return c;
}

Poly poly_mod(const Field& f, Poly a, const Poly& m) {
  trim(a);
  const Elem lead_inv = f.inv(m.back());
  while (a.size() >= m.size()) {
    const Elem factor = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(factor, m[i]));
    trim(a);
  }
  return a;
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Elem inv = f.inv(a.back());
    for (Elem& c : a) c = f.mul(c, inv);
  }
  return a;
}

Poly poly_powmod(const Field& f, Poly base, std::uint64_t e, const Poly& m) {
  Poly result{1};
  base = poly_mod(f, base, m);
  while (e) {
    if (e & 1) result = poly_mod(f, poly_mul(f, result, base), m);
    e >>= 1;
    if (e) base = poly_mod(f, poly_mul(f, base, base), m);
  }
  return result;
}

// Distinct roots of `g`, assumed to split into distinct linear factors.
void split_roots(const Field& f, const Poly& g, Rng& rng, std::vector<Elem>& roots) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    roots.push_back(f.mul(f.neg(g[0]), f.inv(g[1])));
    return;
  }
  const std::uint64_t p = f.prime();
  for (int attempt = 0; attempt < 200; ++attempt) {
    Poly h = poly_powmod(f, Poly{f.random(rng), 1}, (p - 1) / 2, g);
    if (h.empty()) h = {0};
    h[0] = f.sub(h[0], 1);
    trim(h);
    Poly d = poly_gcd(f, g, h);
    if (d.size() > 1 && d.size() < g.size()) {
      split_roots(f, d, rng, roots);
      // g / d via repeated division is avoided: the cofactor's roots are the
      // remaining roots of g, found by splitting gcd(g, h + 1) instead.
      Poly h2 = h;
      if (h2.empty()) h2 = {0};
      h2[0] = f.add(h2[0], 2);
      trim(h2);
      split_roots(f, poly_gcd(f, g, h2), rng, roots);
      Poly rest = poly_gcd(f, g, Poly{0, 1});
      if (rest.size() == 2) roots.push_back(0);
      return;
    }
  }
  throw Error(ErrorCode::SplitFailure, "root splitting did not converge");
}

std::vector<Elem> distinct_roots(const Field& f, const Poly& chi, Rng& rng) {
  std::vector<Elem> roots;
  const std::uint32_t p = f.prime();
  if (p <= 1024) {
    for (Elem x = 0; x < p; ++x)
      if (evaluate(f, chi, x) == 0) roots.push_back(x);
    return roots;
  }
  Poly c = chi;
  trim(c);
  // gcd(chi, x^p - x) collects the distinct linear factors.
  Poly xp = poly_powmod(f, Poly{0, 1}, p, c);
  xp.resize(std::max<std::size_t>(xp.size(), 2), 0);
  xp[1] = f.sub(xp[1], 1);
  trim(xp);
  const Poly g = xp.empty() ? c : poly_gcd(f, c, xp);
  split_roots(f, g, rng, roots);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

struct Piece {
  Module module;
  bool absolute;
};

void split(const Module& m, Rng& rng, std::vector<Piece>& out) {
  if (m.total_dim() == 0) return;
  const Field& f = m.field();
  const std::vector<Morphism> end = hom_space(m, m);
  if (end.size() == 1) {
    out.push_back({m, true});
    return;
  }
  const std::size_t nv = m.dim().size();
  bool rootless = false;
  for (int attempt = 0; attempt < 48; ++attempt) {
    const Morphism phi = random_combination(f, end, rng);
    Poly chi{1};
    for (std::size_t x = 0; x < nv; ++x)
      if (m.dim(x)) chi = poly_mul(f, chi, characteristic_polynomial(f, phi[x]));
    const std::vector<Elem> roots = distinct_roots(f, chi, rng);
    if (roots.empty()) {
      rootless = true;
      continue;
    }
    for (Elem lambda : roots) {
      Submodule generalized_kernel, image;
      long long kernel_dim = 0, image_dim = 0;
      for (std::size_t x = 0; x < nv; ++x) {
        Matrix shifted = phi[x];
        for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) = f.sub(shifted(i, i), lambda);
        const Matrix power = matrix_power(f, shifted, m.dim(x));
        generalized_kernel.basis.push_back(kernel(f, power));
        image.basis.push_back(column_basis(f, power));
        kernel_dim += static_cast<long long>(generalized_kernel.basis.back().cols());
        image_dim += static_cast<long long>(image.basis.back().cols());
      }
      if (kernel_dim == 0) continue;
      if (image_dim == 0) break;  // phi - lambda is nilpotent: no split from this phi
      if (kernel_dim + image_dim != m.total_dim())
        throw Error(ErrorCode::SplitFailure, "Fitting decomposition dimensions do not add up");
      split(restrict_to(m, generalized_kernel), rng, out);
      split(restrict_to(m, image), rng, out);
      return;
    }
  }
  out.push_back({m, !rootless});
}

}  // namespace

std::vector<Summand> decompose(const Module& m, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Piece> pieces;
  split(m, rng, pieces);
  std::vector<Summand> result;
  for (Piece& piece : pieces) {
    bool merged = false;
    for (Summand& s : result) {
      if (s.module.dim() == piece.module.dim() && isomorphic(s.module, piece.module, rng)) {
        ++s.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) result.push_back({std::move(piece.module), 1, piece.absolute});
  }
  // Canonical order: by dimension vector, then rank profile.
  std::stable_sort(result.begin(), result.end(), [](const Summand& a, const Summand& b) {
    if (a.module.dim() != b.module.dim()) return a.module.dim() < b.module.dim();
    return a.module.rank_sequence() < b.module.rank_sequence();
  });
  return result;
}

}  // namespace qmod
