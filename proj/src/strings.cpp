#include "qmod/strings.hpp"

#include <algorithm>
#include <cctype>

#include "qmod/error.hpp"

namespace qmod {

namespace {

std::size_t source(const Quiver& q, const Letter& l) {
  return l.inverse ? q.arrow(l.arrow).head : q.arrow(l.arrow).tail;
}
std::size_t target(const Quiver& q, const Letter& l) {
  return l.inverse ? q.arrow(l.arrow).tail : q.arrow(l.arrow).head;
}

// May `next` follow `prev` in a string?
bool compatible(const Algebra& alg, const Letter& prev, const Letter& next) {
  const Quiver& q = alg.quiver();
  if (target(q, prev) != source(q, next)) return false;
  if (prev.arrow == next.arrow && prev.inverse != next.inverse) return false;
  if (!prev.inverse && !next.inverse && alg.is_relation(prev.arrow, next.arrow)) return false;
  if (prev.inverse && next.inverse && alg.is_relation(next.arrow, prev.arrow)) return false;
  return true;
}

Walk inverse_walk(const Algebra& alg, const Walk& w) {
  Walk r;
  r.start = walk_vertices(alg, w).back();
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back({it->arrow, !it->inverse});
  return r;
}

Module walk_module(AlgebraPtr algebra, Field field, const Walk& w, bool closed, Elem lambda) {
  const Quiver& q = algebra->quiver();
  std::vector<std::size_t> verts = walk_vertices(*algebra, w);
  if (closed) verts.pop_back();
  DimVector d(q.vertex_count());
  std::vector<std::size_t> local(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) local[i] = static_cast<std::size_t>(d[verts[i]]++);
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    maps.emplace_back(static_cast<std::size_t>(d[q.arrow(a).head]), static_cast<std::size_t>(d[q.arrow(a).tail]));
  const std::size_t n = w.letters.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Letter& l = w.letters[i];
    const std::size_t from = i, to = closed && i + 1 == n ? 0 : i + 1;
    const Elem value = closed && i + 1 == n ? lambda : 1;
    // Direct letters send e_i to e_{i+1}; inverse ones send e_{i+1} to e_i.
    if (l.inverse)
      maps[l.arrow](local[from], local[to]) = value;
    else
      maps[l.arrow](local[to], local[from]) = value;
  }
  return Module(std::move(algebra), field, std::move(d), std::move(maps));
}

}  // namespace

std::vector<std::size_t> walk_vertices(const Algebra& algebra, const Walk& w) {
  const Quiver& q = algebra.quiver();
  std::vector<std::size_t> v;
  v.push_back(w.letters.empty() ? w.start : source(q, w.letters.front()));
  for (const Letter& l : w.letters) v.push_back(target(q, l));
  return v;
}

bool is_string(const Algebra& algebra, const Walk& w) {
  const Quiver& q = algebra.quiver();
  if (w.letters.empty()) return w.start < q.vertex_count();
  for (const Letter& l : w.letters)
    if (l.arrow >= q.arrow_count()) return false;
  for (std::size_t i = 1; i < w.letters.size(); ++i)
    if (!compatible(algebra, w.letters[i - 1], w.letters[i])) return false;
  return true;
}

bool is_band(const Algebra& algebra, const Walk& w) {
  const std::size_t n = w.letters.size();
  if (n == 0 || !is_string(algebra, w)) return false;
  if (!compatible(algebra, w.letters.back(), w.letters.front())) return false;
  for (std::size_t period = 1; period < n; ++period) {
    if (n % period) continue;
    bool power = true;
    for (std::size_t i = period; i < n && power; ++i) power = w.letters[i] == w.letters[i - period];
    if (power) return false;
  }
  return true;
}

Module string_module(AlgebraPtr algebra, Field field, const Walk& w) {
  if (!is_string(*algebra, w)) throw Error(ErrorCode::InvalidArgument, "walk is not a string");
  return walk_module(std::move(algebra), field, w, false, 1);
}

Module band_module(AlgebraPtr algebra, Field field, const Walk& w, Elem lambda) {
  if (!is_band(*algebra, w)) throw Error(ErrorCode::InvalidArgument, "walk is not a band");
  if (lambda == 0) throw Error(ErrorCode::InvalidArgument, "band parameter must be nonzero");
  return walk_module(std::move(algebra), field, w, true, lambda);
}

std::vector<Walk> enumerate_strings(const Algebra& algebra, std::size_t max_length) {
  const Quiver& q = algebra.quiver();
  std::vector<Walk> all;
  for (std::size_t x = 0; x < q.vertex_count(); ++x) all.push_back(Walk{x, {}});
  std::vector<Walk> frontier;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    for (bool inv : {false, true}) frontier.push_back(Walk{0, {Letter{a, inv}}});
  for (std::size_t len = 1; len <= max_length && !frontier.empty(); ++len) {
    std::vector<Walk> next;
    for (Walk& w : frontier) {
      w.start = source(q, w.letters.front());
      if (len < max_length)
        for (std::size_t a = 0; a < q.arrow_count(); ++a)
          for (bool inv : {false, true}) {
            const Letter l{a, inv};
            if (!compatible(algebra, w.letters.back(), l)) continue;
            Walk ext = w;
            ext.letters.push_back(l);
            next.push_back(std::move(ext));
          }
      if (w <= inverse_walk(algebra, w)) all.push_back(w);
    }
    frontier = std::move(next);
  }
  return all;
}

Walk parse_walk(const Algebra& algebra, std::string_view text) {
  const Quiver& q = algebra.quiver();
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  Walk w;
  if (tokens.size() == 1 && tokens[0].starts_with('@')) {
    w.start = q.vertex_index(tokens[0].substr(1));
    return w;
  }
  if (tokens.empty()) throw Error(ErrorCode::Malformed, "empty walk");
  for (std::string t : tokens) {
    bool inv = false;
    if (t.ends_with("^-1")) {
      inv = true;
      t.resize(t.size() - 3);
    } else if (t.ends_with("-")) {
      inv = true;
      t.pop_back();
    }
    w.letters.push_back(Letter{q.arrow_index(t), inv});
  }
  w.start = source(q, w.letters.front());
  if (!is_string(algebra, w)) throw Error(ErrorCode::InvalidArgument, "walk '" + std::string(text) + "' is not a string");
  return w;
}

std::string format_walk(const Algebra& algebra, const Walk& w) {
  const Quiver& q = algebra.quiver();
  if (w.letters.empty()) return "@" + q.vertices()[w.start];
  std::string s;
  for (const Letter& l : w.letters) {
    if (!s.empty()) s += ' ';
    s += q.arrow(l.arrow).id;
    if (l.inverse) s += "^-1";
  }
  return s;
}

}  // namespace qmod
