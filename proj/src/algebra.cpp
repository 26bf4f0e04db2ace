#include "qmod/algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qmod/error.hpp"
#include "qmod/rng.hpp"

namespace qmod {

std::string to_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_lookup_.emplace(vertices_[i], i).second)
      throw Error(ErrorCode::DuplicateId, "vertex '" + vertices_[i] + "' declared twice");
  }
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    if (vertex_lookup_.count(arrows_[a].id) != 0)
      throw Error(ErrorCode::DuplicateId, "arrow id '" + arrows_[a].id + "' clashes with a vertex id");
    if (!arrow_lookup_.emplace(arrows_[a].id, a).second)
      throw Error(ErrorCode::DuplicateId, "arrow '" + arrows_[a].id + "' declared twice");
    if (arrows_[a].tail >= vertices_.size() || arrows_[a].head >= vertices_.size())
      throw Error(ErrorCode::UnknownVertex, "arrow '" + arrows_[a].id + "' has an undeclared endpoint");
    out_[arrows_[a].tail].push_back(a);
    in_[arrows_[a].head].push_back(a);
  }

  // Kahn's algorithm; ties broken by declaration order for determinism.
  std::vector<std::size_t> indegree(vertices_.size(), 0);
  for (const Arrow& a : arrows_) ++indegree[a.head];
  std::set<std::size_t> ready;
  for (std::size_t x = 0; x < vertices_.size(); ++x)
    if (indegree[x] == 0) ready.insert(x);
  std::vector<std::size_t> order;
  std::vector<std::size_t> depth(vertices_.size(), 0);
  while (!ready.empty()) {
    const std::size_t x = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(x);
    for (std::size_t a : out_[x]) {
      const std::size_t y = arrows_[a].head;
      depth[y] = std::max(depth[y], depth[x] + 1);
      if (--indegree[y] == 0) ready.insert(y);
    }
  }
  acyclic_ = order.size() == vertices_.size();
  if (acyclic_) {
    topo_ = std::move(order);
    for (std::size_t d : depth) longest_path_ = std::max(longest_path_, d);
  }
}

std::optional<std::size_t> Quiver::find_vertex(std::string_view id) const {
  auto it = vertex_lookup_.find(id);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Quiver::find_arrow(std::string_view id) const {
  auto it = arrow_lookup_.find(id);
  if (it == arrow_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t Quiver::vertex_index(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + std::string(id) + "'");
}

std::size_t Quiver::arrow_index(std::string_view id) const {
  if (auto a = find_arrow(id)) return *a;
  throw Error(ErrorCode::UnknownArrow, "unknown arrow '" + std::string(id) + "'");
}

namespace {

ClassReport compute_class(const Quiver& q, const std::vector<std::vector<bool>>& rel) {
  ClassReport r;
  r.acyclic = q.acyclic();
  r.quadratic_monomial = r.acyclic;
  if (!r.quadratic_monomial) {
    r.string_failure = r.gentle_failure = "quiver has an oriented cycle";
    return r;
  }
  const std::size_t n = q.arrow_count();

  r.disjoint_chain = true;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t as_first = 0;
    std::size_t as_second = 0;
    for (std::size_t b = 0; b < n; ++b) {
      as_first += rel[a][b];
      as_second += rel[b][a];
    }
    if (as_first > 1 || as_second > 1) r.disjoint_chain = false;
  }

  auto fail = [](std::string& slot, const std::string& msg) {
    if (slot.empty()) slot = msg;
  };
  for (std::size_t x = 0; x < q.vertex_count(); ++x) {
    if (q.arrows_into(x).size() > 2 || q.arrows_from(x).size() > 2)
      fail(r.string_failure, "more than two arrows at vertex '" + q.vertices()[x] + "'");
  }
  for (std::size_t b = 0; b < n; ++b) {
    const Arrow& arrow = q.arrow(b);
    std::size_t after_free = 0, after_rel = 0, before_free = 0, before_rel = 0;
    for (std::size_t a : q.arrows_from(arrow.head)) (rel[b][a] ? after_rel : after_free)++;
    for (std::size_t c : q.arrows_into(arrow.tail)) (rel[c][b] ? before_rel : before_free)++;
    if (after_free > 1 || before_free > 1)
      fail(r.string_failure, "arrow '" + arrow.id + "' composes nontrivially with two arrows");
    if (after_rel > 1 || before_rel > 1)
      fail(r.gentle_failure, "arrow '" + arrow.id + "' lies in two relations on the same side");
  }
  r.string = r.string_failure.empty();
  if (!r.string) fail(r.gentle_failure, r.string_failure);
  r.gentle = r.string && r.gentle_failure.empty();
  return r;
}

}  // namespace

Algebra::Algebra(std::string name, Quiver quiver, std::vector<Relation> relations)
    : name_(std::move(name)), quiver_(std::move(quiver)), relations_(std::move(relations)) {
  const std::size_t n = quiver_.arrow_count();
  relation_table_.assign(n, std::vector<bool>(n, false));
  std::sort(relations_.begin(), relations_.end());
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    const Relation& r = relations_[i];
    if (r.first >= n || r.second >= n) throw Error(ErrorCode::UnknownArrow, "relation references unknown arrow");
    if (quiver_.arrow(r.first).head != quiver_.arrow(r.second).tail)
      throw Error(ErrorCode::NonComposable, "relation (" + quiver_.arrow(r.first).id + ", " +
                                                quiver_.arrow(r.second).id + ") is not composable");
    if (i > 0 && relations_[i - 1] == r)
      throw Error(ErrorCode::DuplicateId, "relation (" + quiver_.arrow(r.first).id + ", " +
                                              quiver_.arrow(r.second).id + ") listed twice");
    relation_table_[r.first][r.second] = true;
  }
  class_ = compute_class(quiver_, relation_table_);

  chain_of_.assign(n, std::nullopt);
  if (class_.disjoint_chain) {
    std::vector<std::optional<std::size_t>> next(n), prev(n);
    for (const Relation& r : relations_) {
      next[r.first] = r.second;
      prev[r.second] = r.first;
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (!next[a] || prev[a]) continue;
      std::vector<std::size_t> chain{a};
      while (next[chain.back()]) chain.push_back(*next[chain.back()]);
      for (std::size_t b : chain) chain_of_[b] = chains_.size();
      chains_.push_back(std::move(chain));
    }
  }
}

bool Algebra::is_relation(std::size_t first, std::size_t second) const {
  return relation_table_[first][second];
}

void Algebra::require_acyclic() const {
  if (!class_.acyclic) throw Error(ErrorCode::CyclicQuiver, "algebra '" + name_ + "' has an oriented cycle");
}

void Algebra::require_disjoint_chain() const {
  require_acyclic();
  if (!class_.disjoint_chain)
    throw Error(ErrorCode::UnsupportedClass, "algebra '" + name_ + "' is not in the disjoint-chain class");
}

std::string Algebra::fingerprint() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(print_algebra(*this))));
  return buf;
}

Algebra make_algebra(std::string name, std::vector<std::string> vertices, std::vector<ArrowSpec> arrows,
                     std::vector<std::pair<std::string, std::string>> relations) {
  std::map<std::string, std::size_t, std::less<>> vertex_index;
  for (std::size_t i = 0; i < vertices.size(); ++i) vertex_index.emplace(vertices[i], i);
  auto lookup = [&](const std::string& v) {
    auto it = vertex_index.find(v);
    if (it == vertex_index.end()) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + v + "'");
    return it->second;
  };
  std::vector<Arrow> quiver_arrows;
  for (const ArrowSpec& a : arrows) quiver_arrows.push_back({a.id, lookup(a.tail), lookup(a.head)});
  Quiver q(std::move(vertices), std::move(quiver_arrows));
  std::vector<Relation> rels;
  for (const auto& [first, second] : relations) rels.push_back({q.arrow_index(first), q.arrow_index(second)});
  return Algebra(std::move(name), std::move(q), std::move(rels));
}

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const nlohmann::json& field(const nlohmann::json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorCode::Malformed, std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const nlohmann::json& v, const std::string& what) {
  if (!v.is_string()) throw Error(ErrorCode::Malformed, what + " must be a string");
  return v.get<std::string>();
}

}  // namespace

Algebra parse_algebra(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document.begin(), document.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Malformed, "syntax error at " + line_column(document, e.byte));
  }
  if (!doc.is_object()) throw Error(ErrorCode::Malformed, "document must be a JSON object");

  std::string name = doc.contains("name") ? string_field(doc["name"], "name") : "unnamed";
  const auto& vs = field(doc, "vertices");
  const auto& as = field(doc, "arrows");
  if (!vs.is_array() || !as.is_array()) throw Error(ErrorCode::Malformed, "vertices and arrows must be arrays");

  std::vector<std::string> vertices;
  for (const auto& v : vs) vertices.push_back(string_field(v, "vertex id"));
  std::vector<ArrowSpec> arrows;
  for (const auto& a : as) {
    if (!a.is_object()) throw Error(ErrorCode::Malformed, "arrow entries must be objects");
    arrows.push_back({string_field(field(a, "id"), "arrow id"), string_field(field(a, "tail"), "arrow tail"),
                      string_field(field(a, "head"), "arrow head")});
  }
  std::vector<std::pair<std::string, std::string>> relations;
  if (doc.contains("relations")) {
    const auto& rs = doc["relations"];
    if (!rs.is_array()) throw Error(ErrorCode::Malformed, "relations must be an array");
    for (const auto& r : rs) {
      if (!r.is_array() || r.size() != 2)
        throw Error(ErrorCode::Malformed, "each relation must be a 2-element array of arrow ids");
      relations.emplace_back(string_field(r[0], "relation entry"), string_field(r[1], "relation entry"));
    }
  }
  return make_algebra(std::move(name), std::move(vertices), std::move(arrows), std::move(relations));
}

std::string print_algebra(const Algebra& algebra) {
  const Quiver& q = algebra.quiver();
  nlohmann::ordered_json doc;
  doc["name"] = algebra.name();
  doc["vertices"] = q.vertices();
  auto arrows = nlohmann::ordered_json::array();
  for (const Arrow& a : q.arrows())
    arrows.push_back({{"id", a.id}, {"tail", q.vertices()[a.tail]}, {"head", q.vertices()[a.head]}});
  doc["arrows"] = arrows;
  auto rels = nlohmann::ordered_json::array();
  for (const Relation& r : algebra.relations()) rels.push_back({q.arrow(r.first).id, q.arrow(r.second).id});
  doc["relations"] = rels;
  return doc.dump(2) + "\n";
}

ClassReport classify(const Algebra& algebra) { return algebra.classification(); }

std::size_t Coloring::color_count() const {
  return std::set<std::size_t>(color_of_.begin(), color_of_.end()).size();
}

bool Coloring::is_valid(const Quiver& q) const {
  if (color_of_.size() != q.arrow_count()) return false;
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t a = 0; a < color_of_.size(); ++a) classes[color_of_[a]].push_back(a);
  for (const auto& [color, arrows] : classes) {
    // A set of arrows is a directed path iff exactly one arrow has no
    // predecessor in the set and every other arrow has exactly one.
    std::size_t starts = 0;
    for (std::size_t a : arrows) {
      std::size_t preds = 0, succs = 0;
      for (std::size_t b : arrows) {
        preds += q.arrow(b).head == q.arrow(a).tail;
        succs += q.arrow(a).head == q.arrow(b).tail;
      }
      if (preds > 1 || succs > 1) return false;
      starts += preds == 0;
    }
    if (starts != 1) return false;
  }
  return true;
}

std::vector<Relation> Coloring::induced_relations(const Quiver& q) const {
  std::vector<Relation> rels;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    for (std::size_t b : q.arrows_from(q.arrow(a).head))
      if (color_of_[a] == color_of_[b]) rels.push_back({a, b});
  std::sort(rels.begin(), rels.end());
  return rels;
}

namespace {

// Colors numbered by first appearance in arrow order.
Coloring coloring_from_successors(const Quiver& q, const std::vector<std::optional<std::size_t>>& next) {
  const std::size_t n = q.arrow_count();
  std::vector<std::optional<std::size_t>> prev(n);
  for (std::size_t a = 0; a < n; ++a)
    if (next[a]) prev[*next[a]] = a;
  std::vector<std::size_t> color(n, n);
  std::size_t next_color = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (color[a] != n) continue;
    std::size_t start = a;
    while (prev[start]) start = *prev[start];
    for (std::optional<std::size_t> b = start; b; b = next[*b]) color[*b] = next_color;
    ++next_color;
  }
  // Renumber so the least arrow of each class fixes the color order.
  std::map<std::size_t, std::size_t> renumber;
  for (std::size_t a = 0; a < n; ++a) renumber.emplace(color[a], renumber.size());
  for (std::size_t& c : color) c = renumber[c];
  return Coloring(std::move(color));
}

}  // namespace

Coloring find_coloring(const Algebra& algebra) {
  const ClassReport& cls = algebra.classification();
  if (!cls.gentle) throw Error(ErrorCode::NotGentle, algebra.name() + ": " + cls.gentle_failure);
  const Quiver& q = algebra.quiver();
  // Each relation chain becomes one color. An arrow outside all relations
  // cannot be appended to a color path without creating a same-color
  // composable pair outside I, so it keeps a color of its own.
  std::vector<std::optional<std::size_t>> next(q.arrow_count());
  for (const Relation& r : algebra.relations()) next[r.first] = r.second;
  Coloring c = coloring_from_successors(q, next);
  const std::vector<Relation> induced = c.induced_relations(q);
  if (!c.is_valid(q) || induced != algebra.relations()) {
    std::string blocking = "?";
    for (const Relation& r : induced)
      if (!algebra.is_relation(r.first, r.second))
        blocking = "(" + q.arrow(r.first).id + ", " + q.arrow(r.second).id + ")";
    throw Error(ErrorCode::NoExactColoring, "blocking pair " + blocking);
  }
  return c;
}

Coloring find_gentle_cover(const Algebra& algebra) {
  const ClassReport& cls = algebra.classification();
  if (!cls.string) throw Error(ErrorCode::NotString, algebra.name() + ": " + cls.string_failure);
  if (cls.gentle) return find_coloring(algebra);

  const Quiver& q = algebra.quiver();
  const std::size_t n = q.arrow_count();
  std::vector<std::optional<std::size_t>> next(n);
  std::vector<bool> has_prev(n, false);
  std::optional<Coloring> found;

  // Backtrack over successor choices inside I; prefer longer color paths.
  std::function<void(std::size_t)> search = [&](std::size_t a) {
    if (found) return;
    if (a == n) {
      Coloring c = coloring_from_successors(q, next);
      Algebra cover(algebra.name() + "-cover", q, c.induced_relations(q));
      if (c.is_valid(q) && cover.classification().gentle) found = std::move(c);
      return;
    }
    for (std::size_t b : q.arrows_from(q.arrow(a).head)) {
      if (!algebra.is_relation(a, b) || has_prev[b]) continue;
      next[a] = b;
      has_prev[b] = true;
      search(a + 1);
      has_prev[b] = false;
      next[a].reset();
      if (found) return;
    }
    search(a + 1);
  };
  search(0);
  if (!found) throw Error(ErrorCode::SearchExhausted, "no gentle cover found for " + algebra.name());
  return *found;
}

long long euler_form(const Algebra& algebra, const DimVector& d, const DimVector& e) {
  algebra.require_acyclic();
  const Quiver& q = algebra.quiver();
  long long sum = 0;
  for (std::size_t x = 0; x < q.vertex_count(); ++x) sum += static_cast<long long>(d[x]) * e[x];
  // Length-n arrow sequences whose consecutive pairs are relations contribute
  // (-1)^n d(tail) e(head); single arrows are the n = 1 case.
  std::function<void(std::size_t, std::size_t, std::size_t)> walk = [&](std::size_t start, std::size_t last,
                                                                         std::size_t length) {
    const long long term = static_cast<long long>(d[q.arrow(start).tail]) * e[q.arrow(last).head];
    sum += (length % 2 == 0) ? term : -term;
    for (std::size_t b : q.arrows_from(q.arrow(last).head))
      if (algebra.is_relation(last, b)) walk(start, b, length + 1);
  };
  for (std::size_t a = 0; a < q.arrow_count(); ++a) walk(a, a, 1);
  return sum;
}

DimVector unit_vector(const Algebra& algebra, std::size_t vertex) {
  DimVector d(algebra.vertex_count());
  d[vertex] = 1;
  return d;
}

long long pairing(const Weight& theta, const DimVector& d) {
  if (theta.size() != d.size()) throw Error(ErrorCode::InvalidArgument, "weight and dimension vector sizes differ");
  long long s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) s += static_cast<long long>(theta[i]) * d[i];
  return s;
}

long long gl_dimension(const DimVector& d) {
  long long s = 0;
  for (int v : d.values()) s += static_cast<long long>(v) * v;
  return s;
}

}  // namespace qmod
