#pragma once

// Quivers with quadratic monomial relations, their class certificates
// (acyclic, string, gentle, disjoint-chain), colorings and the Euler form.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qmod {

// Integer vector indexed by vertex (or arrow) position. The tag keeps
// dimension vectors, weights and rank sequences from mixing.
template <class Tag>
class IndexedVector {
 public:
  IndexedVector() = default;
  explicit IndexedVector(std::size_t n, int value = 0) : values_(n, value) {}
  explicit IndexedVector(std::vector<int> values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  int& operator[](std::size_t i) { return values_[i]; }
  int operator[](std::size_t i) const { return values_[i]; }
  const std::vector<int>& values() const noexcept { return values_; }

  long long total() const {
    long long s = 0;
    for (int v : values_) s += v;
    return s;
  }
  bool is_zero() const {
    for (int v : values_)
      if (v != 0) return false;
    return true;
  }

  friend auto operator<=>(const IndexedVector&, const IndexedVector&) = default;
  friend bool operator==(const IndexedVector&, const IndexedVector&) = default;

  IndexedVector& operator+=(const IndexedVector& o) {
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  friend IndexedVector operator+(IndexedVector a, const IndexedVector& b) { return a += b; }
  friend IndexedVector operator*(int k, IndexedVector a) {
    for (int& v : a.values_) v *= k;
    return a;
  }

 private:
  std::vector<int> values_;
};

using DimVector = IndexedVector<struct DimVectorTag>;
using Weight = IndexedVector<struct WeightTag>;
using RankSequence = IndexedVector<struct RankSequenceTag>;

std::string to_string(const std::vector<int>& v);
template <class Tag>
std::string to_string(const IndexedVector<Tag>& v) {
  return to_string(v.values());
}

struct Arrow {
  std::string id;
  std::size_t tail;
  std::size_t head;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_[a]; }

  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_arrow(std::string_view id) const;
  std::size_t vertex_index(std::string_view id) const;  // throws UnknownVertex
  std::size_t arrow_index(std::string_view id) const;   // throws UnknownArrow

  const std::vector<std::size_t>& arrows_from(std::size_t x) const { return out_[x]; }
  const std::vector<std::size_t>& arrows_into(std::size_t x) const { return in_[x]; }

  bool acyclic() const noexcept { return acyclic_; }
  // Vertices ordered so that every arrow goes from an earlier to a later one.
  // Empty when the quiver has an oriented cycle.
  const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }
  // Number of arrows on a longest path (0 when there are no arrows).
  std::size_t longest_path() const noexcept { return longest_path_; }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, std::size_t, std::less<>> vertex_lookup_;
  std::map<std::string, std::size_t, std::less<>> arrow_lookup_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  bool acyclic_ = true;
  std::vector<std::size_t> topo_;
  std::size_t longest_path_ = 0;
};

// A length-two relation: traverse `first`, then `second`.
struct Relation {
  std::size_t first;
  std::size_t second;
  friend auto operator<=>(const Relation&, const Relation&) = default;
};

struct ClassReport {
  bool acyclic = false;
  bool quadratic_monomial = false;
  bool disjoint_chain = false;
  bool string = false;
  bool gentle = false;
  // First violated axiom, for diagnostics ("" when the flag holds).
  std::string string_failure;
  std::string gentle_failure;
};

class Algebra {
 public:
  Algebra(std::string name, Quiver quiver, std::vector<Relation> relations);

  const std::string& name() const noexcept { return name_; }
  const Quiver& quiver() const noexcept { return quiver_; }
  // Canonically sorted by (first, second) arrow index.
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  const ClassReport& classification() const noexcept { return class_; }

  std::size_t vertex_count() const noexcept { return quiver_.vertex_count(); }
  std::size_t arrow_count() const noexcept { return quiver_.arrow_count(); }

  bool is_relation(std::size_t first, std::size_t second) const;

  // Maximal relation chains (arrow sequences whose consecutive pairs are all
  // relations). Only populated in the disjoint-chain class, where they
  // partition the arrows occurring in relations.
  const std::vector<std::vector<std::size_t>>& chains() const noexcept { return chains_; }
  // Index into chains() for an arrow, or nullopt for arrows in no relation.
  std::optional<std::size_t> chain_of(std::size_t arrow) const { return chain_of_[arrow]; }

  // Requires the acyclic flag; throws UnsupportedClass otherwise.
  void require_acyclic() const;
  void require_disjoint_chain() const;

  // Order-independent fingerprint of the canonical document.
  std::string fingerprint() const;

 private:
  std::string name_;
  Quiver quiver_;
  std::vector<Relation> relations_;
  std::vector<std::vector<bool>> relation_table_;
  ClassReport class_;
  std::vector<std::vector<std::size_t>> chains_;
  std::vector<std::optional<std::size_t>> chain_of_;
};

struct ArrowSpec {
  std::string id;
  std::string tail;
  std::string head;
};

// Validating constructor from identifiers.
Algebra make_algebra(std::string name, std::vector<std::string> vertices, std::vector<ArrowSpec> arrows,
                     std::vector<std::pair<std::string, std::string>> relations);

// Parses the JSON algebra document; malformed input reports line and column.
Algebra parse_algebra(std::string_view document);
// Canonical printer: vertex and arrow order preserved, relations sorted.
std::string print_algebra(const Algebra& algebra);

ClassReport classify(const Algebra& algebra);

class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<std::size_t> color_of) : color_of_(std::move(color_of)) {}

  std::size_t color(std::size_t arrow) const { return color_of_[arrow]; }
  const std::vector<std::size_t>& colors() const noexcept { return color_of_; }
  std::size_t color_count() const;

  // Each color class is a single directed path.
  bool is_valid(const Quiver& q) const;
  // Generators of I_c: composable pairs of equal color.
  std::vector<Relation> induced_relations(const Quiver& q) const;

 private:
  std::vector<std::size_t> color_of_;
};

// Coloring c with I_c = I; requires the gentle class.
Coloring find_coloring(const Algebra& algebra);
// Coloring c with I_c contained in I and KQ/I_c gentle; requires the string class.
Coloring find_gentle_cover(const Algebra& algebra);

// Euler form via the relation-chain sum; requires an acyclic quiver.
long long euler_form(const Algebra& algebra, const DimVector& d, const DimVector& e);

DimVector unit_vector(const Algebra& algebra, std::size_t vertex);
long long pairing(const Weight& theta, const DimVector& d);
// Dimension of GL(d).
long long gl_dimension(const DimVector& d);

}  // namespace qmod
