#include <gtest/gtest.h>

#include <algorithm>

#include "qmod/algebra.hpp"
#include "qmod/catalog.hpp"
#include "qmod/error.hpp"

using namespace qmod;

namespace {

ErrorCode parse_error(const std::string& doc) {
  try {
    parse_algebra(doc);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << doc;
  return ErrorCode::InvalidArgument;
}

DimVector dv(std::vector<int> v) { return DimVector(std::move(v)); }

}  // namespace

TEST(Parse, Errors) {
  EXPECT_EQ(parse_error("{"), ErrorCode::Malformed);
  EXPECT_EQ(parse_error("[]"), ErrorCode::Malformed);
  EXPECT_EQ(parse_error(R"({"vertices": ["1"]})"), ErrorCode::Malformed);
  EXPECT_EQ(parse_error(R"({"vertices": ["1", "1"], "arrows": []})"), ErrorCode::DuplicateId);
  EXPECT_EQ(parse_error(R"({"vertices": ["1"], "arrows": [{"id": "a", "tail": "1", "head": "2"}]})"),
            ErrorCode::UnknownVertex);
  EXPECT_EQ(parse_error(R"({"vertices": ["1", "2"], "arrows": [{"id": "a", "tail": "1", "head": "2"}],
                            "relations": [["a", "b"]]})"),
            ErrorCode::UnknownArrow);
  EXPECT_EQ(parse_error(R"({"vertices": ["1", "2"], "arrows": [{"id": "a", "tail": "1", "head": "2"},
                            {"id": "b", "tail": "1", "head": "2"}], "relations": [["a", "b"]]})"),
            ErrorCode::NonComposable);
}

TEST(Parse, SyntaxErrorReportsPosition) {
  try {
    parse_algebra("{\n  \"vertices\": [1,\n}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Parse, CatalogRoundTrip) {
  for (const std::string& name : catalog_names()) {
    const Algebra a = parse_algebra(catalog_document(name));
    const std::string printed = print_algebra(a);
    const Algebra b = parse_algebra(printed);
    EXPECT_EQ(print_algebra(b), printed) << name;
    EXPECT_EQ(a.fingerprint(), catalog_algebra(name)->fingerprint()) << name;
  }
}

TEST(Parse, FingerprintIgnoresRelationOrder) {
  const Algebra a = make_algebra("x", {"1", "2", "3", "4"},
                                 {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "4"}}, {{"a", "b"}, {"b", "c"}});
  const Algebra b = make_algebra("x", {"1", "2", "3", "4"},
                                 {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "4"}}, {{"b", "c"}, {"a", "b"}});
  EXPECT_EQ(a.fingerprint(), b.fingerprint());
  EXPECT_EQ(print_algebra(a), print_algebra(b));
}

TEST(Classify, Catalog) {
  struct Expect {
    const char* name;
    bool disjoint_chain, string, gentle;
  };
  for (const Expect& e : {Expect{"kronecker", true, true, true}, Expect{"a3-relation", true, true, true},
                          Expect{"ringel5", true, false, false}, Expect{"d4tilde", true, false, false},
                          Expect{"kronecker-tail", true, true, true}, Expect{"string-fork", false, true, false}}) {
    const ClassReport& r = catalog_algebra(e.name)->classification();
    EXPECT_TRUE(r.acyclic) << e.name;
    EXPECT_EQ(r.disjoint_chain, e.disjoint_chain) << e.name;
    EXPECT_EQ(r.string, e.string) << e.name;
    EXPECT_EQ(r.gentle, e.gentle) << e.name;
  }
}

TEST(Classify, CycleIsUnsupported) {
  const Algebra a = make_algebra("loop2", {"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}}, {{"a", "b"}, {"b", "a"}});
  EXPECT_FALSE(a.classification().acyclic);
  EXPECT_THROW(a.require_acyclic(), Error);
}

TEST(Coloring, GentleCatalog) {
  for (const char* name : {"kronecker", "a3-relation", "kronecker-tail"}) {
    auto alg = catalog_algebra(name);
    const Coloring c = find_coloring(*alg);
    EXPECT_TRUE(c.is_valid(alg->quiver())) << name;
    auto induced = c.induced_relations(alg->quiver());
    auto relations = alg->relations();
    std::sort(induced.begin(), induced.end());
    std::sort(relations.begin(), relations.end());
    EXPECT_EQ(induced, relations) << name;
  }
  EXPECT_EQ(find_coloring(*catalog_algebra("kronecker")).color_count(), 2u);
}

TEST(Coloring, NonGentleRejected) {
  try {
    find_coloring(*catalog_algebra("ringel5"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotGentle);
  }
}

TEST(Coloring, GentleCoverOfStringAlgebra) {
  auto alg = catalog_algebra("string-fork");
  const Coloring c = find_gentle_cover(*alg);
  EXPECT_TRUE(c.is_valid(alg->quiver()));
  for (const Relation& r : c.induced_relations(alg->quiver())) EXPECT_TRUE(alg->is_relation(r.first, r.second));
}

TEST(Euler, Values) {
  auto kr = catalog_algebra("kronecker");
  EXPECT_EQ(euler_form(*kr, dv({1, 0}), dv({0, 1})), -2);
  EXPECT_EQ(euler_form(*kr, dv({1, 1}), dv({1, 1})), 0);
  // The relation contributes +d(3) e(1).
  auto a3 = catalog_algebra("a3-relation");
  EXPECT_EQ(euler_form(*a3, dv({0, 0, 1}), dv({1, 0, 0})), 1);
  EXPECT_EQ(euler_form(*a3, dv({1, 0, 0}), dv({0, 0, 1})), 0);
  EXPECT_EQ(gl_dimension(dv({2, 3})), 13);
}
