#include "qmod/catalog.hpp"

#include "qmod/error.hpp"

namespace qmod {

namespace {

const std::vector<std::pair<std::string, std::string>>& entries() {
  static const std::vector<std::pair<std::string, std::string>> list = {
      {"kronecker", R"json({"name": "kronecker", "vertices": ["1", "2"], "arrows": [{"id": "a", "tail": "1", "head": "2"}, {"id": "b", "tail": "1", "head": "2"}], "relations": []})json"},
      {"a3-relation", R"json({"name": "a3-relation", "vertices": ["1", "2", "3"], "arrows": [{"id": "a", "tail": "2", "head": "1"}, {"id": "b", "tail": "3", "head": "2"}], "relations": [["b", "a"]]})json"},
      {"ringel5", R"json({"name": "ringel5", "vertices": ["1", "2", "3", "4", "5"], "arrows": [{"id": "alpha", "tail": "2", "head": "1"}, {"id": "beta", "tail": "3", "head": "2"}, {"id": "gamma", "tail": "4", "head": "3"}, {"id": "delta", "tail": "5", "head": "3"}, {"id": "epsilon", "tail": "3", "head": "1"}], "relations": [["beta", "alpha"]]})json"},
      {"d4tilde", R"json({"name": "d4tilde", "vertices": ["1", "2", "3", "4", "5"], "arrows": [{"id": "beta", "tail": "3", "head": "2"}, {"id": "gamma", "tail": "4", "head": "3"}, {"id": "delta", "tail": "5", "head": "3"}, {"id": "epsilon", "tail": "3", "head": "1"}], "relations": []})json"},
      {"d5", R"json({"name": "d5", "vertices": ["1", "2", "3", "4", "5"], "arrows": [{"id": "alpha", "tail": "2", "head": "1"}, {"id": "gamma", "tail": "4", "head": "3"}, {"id": "delta", "tail": "5", "head": "3"}, {"id": "epsilon", "tail": "3", "head": "1"}], "relations": []})json"},
      {"ringel-family-n4", R"json({"name": "ringel-family-n4", "vertices": ["1", "2", "3", "4"], "arrows": [{"id": "alpha", "tail": "2", "head": "1"}, {"id": "beta", "tail": "3", "head": "2"}, {"id": "epsilon", "tail": "3", "head": "1"}, {"id": "a4", "tail": "4", "head": "3"}], "relations": [["beta", "alpha"]]})json"},
      {"ringel-family-n5", R"json({"name": "ringel-family-n5", "vertices": ["1", "2", "3", "4", "5"], "arrows": [{"id": "alpha", "tail": "2", "head": "1"}, {"id": "beta", "tail": "3", "head": "2"}, {"id": "epsilon", "tail": "3", "head": "1"}, {"id": "a4", "tail": "4", "head": "3"}, {"id": "a5", "tail": "5", "head": "4"}], "relations": [["beta", "alpha"]]})json"},
      {"ringel-family-n6", R"json({"name": "ringel-family-n6", "vertices": ["1", "2", "3", "4", "5", "6"], "arrows": [{"id": "alpha", "tail": "2", "head": "1"}, {"id": "beta", "tail": "3", "head": "2"}, {"id": "epsilon", "tail": "3", "head": "1"}, {"id": "a4", "tail": "4", "head": "3"}, {"id": "a5", "tail": "5", "head": "4"}, {"id": "a6", "tail": "6", "head": "5"}], "relations": [["beta", "alpha"]]})json"},
      {"kronecker-tail", R"json({"name": "kronecker-tail", "vertices": ["1", "2", "3"], "arrows": [{"id": "a", "tail": "1", "head": "2"}, {"id": "b", "tail": "1", "head": "2"}, {"id": "c", "tail": "2", "head": "3"}], "relations": [["a", "c"]]})json"},
      {"string-fork", R"json({"name": "string-fork", "vertices": ["1", "2", "3", "4"], "arrows": [{"id": "a", "tail": "1", "head": "2"}, {"id": "b", "tail": "2", "head": "3"}, {"id": "c", "tail": "2", "head": "4"}], "relations": [["a", "b"], ["a", "c"]]})json"},
  };
  return list;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [name, doc] : entries()) names.push_back(name);
  return names;
}

std::string catalog_document(std::string_view name) {
  for (const auto& [n, doc] : entries())
    if (n == name) return print_algebra(parse_algebra(doc));
  throw Error(ErrorCode::UnknownCatalogEntry, "no catalog entry named '" + std::string(name) + "'");
}

AlgebraPtr catalog_algebra(std::string_view name) {
  return std::make_shared<const Algebra>(parse_algebra(catalog_document(name)));
}

}  // namespace qmod
