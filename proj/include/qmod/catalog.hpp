#pragma once

// Bundled algebra documents.

#include <string>
#include <string_view>
#include <vector>

#include "qmod/module.hpp"

namespace qmod {

std::vector<std::string> catalog_names();
// Canonical JSON document; throws UnknownCatalogEntry.
std::string catalog_document(std::string_view name);
AlgebraPtr catalog_algebra(std::string_view name);

}  // namespace qmod
