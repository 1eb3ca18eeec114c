#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polylog/identity.hpp"

namespace polylog {

/// "core", "prop1", "prop2", "prop3", "d2", "soliton" and "all".
const std::vector<std::string>& suite_names();

/// Records of the named suite. Throws DomainError for an unknown name.
std::vector<IdentityRecord> suite_records(std::string_view name);

}  // namespace polylog
