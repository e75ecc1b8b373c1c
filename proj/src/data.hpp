#pragma once

#include <utility>
#include <vector>

namespace zxw::detail {

extern const char* const kZxMacros;
extern const char* const kZxRules;
extern const char* const kZwRules;
extern const char* const kLemmas;
extern const std::vector<std::pair<const char*, const char*>> kProofs;

}  // namespace zxw::detail
