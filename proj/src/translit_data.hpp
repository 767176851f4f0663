#pragma once

#include <cstddef>

namespace bioc::translit::detail {

struct FoldEntry {
    char32_t code_point;
    const char* replacement; // pure ASCII
};

// Both tables are sorted by code_point for binary search.
extern const FoldEntry kExplicit[];
extern const std::size_t kExplicitCount;

extern const FoldEntry kFold[];
extern const std::size_t kFoldCount;

} // namespace bioc::translit::detail
