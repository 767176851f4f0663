#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bioc/model.hpp"

namespace bioc {

// Leaf content of a section: a passage that does not open structure. The
// original passage type is kept so flattening reproduces the sequence
// exactly, captions included.
struct SectionLeaf {
    std::string type;
    std::string text;

    bool operator==(const SectionLeaf&) const = default;
};

// A recovered section: its title, nesting depth (0 for the implicit,
// untitled root), leaf passages, and subsections. A node's leaves always
// precede its children, mirroring the linear passage order.
struct SectionNode {
    std::optional<std::string> title;
    int depth = 0;
    std::vector<SectionLeaf> paragraphs;
    std::vector<SectionNode> children;

    bool operator==(const SectionNode&) const = default;
};

// Rebuilds the section tree from a linear passage sequence. A passage typed
// "title_N" opens a depth-N section under the nearest open section of
// smaller depth (closing anything deeper or equal); every other passage
// lands in the paragraphs of the most recently opened section. Any sequence
// is accepted; depth gaps attach without synthetic intermediate nodes.
SectionNode build_outline(const std::vector<std::pair<std::string, std::string>>& passages);

// Convenience overload reading (type, text) from passages; passages must
// carry a "type" infon.
SectionNode build_outline(const std::vector<Passage>& passages);

// Pre-order flattening, the inverse of build_outline: each titled section
// emits ("title_<depth>", title), then its leaves with their stored types,
// then its children.
std::vector<std::pair<std::string, std::string>> flatten_outline(const SectionNode& root);

} // namespace bioc
