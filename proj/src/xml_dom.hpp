#pragma once

// Minimal in-memory XML tree built on expat. Internal to the library; the
// public surface only deals in strings and bioc model types.

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bioc::xmldom {

struct Element;

// Children keep document order; text nodes are the concatenated character
// data between sibling elements (adjacent chunks merged).
struct ChildNode {
    // exactly one of the two is active
    std::unique_ptr<Element> element;
    std::string text;

    bool is_element() const { return element != nullptr; }
};

struct Element {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attributes; // document order
    std::vector<ChildNode> children;
    int line = 0; // 1-based source line of the start tag

    const std::string* attribute(std::string_view key) const {
        for (const auto& a : attributes)
            if (a.first == key)
                return &a.second;
        return nullptr;
    }

    // Concatenated character data of direct children (elements skipped).
    std::string direct_text() const {
        std::string out;
        for (const ChildNode& c : children)
            if (!c.is_element())
                out += c.text;
        return out;
    }

    // First element child with the given name, or nullptr.
    const Element* first_child(std::string_view child_name) const {
        for (const ChildNode& c : children)
            if (c.is_element() && c.element->name == child_name)
                return c.element.get();
        return nullptr;
    }

    // First element with the given name in this subtree (pre-order), or nullptr.
    const Element* find_descendant(std::string_view child_name) const;
};

// Parses a whole XML document; throws Error(Parse) with line/column info on
// malformed input. The returned element is the document root.
std::unique_ptr<Element> parse(std::string_view xml);

} // namespace bioc::xmldom
