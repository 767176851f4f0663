#include "bioc/outline.hpp"

namespace bioc {

namespace {

// "title_N" with N a positive integer opens structure; anything else is leaf
// content.
bool title_depth(const std::string& type, int& depth) {
    constexpr std::string_view prefix = "title_";
    if (type.size() <= prefix.size() || type.compare(0, prefix.size(), prefix) != 0)
        return false;
    long value = 0;
    for (std::size_t i = prefix.size(); i < type.size(); ++i) {
        const char c = type[i];
        if (c < '0' || c > '9')
            return false;
        value = value * 10 + (c - '0');
        if (value > 1'000'000)
            return false;
    }
    if (value < 1)
        return false;
    depth = static_cast<int>(value);
    return true;
}

void flatten_node(const SectionNode& node,
                  std::vector<std::pair<std::string, std::string>>& out) {
    if (node.title.has_value())
        out.emplace_back("title_" + std::to_string(node.depth), *node.title);
    for (const SectionLeaf& leaf : node.paragraphs)
        out.emplace_back(leaf.type, leaf.text);
    for (const SectionNode& child : node.children)
        flatten_node(child, out);
}

} // namespace

SectionNode build_outline(const std::vector<std::pair<std::string, std::string>>& passages) {
    SectionNode root;

    // Open sections, outermost first; indexes into the child chain starting
    // at root. Rebuilt as child vectors may reallocate, so keep a path of
    // child indexes instead of pointers.
    std::vector<std::size_t> path; // path[i] = child index at level i

    auto node_at = [&root, &path](std::size_t levels) -> SectionNode& {
        SectionNode* node = &root;
        for (std::size_t i = 0; i < levels; ++i)
            node = &node->children[path[i]];
        return *node;
    };

    for (const auto& [type, text] : passages) {
        int depth = 0;
        if (title_depth(type, depth)) {
            // close open sections at this depth or deeper
            while (!path.empty() && node_at(path.size()).depth >= depth)
                path.pop_back();
            SectionNode& parent = node_at(path.size());
            SectionNode child;
            child.title = text;
            child.depth = depth;
            parent.children.push_back(std::move(child));
            path.push_back(parent.children.size() - 1);
        } else {
            node_at(path.size()).paragraphs.push_back({type, text});
        }
    }
    return root;
}

SectionNode build_outline(const std::vector<Passage>& passages) {
    std::vector<std::pair<std::string, std::string>> pairs;
    pairs.reserve(passages.size());
    for (const Passage& passage : passages)
        pairs.emplace_back(passage_type(passage), passage.text);
    return build_outline(pairs);
}

std::vector<std::pair<std::string, std::string>> flatten_outline(const SectionNode& root) {
    std::vector<std::pair<std::string, std::string>> out;
    flatten_node(root, out);
    return out;
}

} // namespace bioc
