#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bioc {

// Ordered key/value metadata attached to every BioC object. Insertion order
// is preserved so serialization is deterministic; setting an existing key
// replaces its value in place.
class InfonMap {
public:
    using Entry = std::pair<std::string, std::string>;

    InfonMap() = default;
    InfonMap(std::initializer_list<Entry> entries) {
        for (const auto& e : entries)
            set(e.first, e.second);
    }

    void set(std::string key, std::string value) {
        for (auto& e : entries_) {
            if (e.first == key) {
                e.second = std::move(value);
                return;
            }
        }
        entries_.emplace_back(std::move(key), std::move(value));
    }

    const std::string* find(std::string_view key) const {
        for (const auto& e : entries_)
            if (e.first == key)
                return &e.second;
        return nullptr;
    }

    bool contains(std::string_view key) const { return find(key) != nullptr; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool operator==(const InfonMap&) const = default;

private:
    std::vector<Entry> entries_;
};

// A span of document text: offset and length are in Unicode code points,
// counted from the start of the document text.
struct Location {
    int offset = 0;
    int length = 0;

    bool operator==(const Location&) const = default;
};

// Reference from a relation to an annotation id, with the role it plays.
struct Node {
    std::string refid;
    std::string role;

    bool operator==(const Node&) const = default;
};

// Stand-off annotation over passage or sentence text.
struct Annotation {
    std::string id;
    InfonMap infons;
    std::vector<Location> locations;
    std::string text;

    bool operator==(const Annotation&) const = default;
};

// Relation between annotations visible in the same scope.
struct Relation {
    std::string id;
    InfonMap infons;
    std::vector<Node> nodes;

    bool operator==(const Relation&) const = default;
};

struct Sentence {
    InfonMap infons;
    int offset = 0;
    std::string text;
    std::vector<Annotation> annotations;
    std::vector<Relation> relations;

    bool operator==(const Sentence&) const = default;
};

// One unit of document text (paragraph, title, caption...). The "type" infon
// is mandatory; offset is the document-level position of the first character.
struct Passage {
    InfonMap infons;
    int offset = 0;
    std::string text;
    std::vector<Sentence> sentences;
    std::vector<Annotation> annotations;
    std::vector<Relation> relations;

    bool operator==(const Passage&) const = default;
};

// One article: an id plus passages in reading order.
struct Document {
    std::string id;
    InfonMap infons;
    std::vector<Passage> passages;
    std::vector<Relation> relations;

    bool operator==(const Document&) const = default;
};

// Top-level container for documents.
struct Collection {
    std::string source;
    std::string date; // opaque; conventionally YYYYMMDD
    std::string key;
    InfonMap infons;
    std::vector<Document> documents;

    bool operator==(const Collection&) const = default;
};

// A single rule violation found by validate(). `path` addresses the offending
// object ("passages[2].annotations[0]"), `rule` names the broken rule.
struct Violation {
    std::string path;
    std::string rule;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// Checks every model invariant and reports all violations, not just the
// first. Violations are data; this never throws.
ValidationReport validate(const Document& document);

// Collection-level validation: per-document reports plus document id
// uniqueness. Paths are prefixed with "documents[i]".
ValidationReport validate(const Collection& collection);

// Reassigns passage offsets from the front: passage 0 starts at 0, each
// following passage starts `separator` code points after the previous text
// ends. Everything else is left untouched.
Document recompute_offsets(Document document, int separator = 1);

// Value of the mandatory "type" infon.
// Throws Error(MissingTypeInfon) when the infon is absent.
const std::string& passage_type(const Passage& passage);

} // namespace bioc
