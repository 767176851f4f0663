#include "bioc/model.hpp"

#include <set>
#include <sstream>

#include "bioc/error.hpp"
#include "bioc/utf8.hpp"

namespace bioc {

namespace {

struct Span {
    long long begin = 0;
    long long end = 0; // exclusive

    bool contains(const Span& other) const {
        return other.begin >= begin && other.end <= end;
    }
};

Span text_span(int offset, const std::string& text) {
    return {offset, offset + static_cast<long long>(utf8::length(text))};
}

class Checker {
public:
    explicit Checker(ValidationReport& report) : report_(report) {}

    void add(std::string path, std::string rule, std::string detail = "") {
        report_.violations.push_back({std::move(path), std::move(rule), std::move(detail)});
    }

    void check_infons(const std::string& path, const InfonMap& infons) {
        for (const auto& [key, value] : infons) {
            (void)value;
            if (key.empty())
                add(path, "infon key empty");
        }
    }

    // Returns the ids declared directly in this container, for uniqueness.
    std::set<std::string> check_annotations(const std::string& path,
                                            const std::vector<Annotation>& annotations,
                                            const Span& span) {
        std::set<std::string> ids;
        for (std::size_t i = 0; i < annotations.size(); ++i) {
            const Annotation& ann = annotations[i];
            const std::string apath = path + ".annotations[" + std::to_string(i) + "]";
            if (!ids.insert(ann.id).second)
                add(apath, "annotation id duplicate", "id \"" + ann.id + "\"");
            check_infons(apath, ann.infons);
            if (ann.locations.empty())
                add(apath, "annotation locations empty");
            for (std::size_t j = 0; j < ann.locations.size(); ++j) {
                const Location& loc = ann.locations[j];
                const std::string lpath = apath + ".locations[" + std::to_string(j) + "]";
                if (loc.offset < 0 || loc.length < 1) {
                    add(lpath, "location invalid",
                        "offset " + std::to_string(loc.offset) + ", length " +
                            std::to_string(loc.length));
                    continue;
                }
                Span lspan{loc.offset, static_cast<long long>(loc.offset) + loc.length};
                if (!span.contains(lspan))
                    add(lpath, "annotation outside passage span",
                        "[" + std::to_string(lspan.begin) + ", " + std::to_string(lspan.end) +
                            ") not in [" + std::to_string(span.begin) + ", " +
                            std::to_string(span.end) + ")");
            }
            if (ann.locations.size() == 1 && ann.locations[0].length >= 1 &&
                static_cast<long long>(utf8::length(ann.text)) != ann.locations[0].length)
                add(apath, "annotation text length mismatch",
                    "text has " + std::to_string(utf8::length(ann.text)) +
                        " code points, location length is " +
                        std::to_string(ann.locations[0].length));
        }
        return ids;
    }

    void check_relations(const std::string& path, const std::vector<Relation>& relations,
                         const std::set<std::string>& visible_ids) {
        for (std::size_t i = 0; i < relations.size(); ++i) {
            const Relation& rel = relations[i];
            const std::string rpath = path + ".relations[" + std::to_string(i) + "]";
            check_infons(rpath, rel.infons);
            if (rel.nodes.empty())
                add(rpath, "relation nodes empty");
            for (std::size_t j = 0; j < rel.nodes.size(); ++j) {
                const Node& node = rel.nodes[j];
                const std::string npath = rpath + ".nodes[" + std::to_string(j) + "]";
                if (node.refid.empty())
                    add(npath, "node refid empty");
                else if (!visible_ids.count(node.refid))
                    add(npath, "relation refid unresolved", "refid \"" + node.refid + "\"");
            }
        }
    }

private:
    ValidationReport& report_;
};

// All annotation ids declared anywhere inside the passage; these are what a
// relation in an enclosing scope can reference.
std::set<std::string> subtree_ids(const Passage& passage) {
    std::set<std::string> ids;
    for (const Annotation& ann : passage.annotations)
        ids.insert(ann.id);
    for (const Sentence& sentence : passage.sentences)
        for (const Annotation& ann : sentence.annotations)
            ids.insert(ann.id);
    return ids;
}

} // namespace

std::string ValidationReport::to_string() const {
    std::ostringstream out;
    for (const Violation& v : violations) {
        out << v.path << ": " << v.rule;
        if (!v.detail.empty())
            out << " (" << v.detail << ")";
        out << "\n";
    }
    return out.str();
}

ValidationReport validate(const Document& document) {
    ValidationReport report;
    Checker checker(report);

    if (document.id.empty())
        checker.add("id", "document id empty");
    checker.check_infons("infons", document.infons);

    for (std::size_t i = 0; i < document.passages.size(); ++i) {
        const Passage& passage = document.passages[i];
        const std::string path = "passages[" + std::to_string(i) + "]";

        checker.check_infons(path, passage.infons);
        const std::string* type = passage.infons.find("type");
        if (type == nullptr)
            checker.add(path, "passage type infon missing");
        else if (type->empty())
            checker.add(path, "passage type infon empty");

        if (passage.offset < 0)
            checker.add(path, "passage offset negative", std::to_string(passage.offset));
        if (i > 0 && document.passages[i].offset <= document.passages[i - 1].offset)
            checker.add(path, "passage offsets not increasing",
                        std::to_string(document.passages[i - 1].offset) + " then " +
                            std::to_string(document.passages[i].offset));

        const Span pspan = text_span(passage.offset, passage.text);
        auto passage_ids = checker.check_annotations(path, passage.annotations, pspan);

        for (std::size_t j = 0; j < passage.sentences.size(); ++j) {
            const Sentence& sentence = passage.sentences[j];
            const std::string spath = path + ".sentences[" + std::to_string(j) + "]";
            checker.check_infons(spath, sentence.infons);
            const Span sspan = text_span(sentence.offset, sentence.text);
            if (!pspan.contains(sspan))
                checker.add(spath, "sentence outside passage span",
                            "[" + std::to_string(sspan.begin) + ", " + std::to_string(sspan.end) +
                                ") not in [" + std::to_string(pspan.begin) + ", " +
                                std::to_string(pspan.end) + ")");
            auto sentence_ids = checker.check_annotations(spath, sentence.annotations, sspan);
            checker.check_relations(spath, sentence.relations, sentence_ids);
        }

        auto visible = subtree_ids(passage);
        checker.check_relations(path, passage.relations, visible);
    }

    std::set<std::string> document_ids;
    for (const Passage& passage : document.passages) {
        auto ids = subtree_ids(passage);
        document_ids.insert(ids.begin(), ids.end());
    }
    checker.check_relations("", document.relations, document_ids);

    return report;
}

ValidationReport validate(const Collection& collection) {
    ValidationReport report;
    Checker checker(report);
    checker.check_infons("infons", collection.infons);

    std::set<std::string> seen;
    for (std::size_t i = 0; i < collection.documents.size(); ++i) {
        const Document& document = collection.documents[i];
        const std::string prefix = "documents[" + std::to_string(i) + "]";
        if (!document.id.empty() && !seen.insert(document.id).second)
            checker.add(prefix, "document id duplicate", "id \"" + document.id + "\"");
        ValidationReport sub = validate(document);
        for (Violation& v : sub.violations) {
            v.path = v.path.empty() ? prefix : prefix + "." + v.path;
            report.violations.push_back(std::move(v));
        }
    }
    return report;
}

Document recompute_offsets(Document document, int separator) {
    long long offset = 0;
    for (Passage& passage : document.passages) {
        passage.offset = static_cast<int>(offset);
        offset += static_cast<long long>(utf8::length(passage.text)) + separator;
    }
    return document;
}

const std::string& passage_type(const Passage& passage) {
    const std::string* type = passage.infons.find("type");
    if (type == nullptr)
        throw Error(Error::Kind::MissingTypeInfon, "passage has no \"type\" infon");
    return *type;
}

} // namespace bioc
