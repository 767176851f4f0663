#include <sstream>
#include <string>

#include "bioc/error.hpp"
#include "bioc/serial.hpp"
#include "xml_dom.hpp"

namespace bioc {

namespace {

// ---- writing ----

void escape_text(std::string& out, std::string_view value) {
    for (char c : value) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '\r': out += "&#13;"; break; // parsers normalize bare CR away
        default: out.push_back(c);
        }
    }
}

void escape_attribute(std::string& out, std::string_view value) {
    for (char c : value) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\n': out += "&#10;"; break;
        case '\t': out += "&#9;"; break;
        case '\r': out += "&#13;"; break;
        default: out.push_back(c);
        }
    }
}

class XmlWriter {
public:
    std::string take() { return std::move(out_); }

    void leaf(int indent, std::string_view name, std::string_view content) {
        pad(indent);
        out_ += '<';
        out_ += name;
        out_ += '>';
        escape_text(out_, content);
        out_ += "</";
        out_ += name;
        out_ += ">\n";
    }

    void open(int indent, std::string_view tag_body) {
        pad(indent);
        out_ += '<';
        out_ += tag_body;
        out_ += ">\n";
    }

    void close(int indent, std::string_view name) {
        pad(indent);
        out_ += "</";
        out_ += name;
        out_ += ">\n";
    }

    void raw_line(int indent, std::string_view line) {
        pad(indent);
        out_ += line;
        out_ += '\n';
    }

    void infons(int indent, const InfonMap& infons) {
        for (const auto& [key, value] : infons) {
            pad(indent);
            out_ += "<infon key=\"";
            escape_attribute(out_, key);
            out_ += "\">";
            escape_text(out_, value);
            out_ += "</infon>\n";
        }
    }

private:
    void pad(int indent) { out_.append(static_cast<std::size_t>(indent) * 2, ' '); }

    std::string out_;
};

void write_annotation(XmlWriter& w, int indent, const Annotation& ann) {
    std::string tag = "annotation id=\"";
    escape_attribute(tag, ann.id);
    tag += '"';
    w.open(indent, tag);
    w.infons(indent + 1, ann.infons);
    for (const Location& loc : ann.locations)
        w.raw_line(indent + 1, "<location offset=\"" + std::to_string(loc.offset) +
                                   "\" length=\"" + std::to_string(loc.length) + "\"/>");
    w.leaf(indent + 1, "text", ann.text);
    w.close(indent, "annotation");
}

void write_relation(XmlWriter& w, int indent, const Relation& rel) {
    std::string tag = "relation id=\"";
    escape_attribute(tag, rel.id);
    tag += '"';
    w.open(indent, tag);
    w.infons(indent + 1, rel.infons);
    for (const Node& node : rel.nodes) {
        std::string line = "<node refid=\"";
        escape_attribute(line, node.refid);
        line += "\" role=\"";
        escape_attribute(line, node.role);
        line += "\"/>";
        w.raw_line(indent + 1, line);
    }
    w.close(indent, "relation");
}

void write_sentence(XmlWriter& w, int indent, const Sentence& sentence) {
    w.open(indent, "sentence");
    w.infons(indent + 1, sentence.infons);
    w.leaf(indent + 1, "offset", std::to_string(sentence.offset));
    w.leaf(indent + 1, "text", sentence.text);
    for (const Annotation& ann : sentence.annotations)
        write_annotation(w, indent + 1, ann);
    for (const Relation& rel : sentence.relations)
        write_relation(w, indent + 1, rel);
    w.close(indent, "sentence");
}

void write_passage(XmlWriter& w, int indent, const Passage& passage) {
    w.open(indent, "passage");
    w.infons(indent + 1, passage.infons);
    w.leaf(indent + 1, "offset", std::to_string(passage.offset));
    w.leaf(indent + 1, "text", passage.text);
    for (const Sentence& sentence : passage.sentences)
        write_sentence(w, indent + 1, sentence);
    for (const Annotation& ann : passage.annotations)
        write_annotation(w, indent + 1, ann);
    for (const Relation& rel : passage.relations)
        write_relation(w, indent + 1, rel);
    w.close(indent, "passage");
}

// ---- reading ----

[[noreturn]] void unknown_element(const xmldom::Element& element) {
    throw Error(Error::Kind::UnknownElement,
                "unknown element <" + element.name + "> at line " + std::to_string(element.line));
}

[[noreturn]] void unexpected_element(const xmldom::Element& element, const std::string& parent) {
    throw Error(Error::Kind::Parse, "unexpected element <" + element.name + "> in <" + parent +
                                        "> at line " + std::to_string(element.line));
}

bool is_known_name(const std::string& name) {
    static const char* const kNames[] = {"collection", "source",     "date",   "key",
                                         "infon",      "document",   "id",     "passage",
                                         "offset",     "text",       "sentence", "annotation",
                                         "location",   "relation",   "node"};
    for (const char* known : kNames)
        if (name == known)
            return true;
    return false;
}

// Non-whitelist names are UnknownElement; whitelist names in the wrong place
// are plain parse errors.
[[noreturn]] void reject_element(const xmldom::Element& element, const std::string& parent) {
    if (!is_known_name(element.name))
        unknown_element(element);
    unexpected_element(element, parent);
}

// Walks the element children of a container, rejecting non-whitespace text.
class ChildReader {
public:
    explicit ChildReader(const xmldom::Element& parent) : parent_(parent) {
        for (const xmldom::ChildNode& c : parent.children) {
            if (c.is_element()) {
                elements_.push_back(c.element.get());
            } else if (c.text.find_first_not_of(" \t\r\n") != std::string::npos) {
                throw Error(Error::Kind::Parse, "unexpected text content in <" + parent.name +
                                                    "> at line " + std::to_string(parent.line));
            }
        }
    }

    // Next child if it has the given name, else nullptr (does not advance).
    const xmldom::Element* peek(std::string_view name) const {
        if (pos_ < elements_.size() && elements_[pos_]->name == name)
            return elements_[pos_];
        return nullptr;
    }

    const xmldom::Element* take(std::string_view name) {
        const xmldom::Element* e = peek(name);
        if (e != nullptr)
            ++pos_;
        return e;
    }

    // Required child; MissingField when absent, UnknownElement/Parse when
    // something else sits in its place.
    const xmldom::Element& require(std::string_view name) {
        if (const xmldom::Element* e = take(name))
            return *e;
        if (pos_ < elements_.size())
            reject_element(*elements_[pos_], parent_.name);
        throw Error(Error::Kind::MissingField, "<" + parent_.name + "> at line " +
                                                   std::to_string(parent_.line) + " is missing <" +
                                                   std::string(name) + ">");
    }

    // All siblings left over once the grammar is exhausted are errors.
    void finish() {
        if (pos_ < elements_.size())
            reject_element(*elements_[pos_], parent_.name);
    }

private:
    const xmldom::Element& parent_;
    std::vector<const xmldom::Element*> elements_;
    std::size_t pos_ = 0;
};

void require_no_attributes(const xmldom::Element& element) {
    if (!element.attributes.empty())
        throw Error(Error::Kind::Parse, "unexpected attribute \"" + element.attributes[0].first +
                                            "\" on <" + element.name + "> at line " +
                                            std::to_string(element.line));
}

const std::string& require_attribute(const xmldom::Element& element, std::string_view name) {
    if (const std::string* value = element.attribute(name))
        return *value;
    throw Error(Error::Kind::MissingField, "<" + element.name + "> at line " +
                                               std::to_string(element.line) +
                                               " is missing attribute \"" + std::string(name) +
                                               "\"");
}

void check_attributes(const xmldom::Element& element,
                      std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : element.attributes) {
        (void)value;
        bool ok = false;
        for (std::string_view a : allowed)
            if (key == a)
                ok = true;
        if (!ok)
            throw Error(Error::Kind::Parse, "unexpected attribute \"" + key + "\" on <" +
                                                element.name + "> at line " +
                                                std::to_string(element.line));
    }
}

int parse_int(const xmldom::Element& element, const std::string& raw) {
    std::size_t begin = raw.find_first_not_of(" \t\r\n");
    std::size_t end = raw.find_last_not_of(" \t\r\n");
    if (begin == std::string::npos)
        throw Error(Error::Kind::Parse, "empty integer in <" + element.name + "> at line " +
                                            std::to_string(element.line));
    std::string trimmed = raw.substr(begin, end - begin + 1);
    std::size_t digits = trimmed[0] == '-' ? 1 : 0;
    if (digits == trimmed.size() ||
        trimmed.find_first_not_of("0123456789", digits) != std::string::npos)
        throw Error(Error::Kind::Parse, "invalid integer \"" + trimmed + "\" in <" + element.name +
                                            "> at line " + std::to_string(element.line));
    try {
        return std::stoi(trimmed);
    } catch (const std::exception&) {
        throw Error(Error::Kind::Parse, "integer out of range in <" + element.name + "> at line " +
                                            std::to_string(element.line));
    }
}

void read_infon(const xmldom::Element& element, InfonMap& infons) {
    check_attributes(element, {"key"});
    const std::string& key = require_attribute(element, "key");
    for (const xmldom::ChildNode& c : element.children)
        if (c.is_element())
            reject_element(*c.element, element.name);
    infons.set(key, element.direct_text());
}

std::string read_leaf_text(const xmldom::Element& element) {
    require_no_attributes(element);
    for (const xmldom::ChildNode& c : element.children)
        if (c.is_element())
            reject_element(*c.element, element.name);
    return element.direct_text();
}

Location read_location(const xmldom::Element& element) {
    check_attributes(element, {"offset", "length"});
    Location loc;
    loc.offset = parse_int(element, require_attribute(element, "offset"));
    loc.length = parse_int(element, require_attribute(element, "length"));
    ChildReader children(element);
    children.finish();
    return loc;
}

Annotation read_annotation(const xmldom::Element& element) {
    check_attributes(element, {"id"});
    Annotation ann;
    ann.id = require_attribute(element, "id");
    ChildReader children(element);
    while (const xmldom::Element* e = children.take("infon"))
        read_infon(*e, ann.infons);
    while (const xmldom::Element* e = children.take("location"))
        ann.locations.push_back(read_location(*e));
    if (const xmldom::Element* e = children.take("text"))
        ann.text = read_leaf_text(*e);
    children.finish();
    return ann;
}

Node read_node(const xmldom::Element& element) {
    check_attributes(element, {"refid", "role"});
    Node node;
    node.refid = require_attribute(element, "refid");
    node.role = require_attribute(element, "role");
    ChildReader children(element);
    children.finish();
    return node;
}

Relation read_relation(const xmldom::Element& element) {
    check_attributes(element, {"id"});
    Relation rel;
    rel.id = require_attribute(element, "id");
    ChildReader children(element);
    while (const xmldom::Element* e = children.take("infon"))
        read_infon(*e, rel.infons);
    while (const xmldom::Element* e = children.take("node"))
        rel.nodes.push_back(read_node(*e));
    children.finish();
    return rel;
}

Sentence read_sentence(const xmldom::Element& element) {
    require_no_attributes(element);
    Sentence sentence;
    ChildReader children(element);
    while (const xmldom::Element* e = children.take("infon"))
        read_infon(*e, sentence.infons);
    sentence.offset = parse_int(element, read_leaf_text(children.require("offset")));
    if (const xmldom::Element* e = children.take("text"))
        sentence.text = read_leaf_text(*e);
    while (const xmldom::Element* e = children.take("annotation"))
        sentence.annotations.push_back(read_annotation(*e));
    while (const xmldom::Element* e = children.take("relation"))
        sentence.relations.push_back(read_relation(*e));
    children.finish();
    return sentence;
}

Passage read_passage(const xmldom::Element& element) {
    require_no_attributes(element);
    Passage passage;
    ChildReader children(element);
    while (const xmldom::Element* e = children.take("infon"))
        read_infon(*e, passage.infons);
    passage.offset = parse_int(element, read_leaf_text(children.require("offset")));
    if (const xmldom::Element* e = children.take("text"))
        passage.text = read_leaf_text(*e);
    while (const xmldom::Element* e = children.take("sentence"))
        passage.sentences.push_back(read_sentence(*e));
    while (const xmldom::Element* e = children.take("annotation"))
        passage.annotations.push_back(read_annotation(*e));
    while (const xmldom::Element* e = children.take("relation"))
        passage.relations.push_back(read_relation(*e));
    children.finish();
    return passage;
}

Document read_document(const xmldom::Element& element) {
    require_no_attributes(element);
    Document document;
    ChildReader children(element);
    document.id = read_leaf_text(children.require("id"));
    while (const xmldom::Element* e = children.take("infon"))
        read_infon(*e, document.infons);
    while (const xmldom::Element* e = children.take("passage"))
        document.passages.push_back(read_passage(*e));
    while (const xmldom::Element* e = children.take("relation"))
        document.relations.push_back(read_relation(*e));
    children.finish();
    return document;
}

} // namespace

std::string to_xml(const Collection& collection) {
    XmlWriter w;
    w.raw_line(0, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    w.open(0, "collection");
    w.leaf(1, "source", collection.source);
    w.leaf(1, "date", collection.date);
    w.leaf(1, "key", collection.key);
    w.infons(1, collection.infons);
    for (const Document& document : collection.documents) {
        w.open(1, "document");
        w.leaf(2, "id", document.id);
        w.infons(2, document.infons);
        for (const Passage& passage : document.passages)
            write_passage(w, 2, passage);
        for (const Relation& rel : document.relations)
            write_relation(w, 2, rel);
        w.close(1, "document");
    }
    w.close(0, "collection");
    return w.take();
}

Collection from_xml(std::string_view xml) {
    std::unique_ptr<xmldom::Element> root = xmldom::parse(xml);
    if (root->name != "collection") {
        if (!is_known_name(root->name))
            unknown_element(*root);
        throw Error(Error::Kind::Parse, "root element is <" + root->name +
                                            ">, expected <collection>");
    }
    require_no_attributes(*root);

    Collection collection;
    ChildReader children(*root);
    collection.source = read_leaf_text(children.require("source"));
    collection.date = read_leaf_text(children.require("date"));
    collection.key = read_leaf_text(children.require("key"));
    while (const xmldom::Element* e = children.take("infon"))
        read_infon(*e, collection.infons);
    while (const xmldom::Element* e = children.take("document"))
        collection.documents.push_back(read_document(*e));
    children.finish();
    return collection;
}

std::string serialize(const Collection& collection, SerializationFormat format) {
    return format == SerializationFormat::XML ? to_xml(collection) : to_json(collection);
}

} // namespace bioc
