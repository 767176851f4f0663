#include "bioc/jats.hpp"

#include <cctype>

#include "bioc/error.hpp"
#include "bioc/translit.hpp"
#include "bioc/utf8.hpp"
#include "xml_dom.hpp"

namespace bioc::jats {

namespace {

using xmldom::ChildNode;
using xmldom::Element;

bool is_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

bool is_pmcid(std::string_view s) {
    return s.size() > 3 && s.substr(0, 3) == "PMC" && is_digits(s.substr(3));
}

// Punctuation/whitespace that may sit between citation xrefs inside a
// sup/sub without making it real content. Dashes cover "1-4" style ranges
// written between separate xrefs.
bool is_ref_filler(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char32_t cp = utf8::decode_next(text, pos);
        if (cp < 0x80 &&
            (std::isspace(static_cast<int>(cp)) || std::ispunct(static_cast<int>(cp))))
            continue;
        if (cp == 0x2013 || cp == 0x2014)
            continue;
        return false;
    }
    return true;
}

// A sup/sub that only wraps citation markers.
bool is_citation_wrapper(const Element& element) {
    if (element.name != "sup" && element.name != "sub")
        return false;
    bool has_xref = false;
    for (const ChildNode& c : element.children) {
        if (c.is_element()) {
            if (c.element->name != "xref")
                return false;
            has_xref = true;
        } else if (!is_ref_filler(c.text)) {
            return false;
        }
    }
    return has_xref;
}

void collapse_whitespace(std::string& text) {
    std::string out;
    out.reserve(text.size());
    bool in_space = false;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            in_space = true;
            continue;
        }
        if (in_space && !out.empty())
            out.push_back(' ');
        in_space = false;
        out.push_back(c);
    }
    text = std::move(out);
}

// Inline text of an element subtree. `stop` names elements whose subtrees
// are excluded (they become their own passages elsewhere).
void gather_inline(const Element& element, const std::vector<std::string_view>& stop,
                   std::string& out) {
    for (const ChildNode& c : element.children) {
        if (!c.is_element()) {
            out += c.text;
            continue;
        }
        const Element& child = *c.element;
        if (child.name == "xref" || is_citation_wrapper(child))
            continue;
        bool stopped = false;
        for (std::string_view s : stop)
            if (child.name == s)
                stopped = true;
        if (stopped)
            continue;
        gather_inline(child, stop, out);
    }
}

std::string inline_text(const Element& element, const std::vector<std::string_view>& stop = {}) {
    std::string out;
    gather_inline(element, stop, out);
    collapse_whitespace(out);
    return out;
}

// Caption text: block children (title, p, ...) flattened individually and
// joined with single spaces.
std::string caption_text(const Element& caption) {
    std::string out;
    std::string direct;
    for (const ChildNode& c : caption.children) {
        if (!c.is_element()) {
            direct += c.text;
            continue;
        }
        std::string block = inline_text(*c.element);
        if (block.empty())
            continue;
        if (!out.empty())
            out += ' ';
        out += block;
    }
    collapse_whitespace(direct);
    if (!direct.empty())
        out = out.empty() ? direct : direct + " " + out;
    return out;
}

class PassageCollector {
public:
    std::vector<std::pair<std::string, std::string>> passages;

    void emit(std::string type, std::string text) {
        if (text.empty())
            return;
        passages.emplace_back(std::move(type), std::move(text));
    }

    void emit_caption(const Element& container, const char* type) {
        if (const Element* caption = container.first_child("caption"))
            emit(type, caption_text(*caption));
    }

    // Captions of figures/tables nested inside an element (e.g. a <p>), in
    // document order, after the host's own text.
    void emit_nested_floats(const Element& element) {
        for (const ChildNode& c : element.children) {
            if (!c.is_element())
                continue;
            const Element& child = *c.element;
            if (child.name == "fig") {
                emit_caption(child, "fig_caption");
            } else if (child.name == "table-wrap") {
                emit_caption(child, "table_caption");
            } else if (child.name != "table") {
                emit_nested_floats(child);
            }
        }
    }

    // Walks body content. `depth` is the <sec> nesting level of `element`'s
    // children; body itself is depth 0, so top-level section titles come out
    // as title_1.
    void walk_body(const Element& element, int depth) {
        for (const ChildNode& c : element.children) {
            if (!c.is_element())
                continue;
            const Element& child = *c.element;
            if (child.name == "sec") {
                walk_body(child, depth + 1);
            } else if (child.name == "title") {
                if (element.name == "sec")
                    emit("title_" + std::to_string(depth), inline_text(child));
            } else if (child.name == "p") {
                emit("paragraph", inline_text(child, {"fig", "table-wrap"}));
                emit_nested_floats(child);
            } else if (child.name == "fig" || child.name == "fig-group") {
                if (child.name == "fig")
                    emit_caption(child, "fig_caption");
                else
                    emit_nested_floats(child);
            } else if (child.name == "table-wrap" || child.name == "table-wrap-group") {
                if (child.name == "table-wrap")
                    emit_caption(child, "table_caption");
                else
                    emit_nested_floats(child);
            } else if (child.name == "table") {
                // cell contents are out of scope; captions were handled above
            } else {
                walk_body(child, depth);
            }
        }
    }
};

// All <p> descendants, for abstracts.
void collect_paragraphs(const Element& element, std::vector<const Element*>& out) {
    for (const ChildNode& c : element.children) {
        if (!c.is_element())
            continue;
        if (c.element->name == "p")
            out.push_back(c.element.get());
        else
            collect_paragraphs(*c.element, out);
    }
}

void collect_captions(const Element& element,
                      std::vector<std::pair<std::string, std::string>>& out) {
    for (const ChildNode& c : element.children) {
        if (!c.is_element())
            continue;
        const Element& child = *c.element;
        if (child.name == "fig" || child.name == "table-wrap") {
            if (const Element* caption = child.first_child("caption")) {
                std::string text = caption_text(*caption);
                if (!text.empty())
                    out.emplace_back(
                        child.name == "fig" ? "fig_caption" : "table_caption", std::move(text));
            }
            continue;
        }
        collect_captions(child, out);
    }
}

} // namespace

JatsSourceInfo extract_source_info(std::string_view jats_xml) {
    std::unique_ptr<Element> root = xmldom::parse(jats_xml);
    JatsSourceInfo info;

    const Element* front = root->first_child("front");
    const Element* scope = front != nullptr ? front : root.get();

    std::vector<const Element*> stack{scope};
    while (!stack.empty()) {
        const Element* e = stack.back();
        stack.pop_back();
        if (e->name == "article-id") {
            const std::string* type = e->attribute("pub-id-type");
            std::string value = e->direct_text();
            collapse_whitespace(value);
            if (type != nullptr && (*type == "pmc" || *type == "pmcid")) {
                if (is_digits(value))
                    value = "PMC" + value;
                if (is_pmcid(value))
                    info.pmcid = value;
            } else if (type != nullptr && *type == "pmid" && is_digits(value)) {
                info.pmid = value;
            }
        } else if (e->name == "journal-title" && !info.journal.has_value()) {
            std::string value = inline_text(*e);
            if (!value.empty())
                info.journal = value;
        }
        for (auto it = e->children.rbegin(); it != e->children.rend(); ++it)
            if (it->is_element())
                stack.push_back(it->element.get());
    }
    return info;
}

Document convert(std::string_view jats_xml, const JatsSourceInfo& info,
                 const ConversionOptions& options) {
    if (!is_pmcid(info.pmcid))
        throw Error(Error::Kind::MalformedId,
                    "\"" + info.pmcid + "\" is not a PMC id (PMC followed by digits)");

    std::unique_ptr<Element> root = xmldom::parse(jats_xml);
    PassageCollector collector;

    if (const Element* front = root->first_child("front")) {
        if (const Element* title = front->find_descendant("article-title"))
            collector.emit("front", inline_text(*title));
        std::vector<const Element*> stack{front};
        while (!stack.empty()) {
            const Element* e = stack.back();
            stack.pop_back();
            if (e->name == "abstract") {
                std::vector<const Element*> paragraphs;
                collect_paragraphs(*e, paragraphs);
                for (const Element* p : paragraphs)
                    collector.emit("abstract", inline_text(*p));
                continue;
            }
            for (auto it = e->children.rbegin(); it != e->children.rend(); ++it)
                if (it->is_element())
                    stack.push_back(it->element.get());
        }
    }

    if (const Element* body = root->first_child("body"))
        collector.walk_body(*body, 0);

    if (collector.passages.empty())
        throw Error(Error::Kind::EmptyArticle,
                    "article " + info.pmcid + " has no convertible front matter or body");

    Document document;
    document.id = info.pmcid;
    if (info.pmid.has_value())
        document.infons.set("pmid", *info.pmid);
    if (info.journal.has_value())
        document.infons.set("journal", *info.journal);

    for (auto& [type, text] : collector.passages) {
        Passage passage;
        passage.infons.set("type", std::move(type));
        passage.text = options.encoding == Encoding::Ascii ? translit::to_ascii(text)
                                                           : std::move(text);
        document.passages.push_back(std::move(passage));
    }
    return recompute_offsets(std::move(document), options.separator);
}

std::string flatten_inline(std::string_view element_xml) {
    std::unique_ptr<Element> root = xmldom::parse(element_xml);
    return inline_text(*root);
}

std::vector<std::pair<std::string, std::string>> caption_passages(std::string_view jats_xml) {
    std::unique_ptr<Element> root = xmldom::parse(jats_xml);
    std::vector<std::pair<std::string, std::string>> out;
    collect_captions(*root, out);
    return out;
}

} // namespace bioc::jats
