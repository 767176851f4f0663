#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bioc/model.hpp"

namespace bioc::jats {

enum class Encoding { Unicode, Ascii };

struct ConversionOptions {
    Encoding encoding = Encoding::Unicode;
    int separator = 1; // code points between consecutive passage texts
};

struct JatsSourceInfo {
    std::string pmcid; // "PMC" followed by digits
    std::optional<std::string> pmid;
    std::optional<std::string> journal;
};

// Pulls pmcid/pmid/journal out of a parsed article's <article-id> and
// <journal-title> elements. A bare numeric pmc id is normalized to
// "PMC<digits>". Fields the article does not declare stay empty.
JatsSourceInfo extract_source_info(std::string_view jats_xml);

// Flattens a JATS article into a linear BioC document. Passage types:
// article title -> "front", abstract paragraphs -> "abstract", section
// titles -> "title_<depth>", body paragraphs -> "paragraph", figure and
// table captions -> "fig_caption" / "table_caption", all in document order.
// With Encoding::Ascii every passage text is transliterated before offsets
// are computed. Throws Error(Parse) on malformed XML, Error(EmptyArticle)
// when nothing convertible is found, Error(MalformedId) on a bad pmcid.
Document convert(std::string_view jats_xml, const JatsSourceInfo& info,
                 const ConversionOptions& options = {});

// Inline flattening rule, exposed for direct use on a single element:
// <xref> subtrees are dropped (citation text included); a <sup>/<sub>
// holding only xrefs and punctuation is dropped whole; every other element
// is unwrapped keeping its text; whitespace runs collapse to single spaces
// and the ends are trimmed. `element_xml` must be one well-formed element.
std::string flatten_inline(std::string_view element_xml);

// All figure and table captions of an article in document order, as
// ("fig_caption"|"table_caption", text) pairs.
std::vector<std::pair<std::string, std::string>> caption_passages(std::string_view jats_xml);

} // namespace bioc::jats
