#pragma once

#include <string>
#include <string_view>

#include "bioc/model.hpp"

namespace bioc {

enum class SerializationFormat { XML, JSON };

// BioC XML. The emitted vocabulary is exactly these 15 elements:
// collection, source, date, key, infon, document, id, passage, offset, text,
// sentence, annotation, location, relation, node.
//
// Output is deterministic: the same collection always serializes to the same
// bytes. The caller is expected to pass a collection that validates cleanly.
std::string to_xml(const Collection& collection);

// Strict inverse of to_xml. Elements outside the 15-name vocabulary raise
// Error(UnknownElement); a passage without <offset>, or a document without
// <id>, raises Error(MissingField); malformed XML raises Error(Parse).
// Duplicate infon keys are last-wins, matching JSON object semantics.
Collection from_xml(std::string_view xml);

// BioC JSON, keyed as in the BioC class layout: collections are
// {source, date, key, infons, documents}; documents {id, infons, passages,
// relations}; passages {text, offset, relations, infons, sentences,
// annotations}. Empty lists are materialized as empty arrays.
std::string to_json(const Collection& collection);

// Strict inverse of to_json. Unknown keys raise Error(UnknownElement); a
// missing "text" or "offset" raises Error(MissingField); wrong value types
// raise Error(TypeMismatch) with the offending path in the message. Missing
// list keys (sentences, annotations, relations) default to empty.
Collection from_json(std::string_view json);

std::string serialize(const Collection& collection, SerializationFormat format);

} // namespace bioc
