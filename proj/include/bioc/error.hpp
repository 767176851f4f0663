#pragma once

#include <stdexcept>
#include <string>

namespace bioc {

// One exception type for the whole library; kind() tells callers what went
// wrong without string matching.
class Error : public std::runtime_error {
public:
    enum class Kind {
        Parse,            // malformed XML/JSON input
        UnknownElement,   // element/key outside the BioC vocabulary
        MissingField,     // required element/key/attribute absent
        TypeMismatch,     // JSON value of the wrong type
        MissingTypeInfon, // passage lacks the "type" infon
        EmptyArticle,     // JATS input with no usable front matter or body
        MalformedId,      // id is neither a PMID nor a PMCID
        UnknownId,        // well-formed id not present in the index
        NotFound,         // no stored document for a resolved pmcid
        InvalidDocument,  // document fails validation on store
        ArchiveUnreadable // the archive itself cannot be read
    };

    Error(Kind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

} // namespace bioc
