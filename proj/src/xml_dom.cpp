#include "xml_dom.hpp"

#include <expat.h>

#include "bioc/error.hpp"

namespace bioc::xmldom {

const Element* Element::find_descendant(std::string_view child_name) const {
    for (const ChildNode& c : children) {
        if (!c.is_element())
            continue;
        if (c.element->name == child_name)
            return c.element.get();
        if (const Element* found = c.element->find_descendant(child_name))
            return found;
    }
    return nullptr;
}

namespace {

struct Builder {
    XML_Parser parser = nullptr;
    std::unique_ptr<Element> root;
    std::vector<Element*> stack;

    void start(const XML_Char* name, const XML_Char** attrs) {
        auto element = std::make_unique<Element>();
        element->name = name;
        element->line = static_cast<int>(XML_GetCurrentLineNumber(parser));
        for (int i = 0; attrs[i] != nullptr; i += 2)
            element->attributes.emplace_back(attrs[i], attrs[i + 1]);

        Element* raw = element.get();
        if (stack.empty()) {
            root = std::move(element);
        } else {
            ChildNode child;
            child.element = std::move(element);
            stack.back()->children.push_back(std::move(child));
        }
        stack.push_back(raw);
    }

    void end() { stack.pop_back(); }

    void characters(const XML_Char* data, int len) {
        if (stack.empty())
            return;
        auto& children = stack.back()->children;
        if (!children.empty() && !children.back().is_element()) {
            children.back().text.append(data, static_cast<std::size_t>(len));
        } else {
            ChildNode child;
            child.text.assign(data, static_cast<std::size_t>(len));
            children.push_back(std::move(child));
        }
    }
};

void start_handler(void* user, const XML_Char* name, const XML_Char** attrs) {
    static_cast<Builder*>(user)->start(name, attrs);
}

void end_handler(void* user, const XML_Char*) {
    static_cast<Builder*>(user)->end();
}

void char_handler(void* user, const XML_Char* data, int len) {
    static_cast<Builder*>(user)->characters(data, len);
}

} // namespace

std::unique_ptr<Element> parse(std::string_view xml) {
    XML_Parser parser = XML_ParserCreate(nullptr);
    if (parser == nullptr)
        throw Error(Error::Kind::Parse, "could not create XML parser");

    Builder builder;
    builder.parser = parser;
    XML_SetUserData(parser, &builder);
    XML_SetElementHandler(parser, start_handler, end_handler);
    XML_SetCharacterDataHandler(parser, char_handler);

    const XML_Status status =
        XML_Parse(parser, xml.data(), static_cast<int>(xml.size()), /*isFinal=*/1);
    if (status != XML_STATUS_OK) {
        std::string message = "XML parse error: ";
        message += XML_ErrorString(XML_GetErrorCode(parser));
        message += " at line " + std::to_string(XML_GetCurrentLineNumber(parser)) + ", column " +
                   std::to_string(XML_GetCurrentColumnNumber(parser) + 1);
        XML_ParserFree(parser);
        throw Error(Error::Kind::Parse, message);
    }
    XML_ParserFree(parser);

    if (builder.root == nullptr)
        throw Error(Error::Kind::Parse, "XML parse error: no root element");
    return std::move(builder.root);
}

} // namespace bioc::xmldom
