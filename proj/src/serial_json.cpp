#include <string>

#include <json.hpp>

#include "bioc/error.hpp"
#include "bioc/serial.hpp"

namespace bioc {

namespace {

using Json = nlohmann::ordered_json;

// ---- writing ----

Json infons_json(const InfonMap& infons) {
    Json out = Json::object();
    for (const auto& [key, value] : infons)
        out[key] = value;
    return out;
}

Json annotation_json(const Annotation& ann) {
    Json out = Json::object();
    out["id"] = ann.id;
    out["infons"] = infons_json(ann.infons);
    out["text"] = ann.text;
    Json locations = Json::array();
    for (const Location& loc : ann.locations)
        locations.push_back(Json{{"offset", loc.offset}, {"length", loc.length}});
    out["locations"] = std::move(locations);
    return out;
}

Json relation_json(const Relation& rel) {
    Json out = Json::object();
    out["id"] = rel.id;
    out["infons"] = infons_json(rel.infons);
    Json nodes = Json::array();
    for (const Node& node : rel.nodes)
        nodes.push_back(Json{{"refid", node.refid}, {"role", node.role}});
    out["nodes"] = std::move(nodes);
    return out;
}

template <typename T, typename Fn>
Json list_json(const std::vector<T>& items, Fn fn) {
    Json out = Json::array();
    for (const T& item : items)
        out.push_back(fn(item));
    return out;
}

Json sentence_json(const Sentence& sentence) {
    Json out = Json::object();
    out["text"] = sentence.text;
    out["offset"] = sentence.offset;
    out["relations"] = list_json(sentence.relations, relation_json);
    out["infons"] = infons_json(sentence.infons);
    out["annotations"] = list_json(sentence.annotations, annotation_json);
    return out;
}

// Passage keys follow the usual BioC JSON layout:
// text, offset, relations, infons, sentences, annotations.
Json passage_json(const Passage& passage) {
    Json out = Json::object();
    out["text"] = passage.text;
    out["offset"] = passage.offset;
    out["relations"] = list_json(passage.relations, relation_json);
    out["infons"] = infons_json(passage.infons);
    out["sentences"] = list_json(passage.sentences, sentence_json);
    out["annotations"] = list_json(passage.annotations, annotation_json);
    return out;
}

// ---- reading ----

[[noreturn]] void type_mismatch(const std::string& path, const char* expected) {
    throw Error(Error::Kind::TypeMismatch, path + ": expected " + expected);
}

void check_keys(const Json& object, const std::string& path,
                std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : object.items()) {
        (void)value;
        bool ok = false;
        for (std::string_view a : allowed)
            if (key == a)
                ok = true;
        if (!ok)
            throw Error(Error::Kind::UnknownElement, path + ": unknown key \"" + key + "\"");
    }
}

const Json& require_key(const Json& object, const std::string& path, const char* key) {
    auto it = object.find(key);
    if (it == object.end())
        throw Error(Error::Kind::MissingField, path + "." + key + " is missing");
    return *it;
}

std::string read_string(const Json& object, const std::string& path, const char* key) {
    const Json& value = require_key(object, path, key);
    if (!value.is_string())
        type_mismatch(path + "." + key, "a string");
    return value.get<std::string>();
}

int read_int(const Json& object, const std::string& path, const char* key) {
    const Json& value = require_key(object, path, key);
    if (!value.is_number_integer())
        type_mismatch(path + "." + key, "an integer");
    return value.get<int>();
}

const Json* optional_array(const Json& object, const std::string& path, const char* key) {
    auto it = object.find(key);
    if (it == object.end())
        return nullptr;
    if (!it->is_array())
        type_mismatch(path + "." + key, "an array");
    return &*it;
}

void require_object(const Json& value, const std::string& path) {
    if (!value.is_object())
        type_mismatch(path, "an object");
}

InfonMap read_infons(const Json& object, const std::string& path) {
    InfonMap infons;
    auto it = object.find("infons");
    if (it == object.end())
        return infons;
    if (!it->is_object())
        type_mismatch(path + ".infons", "an object");
    for (const auto& [key, value] : it->items()) {
        if (!value.is_string())
            type_mismatch(path + ".infons." + key, "a string");
        infons.set(key, value.get<std::string>());
    }
    return infons;
}

Annotation read_annotation(const Json& json, const std::string& path) {
    require_object(json, path);
    check_keys(json, path, {"id", "infons", "text", "locations"});
    Annotation ann;
    ann.id = read_string(json, path, "id");
    ann.infons = read_infons(json, path);
    ann.text = read_string(json, path, "text");
    if (const Json* locations = optional_array(json, path, "locations")) {
        for (std::size_t i = 0; i < locations->size(); ++i) {
            const std::string lpath = path + ".locations[" + std::to_string(i) + "]";
            const Json& loc = (*locations)[i];
            require_object(loc, lpath);
            check_keys(loc, lpath, {"offset", "length"});
            ann.locations.push_back(
                {read_int(loc, lpath, "offset"), read_int(loc, lpath, "length")});
        }
    }
    return ann;
}

Relation read_relation(const Json& json, const std::string& path) {
    require_object(json, path);
    check_keys(json, path, {"id", "infons", "nodes"});
    Relation rel;
    rel.id = read_string(json, path, "id");
    rel.infons = read_infons(json, path);
    if (const Json* nodes = optional_array(json, path, "nodes")) {
        for (std::size_t i = 0; i < nodes->size(); ++i) {
            const std::string npath = path + ".nodes[" + std::to_string(i) + "]";
            const Json& node = (*nodes)[i];
            require_object(node, npath);
            check_keys(node, npath, {"refid", "role"});
            rel.nodes.push_back(
                {read_string(node, npath, "refid"), read_string(node, npath, "role")});
        }
    }
    return rel;
}

template <typename T, typename Fn>
std::vector<T> read_list(const Json& object, const std::string& path, const char* key, Fn fn) {
    std::vector<T> out;
    if (const Json* array = optional_array(object, path, key))
        for (std::size_t i = 0; i < array->size(); ++i)
            out.push_back(fn((*array)[i], path + "." + key + "[" + std::to_string(i) + "]"));
    return out;
}

Sentence read_sentence(const Json& json, const std::string& path) {
    require_object(json, path);
    check_keys(json, path, {"text", "offset", "relations", "infons", "annotations"});
    Sentence sentence;
    sentence.text = read_string(json, path, "text");
    sentence.offset = read_int(json, path, "offset");
    sentence.infons = read_infons(json, path);
    sentence.annotations = read_list<Annotation>(json, path, "annotations", read_annotation);
    sentence.relations = read_list<Relation>(json, path, "relations", read_relation);
    return sentence;
}

Passage read_passage(const Json& json, const std::string& path) {
    require_object(json, path);
    check_keys(json, path, {"text", "offset", "relations", "infons", "sentences", "annotations"});
    Passage passage;
    passage.text = read_string(json, path, "text");
    passage.offset = read_int(json, path, "offset");
    passage.infons = read_infons(json, path);
    passage.sentences = read_list<Sentence>(json, path, "sentences", read_sentence);
    passage.annotations = read_list<Annotation>(json, path, "annotations", read_annotation);
    passage.relations = read_list<Relation>(json, path, "relations", read_relation);
    return passage;
}

Document read_document(const Json& json, const std::string& path) {
    require_object(json, path);
    check_keys(json, path, {"id", "infons", "passages", "relations"});
    Document document;
    document.id = read_string(json, path, "id");
    document.infons = read_infons(json, path);
    document.passages = read_list<Passage>(json, path, "passages", read_passage);
    document.relations = read_list<Relation>(json, path, "relations", read_relation);
    return document;
}

} // namespace

std::string to_json(const Collection& collection) {
    Json out = Json::object();
    out["source"] = collection.source;
    out["date"] = collection.date;
    out["key"] = collection.key;
    out["infons"] = infons_json(collection.infons);
    Json documents = Json::array();
    for (const Document& document : collection.documents) {
        Json doc = Json::object();
        doc["id"] = document.id;
        doc["infons"] = infons_json(document.infons);
        doc["passages"] = list_json(document.passages, passage_json);
        doc["relations"] = list_json(document.relations, relation_json);
        documents.push_back(std::move(doc));
    }
    out["documents"] = std::move(documents);
    return out.dump(2) + "\n";
}

Collection from_json(std::string_view json) {
    Json parsed;
    try {
        parsed = Json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Error::Kind::Parse,
                    "JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }

    require_object(parsed, "collection");
    check_keys(parsed, "collection", {"source", "date", "key", "infons", "documents"});
    Collection collection;
    collection.source = read_string(parsed, "collection", "source");
    collection.date = read_string(parsed, "collection", "date");
    collection.key = read_string(parsed, "collection", "key");
    collection.infons = read_infons(parsed, "collection");
    if (const Json* documents = optional_array(parsed, "collection", "documents"))
        for (std::size_t i = 0; i < documents->size(); ++i)
            collection.documents.push_back(
                read_document((*documents)[i], "documents[" + std::to_string(i) + "]"));
    return collection;
}

} // namespace bioc
