#ifndef STABLEREV_JSON_IO_HPP
#define STABLEREV_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "stablerev/measure.hpp"
#include "stablerev/selection.hpp"
#include "stablerev/space.hpp"

namespace stablerev {

// All documents are parsed with insertion-order-preserving JSON so that atom
// order is taken from the document, and serialized the same way so outputs
// are byte-for-byte deterministic.
using Json = nlohmann::ordered_json;

inline Json parse_json_text(const std::string& text) {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw SchemaError("malformed JSON");
    return doc;
}

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer())
        return Rational(Int(j.get<long long>()));
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw SchemaError("expected a rational string or integer");
}

// ---- Space ----------------------------------------------------------------

inline Space space_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("atoms") || !doc["atoms"].is_array())
        throw SchemaError("space document must be {\"atoms\": [...]}");
    std::vector<std::string> atoms;
    for (const auto& a : doc["atoms"]) {
        if (!a.is_string())
            throw SchemaError("atom labels must be strings");
        atoms.push_back(a.get<std::string>());
    }
    return Space::create(std::move(atoms));
}

inline Space parse_space(const std::string& text) { return space_from_json(parse_json_text(text)); }

inline Json space_to_json(const Space& space) {
    Json doc;
    doc["atoms"] = space.atoms();
    return doc;
}

// ---- Events ---------------------------------------------------------------

inline Event event_from_json(const Json& j, const Space& space) {
    if (!j.is_array())
        throw SchemaError("an event must be an array of atom labels");
    std::vector<std::string> labels;
    for (const auto& a : j)
        labels.push_back(a.get<std::string>());
    return Event::of_atoms(space, labels);
}

inline Json event_to_json(const Event& e) { return Json(e.atom_labels()); }

// ---- Measure --------------------------------------------------------------

inline Measure measure_from_json(const Json& doc, const Space& space) {
    if (!doc.is_object() || !doc.contains("weights") || !doc["weights"].is_object())
        throw SchemaError("measure document must be {\"weights\": {atom: rational}}");
    std::vector<Rational> weights(space.size(), Rational(0));
    for (const auto& [key, value] : doc["weights"].items())
        weights[space.index_of(key)] = rational_from_json(value);
    return Measure::create(space, std::move(weights));
}

inline Measure parse_measure(const std::string& text, const Space& space) {
    return measure_from_json(parse_json_text(text), space);
}

inline Json measure_to_json(const Measure& mu) {
    Json weights;
    for (int i = 0; i < mu.space().size(); ++i)
        weights[mu.space().atom(i)] = format_rational(mu.weight(i));
    Json doc;
    doc["weights"] = std::move(weights);
    return doc;
}

// ---- SelectionFunction ----------------------------------------------------

inline SelectionFunction selection_from_json(const Json& doc, const Space& space) {
    if (!doc.is_object() || !doc.contains("map") || !doc["map"].is_array())
        throw SchemaError("selection document must be {\"map\": [{\"in\":..,\"out\":..}, ...]}");
    bool complete = true;
    if (doc.contains("complete"))
        complete = doc["complete"].get<bool>();
    SelectionFunction sigma(space, complete);
    for (const auto& row : doc["map"]) {
        if (!row.is_object() || !row.contains("in") || !row.contains("out"))
            throw SchemaError("selection rows must be {\"in\": [...], \"out\": [...]}");
        sigma.set(event_from_json(row["in"], space), event_from_json(row["out"], space));
    }
    if (complete && !sigma.is_total())
        throw SchemaError("incomplete table");
    return sigma;
}

inline SelectionFunction parse_selection(const std::string& text, const Space& space) {
    return selection_from_json(parse_json_text(text), space);
}

inline Json selection_to_json(const SelectionFunction& sigma) {
    const Space& space = sigma.space();
    Json map = Json::array();
    for (EventMask m = 0; m < space.event_count(); ++m) {
        if (!sigma.defined(m))
            continue;
        Json row;
        row["in"] = event_to_json(Event(space, m));
        row["out"] = event_to_json(Event(space, sigma.get_mask(m)));
        map.push_back(std::move(row));
    }
    Json doc;
    doc["map"] = std::move(map);
    doc["complete"] = sigma.complete();
    return doc;
}

// ---- Space inference for self-contained CLI documents ----------------------

/// A measure document determines its space by the weight keys in document
/// order; an explicit {"atoms": [...]} field takes precedence.
inline Space space_of_measure_doc(const Json& doc) {
    if (doc.contains("atoms"))
        return space_from_json(doc);
    if (!doc.is_object() || !doc.contains("weights") || !doc["weights"].is_object())
        throw SchemaError("measure document must be {\"weights\": {atom: rational}}");
    std::vector<std::string> atoms;
    for (const auto& [key, value] : doc["weights"].items()) {
        (void)value;
        atoms.push_back(key);
    }
    return Space::create(std::move(atoms));
}

/// A selection document determines its space by first appearance of atoms in
/// its rows unless an explicit {"atoms": [...]} field is present.
inline Space space_of_selection_doc(const Json& doc) {
    if (doc.contains("atoms"))
        return space_from_json(doc);
    if (!doc.is_object() || !doc.contains("map") || !doc["map"].is_array())
        throw SchemaError("selection document must be {\"map\": [...]}");
    std::vector<std::string> atoms;
    auto add = [&](const Json& arr) {
        for (const auto& a : arr) {
            std::string label = a.get<std::string>();
            if (std::find(atoms.begin(), atoms.end(), label) == atoms.end())
                atoms.push_back(label);
        }
    };
    for (const auto& row : doc["map"]) {
        if (row.contains("in"))
            add(row["in"]);
        if (row.contains("out"))
            add(row["out"]);
    }
    return Space::create(std::move(atoms));
}

} // namespace stablerev

#endif
