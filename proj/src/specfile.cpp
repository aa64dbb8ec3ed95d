#include "algderiv/specfile.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "algderiv/parse.hpp"

namespace algderiv {

namespace {

using nlohmann::json;

json parse_json(std::istream& in, const std::string& origin) {
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw SpecFileError(origin + ": " + e.what());
    }
}

std::string exact_string(const json& v, const std::string& origin, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<long long>());
    if (v.is_number_float())
        throw SpecFileError(origin + ": " + where +
                            " must be an exact string, floats are not accepted");
    throw SpecFileError(origin + ": " + where + " must be a string");
}

} // namespace

DerivationSpec parse_derivation_spec(std::istream& in, const std::string& origin) {
    json doc = parse_json(in, origin);
    if (!doc.is_object()) throw SpecFileError(origin + ": expected a JSON object");

    DerivationSpec spec;
    if (!doc.contains("vars") || !doc["vars"].is_array() || doc["vars"].empty())
        throw SpecFileError(origin + ": 'vars' must be a non-empty array of names");
    for (const auto& v : doc["vars"]) spec.vars.push_back(exact_string(v, origin, "variable name"));

    std::string mode = doc.value("mode", std::string("general"));
    std::string table_key;
    if (mode == "general") {
        spec.mode = DerivationSpec::Mode::General;
        table_key = "images";
    } else if (mode == "diagonal") {
        spec.mode = DerivationSpec::Mode::Diagonal;
        table_key = "weights";
    } else {
        throw SpecFileError(origin + ": 'mode' must be \"general\" or \"diagonal\"");
    }

    if (doc.contains("weight_symbols")) {
        if (spec.mode != DerivationSpec::Mode::Diagonal)
            throw SpecFileError(origin + ": 'weight_symbols' only applies to diagonal mode");
        for (const auto& s : doc["weight_symbols"])
            spec.weight_symbols.push_back(exact_string(s, origin, "weight symbol"));
    }

    if (!doc.contains(table_key) || !doc[table_key].is_object())
        throw SpecFileError(origin + ": '" + table_key + "' must be an object");
    for (const auto& [key, value] : doc[table_key].items())
        spec.entries[key] = exact_string(value, origin, "'" + table_key + "." + key + "'");

    for (const auto& var : spec.vars)
        if (!spec.entries.count(var))
            throw SpecFileError(origin + ": missing '" + table_key + "' entry for variable '" +
                                var + "'");
    for (const auto& [key, value] : spec.entries)
        if (std::find(spec.vars.begin(), spec.vars.end(), key) == spec.vars.end())
            throw SpecFileError(origin + ": '" + table_key + "' entry for unknown variable '" +
                                key + "'");
    return spec;
}

DerivationSpec load_derivation_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecFileError("cannot open spec file '" + path + "'");
    return parse_derivation_spec(in, path);
}

BuiltDerivation build_derivation(const DerivationSpec& spec) {
    RingPtr ring = make_ring(spec.vars);
    if (spec.mode == DerivationSpec::Mode::General) {
        std::map<std::string, Poly> images;
        for (const auto& [var, text] : spec.entries) images.emplace(var, parse_poly(text, ring));
        return {ring, Derivation::general(ring, images), nullptr};
    }
    WeightSymbolsPtr symbols =
        spec.weight_symbols.empty()
            ? nullptr
            : std::make_shared<const std::vector<std::string>>(spec.weight_symbols);
    std::vector<Eigenvalue> weights;
    weights.reserve(ring->size());
    for (const auto& var : ring->vars())
        weights.push_back(parse_weight_expr(spec.entries.at(var), symbols));
    return {ring, Derivation::diagonal(ring, std::move(weights), symbols), symbols};
}

GroupSpec parse_group_spec(std::istream& in, const std::string& origin) {
    json doc = parse_json(in, origin);
    if (!doc.is_object()) throw SpecFileError(origin + ": expected a JSON object");
    GroupSpec spec;
    if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
        throw SpecFileError(origin + ": 'dimension' must be an integer");
    spec.dimension = doc["dimension"].get<std::size_t>();
    if (spec.dimension == 0) throw SpecFileError(origin + ": dimension must be positive");
    if (!doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].empty())
        throw SpecFileError(origin + ": 'generators' must be a non-empty array");
    for (const auto& gen : doc["generators"]) {
        if (!gen.is_array() || gen.size() != spec.dimension)
            throw SpecFileError(origin + ": generator must have 'dimension' rows");
        std::vector<Rational> entries;
        entries.reserve(spec.dimension * spec.dimension);
        for (const auto& row : gen) {
            if (!row.is_array() || row.size() != spec.dimension)
                throw SpecFileError(origin + ": generator row has wrong length");
            for (const auto& cell : row)
                entries.push_back(Rational::from_string(exact_string(cell, origin, "matrix entry")));
        }
        spec.generators.emplace_back(spec.dimension, spec.dimension, std::move(entries));
    }
    return spec;
}

GroupSpec load_group_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecFileError("cannot open group file '" + path + "'");
    return parse_group_spec(in, path);
}

} // namespace algderiv
