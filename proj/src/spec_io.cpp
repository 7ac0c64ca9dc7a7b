#include "gmact/spec_io.hpp"
#include "gmact/errors.hpp"
#include "gmact/parse.hpp"

#include <json.hpp>

#include <fstream>

namespace gmact::cli {

using nlohmann::json;

AlgebraSpec parse_spec_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("spec is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw input_error("spec must be a JSON object");
    if (j.contains("field") && j["field"] != "Q")
        throw input_error("only field \"Q\" is supported");
    if (!j.contains("variables") || !j["variables"].is_array())
        throw input_error("spec needs a \"variables\" array");

    std::vector<Variable> vars;
    for (const auto& v : j["variables"]) {
        if (!v.is_object() || !v.contains("name") || !v.contains("weight"))
            throw input_error("each variable needs \"name\" and \"weight\"");
        if (!v["weight"].is_number_integer())
            throw input_error("variable weight must be an integer");
        vars.push_back({v["name"].get<std::string>(), v["weight"].get<int>()});
    }
    auto ring = PolyRing::make(std::move(vars), TermOrder{OrderKind::GrevLex, 0});

    std::vector<Polynomial> rels;
    if (j.contains("relations")) {
        if (!j["relations"].is_array())
            throw input_error("\"relations\" must be an array of strings");
        for (const auto& r : j["relations"]) {
            if (!r.is_string())
                throw input_error("\"relations\" must be an array of strings");
            rels.push_back(parse_polynomial(ring, r.get<std::string>()));
        }
    }

    AlgebraSpec spec;
    spec.algebra = action::GradedAlgebra::make(ring, std::move(rels));

    if (j.contains("point")) {
        if (!j["point"].is_object())
            throw input_error("\"point\" must map variable names to rational strings");
        action::RationalPoint pt;
        for (const auto& [name, value] : j["point"].items()) {
            if (!ring->has_var(name))
                throw input_error("point assigns unknown variable " + name);
            if (value.is_number_integer())
                pt[name] = Rational(value.get<long>());
            else if (value.is_string())
                pt[name] = rational_from_string(value.get<std::string>());
            else
                throw input_error("point values must be integers or rational strings");
        }
        for (const auto& v : ring->vars())
            if (!pt.count(v.name))
                throw input_error("point does not assign variable " + v.name);
        spec.point = std::move(pt);
    }
    if (j.contains("smooth")) {
        if (!j["smooth"].is_boolean())
            throw input_error("\"smooth\" must be a boolean");
        spec.smooth = j["smooth"].get<bool>();
    }
    return spec;
}

AlgebraSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open spec file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_spec_text(text);
}

} // namespace gmact::cli
