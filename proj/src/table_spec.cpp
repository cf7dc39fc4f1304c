#include "billiards/table_spec.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace billiards {

namespace {

using nlohmann::json;

FourierSeries parse_series(const json& j) {
    if (!j.is_object()) {
        throw std::invalid_argument("table spec: perturbation profile must be an object");
    }
    double constant = j.value("const", 0.0);
    std::vector<double> cs, ss;
    if (j.contains("cos")) cs = j.at("cos").get<std::vector<double>>();
    if (j.contains("sin")) ss = j.at("sin").get<std::vector<double>>();
    return FourierSeries(constant, std::move(cs), std::move(ss));
}

FourierSeries parse_profile(const json& j, const char* canonical, const char* alias) {
    if (j.contains(canonical)) return parse_series(j.at(canonical));
    if (j.contains(alias)) return parse_series(j.at(alias));
    throw std::invalid_argument(std::string("table spec: missing \"") + canonical +
                                "\" profile");
}

double require_number(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw std::invalid_argument(std::string("table spec: missing numeric \"") +
                                    key + "\"");
    }
    return j.at(key).get<double>();
}

}  // namespace

TableSpec TableSpec::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("table spec: invalid JSON: ") + e.what());
    }
    if (!j.contains("type") || !j.at("type").is_string()) {
        throw std::invalid_argument("table spec: missing \"type\"");
    }
    const std::string type = j.at("type").get<std::string>();

    TableSpec spec;
    if (type == "ellipse") {
        spec.type = Type::Ellipse;
        spec.a = require_number(j, "a");
        spec.b = require_number(j, "b");
    } else if (type == "perturbed_ellipse") {
        spec.type = Type::PerturbedEllipse;
        spec.a = require_number(j, "a");
        spec.b = require_number(j, "b");
        spec.eps = require_number(j, "eps");
        spec.profile = parse_profile(j, "mu1", "r1");
    } else if (type == "perturbed_circle") {
        spec.type = Type::PerturbedCircle;
        spec.r0 = require_number(j, "r0");
        spec.eps = require_number(j, "eps");
        spec.profile = parse_profile(j, "r1", "mu1");
    } else {
        throw std::invalid_argument("table spec: unknown type \"" + type + "\"");
    }
    return spec;
}

TableSpec TableSpec::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("table spec: cannot open " + path);
    }
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return from_json_text(text);
}

std::unique_ptr<Table> TableSpec::make_table() const {
    switch (type) {
        case Type::Ellipse:
            return std::make_unique<Ellipse>(a, b);
        case Type::PerturbedEllipse:
            return std::make_unique<PerturbedEllipse>(Ellipse(a, b), eps, profile);
        case Type::PerturbedCircle:
            return std::make_unique<PerturbedCircle>(r0, eps, profile);
    }
    throw std::logic_error("table spec: unreachable");
}

persistence::TableFamily TableSpec::make_family() const {
    switch (type) {
        case Type::Ellipse:
            throw std::invalid_argument(
                "table spec: exact ellipse has no perturbation family");
        case Type::PerturbedEllipse:
            return persistence::TableFamily::perturbed_ellipse(a, b, profile);
        case Type::PerturbedCircle:
            return persistence::TableFamily::perturbed_circle(r0, profile);
    }
    throw std::logic_error("table spec: unreachable");
}

double TableSpec::base_a() const {
    return type == Type::PerturbedCircle ? r0 : a;
}

double TableSpec::base_b() const {
    return type == Type::PerturbedCircle ? r0 : b;
}

}  // namespace billiards
