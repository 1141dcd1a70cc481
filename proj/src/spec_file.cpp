#include "haarent/spec_file.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "haarent/dsl.hpp"
#include "haarent/error.hpp"

namespace haarent {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key, const char* where) {
    if (!obj.is_object() || !obj.contains(key))
        throw DomainError(std::string(where) + " needs a \"" + key + "\" field");
    return obj.at(key);
}

std::string text(const json& j, const char* where) {
    if (!j.is_string()) throw DomainError(std::string(where) + " must be a string");
    return j.get<std::string>();
}

double number(const json& j, const char* where) {
    if (!j.is_number()) throw DomainError(std::string(where) + " must be a number");
    return j.get<double>();
}

std::string format_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    for (int prec = 1; prec < 17; ++prec) {
        char shorter[32];
        std::snprintf(shorter, sizeof shorter, "%.*g", prec, v);
        if (std::stod(shorter) == v) return shorter;
    }
    return buf;
}

struct SpaceSpec {
    Space space;
    std::optional<Group> group;
};

SpaceSpec read_space(const json& s) {
    const auto kind = text(field(s, "kind", "space"), "space.kind");
    if (kind == "interval") {
        const auto& b = field(s, "bounds", "interval space");
        if (!b.is_array() || b.size() != 2) throw DomainError("space.bounds must be [a, b]");
        return {Space::interval(number(b[0], "space.bounds[0]"), number(b[1], "space.bounds[1]")), std::nullopt};
    }
    if (kind == "finite") {
        const auto& atoms = field(s, "atoms", "finite space");
        if (!atoms.is_array() || atoms.empty()) throw DomainError("space.atoms must be a nonempty array");
        if (atoms[0].is_number()) {
            std::vector<double> coords;
            std::vector<std::string> labels;
            for (const auto& a : atoms) {
                coords.push_back(number(a, "space.atoms[i]"));
                labels.push_back(format_coord(coords.back()));
            }
            return {Space::finite(std::move(coords), std::move(labels)), std::nullopt};
        }
        std::vector<std::string> labels;
        for (const auto& a : atoms) labels.push_back(text(a, "space.atoms[i]"));
        return {Space::finite(std::move(labels)), std::nullopt};
    }
    if (kind == "group") {
        auto g = parse_group(text(field(s, "group", "group space"), "space.group"));
        return {g.space(), g};
    }
    throw DomainError("unknown space kind '" + kind + "' (expected interval, finite or group)");
}

Measure read_builtin(const std::string& name, const SpaceSpec& sp, const std::string& label) {
    const Space& space = sp.space;
    if (name == "lebesgue") {
        if (space.is_finite()) throw DomainError("builtin 'lebesgue' needs an interval space");
        return Measure::base(space).with_label(label.empty() ? "lebesgue" : label);
    }
    if (name == "counting") {
        if (!space.is_finite()) throw DomainError("builtin 'counting' needs a finite space");
        return Measure::base(space).with_label(label.empty() ? "counting" : label);
    }
    if (name == "haar") {
        if (!sp.group) throw DomainError("builtin 'haar' needs a group space");
        auto m = haar(*sp.group).measure();
        return label.empty() ? m : m.with_label(label);
    }
    if (name == "haar:R*") {
        if (space.is_finite() || !(space.lower() > 0.0))
            throw DomainError("builtin 'haar:R*' needs an interval of positive reals");
        auto m = haar(Group::multiplicative_reals(space.lower(), space.upper())).measure();
        return m.with_label(label.empty() ? "haar:R*" : label);
    }
    if (name == "uniform") {
        const auto base = Measure::base(space);
        return base.scaled(1.0 / total_mass(base)).with_label(label.empty() ? "uniform" : label);
    }
    throw DomainError("unknown builtin density '" + name + "' (expected lebesgue, counting, haar, haar:R* or uniform)");
}

}  // namespace

MeasureSpec parse_measure_spec(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text.begin(), json_text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed measure spec: ") + e.what(), e.byte, {"JSON document"});
    }
    if (!doc.is_object()) throw DomainError("measure spec must be a JSON object");
    const auto sp = read_space(field(doc, "space", "measure spec"));
    const std::string label = doc.contains("label") ? text(doc.at("label"), "label") : std::string();
    const auto& dens = field(doc, "density", "measure spec");
    const auto kind = text(field(dens, "kind", "density"), "density.kind");
    const auto& payload = field(dens, "payload", "density");

    if (kind == "builtin") return {read_builtin(text(payload, "density.payload"), sp, label), sp.group};
    if (kind == "expr") {
        const auto src = text(payload, "density.payload");
        const auto e = dsl::parse(src);
        return {Measure(sp.space, dsl::make_density(e, sp.space), label.empty() ? src : label), sp.group};
    }
    if (kind == "table") {
        if (!sp.space.is_finite()) throw DomainError("table densities need a finite space");
        if (!payload.is_array()) throw DomainError("table payload must be an array of numbers");
        std::vector<double> values;
        for (const auto& v : payload) values.push_back(number(v, "density.payload[i]"));
        return {Measure(sp.space, Density::table(sp.space, std::move(values)), label.empty() ? "table" : label),
                sp.group};
    }
    throw DomainError("unknown density kind '" + kind + "' (expected expr, table or builtin)");
}

MeasureSpec load_measure_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read measure spec '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_measure_spec(buf.str());
}

}  // namespace haarent
