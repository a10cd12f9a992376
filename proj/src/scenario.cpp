#include "secrecy/scenario.hpp"

#include "secrecy/errors.hpp"

namespace secrecy {

ScenarioTag parse_scenario(std::string_view name) {
    if (name == "csit") return ScenarioTag::csit;
    if (name == "nocsit") return ScenarioTag::nocsit;
    if (name == "alt-csit") return ScenarioTag::alt_csit;
    if (name == "alt-nocsit") return ScenarioTag::alt_nocsit;
    throw InvalidParameter("unknown scenario '" + std::string(name) + "'");
}

Direction parse_direction(std::string_view name) {
    if (name == "lower") return Direction::lower;
    if (name == "upper") return Direction::upper;
    throw InvalidParameter("unknown direction '" + std::string(name) + "'");
}

Curve parse_curve(std::string_view name) {
    if (name == "lower") return Curve::lower;
    if (name == "upper") return Curve::upper;
    if (name == "indep" || name == "independent") return Curve::independent;
    throw InvalidParameter("unknown curve '" + std::string(name) + "'");
}

std::string to_string(ScenarioTag scenario) {
    switch (scenario) {
    case ScenarioTag::csit: return "csit";
    case ScenarioTag::nocsit: return "nocsit";
    case ScenarioTag::alt_csit: return "alt-csit";
    case ScenarioTag::alt_nocsit: return "alt-nocsit";
    }
    return "?";
}

std::string to_string(Direction direction) {
    return direction == Direction::lower ? "lower" : "upper";
}

std::string to_string(Curve curve) {
    switch (curve) {
    case Curve::lower: return "lower";
    case Curve::upper: return "upper";
    case Curve::independent: return "indep";
    }
    return "?";
}

bool in_outage_region(ScenarioTag scenario, double s, double t, double x, double y) noexcept {
    switch (scenario) {
    case ScenarioTag::csit: return x + y < s;
    case ScenarioTag::nocsit: return x + y < s || x < t;
    case ScenarioTag::alt_csit: return x + y < s || y < s - t;
    case ScenarioTag::alt_nocsit: return x < t || y < s - t;
    }
    return false;
}

} // namespace secrecy
