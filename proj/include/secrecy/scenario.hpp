#pragma once

#include <string>
#include <string_view>

namespace secrecy {

/// Which outage event is measured.
///
/// csit:       Xt + Yt < s
/// nocsit:     Xt + Yt < s  or  Xt < t
/// alt_csit:   Xt + Yt < s  or  Yt < s - t
/// alt_nocsit: Xt < t       or  Yt < s - t
enum class ScenarioTag { csit, nocsit, alt_csit, alt_nocsit };

enum class Direction { lower, upper };

enum class Curve { lower, upper, independent };

ScenarioTag parse_scenario(std::string_view name);
Direction parse_direction(std::string_view name);
/// Accepts "lower", "upper", "indep" and "independent".
Curve parse_curve(std::string_view name);

std::string to_string(ScenarioTag scenario);
std::string to_string(Direction direction);
std::string to_string(Curve curve);

/// Membership of (x, y) in the outage region of the scenario. Every region is
/// a down-set: shrinking either coordinate never leaves it.
bool in_outage_region(ScenarioTag scenario, double s, double t, double x, double y) noexcept;

} // namespace secrecy
