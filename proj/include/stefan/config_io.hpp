#pragma once

#include <string>

#include "stefan/experiments.hpp"

namespace stefan {

// A fully resolved run setup: material constants, scenario configuration, control mode.
struct ResolvedSetup {
    PhysicalParams params;
    ScenarioConfig cfg;
    ControlMode mode = ControlMode::Compensated;
};

ResolvedSetup setup_from_preset(const Preset& p);

// Key-value config text with [material] / [scenario] / [numerics] / [monitors]
// sections; `#` and `;` start comments. Unknown sections and keys are rejected.
// Time-valued keys (D, deltaD, dt, horizon) accept the suffixes s/sec/min and are
// normalized to seconds at parse time.
void apply_config_text(ResolvedSetup& setup, const std::string& text);

// Single override, `key` optionally section-qualified ("c" or "scenario.c").
void apply_override(ResolvedSetup& setup, const std::string& key, const std::string& value);

// "key=value" form used by command-line overrides.
void apply_override_expr(ResolvedSetup& setup, const std::string& expr);

// Round-trippable snapshot of the resolved setup (written next to run artifacts).
std::string serialize_setup(const ResolvedSetup& setup);

// "120", "120s", "2min", "2 min" -> seconds.
double parse_time_seconds(const std::string& text);

}  // namespace stefan
