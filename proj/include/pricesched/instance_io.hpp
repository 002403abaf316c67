#pragma once

#include <string>

#include "pricesched/model.hpp"

namespace pricesched {

// Instance files are JSON with rationals as "num/den" strings ("inf" where
// allowed), never floats. Keys: model, m, speeds, epsilon, jobs. Jobs are
// "num/den" (identical/related), {"size":..., "allowed":[1-based ids]}
// (restricted) or {"times":["num/den"|"inf", ...]} (unrelated). epsilon
// defaults to 1/10.
Instance parse_instance(const std::string& text);
std::string instance_to_json_text(const Instance& instance);

Instance load_instance_file(const std::string& path);
void save_instance_file(const Instance& instance, const std::string& path);

}  // namespace pricesched
