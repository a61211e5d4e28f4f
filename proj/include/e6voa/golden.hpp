#pragma once

#include <optional>
#include <string>
#include <vector>

namespace e6voa::golden {

// File names of the embedded fixtures, e.g. "omega_f4.json".
std::vector<std::string> names();

// Fixture text: read from dir/name when dir is given, otherwise the copy
// compiled into the binary.  Throws std::runtime_error when missing.
std::string load(const std::string& name, const std::optional<std::string>& dir = std::nullopt);

// Fixture file name for a builtin HWV id ("e^mu-e^tau_mu" -> "hwv_e_mu_e_tau_mu.json").
std::string hwv_file(const std::string& id);

}  // namespace e6voa::golden
