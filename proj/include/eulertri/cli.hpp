#pragma once

#include "eulertri/triangle.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace eulertri {

/// Integers that fit in int64 become JSON numbers, other integers decimal strings, non-integers "p/q".
nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

std::string triangle_to_csv(const Triangle& t);
Triangle triangle_from_csv(const std::string& text);
nlohmann::json triangle_to_json(const std::string& preset, const Triangle& t);
Triangle triangle_from_json(const nlohmann::json& j);

/// Runs one command line (without the program name). Returns the exit status:
/// 0 all checks passed, 1 a check failed, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulertri
