#pragma once

#include "eulertri/report.hpp"
#include "eulertri/triangle.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace eulertri {

/// Incompatible or unknown request (unknown preset, target without binding, n out of range).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// preset(n,k) = scale * symbol(n + row_offset, k' + col_offset), k' = k or n - k when reversed.
struct Shift {
    std::string symbol;
    std::string relation;
    long row_offset = 0;
    long col_offset = 0;
    Rational scale{1};
    bool reversed = false;

    nlohmann::json to_json() const;
};

struct OracleBinding {
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    std::string description;
    std::function<std::vector<Rational>(std::size_t)> histogram;  // by enumeration rank n
    std::function<std::size_t(std::size_t)> row_of;               // rank n -> preset row
};

struct TheoremBinding {
    std::string target;
    std::function<VerificationReport(std::size_t n_max)> run;
};

struct Preset {
    std::string id;
    std::string description;
    std::variant<TriangleParams, CoeffRule> construction;
    Shift shift;
    std::optional<OracleBinding> oracle;
    std::vector<TheoremBinding> theorem_bindings;
};

const std::vector<Preset>& preset_catalog();
/// Throws UsageError for unknown ids.
const Preset& find_preset(const std::string& id);
Triangle build_preset(const Preset& p, std::size_t n_max);

const std::vector<std::string>& verify_targets();

/// Dispatches a verification target to a preset binding or, for scope "random", to the randomized draws.
VerificationReport run_verification(const std::string& target, const std::string& scope, std::size_t n_max,
                                    std::uint64_t seed);

struct OracleComparison {
    std::vector<Rational> histogram;
    std::vector<Rational> row;
    std::vector<std::size_t> diff;  // indices where they differ
};
/// Throws UsageError when the preset has no oracle or n is outside its range.
OracleComparison run_oracle(const Preset& p, std::size_t n);

}  // namespace eulertri
