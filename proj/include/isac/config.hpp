#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "isac/mc_sim.hpp"
#include "isac/model.hpp"
#include "isac/numerics.hpp"
#include "isac/sense_rate.hpp"

namespace isac {

inline constexpr const char* kCodeVersion = "isac-ase 0.1.0";

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One structured text config file drives every subcommand. Sections:
// [network], [allocation] (optional), [quadrature], [mc], [run]. Unknown
// sections or keys are rejected. Every field defaults to the baseline
// deployment (m_t=20, m_r=10, p_t=1 W, xi=0.1, delta_t=1, lambda_b=1/km^2,
// j_max=10, alpha=4, beta=2).
struct RunConfig {
    NetworkParams network;
    std::optional<ResourceAllocation> allocation;
    QuadratureSpec quadrature;
    McConfig mc;
    FormulaVariant formula_variant = FormulaVariant::rederived;
    std::string output_dir = "out";
    std::optional<std::string> cache_dir;
};

FormulaVariant parse_variant(const std::string& name);

RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::string& path);  // "" gives all defaults

// Canonical serialization of all numeric inputs; its hash keys caches and is
// embedded in every output file header.
std::string canonical_config(const RunConfig& cfg);
std::string config_hash_hex(const RunConfig& cfg);

std::string sample_config_text();

std::uint64_t fnv1a64(const std::string& s);

}  // namespace isac
