#include "isac/config.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace isac {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError("config: bad numeric value for '" + key + "': " + v);
    }
    if (pos != v.size()) throw ConfigError("config: trailing junk in value for '" + key + "': " + v);
    return x;
}

long long parse_int(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    long long x = 0;
    try {
        x = std::stoll(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer value for '" + key + "': " + v);
    }
    if (pos != v.size()) throw ConfigError("config: trailing junk in value for '" + key + "': " + v);
    return x;
}

}  // namespace

FormulaVariant parse_variant(const std::string& name) {
    if (name == "rederived") return FormulaVariant::rederived;
    if (name == "as_written") return FormulaVariant::as_written;
    throw ConfigError("config: formula_variant must be 'rederived' or 'as_written', got '" +
                      name + "'");
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    bool have_alloc = false;
    ResourceAllocation alloc;

    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config: malformed section header at line " +
                                  std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            if (section != "network" && section != "allocation" && section != "quadrature" &&
                section != "mc" && section != "run")
                throw ConfigError("config: unknown section [" + section + "]");
            if (section == "allocation") have_alloc = true;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected 'key = value' at line " + std::to_string(lineno));
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (section.empty())
            throw ConfigError("config: key '" + key + "' outside any section");

        if (section == "network") {
            auto& n = cfg.network;
            if (key == "lambda_b") n.lambda_b = parse_double(key, val);
            else if (key == "lambda_u") n.lambda_u = parse_double(key, val);
            else if (key == "lambda_s") n.lambda_s = parse_double(key, val);
            else if (key == "m_t") n.m_t = static_cast<int>(parse_int(key, val));
            else if (key == "m_r") n.m_r = static_cast<int>(parse_int(key, val));
            else if (key == "alpha") n.alpha = parse_double(key, val);
            else if (key == "beta") n.beta = parse_double(key, val);
            else if (key == "xi") n.xi = parse_double(key, val);
            else if (key == "delta_t") n.delta_t = parse_double(key, val);
            else if (key == "p_t") n.p_t = parse_double(key, val);
            else if (key == "j_max") n.j_max = static_cast<int>(parse_int(key, val));
            else throw ConfigError("config: unknown key '" + key + "' in [network]");
        } else if (section == "allocation") {
            if (key == "k") alloc.k = static_cast<int>(parse_int(key, val));
            else if (key == "l") alloc.l = static_cast<int>(parse_int(key, val));
            else if (key == "j") alloc.j = static_cast<int>(parse_int(key, val));
            else if (key == "q") alloc.q = static_cast<int>(parse_int(key, val));
            else throw ConfigError("config: unknown key '" + key + "' in [allocation]");
        } else if (section == "quadrature") {
            auto& q = cfg.quadrature;
            if (key == "rel_tol") q.rel_tol = parse_double(key, val);
            else if (key == "abs_tol") q.abs_tol = parse_double(key, val);
            else if (key == "max_refinements") q.max_refinements = static_cast<int>(parse_int(key, val));
            else if (key == "split_point") q.split_point = parse_double(key, val);
            else throw ConfigError("config: unknown key '" + key + "' in [quadrature]");
        } else if (section == "mc") {
            auto& m = cfg.mc;
            if (key == "trials") m.trials = parse_int(key, val);
            else if (key == "seed") m.seed = static_cast<std::uint64_t>(parse_int(key, val));
            else if (key == "window_radius_factor") m.window_radius_factor = parse_double(key, val);
            else if (key == "ci_level") m.ci_level = parse_double(key, val);
            else throw ConfigError("config: unknown key '" + key + "' in [mc]");
        } else {  // run
            if (key == "formula_variant") cfg.formula_variant = parse_variant(val);
            else if (key == "output_dir") cfg.output_dir = val;
            else if (key == "cache_dir") cfg.cache_dir = val;
            else throw ConfigError("config: unknown key '" + key + "' in [run]");
        }
    }
    if (have_alloc) cfg.allocation = alloc;

    if (!(cfg.quadrature.rel_tol > 0.0) || !(cfg.quadrature.abs_tol > 0.0) ||
        cfg.quadrature.max_refinements < 1)
        throw ConfigError("config: [quadrature] requires rel_tol > 0, abs_tol > 0, "
                          "max_refinements >= 1");
    if (cfg.mc.trials < 1) throw ConfigError("config: [mc] trials must be >= 1");
    if (!(cfg.mc.window_radius_factor >= 5.0))
        throw ConfigError("config: [mc] window_radius_factor must be >= 5 "
                          "(truncation bias budget)");
    if (!(cfg.mc.ci_level > 0.0 && cfg.mc.ci_level < 1.0))
        throw ConfigError("config: [mc] ci_level must lie in (0,1)");
    return cfg;
}

RunConfig load_config(const std::string& path) {
    if (path.empty()) return RunConfig{};
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string canonical_config(const RunConfig& cfg) {
    std::ostringstream s;
    s.precision(17);
    const auto& n = cfg.network;
    s << "lambda_b=" << n.lambda_b << ";lambda_u=" << (n.lambda_u ? *n.lambda_u : -1.0)
      << ";lambda_s=" << (n.lambda_s ? *n.lambda_s : -1.0) << ";m_t=" << n.m_t
      << ";m_r=" << n.m_r << ";alpha=" << n.alpha << ";beta=" << n.beta << ";xi=" << n.xi
      << ";delta_t=" << n.delta_t << ";p_t=" << n.p_t << ";j_max=" << n.j_max << ";";
    if (cfg.allocation)
        s << "alloc=" << cfg.allocation->k << "," << cfg.allocation->l << ","
          << cfg.allocation->j << "," << cfg.allocation->q << ";";
    const auto& q = cfg.quadrature;
    s << "rel_tol=" << q.rel_tol << ";abs_tol=" << q.abs_tol
      << ";max_refinements=" << q.max_refinements << ";split_point=" << q.split_point << ";";
    s << "trials=" << cfg.mc.trials << ";seed=" << cfg.mc.seed
      << ";window_radius_factor=" << cfg.mc.window_radius_factor
      << ";ci_level=" << cfg.mc.ci_level << ";";
    s << "variant=" << to_string(cfg.formula_variant) << ";version=" << kCodeVersion;
    return s.str();
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string config_hash_hex(const RunConfig& cfg) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical_config(cfg))));
    return buf;
}

std::string sample_config_text() {
    return R"(# isac-ase run configuration (all values shown are the defaults)

[network]
lambda_b = 1.0          # BS density per km^2
m_t = 20                # transmit antennas
m_r = 10                # receive antennas
alpha = 4.0             # communication & BS-to-BS pathloss exponent
beta = 2.0              # sensing one-way pathloss exponent
xi = 0.1                # radar cross-section
delta_t = 1.0           # matched-filter gain
p_t = 1.0               # transmit power (W); cancels in the SIRs
j_max = 10
# lambda_u = 20.0       # optional, validation only
# lambda_s = 20.0       # optional, validation only

[allocation]
k = 12
l = 1
j = 0
q = 1

[quadrature]
rel_tol = 1e-6
abs_tol = 1e-12
max_refinements = 2000
split_point = 1.0

[mc]
trials = 100000
seed = 1
window_radius_factor = 20
ci_level = 0.99

[run]
formula_variant = rederived   # or as_written
output_dir = out
# cache_dir = cache
)";
}

}  // namespace isac
