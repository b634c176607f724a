#include "nisv/config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace nisv {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

void Config::set(const std::string& key, const std::string& value) {
    auto as_int = [&] { return std::stoi(value); };
    auto as_double = [&] { return std::stod(value); };
    if (key == "order") order = as_int();
    else if (key == "lambda_samples") lambda_samples = as_int();
    else if (key == "model_samples") model_samples = as_int();
    else if (key == "delta") delta = as_double();
    else if (key == "tol_exact") tol_exact = as_double();
    else if (key == "tol_algebraic") tol_algebraic = as_double();
    else if (key == "tol_finite") tol_finite = as_double();
    else if (key == "tol_infinite") tol_infinite = as_double();
    else if (key == "tol_contain") tol_contain = as_double();
    else if (key == "neg_floor") neg_floor = as_double();
    else if (key == "kernel_tau") kernel_tau = as_double();
    else if (key == "rank_tol") rank_tol = as_double();
    else if (key == "trust_tol") trust_tol = as_double();
    else if (key == "probe_trust") probe_trust = as_double();
    else if (key == "deep_tol") deep_tol = as_double();
    else if (key == "seed") seed = static_cast<std::uint64_t>(std::stoull(value));
    else if (key == "stable_output") stable_output = value == "1" || value == "true";
    else throw std::invalid_argument("config: unknown key '" + key + "'");
}

Config load_config_file(const std::string& path, Config base) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config: line " + std::to_string(lineno) + " is not 'key = value'");
        }
        base.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return base;
}

Config default_config() {
    Config cfg;
    if (const char* p = std::getenv("NISV_CONFIG"); p != nullptr && *p != '\0') {
        cfg = load_config_file(p, cfg);
    }
    return cfg;
}

} // namespace nisv
