#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace nisv {

/// Runtime configuration. File format: `key = value` lines, '#' comments.
/// The NISV_CONFIG environment variable names a default file; CLI flags
/// override file values.
struct Config {
    int order = 256;
    int lambda_samples = 64;
    int model_samples = 129;
    double delta = 1.0;

    // Tolerance regimes.
    double tol_exact = 0.0;        ///< exact-arithmetic identities
    double tol_algebraic = 1e-10;  ///< closed-form algebraic identities
    double tol_finite = 1e-6;      ///< finite-dimensional subspace identities
    double tol_infinite = 1e-3;    ///< singular-inner identities (with sweeps)
    double tol_contain = 1e-4;     ///< cyclic-in-model containment

    double neg_floor = 0.05;       ///< pass floor for negative theorems
    double kernel_tau = 1e-7;      ///< numeric kernel relative threshold
    double rank_tol = 1e-8;        ///< frame rank threshold

    // Trust levels of the singular-regime comparison protocol.
    double trust_tol = 1e-6;       ///< assertion-side frame cutoff
    double probe_trust = 1e-4;     ///< probe-source frame cutoff
    double deep_tol = 1e-11;       ///< target-side frame cutoff

    std::uint64_t seed = 17;
    bool stable_output = false;    ///< zero the runtime field in reports

    void set(const std::string& key, const std::string& value);
};

/// Parse a config file; unknown keys raise std::invalid_argument.
Config load_config_file(const std::string& path, Config base = Config{});

/// Default config: NISV_CONFIG file if set, built-in defaults otherwise.
Config default_config();

} // namespace nisv
