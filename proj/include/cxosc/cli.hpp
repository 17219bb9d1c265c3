#ifndef CXOSC_CLI_HPP
#define CXOSC_CLI_HPP

#include "cxosc/params.hpp"

#include <json.hpp>

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cxosc {

enum class Precision { double_precision, extended };

/// Options shared by every subcommand.
struct RunConfig {
    int lambda = 2;
    std::vector<std::complex<double>> nu;
    Precision precision = Precision::double_precision;
    double tol = default_tol;
    int degree = 20;
    std::string format = "json";
    std::uint64_t seed = 0;

    AlgebraParams params() const { return make_params(lambda, nu, tol); }
};

nlohmann::ordered_json to_json(const RunConfig& cfg);
RunConfig run_config_from_json(const nlohmann::json& j);

/// Resolved parameter block embedded in every report.
nlohmann::ordered_json params_to_json(const AlgebraParams& p, Precision precision);

/// Exit codes: 0 success, 1 failed verification, 2 invalid configuration.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_invalid = 2;

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cxosc

#endif // CXOSC_CLI_HPP
