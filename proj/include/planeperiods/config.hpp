#pragma once

#include <cstdint>
#include <string>

#include "planeperiods/json_io.hpp"
#include "planeperiods/periods.hpp"

namespace planeperiods {

struct Config {
    double root_tol = 1e-11;
    double tracking_tol = 1e-10;
    double quad_tol = 1e-10;
    /// Payload tolerance written by `compress`.
    double verify_tol = 1e-6;
    int shear_retries = 5;
    int degree_cap = 8;
    std::string format = "text";
    std::uint64_t seed = 1;
    int threads = 1;

    /// Throws InvalidArgument when a tolerance is not positive, the degree
    /// cap is below 5, or the format is unknown.
    void validate() const;
    [[nodiscard]] PeriodOptions period_options() const;
    [[nodiscard]] SmoothnessOptions smoothness_options() const;
};

Json to_json(const Config& c);
/// Fields absent from the document keep their value in `base`; unknown
/// fields are a FormatError.
Config config_from_json(const Json& doc, Config base = {});
Config load_config(const std::string& path, Config base = {});

}  // namespace planeperiods
