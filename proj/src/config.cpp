#include "planeperiods/config.hpp"

#include "planeperiods/error.hpp"

namespace planeperiods {

void Config::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0)) throw InvalidArgument("config", std::string(name) + " must be positive");
    };
    positive(root_tol, "root_tol");
    positive(tracking_tol, "tracking_tol");
    positive(quad_tol, "quad_tol");
    positive(verify_tol, "verify_tol");
    if (shear_retries < 0) throw InvalidArgument("config", "shear_retries must be >= 0");
    if (degree_cap < 5) throw InvalidArgument("config", "degree_cap must be >= 5");
    if (format != "text" && format != "json") throw InvalidArgument("config", "format must be text or json");
    if (threads < 1) throw InvalidArgument("config", "threads must be >= 1");
}

SmoothnessOptions Config::smoothness_options() const { return {shear_retries, seed}; }

PeriodOptions Config::period_options() const {
    PeriodOptions o;
    o.quad_tol = quad_tol;
    o.monodromy.roots.residual_tol = root_tol;
    o.monodromy.track.residual_tol = tracking_tol;
    o.monodromy.threads = threads;
    o.smoothness = smoothness_options();
    return o;
}

Json to_json(const Config& c) {
    Json j;
    j["root_tol"] = c.root_tol;
    j["tracking_tol"] = c.tracking_tol;
    j["quad_tol"] = c.quad_tol;
    j["verify_tol"] = c.verify_tol;
    j["shear_retries"] = c.shear_retries;
    j["degree_cap"] = c.degree_cap;
    j["format"] = c.format;
    j["seed"] = c.seed;
    j["threads"] = c.threads;
    return j;
}

Config config_from_json(const Json& doc, Config c) {
    if (!doc.is_object()) throw FormatError("config", "configuration must be a JSON object");
    try {
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            const std::string& key = it.key();
            const Json& v = it.value();
            if (key == "root_tol") c.root_tol = v.get<double>();
            else if (key == "tracking_tol") c.tracking_tol = v.get<double>();
            else if (key == "quad_tol") c.quad_tol = v.get<double>();
            else if (key == "verify_tol") c.verify_tol = v.get<double>();
            else if (key == "shear_retries") c.shear_retries = v.get<int>();
            else if (key == "degree_cap") c.degree_cap = v.get<int>();
            else if (key == "format") c.format = v.get<std::string>();
            else if (key == "seed") c.seed = v.get<std::uint64_t>();
            else if (key == "threads") c.threads = v.get<int>();
            else if (key != "format_version") throw FormatError("config", "unknown field '" + key + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("config", e.what());
    }
    return c;
}

Config load_config(const std::string& path, Config base) {
    Json doc;
    try {
        doc = Json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("config", path + ": " + e.what());
    }
    return config_from_json(doc, std::move(base));
}

}  // namespace planeperiods
