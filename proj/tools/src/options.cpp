#include "options.hpp"

#include <fstream>
#include <json.hpp>
#include <string>

#include "fracpow/errors.hpp"

namespace fracpow::cli {

namespace {

using nlohmann::json;

double as_number(const json& v, const std::string& key) {
    if (!v.is_number())
        throw ParameterError("config key '" + key + "' must be a number");
    return v.get<double>();
}

}  // namespace

std::string find_config_path(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc)
            return argv[i + 1];
        if (arg.rfind("--config=", 0) == 0)
            return arg.substr(9);
    }
    return {};
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open config file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw IoError("malformed JSON in " + path + ": " + e.what());
    }
    if (!doc.is_object())
        throw ParameterError("config file must hold a JSON object");

    for (const auto& [key, value] : doc.items()) {
        if (key == "transform")
            cfg.transform = value.get<std::string>();
        else if (key == "alpha")
            cfg.alpha = as_number(value, key);
        else if (key == "n")
            cfg.n = static_cast<int>(as_number(value, key));
        else if (key == "h")
            cfg.h = as_number(value, key);
        else if (key == "d")
            cfg.d = as_number(value, key);
        else if (key == "d-pi-over")
            cfg.d_pi_over = static_cast<int>(as_number(value, key));
        else if (key == "tau")
            cfg.tau = as_number(value, key);
        else if (key == "r")
            cfg.r = as_number(value, key);
        else if (key == "lambda") {
            cfg.lambdas.clear();
            if (value.is_array())
                for (const auto& item : value)
                    cfg.lambdas.push_back(as_number(item, key));
            else
                cfg.lambdas.push_back(as_number(value, key));
        } else if (key == "matrix")
            cfg.matrix_path = value.get<std::string>();
        else if (key == "vector")
            cfg.vector_path = value.get<std::string>();
        else if (key == "out")
            cfg.out_path = value.get<std::string>();
        else if (key == "artificial")
            cfg.artificial = value.get<bool>();
        else if (key == "diag-exact")
            cfg.diag_exact = value.get<bool>();
        else if (key == "solver")
            cfg.solver = value.get<std::string>();
        else if (key == "spectrum-lower-bound")
            cfg.spectrum_lower_bound = as_number(value, key);
        else if (key == "cg-tol")
            cfg.cg_tol = as_number(value, key);
        else if (key == "figure")
            cfg.figure = static_cast<int>(as_number(value, key));
        else if (key == "kind")
            cfg.kind = value.get<std::string>();
        else
            throw ParameterError("unknown config key '" + key + "'");
    }
}

}  // namespace fracpow::cli
