#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "fracpow/errors.hpp"

namespace fracpow::cli {

/// Shortest exact decimal form is not needed; %.17g round-trips and is
/// deterministic, which keeps reruns byte-identical.
inline std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string g10(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

/// Writes to the given path, or to stdout when the path is empty.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw IoError("cannot open output file: " + path);
        }
    }

    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

    void finish(const std::string& path) {
        if (file_.is_open()) {
            file_.flush();
            if (!file_)
                throw IoError("failed writing output file: " + path);
        }
    }

private:
    std::ofstream file_;
};

}  // namespace fracpow::cli
