#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "qpd/common/errors.hpp"

namespace qpd {

/// Shortest round-trip decimal representation; fixed format so identical
/// (config, seed) runs produce byte-identical CSV output.
inline std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string csv_num(int v) { return std::to_string(v); }
inline std::string csv_num(long v) { return std::to_string(v); }
inline std::string csv_num(unsigned long v) { return std::to_string(v); }
inline std::string csv_num(unsigned long long v) { return std::to_string(v); }

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path) : out_(path) {
        if (!out_) throw ConfigError("cannot open output file: " + path);
    }

    void comment(const std::string& line) { out_ << "# " << line << "\n"; }

    void raw_row(const std::string& line) { out_ << line << "\n"; }

    template <class... Ts>
    void row(const Ts&... vals) {
        bool first = true;
        ((out_ << (first ? "" : ","), first = false, write_one(vals)), ...);
        out_ << "\n";
    }

private:
    template <class T>
    void write_one(const T& v) {
        if constexpr (std::is_convertible_v<T, std::string>) {
            out_ << v;
        } else {
            out_ << csv_num(v);
        }
    }

    std::ofstream out_;
};

}  // namespace qpd
