#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bcsketch/version.hpp"

namespace bcsketch {

/**
 * Flat key=value record written next to every output file; carries the
 * command, the tool version, the master seed and every parameter and path,
 * which is enough to reproduce the run byte for byte.
 */
class RunManifest {
public:
    RunManifest(std::string command, std::uint64_t seed) {
        add("command", std::move(command));
        add("version", kVersion);
        add("seed", seed);
    }

    void add(std::string key, std::string value) {
        entries_.emplace_back(std::move(key), std::move(value));
    }
    void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
    void add(std::string key, std::uint64_t value) {
        add(std::move(key), std::to_string(value));
    }
    void add(std::string key, unsigned value) { add(std::move(key), std::to_string(value)); }
    void add(std::string key, double value) {
        std::ostringstream os;
        os << value;
        add(std::move(key), os.str());
    }

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

    void write(const std::string& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + path);
        for (const auto& [key, value] : entries_) out << key << '=' << value << '\n';
        if (!out) throw std::runtime_error("write failed: " + path);
    }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

inline std::string manifest_path_for(const std::string& output_path) {
    return output_path + ".manifest";
}

}  // namespace bcsketch
