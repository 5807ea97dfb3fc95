#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fano/catalog.hpp"
#include "fano/discovery.hpp"

namespace fano {

struct VerifyOptions {
    std::optional<std::string> seeds_path;  // nullopt: stock candidate set
    std::size_t max_order = 20000;
    std::uint32_t scan_prime = 7;  // 0 disables the smoothness falsifier
    int scan_degree = 1;
    bool timings = false;  // timings are excluded by default so identical
                           // inputs render byte-identical reports
};

struct Report {
    std::string input_digest;
    Configuration config;
    std::vector<std::string> warnings;
    std::vector<std::pair<std::string, double>> timings_ms;  // only when requested
};

/// Full pipeline: optional singular scan (witness -> warning), saturation,
/// intersection matrix, graphs, group closure, classification.
Report run_verify(const Cubic& f, const VerifyOptions& options);

std::string render_json(const Report& r);
std::string render_text(const Report& r);
std::string render(const Report& r, const std::string& format);  // "json" | "text"

}  // namespace fano
