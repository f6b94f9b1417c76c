#pragma once

#include "meshperm/distribution_table.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace meshperm {

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_output_format(std::string_view text);

struct RunConfig {
    std::uint64_t budget = 1'000'000'000;
    int workers = 1;
    std::optional<std::filesystem::path> cache_dir; // no caching when unset
    OutputFormat output = OutputFormat::Json;

    /// Throws InvalidArgument unless budget >= 1 and workers >= 1.
    void validate() const;
};

/// MESHPERM_CACHE if set and non-empty, else the configured directory.
std::optional<std::filesystem::path> effective_cache_dir(const RunConfig& config);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

/// Content-addressed store of distribution tables. The key covers the
/// enumeration kind, the canonical pattern text, d and n; symmetric but
/// distinct patterns get distinct entries.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    static std::string key(std::string_view kind, std::string_view canonical_pattern, int d, int n);

    [[nodiscard]] std::filesystem::path path_for(const std::string& key) const;
    [[nodiscard]] std::optional<DistributionTable> load(const std::string& key) const;
    void store(const std::string& key, const DistributionTable& table) const;

private:
    std::filesystem::path dir_;
};

} // namespace meshperm
