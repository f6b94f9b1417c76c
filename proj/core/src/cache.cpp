#include "meshperm/cache.hpp"

#include "meshperm/error.hpp"
#include "meshperm/json_io.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>

namespace meshperm {

OutputFormat parse_output_format(std::string_view text)
{
    if (text == "json")
        return OutputFormat::Json;
    if (text == "csv")
        return OutputFormat::Csv;
    if (text == "text")
        return OutputFormat::Text;
    fail(ErrorCode::InvalidArgument, "unknown output format '" + std::string(text) + "' (json|csv|text)");
}

void RunConfig::validate() const
{
    if (budget < 1)
        fail(ErrorCode::InvalidArgument, "budget must be >= 1");
    if (workers < 1)
        fail(ErrorCode::InvalidArgument, "workers must be >= 1");
}

std::optional<std::filesystem::path> effective_cache_dir(const RunConfig& config)
{
    if (const char* env = std::getenv("MESHPERM_CACHE"); env != nullptr && *env != '\0')
        return std::filesystem::path(env);
    return config.cache_dir;
}

std::string sha256_hex(std::string_view data)
{
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1
        || EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1
        || EVP_DigestFinal_ex(ctx.get(), digest.data(), &len) != 1)
        fail(ErrorCode::InternalError, "SHA-256 failed");
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += kHex[digest[i] >> 4];
        out += kHex[digest[i] & 0xF];
    }
    return out;
}

ResultCache::ResultCache(std::filesystem::path dir)
    : dir_(std::move(dir))
{
}

std::string ResultCache::key(std::string_view kind, std::string_view canonical_pattern, int d, int n)
{
    std::ostringstream s;
    s << kind << '|' << canonical_pattern << '|' << d << '|' << n;
    return sha256_hex(s.str());
}

std::filesystem::path ResultCache::path_for(const std::string& key) const
{
    return dir_ / (key + ".json");
}

std::optional<DistributionTable> ResultCache::load(const std::string& key) const
{
    std::ifstream in(path_for(key));
    if (!in)
        return std::nullopt;
    try {
        return table_from_json(Json::parse(in));
    } catch (const Json::exception&) {
        return std::nullopt; // unreadable entries are recomputed and overwritten
    } catch (const Error&) {
        return std::nullopt;
    }
}

void ResultCache::store(const std::string& key, const DistributionTable& table) const
{
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec)
        fail(ErrorCode::Io, "cannot create cache directory " + dir_.string() + ": " + ec.message());
    const auto target = path_for(key);
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            fail(ErrorCode::Io, "cannot write " + tmp.string());
        out << to_json(table).dump() << '\n';
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec)
        fail(ErrorCode::Io, "cannot move cache entry into place: " + ec.message());
}

} // namespace meshperm
