#include "expect_error.hpp"

#include "meshperm/cache.hpp"
#include "meshperm/enumerate.hpp"
#include "meshperm/json_io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace meshperm;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / ("meshperm_test_" + name);
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST(Json, RoundTrips)
{
    const auto perm = parse_multiperm("2 3 1; 3 1 2");
    EXPECT_EQ(multiperm_from_json(to_json(perm)), perm);
    EXPECT_EQ(to_json(perm).dump(), R"({"d":3,"n":3,"rows":[[2,3,1],[3,1,2]]})");

    const auto p = parse_smp("+-,-+");
    EXPECT_EQ(smp_from_json(to_json(p)), p);
    EXPECT_EQ(to_json(p).dump(), R"({"d":2,"columns":["+-","-+"]})");

    const auto mesh = increasing_pair_pattern(3);
    EXPECT_EQ(mesh_from_json(to_json(mesh)), mesh);

    const auto table = distribution(parse_smp("++"), 4);
    EXPECT_EQ(table_from_json(to_json(table)), table);
}

TEST(Json, RejectsMalformed)
{
    EXPECT_MESHPERM_ERROR(multiperm_from_json(Json::parse(R"({"d":3,"n":2,"rows":[[1,2]]})")),
                          ErrorCode::DimensionMismatch);
    EXPECT_MESHPERM_ERROR(smp_from_json(Json::parse(R"({"columns":["+-"]})")), ErrorCode::ParseError);
    EXPECT_MESHPERM_ERROR(smp_from_json(Json::parse(R"({"d":2,"columns":["+x"]})")), ErrorCode::BadSymbol);
}

TEST(Cache, Sha256)
{
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Cache, StoreAndLoad)
{
    const auto dir = scratch_dir("store");
    const ResultCache cache(dir);
    const auto p = parse_smp("+-,-+");
    const auto key = ResultCache::key("smp", format_smp(p), 2, 4);
    EXPECT_FALSE(cache.load(key).has_value());
    const auto table = distribution(p, 4);
    cache.store(key, table);
    const auto loaded = cache.load(key);
    ASSERT_TRUE(loaded.has_value());
    EXPECT_EQ(*loaded, table);
    EXPECT_NE(ResultCache::key("smp", "-+,+-", 2, 4), key);
    EXPECT_NE(ResultCache::key("smp", format_smp(p), 2, 5), key);
    fs::remove_all(dir);
}

TEST(Cache, CorruptEntryIsIgnored)
{
    const auto dir = scratch_dir("corrupt");
    const ResultCache cache(dir);
    fs::create_directories(dir);
    std::ofstream(cache.path_for("k")) << "{not json";
    EXPECT_FALSE(cache.load("k").has_value());
    fs::remove_all(dir);
}

TEST(RunConfig, ValidationAndEnvironment)
{
    RunConfig config;
    EXPECT_NO_THROW(config.validate());
    config.workers = 0;
    EXPECT_MESHPERM_ERROR(config.validate(), ErrorCode::InvalidArgument);
    config.workers = 1;
    config.budget = 0;
    EXPECT_MESHPERM_ERROR(config.validate(), ErrorCode::InvalidArgument);

    EXPECT_EQ(parse_output_format("csv"), OutputFormat::Csv);
    EXPECT_MESHPERM_ERROR(parse_output_format("xml"), ErrorCode::InvalidArgument);

    RunConfig with_dir;
    with_dir.cache_dir = "/tmp/a";
    ::unsetenv("MESHPERM_CACHE");
    EXPECT_EQ(effective_cache_dir(with_dir), fs::path("/tmp/a"));
    ::setenv("MESHPERM_CACHE", "/tmp/b", 1);
    EXPECT_EQ(effective_cache_dir(with_dir), fs::path("/tmp/b"));
    EXPECT_EQ(effective_cache_dir(RunConfig{}), fs::path("/tmp/b"));
    ::unsetenv("MESHPERM_CACHE");
    EXPECT_FALSE(effective_cache_dir(RunConfig{}).has_value());
}
