#include "meshperm/json_io.hpp"

#include "meshperm/error.hpp"

namespace meshperm {

namespace {

template <class F>
auto guarded(const char* what, F&& body)
{
    try {
        return body();
    } catch (const Json::exception& e) {
        fail(ErrorCode::ParseError, std::string("malformed ") + what + " JSON: " + e.what());
    }
}

} // namespace

Json to_json(const MultiPerm& perm)
{
    Json rows = Json::array();
    for (const auto& row : perm.rows())
        rows.push_back(row);
    return Json{{"d", perm.dimension()}, {"n", perm.size()}, {"rows", std::move(rows)}};
}

MultiPerm multiperm_from_json(const Json& j)
{
    return guarded("multiperm", [&] {
        const int d = j.at("d").get<int>();
        const int n = j.at("n").get<int>();
        auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
        if (d < 2)
            fail(ErrorCode::DimensionTooSmall, "dimension " + std::to_string(d) + " < 2");
        if (static_cast<int>(rows.size()) != d - 1)
            fail(ErrorCode::DimensionMismatch, "expected " + std::to_string(d - 1) + " rows");
        for (const auto& r : rows)
            if (static_cast<int>(r.size()) != n)
                fail(ErrorCode::DimensionMismatch, "row length differs from n");
        auto perm = MultiPerm::from_rows(std::move(rows));
        return perm;
    });
}

Json to_json(const Smp& pattern)
{
    Json cols = Json::array();
    for (const auto& c : pattern.columns())
        cols.push_back(c.str());
    return Json{{"d", pattern.dimension()}, {"columns", std::move(cols)}};
}

Smp smp_from_json(const Json& j)
{
    return guarded("pattern", [&] {
        const int d = j.at("d").get<int>();
        std::vector<SignVector> cols;
        for (const auto& c : j.at("columns"))
            cols.push_back(SignVector::parse(c.get<std::string>()));
        for (const auto& c : cols)
            if (c.dimension() != d)
                fail(ErrorCode::RaggedColumns, "column " + c.str() + " does not have " + std::to_string(d) + " rows");
        return Smp(d, std::move(cols));
    });
}

Json to_json(const MeshPattern& pattern)
{
    return Json{{"T", to_json(pattern.pattern())}, {"shading", pattern.shading()}};
}

MeshPattern mesh_from_json(const Json& j)
{
    return guarded("mesh pattern", [&] {
        return MeshPattern(multiperm_from_json(j.at("T")), j.at("shading").get<std::vector<std::vector<int>>>());
    });
}

Json to_json(const DistributionTable& table)
{
    Json counts = Json::array();
    for (const auto& c : table.counts)
        counts.push_back(to_decimal(c));
    return Json{{"d", table.d}, {"n", table.n}, {"pattern", table.pattern_id}, {"counts", std::move(counts)}};
}

DistributionTable table_from_json(const Json& j)
{
    return guarded("distribution", [&] {
        DistributionTable t;
        t.d = j.at("d").get<int>();
        t.n = j.at("n").get<int>();
        t.pattern_id = j.value("pattern", std::string{});
        for (const auto& c : j.at("counts"))
            t.counts.push_back(from_decimal(c.get<std::string>()));
        return t;
    });
}

} // namespace meshperm
