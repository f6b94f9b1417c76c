#include "meshperm_cli/cli.hpp"

#include "meshperm/cache.hpp"
#include "meshperm/construct.hpp"
#include "meshperm/enumerate.hpp"
#include "meshperm/error.hpp"
#include "meshperm/json_io.hpp"
#include "meshperm/rank.hpp"
#include "meshperm/series.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace meshperm::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::vector<std::string> patterns;
    std::string kind = "smp";
    std::optional<int> d;
    std::optional<int> n;
    std::optional<int> length;
    std::uint64_t budget = 1'000'000'000;
    int workers = 1;
    std::string cache_dir;
    std::string format;

    std::string verify_case;
    int direction = 1;
    std::string mode = "projective";
    std::string perm;
    std::string sigma;
    std::string word;
    std::optional<int> index;
};

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::BudgetExceeded:
        return kExitBudget;
    case ErrorCode::ParseError:
    case ErrorCode::BadSymbol:
    case ErrorCode::InvalidArgument:
    case ErrorCode::UnknownCase:
        return kExitUsage;
    default:
        return kExitDomain;
    }
}

template <class T>
T required(const std::optional<T>& value, const char* flag)
{
    if (!value)
        throw UsageError(std::string(flag) + " is required");
    return *value;
}

int required_count(const std::optional<int>& value, const char* flag)
{
    const int v = required(value, flag);
    if (v < 0)
        throw UsageError(std::string(flag) + " must be >= 0");
    return v;
}

const std::string& single_pattern(const Options& o)
{
    if (o.patterns.size() != 1)
        throw UsageError("exactly one -p/--pattern is required");
    return o.patterns.front();
}

Smp smp_arg(const Options& o, const std::string& text)
{
    Smp p = parse_smp(text, o.d);
    if (o.d && p.dimension() != *o.d)
        fail(ErrorCode::DimensionMismatch, "pattern has dimension " + std::to_string(p.dimension()) + ", --d is "
                                               + std::to_string(*o.d));
    return p;
}

Smp smp_arg(const Options& o)
{
    return smp_arg(o, single_pattern(o));
}

MeshPattern mesh_arg(const Options& o)
{
    if (o.patterns.empty())
        return increasing_pair_pattern(required(o.d, "--d (or a mesh pattern)"));
    Json j;
    try {
        j = Json::parse(single_pattern(o));
    } catch (const Json::exception& e) {
        fail(ErrorCode::ParseError, std::string("mesh pattern must be JSON: ") + e.what());
    }
    auto m = mesh_from_json(j);
    if (o.d && m.dimension() != *o.d)
        fail(ErrorCode::DimensionMismatch, "mesh pattern dimension differs from --d");
    return m;
}

RunConfig run_config(const Options& o, OutputFormat fallback)
{
    RunConfig cfg;
    cfg.budget = o.budget;
    cfg.workers = o.workers;
    if (!o.cache_dir.empty())
        cfg.cache_dir = o.cache_dir;
    cfg.output = o.format.empty() ? fallback : parse_output_format(o.format);
    cfg.validate();
    return cfg;
}

EnumerationConfig enumeration_config(const RunConfig& cfg)
{
    return {cfg.budget, cfg.workers};
}

void emit(std::ostream& out, const Json& j)
{
    out << j.dump() << '\n';
}

void emit_perm(std::ostream& out, const MultiPerm& perm, const RunConfig& cfg)
{
    if (cfg.output == OutputFormat::Json)
        emit(out, to_json(perm));
    else
        out << format_multiperm(perm) << '\n';
}

std::string counts_poly(const DistributionTable& t)
{
    return QPoly(t.counts).str();
}

/// Distribution of the pattern selected by --kind, going through the result
/// cache when one is configured.
DistributionTable table_for(const Options& o, int n, const RunConfig& cfg)
{
    std::string canonical;
    int d = 0;
    std::function<DistributionTable()> compute;
    const auto ecfg = enumeration_config(cfg);
    if (o.kind == "smp") {
        Smp p = smp_arg(o);
        canonical = format_smp(p);
        d = p.dimension();
        compute = [p, n, ecfg] { return distribution(p, n, ecfg); };
    } else if (o.kind == "mesh") {
        MeshPattern m = mesh_arg(o);
        canonical = to_json(m).dump();
        d = m.dimension();
        compute = [m, n, ecfg] { return distribution(m, n, ecfg); };
    } else if (o.kind == "marked") {
        MarkedSmp m = parse_marked(single_pattern(o));
        canonical = format_marked(m);
        d = m.dimension();
        compute = [m, n, ecfg] { return distribution(m, n, ecfg); };
    } else {
        throw UsageError("--kind must be smp, mesh or marked");
    }

    const auto dir = effective_cache_dir(cfg);
    if (!dir)
        return compute();
    const ResultCache cache(*dir);
    const auto key = ResultCache::key(o.kind, canonical, d, n);
    if (auto hit = cache.load(key); hit && hit->d == d && hit->n == n && hit->total() == multiperm_count(d, n))
        return *hit;
    auto table = compute();
    cache.store(key, table);
    return table;
}

Json classification_json(const AvoidabilityClass& c)
{
    Json j{{"avoidable", c.avoidable}};
    j["rank"] = c.rank ? Json(*c.rank) : Json(nullptr);
    return j;
}

int cmd_classify(const Options& o, std::ostream& out, bool with_columns)
{
    const auto cfg = run_config(o, OutputFormat::Json);
    const Smp p = smp_arg(o);
    const auto c = classify(p);
    if (cfg.output == OutputFormat::Json) {
        emit(out, classification_json(c));
        return kExitOk;
    }
    if (!c.avoidable) {
        out << "strongly unavoidable\n";
        return kExitOk;
    }
    out << "avoidable rank=" << *c.rank;
    if (with_columns) {
        const auto sol = solve_rank(p);
        out << " columns=" << format_smp(Smp(p.dimension(), sol.columns));
    }
    out << '\n';
    return kExitOk;
}

int cmd_avoider(const Options& o, std::ostream& out)
{
    const auto cfg = run_config(o, OutputFormat::Text);
    const int n = required_count(o.length, "--length");
    if (o.patterns.empty())
        throw UsageError("at least one -p/--pattern is required");
    if (o.patterns.size() == 1) {
        emit_perm(out, build_avoider(smp_arg(o, o.patterns.front()), n), cfg);
        return kExitOk;
    }
    std::vector<Smp> ps;
    for (const auto& text : o.patterns)
        ps.push_back(smp_arg(o, text));
    emit_perm(out, build_simultaneous_avoider(ps, n), cfg);
    return kExitOk;
}

int cmd_witness(const Options& o, std::ostream& out)
{
    const auto cfg = run_config(o, OutputFormat::Text);
    emit_perm(out, witness_n_occurrences(smp_arg(o), required_count(o.length, "--length")), cfg);
    return kExitOk;
}

int cmd_inflate(const Options& o, std::ostream& out)
{
    const auto cfg = run_config(o, OutputFormat::Text);
    if (o.perm.empty() || o.sigma.empty())
        throw UsageError("--perm and --sigma are required");
    const MultiPerm perm = parse_multiperm(o.perm);
    const MultiPerm sigma = parse_multiperm(o.sigma);
    emit_perm(out, o.index ? inflate(perm, *o.index, sigma) : inflate_all(perm, sigma), cfg);
    return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out)
{
    const auto cfg = run_config(o, OutputFormat::Json);
    const auto t = table_for(o, required_count(o.n, "--n"), cfg);
    switch (cfg.output) {
    case OutputFormat::Json:
        emit(out, Json{{"d", t.d}, {"n", t.n}, {"counts", to_json(t)["counts"]}});
        break;
    case OutputFormat::Csv:
        out << "k,count\n";
        for (std::size_t k = 0; k < t.counts.size(); ++k)
            out << k << ',' << to_decimal(t.counts[k]) << '\n';
        break;
    case OutputFormat::Text:
        out << counts_poly(t) << '\n';
        break;
    }
    return kExitOk;
}

int cmd_distribution(const Options& o, std::ostream& out)
{
    const auto cfg = run_config(o, OutputFormat::Json);
    const int top = required_count(o.n, "--n");
    std::vector<DistributionTable> tables;
    for (int m = 0; m <= top; ++m)
        tables.push_back(table_for(o, m, cfg));
    switch (cfg.output) {
    case OutputFormat::Json: {
        Json series = Json::array();
        for (const auto& t : tables)
            series.push_back(Json{{"n", t.n}, {"counts", to_json(t)["counts"]}});
        emit(out, Json{{"d", tables.front().d}, {"pattern", tables.front().pattern_id}, {"series", std::move(series)}});
        break;
    }
    case OutputFormat::Csv:
        out << "n,k,count\n";
        for (const auto& t : tables)
            for (std::size_t k = 0; k < t.counts.size(); ++k)
                out << t.n << ',' << k << ',' << to_decimal(t.counts[k]) << '\n';
        break;
    case OutputFormat::Text:
        for (const auto& t : tables)
            out << "x^" << t.n << ": " << counts_poly(t) << '\n';
        break;
    }
    return kExitOk;
}

int parse_case_id(const std::string& text)
{
    if (text.size() == 1 && text[0] >= '1' && text[0] <= '5')
        return text[0] - '0';
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const auto cfg = run_config(o, OutputFormat::Json);
    const auto ecfg = enumeration_config(cfg);
    const int d = required(o.d, "--d");
    const std::string& which = o.verify_case;

    int n = 0;
    std::string expected;
    ReconcileReport report;
    auto against = [&](const SeriesQ& formula, const Smp& pattern) {
        std::vector<DistributionTable> tables;
        for (int m = 0; m <= n; ++m)
            tables.push_back(distribution(pattern, m, ecfg));
        report = reconcile(formula, tables);
    };

    if (const int id = parse_case_id(which); id != 0) {
        n = o.n ? required_count(o.n, "--n") : 4;
        against(case_formula(id, d, n), case_pattern(id, d));
    } else if (which == "plus-antipodal") {
        n = o.n ? required_count(o.n, "--n") : 4;
        against(plus_antipodal_series(d, n).distribution, plus_antipodal_pattern(d));
    } else if (which == "f3d" || which == "smmp") {
        n = o.n.value_or(3);
        if (n != 3)
            throw UsageError("--case " + which + " is stated for n = 3");
        if (which == "f3d") {
            SeriesQ formula(3);
            formula.set(3, f3d_polynomial(d));
            expected = formula.coeff(3).str();
            const std::vector<DistributionTable> tables{distribution(increasing_pair_pattern(d), 3, ecfg)};
            report = reconcile(formula, tables);
        } else {
            const MarkedSmp marked(d, {{SignVector::all_plus(d), Mark::at_least(1)}});
            const BigInt want = smmp_avoider_count(d);
            const BigInt got = distribution(marked, 3, ecfg).count(0);
            expected = to_decimal(want);
            if (want != got)
                report.mismatches.push_back({3, 0, want, got});
        }
    } else {
        fail(ErrorCode::UnknownCase, "--case must be 1..5, plus-antipodal, f3d or smmp");
    }

    if (cfg.output == OutputFormat::Json) {
        Json mismatches = Json::array();
        for (const auto& m : report.mismatches)
            mismatches.push_back(Json{{"n", m.n},
                                      {"q_power", m.q_power},
                                      {"expected", to_decimal(m.expected)},
                                      {"actual", to_decimal(m.actual)}});
        Json j{{"case", which}, {"d", d}, {"n", n}, {"pass", report.passed()}};
        if (!expected.empty())
            j["expected"] = expected;
        j["mismatches"] = std::move(mismatches);
        emit(out, j);
    } else {
        out << (report.passed() ? "PASS" : "FAIL") << " case=" << which << " d=" << d << " n=" << n << '\n';
        for (const auto& m : report.mismatches)
            out << "  x^" << m.n << " q^" << m.q_power << ": expected " << to_decimal(m.expected) << ", got "
                << to_decimal(m.actual) << '\n';
    }
    return report.passed() ? kExitOk : kExitDomain;
}

int cmd_reduce(const Options& o, std::ostream& out)
{
    const auto cfg = run_config(o, OutputFormat::Json);
    const auto ecfg = enumeration_config(cfg);
    const Smp p = smp_arg(o);
    const int n = required_count(o.n, "--n");
    Json j{{"mode", o.mode}, {"direction", o.direction}, {"n", n}};
    bool equal = false;
    if (o.mode == "projective") {
        const auto r = projective_lift_check(p, o.direction, n, ecfg);
        equal = r.equal;
        j["equal"] = equal;
        j["lifted"] = to_json(r.lifted)["counts"];
        j["projected"] = to_json(r.projected)["counts"];
    } else if (o.mode == "hyperplane") {
        const auto r = hyperplane_reduction_count(p, o.direction, n, ecfg);
        equal = r.via_formula == r.direct;
        j["equal"] = equal;
        j["via_formula"] = to_decimal(r.via_formula);
        j["direct"] = to_decimal(r.direct);
    } else {
        throw UsageError("--mode must be projective or hyperplane");
    }
    if (cfg.output == OutputFormat::Json)
        emit(out, j);
    else
        out << (equal ? "equal" : "different") << '\n';
    return equal ? kExitOk : kExitDomain;
}

int cmd_bijection(const Options& o, std::ostream& out)
{
    const auto cfg = run_config(o, OutputFormat::Text);
    if (o.word.empty() == o.perm.empty())
        throw UsageError("give exactly one of --word and --perm");
    if (!o.word.empty()) {
        emit_perm(out, string_to_one_occurrence_perm(o.word), cfg);
        return kExitOk;
    }
    const auto word = one_occurrence_perm_to_string(parse_multiperm(o.perm));
    if (cfg.output == OutputFormat::Json)
        emit(out, Json{{"word", word}});
    else
        out << word << '\n';
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Singleton mesh patterns in d-dimensional permutations", "meshperm"};
    app.require_subcommand(1);
    app.add_option("--budget", o.budget, "Maximum elementary checks per enumeration")->check(CLI::PositiveNumber);
    app.add_option("--workers", o.workers, "Worker threads for enumeration")->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", o.cache_dir, "Result cache directory (MESHPERM_CACHE overrides)");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

    auto sub = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->fallthrough();
        return s;
    };
    auto add_pattern = [&](CLI::App* s) { s->add_option("-p,--pattern", o.patterns, "Pattern text")->allow_extra_args(false); };
    auto add_d = [&](CLI::App* s) { s->add_option("--d", o.d, "Dimension"); };
    auto add_n = [&](CLI::App* s) { s->add_option("--n", o.n, "Permutation length"); };
    auto add_length = [&](CLI::App* s) { s->add_option("--length", o.length, "Permutation length"); };

    auto* classify_cmd = sub("classify", "Avoidable with rank r, or strongly unavoidable");
    add_pattern(classify_cmd);
    add_d(classify_cmd);
    auto* rank_cmd = sub("rank", "Rank of a pattern");
    add_pattern(rank_cmd);
    add_d(rank_cmd);
    auto* avoider_cmd = sub("avoider", "Construct an avoider (several -p: a common avoider)");
    add_pattern(avoider_cmd);
    add_length(avoider_cmd);
    auto* witness_cmd = sub("witness", "Permutation with n occurrences");
    add_pattern(witness_cmd);
    add_length(witness_cmd);
    auto* inflate_cmd = sub("inflate", "Inflate one element (--index) or every element");
    inflate_cmd->add_option("--perm", o.perm, "Outer permutation");
    inflate_cmd->add_option("--sigma", o.sigma, "Inserted permutation");
    inflate_cmd->add_option("--index", o.index, "Element to inflate (1-based)");
    auto* enumerate_cmd = sub("enumerate", "Occurrence distribution over S^d_n");
    auto* distribution_cmd = sub("distribution", "Distributions for lengths 0..n");
    for (auto* s : {enumerate_cmd, distribution_cmd}) {
        add_pattern(s);
        add_d(s);
        add_n(s);
        s->add_option("--kind", o.kind, "smp, mesh or marked")->check(CLI::IsMember({"smp", "mesh", "marked"}));
    }
    auto* verify_cmd = sub("verify", "Check a closed form against enumeration");
    verify_cmd->add_option("--case", o.verify_case, "1..5, plus-antipodal, f3d or smmp")->required();
    add_d(verify_cmd);
    add_n(verify_cmd);
    auto* reduce_cmd = sub("reduce", "Projective-lift or hyperplane-reduction check");
    add_pattern(reduce_cmd);
    add_d(reduce_cmd);
    add_n(reduce_cmd);
    reduce_cmd->add_option("--direction", o.direction, "Row index i");
    reduce_cmd->add_option("--mode", o.mode, "projective or hyperplane")
        ->check(CLI::IsMember({"projective", "hyperplane"}));
    auto* bijection_cmd = sub("bijection", "Words over {0,1,2} <-> one-occurrence permutations");
    bijection_cmd->add_option("--word", o.word, "Word to map");
    bijection_cmd->add_option("--perm", o.perm, "Permutation to map back");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classify_cmd->parsed())
            return cmd_classify(o, out, false);
        if (rank_cmd->parsed())
            return cmd_classify(o, out, true);
        if (avoider_cmd->parsed())
            return cmd_avoider(o, out);
        if (witness_cmd->parsed())
            return cmd_witness(o, out);
        if (inflate_cmd->parsed())
            return cmd_inflate(o, out);
        if (enumerate_cmd->parsed())
            return cmd_enumerate(o, out);
        if (distribution_cmd->parsed())
            return cmd_distribution(o, out);
        if (verify_cmd->parsed())
            return cmd_verify(o, out);
        if (reduce_cmd->parsed())
            return cmd_reduce(o, out);
        if (bijection_cmd->parsed())
            return cmd_bijection(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return kExitUsage;
}

} // namespace meshperm::cli
