#include "votelab/manifest.hpp"

#include <fstream>
#include <map>
#include <set>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

namespace votelab {

std::string_view to_string(Command c) noexcept
{
    switch (c) {
    case Command::Table1: return "table1";
    case Command::Dropout1: return "dropout1";
    case Command::Dropout2: return "dropout2";
    case Command::Dropout3: return "dropout3";
    case Command::Election: return "election";
    }
    return "unknown";
}

std::string_view to_string(OutputFormat f) noexcept
{
    return f == OutputFormat::Json ? "json" : "csv";
}

namespace {

using nlohmann::json;

// Raw flag values; empty means "not given on the command line".
struct FlagValues {
    std::vector<int> types;
    std::vector<long long> candidates;
    std::optional<long long> voters;
    std::optional<long long> trials;
    std::optional<std::uint64_t> seed;
    std::optional<long long> workers;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<std::string> ballots;
    std::optional<double> scale_min;
    std::optional<double> scale_max;
    std::optional<std::string> config;
};

void add_common(CLI::App& cmd, FlagValues& f)
{
    cmd.add_option("--voters", f.voters, "Voters per trial");
    cmd.add_option("--trials", f.trials, "Kept trials to collect");
    cmd.add_option("--seed", f.seed, "Master seed");
    cmd.add_option("--workers", f.workers, "Worker threads (0 = all)");
    cmd.add_option("--out", f.out, "Output file (default: stdout)");
    cmd.add_option("--format", f.format, "csv or json");
    cmd.add_option("--config", f.config, "JSON file supplying defaults for these flags");
}

json load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ManifestError("--config: cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ManifestError("--config: " + path + " is not valid JSON: " + e.what());
    }
    if (!j.is_object())
        throw ManifestError("--config: top level must be a JSON object");
    static const std::set<std::string> known = {
        "type", "candidates", "voters", "trials", "seed", "workers",
        "out",  "format",     "ballots", "scale_min", "scale_max"};
    for (const auto& [key, value] : j.items())
        if (!known.count(key))
            throw ManifestError("--config: unknown key '" + key + "'");
    return j;
}

template <class T>
std::optional<T> config_value(const json& cfg, const char* key)
{
    if (!cfg.contains(key))
        return std::nullopt;
    try {
        return cfg.at(key).get<T>();
    } catch (const json::exception&) {
        throw ManifestError(fmt::format("--config: key '{}' has the wrong type", key));
    }
}

template <class T>
std::vector<T> config_list(const json& cfg, const char* key)
{
    if (!cfg.contains(key))
        return {};
    const json& v = cfg.at(key);
    try {
        if (v.is_array())
            return v.get<std::vector<T>>();
        return {v.get<T>()};
    } catch (const json::exception&) {
        throw ManifestError(fmt::format("--config: key '{}' has the wrong type", key));
    }
}

template <class T>
std::optional<T> pick(const std::optional<T>& flag, const std::optional<T>& cfg)
{
    return flag ? flag : cfg;
}

long long require_at_least(const char* name, long long value, long long lo)
{
    if (value < lo)
        throw ManifestError(fmt::format("--{} must be >= {} (got {})", name, lo, value));
    return value;
}

}  // namespace

RunManifest parse_manifest(const std::vector<std::string>& args)
{
    CLI::App app{"Monte Carlo laboratory for Majority Judgment and pairwise voting rules",
                 "votelab"};
    app.require_subcommand(1, 1);
    FlagValues f;

    auto* table1 = app.add_subcommand("table1", "Run one or more four-system face-off studies");
    add_common(*table1, f);
    table1->add_option("--type", f.types, "Study type(s) 1..4")->delimiter(',');
    table1->add_option("--candidates", f.candidates, "Candidate count(s), each >= 3")
        ->delimiter(',');

    std::map<CLI::App*, Command> commands{{table1, Command::Table1}};
    const char* dropout_help[] = {
        "Condorcet winner withdraws (paradox-free trials)",
        "Minimax winner withdraws (paradox trials)",
        "Candidate beaten by the minimax winner withdraws (paradox trials)",
    };
    const Command dropout_cmds[] = {Command::Dropout1, Command::Dropout2, Command::Dropout3};
    for (int i = 0; i < 3; ++i) {
        auto* cmd = app.add_subcommand(std::string(to_string(dropout_cmds[i])), dropout_help[i]);
        add_common(*cmd, f);
        commands[cmd] = dropout_cmds[i];
    }

    auto* election = app.add_subcommand("election", "Evaluate every rule on a ballot file");
    election->add_option("ballots,--ballots", f.ballots, "Comma-separated ballot file");
    election->add_option("--scale-min", f.scale_min, "Lowest grade (missing grades get this)");
    election->add_option("--scale-max", f.scale_max, "Highest grade");
    election->add_option("--out", f.out, "Output file (default: stdout)");
    election->add_option("--format", f.format, "csv or json");
    election->add_option("--config", f.config, "JSON file supplying defaults for these flags");
    commands[election] = Command::Election;

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::RequiredError& e) {
        if (app.get_subcommands().empty())
            throw ManifestError(
                "a command is required: table1, dropout1, dropout2, dropout3, election");
        throw ManifestError(e.what());
    } catch (const CLI::ParseError& e) {
        throw ManifestError(e.what());
    }

    RunManifest m;
    m.command = commands.at(app.get_subcommands().front());
    const bool dropout = m.command == Command::Dropout1 || m.command == Command::Dropout2 ||
                         m.command == Command::Dropout3;

    const json cfg = f.config ? load_config(*f.config) : json::object();

    // Defaults follow the scale of the published studies.
    m.voters = dropout ? 75 : 100;
    m.trials = m.command == Command::Table1    ? 1'000'000
               : m.command == Command::Dropout1 ? 100'000
                                                : 10'000;

    auto types = f.types.empty() ? config_list<int>(cfg, "type") : f.types;
    auto counts = f.candidates.empty() ? config_list<long long>(cfg, "candidates") : f.candidates;
    if (m.command == Command::Table1) {
        if (!types.empty()) {
            m.types.clear();
            for (int t : types) {
                if (t < 1 || t > 4)
                    throw ManifestError(
                        fmt::format("--type must be in 1..4 (got {})", t));
                m.types.push_back(static_cast<StudyType>(t));
            }
        }
        if (!counts.empty()) {
            m.candidates.clear();
            for (long long c : counts)
                m.candidates.push_back(
                    static_cast<std::size_t>(require_at_least("candidates", c, 3)));
        }
    }

    if (auto v = pick(f.voters, config_value<long long>(cfg, "voters")))
        m.voters = static_cast<std::size_t>(require_at_least("voters", *v, 1));
    if (auto v = pick(f.trials, config_value<long long>(cfg, "trials")))
        m.trials = static_cast<std::uint64_t>(require_at_least("trials", *v, 1));
    if (auto v = pick(f.seed, config_value<std::uint64_t>(cfg, "seed")))
        m.seed = *v;
    if (auto v = pick(f.workers, config_value<long long>(cfg, "workers")))
        m.workers = static_cast<unsigned>(require_at_least("workers", *v, 0));
    if (auto v = pick(f.out, config_value<std::string>(cfg, "out")))
        m.out = *v;
    if (auto v = pick(f.format, config_value<std::string>(cfg, "format"))) {
        if (*v == "csv")
            m.format = OutputFormat::Csv;
        else if (*v == "json")
            m.format = OutputFormat::Json;
        else
            throw ManifestError("--format must be csv or json (got " + *v + ")");
    }

    if (m.command == Command::Election) {
        if (auto v = pick(f.ballots, config_value<std::string>(cfg, "ballots")))
            m.ballots = *v;
        else
            throw ManifestError("election: a ballot file is required");
        if (auto v = pick(f.scale_min, config_value<double>(cfg, "scale_min")))
            m.scale.min = *v;
        if (auto v = pick(f.scale_max, config_value<double>(cfg, "scale_max")))
            m.scale.max = *v;
        if (!(m.scale.min < m.scale.max))
            throw ManifestError("--scale-min must be below --scale-max");
    }
    return m;
}

}  // namespace votelab
