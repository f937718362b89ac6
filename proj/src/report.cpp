#include "votelab/report.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include <fmt/format.h>
#include <json.hpp>

#include "votelab/stats.hpp"

namespace votelab {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string study_column(const StudyConfig& c)
{
    return fmt::format("type{}_c{}", to_int(c.study_type), c.candidates);
}

// NaN has no JSON spelling; an empty subset is reported as null.
ordered_json number_or_null(double x)
{
    return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr);
}

std::string fixed_or_empty(double x)
{
    return std::isfinite(x) ? fmt::format("{:.6f}", x) : std::string();
}

ordered_json manifest_json(const RunManifest& m)
{
    ordered_json j;
    j["command"] = to_string(m.command);
    j["seed"] = m.seed;
    if (m.command == Command::Election) {
        j["ballots"] = m.ballots ? m.ballots->string() : std::string();
        j["scale_min"] = m.scale.min;
        j["scale_max"] = m.scale.max;
        return j;
    }
    j["voters"] = m.voters;
    j["trials"] = m.trials;
    if (m.command == Command::Table1) {
        std::vector<int> types;
        for (StudyType t : m.types)
            types.push_back(to_int(t));
        j["type"] = types;
        j["candidates"] = m.candidates;
    }
    return j;
}

void write_run_comment(std::ostream& out, const RunManifest& m)
{
    out << "# votelab " << to_string(m.command) << " seed=" << m.seed;
    if (m.command == Command::Election) {
        out << " ballots=" << (m.ballots ? m.ballots->string() : "")
            << fmt::format(" scale_min={} scale_max={}\n", m.scale.min, m.scale.max);
        return;
    }
    out << " voters=" << m.voters << " trials=" << m.trials << "\n";
}

void write_table1_accounting(std::ostream& out, const std::vector<Table1Result>& results)
{
    for (const Table1Result& r : results) {
        out << fmt::format("# {} kept={} consumed={}", study_column(r.config), r.kept_trials,
                           r.trials_consumed);
        for (std::size_t k = 0; k < kDiscardReasons; ++k)
            out << fmt::format(" {}={}", to_string(static_cast<DiscardReason>(k)),
                               r.discarded_by_reason[k]);
        out << "\n";
    }
}

std::string name_or_tie(const ElectionReport& r, const std::optional<Candidate>& c)
{
    return c ? r.names[*c] : std::string("tie");
}

}  // namespace

void write_table1_csv(std::ostream& out, const RunManifest& m,
                      const std::vector<Table1Result>& results)
{
    write_run_comment(out, m);
    write_table1_accounting(out, results);
    out << "line,system";
    for (const Table1Result& r : results)
        out << "," << study_column(r.config);
    out << "\n";
    for (std::size_t line = 0; line < kTable1Lines; ++line) {
        out << line + 1 << "," << kTable1Labels[line];
        for (const Table1Result& r : results) {
            const double pct = r.lines[line].percentage();
            out << ",";
            if (std::isfinite(pct))
                out << round_percentage(pct);
        }
        out << "\n";
    }
}

void write_table1_precise_csv(std::ostream& out, const RunManifest& m,
                              const std::vector<Table1Result>& results)
{
    write_run_comment(out, m);
    write_table1_accounting(out, results);
    out << "type,candidates,line,system,numerator,denominator,percentage,standard_error\n";
    for (const Table1Result& r : results) {
        for (std::size_t line = 0; line < kTable1Lines; ++line) {
            const LineStat& s = r.lines[line];
            out << fmt::format("{},{},{},{},{},{},{},{}\n", to_int(r.config.study_type),
                               r.config.candidates, line + 1, kTable1Labels[line], s.numerator,
                               s.denominator, fixed_or_empty(s.percentage()),
                               fixed_or_empty(s.standard_error()));
        }
    }
}

void write_table1_json(std::ostream& out, const RunManifest& m,
                       const std::vector<Table1Result>& results)
{
    ordered_json j;
    j["manifest"] = manifest_json(m);
    j["studies"] = ordered_json::array();
    for (const Table1Result& r : results) {
        ordered_json s;
        s["type"] = to_int(r.config.study_type);
        s["candidates"] = r.config.candidates;
        s["voters"] = r.config.voters;
        s["master_seed"] = r.config.master_seed;
        s["kept_trials"] = r.kept_trials;
        s["trials_consumed"] = r.trials_consumed;
        ordered_json discards;
        for (std::size_t k = 0; k < kDiscardReasons; ++k)
            discards[std::string(to_string(static_cast<DiscardReason>(k)))] =
                r.discarded_by_reason[k];
        s["discarded_by_reason"] = discards;
        s["lines"] = ordered_json::array();
        for (std::size_t line = 0; line < kTable1Lines; ++line) {
            const LineStat& st = r.lines[line];
            s["lines"].push_back({{"line", line + 1},
                                  {"system", kTable1Labels[line]},
                                  {"numerator", st.numerator},
                                  {"denominator", st.denominator},
                                  {"percentage", number_or_null(st.percentage())},
                                  {"standard_error", number_or_null(st.standard_error())}});
        }
        j["studies"].push_back(std::move(s));
    }
    out << j.dump(2) << "\n";
}

void write_dropout_csv(std::ostream& out, const RunManifest& m, const DropoutResult& r)
{
    write_run_comment(out, m);
    out << fmt::format("# kept={} consumed={}", r.kept_trials, r.trials_consumed);
    for (std::size_t k = 0; k < kDropoutDiscardReasons; ++k)
        out << fmt::format(" {}={}", to_string(static_cast<DropoutDiscard>(k)),
                           r.discarded_by_reason[k]);
    out << "\n";
    out << "record,first,second,wins_first,wins_second,total,percent_first,standard_error,"
           "binomial_p\n";
    for (const StrategyDuel& d : r.duels) {
        const double share = d.share_first();
        const double se = d.disagreements ? standard_error(share / 100.0, d.disagreements)
                                          : std::nan("");
        const double p = binomial_two_tailed(d.wins_first, d.disagreements);
        out << fmt::format("duel,{},{},{},{},{},{},{},{:.6g}\n", d.first, d.second,
                           d.wins_first, d.wins_second, d.disagreements, fixed_or_empty(share),
                           fixed_or_empty(se), p);
    }
    for (const StrategyHits& h : r.hits) {
        const double pct = h.trials ? 100.0 * static_cast<double>(h.hits) /
                                          static_cast<double>(h.trials)
                                    : std::nan("");
        const double se =
            h.trials ? standard_error(pct / 100.0, h.trials) : std::nan("");
        out << fmt::format("hits,{},centrist,{},{},{},{},{},\n", h.strategy, h.hits,
                           h.trials - h.hits, h.trials, fixed_or_empty(pct),
                           fixed_or_empty(se));
    }
}

void write_dropout_json(std::ostream& out, const RunManifest& m, const DropoutResult& r)
{
    ordered_json j;
    j["manifest"] = manifest_json(m);
    j["study"] = static_cast<int>(r.config.study);
    j["kept_trials"] = r.kept_trials;
    j["trials_consumed"] = r.trials_consumed;
    ordered_json discards;
    for (std::size_t k = 0; k < kDropoutDiscardReasons; ++k)
        discards[std::string(to_string(static_cast<DropoutDiscard>(k)))] =
            r.discarded_by_reason[k];
    j["discarded_by_reason"] = discards;
    j["duels"] = ordered_json::array();
    for (const StrategyDuel& d : r.duels)
        j["duels"].push_back({{"first", d.first},
                              {"second", d.second},
                              {"wins_first", d.wins_first},
                              {"wins_second", d.wins_second},
                              {"disagreements", d.disagreements},
                              {"share_first", number_or_null(d.share_first())},
                              {"binomial_p", binomial_two_tailed(d.wins_first, d.disagreements)}});
    j["hits"] = ordered_json::array();
    for (const StrategyHits& h : r.hits)
        j["hits"].push_back({{"strategy", h.strategy}, {"hits", h.hits}, {"trials", h.trials}});
    out << j.dump(2) << "\n";
}

void write_election_csv(std::ostream& out, const RunManifest& m, const ElectionReport& r)
{
    write_run_comment(out, m);
    out << fmt::format("# voters={} candidates={} imputed_grades={}\n", r.voters,
                       r.names.size(), r.imputed);
    out << "system,winner\n";
    out << "MJ," << name_or_tie(r, r.mj.winner) << "\n";
    if (r.finalists) {
        out << "MJ runner-up," << r.names[r.finalists->second] << "\n";
        out << "MR," << name_or_tie(r, r.mr) << "\n";
        if (r.names.size() >= 3) {
            out << "QB," << name_or_tie(r, r.qb) << "\n";
            out << "QM," << name_or_tie(r, r.qm) << "\n";
        }
    }
    if (r.names.size() >= 2) {
        out << "Condorcet," << (r.condorcet ? r.names[*r.condorcet] : "none") << "\n";
        out << "Minimax," << name_or_tie(r, r.minimax) << "\n";
    }
}

void write_election_json(std::ostream& out, const RunManifest& m, const ElectionReport& r)
{
    auto name = [&r](const std::optional<Candidate>& c) {
        return c ? ordered_json(r.names[*c]) : ordered_json(nullptr);
    };
    ordered_json j;
    j["manifest"] = manifest_json(m);
    j["voters"] = r.voters;
    j["imputed_grades"] = r.imputed;
    j["candidates"] = r.names;
    ordered_json medians;
    for (std::size_t c = 0; c < r.names.size(); ++c)
        medians[r.names[c]] = number_or_null(r.mj.median_grade[c]);
    j["median_grade"] = medians;
    j["mj"] = {{"winner", name(r.mj.winner)},
               {"tiebreak_used", r.mj.tiebreak_used},
               {"tiebreak_row", r.mj.tiebreak_row ? ordered_json(*r.mj.tiebreak_row)
                                                  : ordered_json(nullptr)}};
    if (r.finalists)
        j["finalists"] = {r.names[r.finalists->first], r.names[r.finalists->second]};
    j["mr"] = name(r.mr);
    j["qb"] = name(r.qb);
    j["qm"] = name(r.qm);
    j["condorcet"] = name(r.condorcet);
    j["minimax"] = name(r.minimax);
    ordered_json prefer = ordered_json::array();
    for (std::size_t a = 0; a < r.names.size(); ++a) {
        ordered_json row = ordered_json::array();
        for (std::size_t b = 0; b < r.names.size(); ++b)
            row.push_back(r.tally.prefer(a, b));
        prefer.push_back(std::move(row));
    }
    j["prefer"] = prefer;
    out << j.dump(2) << "\n";
}

std::filesystem::path precise_companion_path(const std::filesystem::path& csv_path)
{
    std::filesystem::path p = csv_path;
    p.replace_extension();
    p += ".full.csv";
    return p;
}

void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw std::runtime_error("cannot write " + path.string());
    f << content;
    f.close();
    if (!f)
        throw std::runtime_error("error while writing " + path.string());
}

}  // namespace votelab
