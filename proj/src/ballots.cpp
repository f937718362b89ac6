#include "votelab/ballots.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace votelab {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_cells(std::string_view line)
{
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return cells;
}

}  // namespace

BallotSet parse_ballots(std::istream& in, GradeScale scale)
{
    if (!(scale.min < scale.max))
        throw BallotError("grade scale minimum must be below its maximum");

    BallotSet out;
    std::vector<double> grades;
    std::string line;
    std::size_t line_no = 0;
    std::size_t voters = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty())
            continue;
        const auto cells = split_cells(line);
        if (out.names.empty()) {
            std::set<std::string_view> seen;
            for (std::string_view name : cells) {
                if (name.empty())
                    throw BallotError(fmt::format("line {}: empty candidate name", line_no));
                if (!seen.insert(name).second)
                    throw BallotError(
                        fmt::format("line {}: duplicate candidate name '{}'", line_no, name));
                out.names.emplace_back(name);
            }
            continue;
        }
        if (cells.size() != out.names.size())
            throw BallotError(fmt::format("line {}: expected {} grades, found {}", line_no,
                                          out.names.size(), cells.size()));
        for (std::string_view cell : cells) {
            if (cell.empty()) {
                grades.push_back(scale.min);
                ++out.imputed;
                continue;
            }
            double g = 0.0;
            const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), g);
            if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(g))
                throw BallotError(
                    fmt::format("line {}: grade '{}' is not a number", line_no, cell));
            if (g < scale.min || g > scale.max)
                throw BallotError(fmt::format("line {}: grade {} outside scale [{}, {}]",
                                              line_no, g, scale.min, scale.max));
            grades.push_back(g);
        }
        ++voters;
    }
    if (out.names.empty())
        throw BallotError("ballot file is empty");
    if (voters == 0)
        throw BallotError("ballot file has a header but no ballots");
    out.ratings = RatingsMatrix(voters, out.names.size(), std::move(grades));
    return out;
}

BallotSet ingest_ballots(const std::filesystem::path& path, GradeScale scale)
{
    std::ifstream in(path);
    if (!in)
        throw BallotError("cannot open ballot file " + path.string());
    return parse_ballots(in, scale);
}

void write_ballots(std::ostream& out, const std::vector<std::string>& names,
                   const RatingsMatrix& ratings)
{
    if (names.size() != ratings.candidates())
        throw std::invalid_argument("write_ballots: one name per candidate required");
    out << fmt::format("{}\n", fmt::join(names, ","));
    for (std::size_t v = 0; v < ratings.voters(); ++v)
        out << fmt::format("{}\n", fmt::join(ratings.row(v), ","));
}

ElectionReport evaluate_election(const BallotSet& ballots)
{
    const RatingsMatrix& r = ballots.ratings;
    ElectionReport rep;
    rep.names = ballots.names;
    rep.voters = r.voters();
    rep.imputed = ballots.imputed;
    rep.tally = pairwise_tally(r);

    const MajorityGrades grades(r);
    std::vector<Candidate> all(r.candidates());
    for (Candidate c = 0; c < all.size(); ++c)
        all[c] = c;
    rep.mj = grades.winner(all);
    if (r.candidates() >= 2) {
        rep.finalists = select_finalists(grades);
        rep.condorcet = condorcet_winner(rep.tally);
        rep.minimax = minimax_winner(rep.tally);
    }
    if (rep.finalists) {
        rep.mr = mr_two_way(rep.tally, rep.finalists->first, rep.finalists->second);
        if (r.candidates() >= 3) {
            const auto losers = losers_of(r.candidates(), *rep.finalists);
            rep.qb = qb_winner(rep.tally, *rep.finalists, losers);
            rep.qm = qm_winner(rep.tally, *rep.finalists, losers);
        }
    }
    return rep;
}

}  // namespace votelab
