#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "votelab/ratings.hpp"
#include "votelab/rules.hpp"
#include "votelab/tally.hpp"

namespace votelab {

struct GradeScale {
    double min = 1.0;
    double max = 9.0;
};

class BallotError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Candidate names plus a voters x candidates grade matrix.
struct BallotSet {
    std::vector<std::string> names;
    RatingsMatrix ratings;
    std::size_t imputed = 0;  ///< blank cells filled with the scale minimum
};

/**
 * Reads comma-separated ballots: a header row of candidate names, then one row
 * per voter. A blank cell is a missing grade and becomes scale.min, since a
 * voter who did not rate a candidate is taken to rank them at the bottom.
 * Blank lines are skipped. Throws BallotError on an empty file, a ragged row,
 * a non-numeric grade, or a grade outside the scale.
 */
BallotSet parse_ballots(std::istream& in, GradeScale scale = {});
BallotSet ingest_ballots(const std::filesystem::path& path, GradeScale scale = {});

/// Writes ballots in the format parse_ballots reads; grades use the shortest
/// representation that round-trips exactly.
void write_ballots(std::ostream& out, const std::vector<std::string>& names,
                   const RatingsMatrix& ratings);

struct ElectionReport {
    std::vector<std::string> names;
    std::size_t voters = 0;
    std::size_t imputed = 0;
    MJOutcome mj;
    std::optional<FinalistPair> finalists;
    std::optional<Candidate> mr;  ///< majority rule between the MJ finalists
    std::optional<Candidate> qb;  ///< only with 3+ candidates
    std::optional<Candidate> qm;
    std::optional<Candidate> condorcet;
    std::optional<Candidate> minimax;
    PairwiseTally tally;
};

ElectionReport evaluate_election(const BallotSet& ballots);

}  // namespace votelab
