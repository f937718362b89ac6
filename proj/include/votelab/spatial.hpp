#pragma once

#include <cstddef>
#include <vector>

#include "votelab/random.hpp"
#include "votelab/ratings.hpp"

namespace votelab {

/// A position in 2-D opinion space, in standard-normal units.
struct Point {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point&) const = default;
};

double distance(Point a, Point b) noexcept;

/// Grade scale used by the rounded study types.
inline constexpr double kGradeMin = 1.0;
inline constexpr double kGradeMax = 9.0;
/// Closeness is kClosenessCeiling minus Euclidean distance.
inline constexpr double kClosenessCeiling = 9.0;

/// One sampled electorate. Voters and candidates are both drawn anew per trial.
struct TrialSetup {
    std::vector<Point> voters;
    std::vector<Point> candidates;
    Point voter_mean;

    std::size_t voter_count() const noexcept { return voters.size(); }
    std::size_t candidate_count() const noexcept { return candidates.size(); }
};

/// Componentwise mean; throws std::invalid_argument on an empty set.
Point mean_point(const std::vector<Point>& points);

/// Builds a setup from explicit positions, computing voter_mean.
/// Throws std::invalid_argument if there are no voters or fewer than 2 candidates.
TrialSetup make_setup(std::vector<Point> voters, std::vector<Point> candidates);

/// Draws n_voters voter points then c candidate points, every coordinate an
/// independent standard normal from `stream`.
TrialSetup sample_trial(std::size_t n_voters, std::size_t c, TrialStream& stream);

/// Distance from the candidate to the voter mean. Smaller is more centrist.
double centrism(Point candidate, const TrialSetup& setup) noexcept;
std::vector<double> centrisms(const TrialSetup& setup);

/// 9 - distance(voter, candidate).
double closeness(Point voter, Point candidate) noexcept;

RatingsMatrix closeness_matrix(const TrialSetup& setup);

/// Round half away from zero, then clamp to [kGradeMin, kGradeMax].
double to_grade(double closeness_value) noexcept;

/// Applies the study-type pipeline. Noise for types 3 and 4 is drawn from
/// `stream` in voter-major order, one standard normal per cell.
RatingsMatrix make_ratings(const TrialSetup& setup, StudyType type, TrialStream& stream);

}  // namespace votelab
