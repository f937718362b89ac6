#include "votelab/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace votelab {

double distance(Point a, Point b) noexcept
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

Point mean_point(const std::vector<Point>& points)
{
    if (points.empty())
        throw std::invalid_argument("mean_point: empty point set");
    double sx = 0.0, sy = 0.0;
    for (const Point& p : points) {
        sx += p.x;
        sy += p.y;
    }
    const auto n = static_cast<double>(points.size());
    return {sx / n, sy / n};
}

TrialSetup make_setup(std::vector<Point> voters, std::vector<Point> candidates)
{
    if (voters.empty())
        throw std::invalid_argument("trial setup needs at least one voter");
    if (candidates.size() < 2)
        throw std::invalid_argument("trial setup needs at least two candidates");
    TrialSetup s;
    s.voter_mean = mean_point(voters);
    s.voters = std::move(voters);
    s.candidates = std::move(candidates);
    return s;
}

TrialSetup sample_trial(std::size_t n_voters, std::size_t c, TrialStream& stream)
{
    if (n_voters < 1)
        throw std::invalid_argument("sample_trial: n_voters must be >= 1");
    if (c < 2)
        throw std::invalid_argument("sample_trial: need at least 2 candidates");
    std::vector<Point> voters(n_voters);
    for (Point& p : voters) {
        p.x = stream.normal();
        p.y = stream.normal();
    }
    std::vector<Point> candidates(c);
    for (Point& p : candidates) {
        p.x = stream.normal();
        p.y = stream.normal();
    }
    return make_setup(std::move(voters), std::move(candidates));
}

double centrism(Point candidate, const TrialSetup& setup) noexcept
{
    return distance(candidate, setup.voter_mean);
}

std::vector<double> centrisms(const TrialSetup& setup)
{
    std::vector<double> out;
    out.reserve(setup.candidates.size());
    for (const Point& c : setup.candidates)
        out.push_back(centrism(c, setup));
    return out;
}

double closeness(Point voter, Point candidate) noexcept
{
    return kClosenessCeiling - distance(voter, candidate);
}

RatingsMatrix closeness_matrix(const TrialSetup& setup)
{
    const std::size_t n = setup.voters.size();
    const std::size_t c = setup.candidates.size();
    RatingsMatrix m(n, c, StudyType::Exact);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t j = 0; j < c; ++j)
            m(v, j) = closeness(setup.voters[v], setup.candidates[j]);
    return m;
}

double to_grade(double closeness_value) noexcept
{
    // std::round rounds halfway cases away from zero.
    return std::clamp(std::round(closeness_value), kGradeMin, kGradeMax);
}

RatingsMatrix make_ratings(const TrialSetup& setup, StudyType type, TrialStream& stream)
{
    const std::size_t n = setup.voters.size();
    const std::size_t c = setup.candidates.size();
    RatingsMatrix m(n, c, type);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t j = 0; j < c; ++j) {
            double g = closeness(setup.voters[v], setup.candidates[j]);
            if (is_noisy(type))
                g += stream.normal();
            if (is_rounded(type))
                g = to_grade(g);
            m(v, j) = g;
        }
    }
    return m;
}

}  // namespace votelab
