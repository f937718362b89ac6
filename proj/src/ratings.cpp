#include "votelab/ratings.hpp"

#include <stdexcept>
#include <string>

namespace votelab {

StudyType study_type_from_int(int value)
{
    if (value < 1 || value > 4)
        throw std::invalid_argument("study type must be in 1..4 (got " +
                                    std::to_string(value) + ")");
    return static_cast<StudyType>(value);
}

RatingsMatrix::RatingsMatrix(std::size_t voters, std::size_t candidates,
                             std::optional<StudyType> type)
    : voters_(voters), candidates_(candidates), grades_(voters * candidates, 0.0), type_(type)
{
}

RatingsMatrix::RatingsMatrix(std::size_t voters, std::size_t candidates,
                             std::vector<double> grades, std::optional<StudyType> type)
    : voters_(voters), candidates_(candidates), grades_(std::move(grades)), type_(type)
{
    if (grades_.size() != voters_ * candidates_)
        throw std::invalid_argument("ratings: grade count does not match voters x candidates");
}

RatingsMatrix RatingsMatrix::from_columns(const std::vector<std::vector<double>>& columns,
                                          std::optional<StudyType> type)
{
    const std::size_t c = columns.size();
    const std::size_t n = c == 0 ? 0 : columns.front().size();
    RatingsMatrix m(n, c, type);
    for (std::size_t j = 0; j < c; ++j) {
        if (columns[j].size() != n)
            throw std::invalid_argument("ratings: columns have unequal lengths");
        for (std::size_t v = 0; v < n; ++v)
            m(v, j) = columns[j][v];
    }
    return m;
}

std::vector<double> RatingsMatrix::column(Candidate c) const
{
    std::vector<double> out(voters_);
    for (std::size_t v = 0; v < voters_; ++v)
        out[v] = (*this)(v, c);
    return out;
}

RatingsMatrix RatingsMatrix::without_candidate(Candidate c) const
{
    if (c >= candidates_)
        throw std::out_of_range("ratings: candidate index out of range");
    RatingsMatrix out(voters_, candidates_ - 1, type_);
    for (std::size_t v = 0; v < voters_; ++v) {
        std::size_t k = 0;
        for (std::size_t j = 0; j < candidates_; ++j)
            if (j != c)
                out(v, k++) = (*this)(v, j);
    }
    return out;
}

}  // namespace votelab
