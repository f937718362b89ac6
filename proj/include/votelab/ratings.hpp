#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace votelab {

/// Candidates are identified by their column index.
using Candidate = std::size_t;

/// The 2 x 2 design: with or without rounding, with or without perception noise.
enum class StudyType : int {
    Exact = 1,          ///< raw closeness
    Rounded = 2,        ///< closeness rounded and clamped to [1, 9]
    Noisy = 3,          ///< closeness plus N(0, 1) per cell
    NoisyRounded = 4,   ///< noisy closeness rounded and clamped to [1, 9]
};

/// Throws std::invalid_argument unless 1 <= value <= 4.
StudyType study_type_from_int(int value);

constexpr int to_int(StudyType t) noexcept { return static_cast<int>(t); }

constexpr bool is_rounded(StudyType t) noexcept
{
    return t == StudyType::Rounded || t == StudyType::NoisyRounded;
}

constexpr bool is_noisy(StudyType t) noexcept
{
    return t == StudyType::Noisy || t == StudyType::NoisyRounded;
}

/// Voters x candidates grid of grades, stored row-major (one row per voter).
class RatingsMatrix {
public:
    RatingsMatrix() = default;
    RatingsMatrix(std::size_t voters, std::size_t candidates,
                  std::optional<StudyType> type = std::nullopt);
    /// Throws std::invalid_argument if grades.size() != voters * candidates.
    RatingsMatrix(std::size_t voters, std::size_t candidates, std::vector<double> grades,
                  std::optional<StudyType> type = std::nullopt);

    /// Builds a matrix from per-candidate columns of equal length.
    static RatingsMatrix from_columns(const std::vector<std::vector<double>>& columns,
                                      std::optional<StudyType> type = std::nullopt);

    std::size_t voters() const noexcept { return voters_; }
    std::size_t candidates() const noexcept { return candidates_; }
    std::optional<StudyType> study_type() const noexcept { return type_; }

    double operator()(std::size_t voter, Candidate c) const noexcept
    {
        return grades_[voter * candidates_ + c];
    }
    double& operator()(std::size_t voter, Candidate c) noexcept
    {
        return grades_[voter * candidates_ + c];
    }

    std::span<const double> row(std::size_t voter) const noexcept
    {
        return {grades_.data() + voter * candidates_, candidates_};
    }

    std::vector<double> column(Candidate c) const;
    const std::vector<double>& grades() const noexcept { return grades_; }

    /// Copy with candidate `c` removed; remaining candidates shift down by one.
    RatingsMatrix without_candidate(Candidate c) const;

    template <class F>
    RatingsMatrix transformed(F&& f) const
    {
        RatingsMatrix out = *this;
        for (double& g : out.grades_)
            g = f(g);
        return out;
    }

    bool operator==(const RatingsMatrix&) const = default;

private:
    std::size_t voters_ = 0;
    std::size_t candidates_ = 0;
    std::vector<double> grades_;
    std::optional<StudyType> type_;
};

}  // namespace votelab
