#pragma once

#include <cstddef>
#include <functional>
#include <string>

namespace kcp {

enum class ScheduleKind { Exact, D4, D5, Custom };

// Truncation schedule d = (d_j), 1 <= d_j <= j. Exact means d_j = j
// everywhere; D4 and D5 are the piecewise rules used for k=4 and k=5:
//
//   d4(j) = j                    for j <= 2*10^5,
//           floor(250 j^{1/3})   for j <= 3.5*10^6,
//           floor(1125 j^{1/3})  beyond;
//   d5(j) = j                    for j <= 8*10^5,
//           floor(25 sqrt(j))    for j <= 2*10^7,
//           floor(43/2 sqrt(j))  beyond.
//
// Floors are taken by integer root extraction, never through doubles.
class DSchedule {
public:
    using Rule = std::function<std::size_t(std::size_t)>;

    static DSchedule exact();
    static DSchedule d4();
    static DSchedule d5();
    // Desk-scale analog of d4/d5: d_j = j for j <= sw, else floor(25 sqrt(j)).
    // Valid only for sw >= 625 (below that the sqrt branch can exceed j).
    static DSchedule desk(std::size_t sw = 2000);
    static DSchedule custom(std::string name, Rule rule, bool monotone_window = false);

    ScheduleKind kind() const { return kind_; }
    const std::string& name() const { return name_; }

    // d_j. Throws std::domain_error if the rule leaves [1, j].
    std::size_t operator()(std::size_t j) const;

    // True when the window floor j - d_j is non-decreasing in j, so a table
    // builder may discard scaled values below the current floor. All builtin
    // kinds except D4 qualify (d4 jumps up at 3.5*10^6, lowering the floor).
    bool monotone_window() const { return monotone_window_; }

    // Smallest j with d_j < j, or 0 if the schedule never truncates below
    // the probe bound.
    std::size_t first_truncated(std::size_t probe_max) const;

private:
    DSchedule(ScheduleKind kind, std::string name, Rule rule, bool monotone);

    ScheduleKind kind_;
    std::string name_;
    Rule rule_;
    bool monotone_window_;
};

std::size_t d4_value(std::size_t j);
std::size_t d5_value(std::size_t j);

} // namespace kcp
