#include "kcp/schedule.hpp"

#include <stdexcept>

#include "kcp/bigint.hpp"

namespace kcp {

std::size_t d4_value(std::size_t j)
{
    if (j <= 200000)
        return j;
    // floor(250 j^{1/3}) = floor((250^3 j)^{1/3}); 250^3 = 15625000
    unsigned __int128 c = static_cast<unsigned __int128>(15625000ull) * j;
    if (j <= 3500000)
        return icbrt_u128(c);
    // 1125^3 = 1423828125
    return icbrt_u128(static_cast<unsigned __int128>(1423828125ull) * j);
}

std::size_t d5_value(std::size_t j)
{
    if (j <= 800000)
        return j;
    if (j <= 20000000)
        return isqrt_u128(static_cast<unsigned __int128>(625) * j);
    // floor(43/2 sqrt(j)) = floor(sqrt(1849 j)) / 2
    return isqrt_u128(static_cast<unsigned __int128>(1849) * j) / 2;
}

DSchedule::DSchedule(ScheduleKind kind, std::string name, Rule rule, bool monotone)
    : kind_(kind), name_(std::move(name)), rule_(std::move(rule)),
      monotone_window_(monotone)
{
}

DSchedule DSchedule::exact()
{
    return DSchedule(ScheduleKind::Exact, "exact",
                     [](std::size_t j) { return j; }, true);
}

DSchedule DSchedule::d4()
{
    return DSchedule(ScheduleKind::D4, "d4", d4_value, false);
}

DSchedule DSchedule::d5()
{
    return DSchedule(ScheduleKind::D5, "d5", d5_value, true);
}

DSchedule DSchedule::desk(std::size_t sw)
{
    if (sw < 625)
        throw std::invalid_argument("desk schedule needs switch >= 625");
    return DSchedule(ScheduleKind::Custom, "desk" + std::to_string(sw),
                     [sw](std::size_t j) {
                         if (j <= sw)
                             return j;
                         return static_cast<std::size_t>(
                             isqrt_u128(static_cast<unsigned __int128>(625) * j));
                     },
                     true);
}

DSchedule DSchedule::custom(std::string name, Rule rule, bool monotone_window)
{
    return DSchedule(ScheduleKind::Custom, std::move(name), std::move(rule),
                     monotone_window);
}

std::size_t DSchedule::operator()(std::size_t j) const
{
    if (j == 0)
        throw std::domain_error("d-schedule index must be >= 1");
    std::size_t d = rule_(j);
    if (d < 1 || d > j)
        throw std::domain_error("d_" + std::to_string(j) + " = " + std::to_string(d)
                                + " leaves [1, j]");
    return d;
}

std::size_t DSchedule::first_truncated(std::size_t probe_max) const
{
    for (std::size_t j = 1; j <= probe_max; ++j)
        if ((*this)(j) < j)
            return j;
    return 0;
}

} // namespace kcp
