#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>

namespace caudit::util {

struct CivilDate {
    int year = 0;
    int month = 0;
    int day = 0;

    auto operator<=>(const CivilDate&) const = default;
};

std::int64_t days_from_civil(int y, unsigned m, unsigned d);
CivilDate civil_from_days(std::int64_t days);
std::int64_t to_epoch_seconds(const CivilDate& date, int hh = 0, int mm = 0, int ss = 0);

// "2019-04-18T00:00:00Z" (time part optional) -> epoch seconds
std::optional<std::int64_t> parse_iso8601_utc(std::string_view s);
std::string format_iso8601_utc(std::int64_t epoch_seconds);

// CDX "yyyyMMddHHmmss" capture timestamps; only the date part is kept
std::optional<CivilDate> parse_timestamp14(std::string_view ts);

}  // namespace caudit::util
