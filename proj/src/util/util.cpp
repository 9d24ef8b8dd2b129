#include "caudit/util/hash.hpp"
#include "caudit/util/rng.hpp"
#include "caudit/util/dates.hpp"

#include <cmath>
#include <cstdio>

namespace caudit::util {

std::string to_hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

double Rng::next_gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1, u2;
    do {
        u1 = next_double();
    } while (u1 <= 0.0);
    u2 = next_double();
    double mag = std::sqrt(-2.0 * std::log(u1));
    spare_ = mag * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return mag * std::cos(2.0 * M_PI * u2);
}

// Howard Hinnant's days-from-civil algorithm.
std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

CivilDate civil_from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return {static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

std::int64_t to_epoch_seconds(const CivilDate& date, int hh, int mm, int ss) {
    return days_from_civil(date.year, date.month, date.day) * 86400 + hh * 3600 + mm * 60 + ss;
}

std::optional<std::int64_t> parse_iso8601_utc(std::string_view s) {
    int y, mo, d, hh = 0, mi = 0, se = 0;
    char buf[64];
    if (s.size() >= sizeof(buf))
        return std::nullopt;
    std::snprintf(buf, sizeof(buf), "%.*s", static_cast<int>(s.size()), s.data());
    int n = std::sscanf(buf, "%d-%d-%dT%d:%d:%d", &y, &mo, &d, &hh, &mi, &se);
    if (n < 3)
        return std::nullopt;
    if (mo < 1 || mo > 12 || d < 1 || d > 31)
        return std::nullopt;
    return to_epoch_seconds({y, mo, d}, hh, mi, se);
}

std::string format_iso8601_utc(std::int64_t epoch_seconds) {
    std::int64_t days = epoch_seconds / 86400;
    std::int64_t rem = epoch_seconds % 86400;
    if (rem < 0) {
        rem += 86400;
        days -= 1;
    }
    CivilDate d = civil_from_days(days);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", d.year, d.month, d.day,
                  static_cast<int>(rem / 3600), static_cast<int>((rem % 3600) / 60),
                  static_cast<int>(rem % 60));
    return buf;
}

std::optional<CivilDate> parse_timestamp14(std::string_view ts) {
    if (ts.size() < 8)
        return std::nullopt;
    int y = 0, m = 0, d = 0;
    for (int i = 0; i < 8; ++i)
        if (ts[i] < '0' || ts[i] > '9')
            return std::nullopt;
    y = (ts[0] - '0') * 1000 + (ts[1] - '0') * 100 + (ts[2] - '0') * 10 + (ts[3] - '0');
    m = (ts[4] - '0') * 10 + (ts[5] - '0');
    d = (ts[6] - '0') * 10 + (ts[7] - '0');
    if (m < 1 || m > 12 || d < 1 || d > 31)
        return std::nullopt;
    return CivilDate{y, m, d};
}

}  // namespace caudit::util
