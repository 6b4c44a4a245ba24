#include <gtest/gtest.h>

#include "lexres/timestamp.hpp"

namespace lexres {
namespace {

TEST(Timestamp, ParsesUtc) {
  const auto t = parse_iso8601("2009-03-01T12:34:56Z");
  ASSERT_TRUE(t);
  // 2009-03-01 is day 14304 after the epoch.
  EXPECT_EQ(t->time_since_epoch().count(), 14304LL * 86400 + 12 * 3600 + 34 * 60 + 56);
}

TEST(Timestamp, FormatInvertsParse) {
  for (const char* s : {"1970-01-01T00:00:00Z", "2000-02-29T23:59:59Z", "2038-01-19T03:14:08Z"}) {
    const auto t = parse_iso8601(s);
    ASSERT_TRUE(t) << s;
    EXPECT_EQ(format_iso8601(*t), s);
  }
}

TEST(Timestamp, RejectsMalformed) {
  for (const char* s : {"", "2009-03-01", "2009-03-01T00:00:00", "2009-03-01 00:00:00Z",
                        "2009-02-30T00:00:00Z", "2009-13-01T00:00:00Z", "2009-03-01T24:00:00Z",
                        "2009-03-01T00:60:00Z", "2009-3-01T00:00:00Z", "2009-03-01T00:00:00Z ",
                        "2009-03-01T00:00:00+01:00", "abcd-03-01T00:00:00Z"}) {
    EXPECT_FALSE(parse_iso8601(s)) << s;
  }
}

TEST(Timestamp, DaysIsTwentyFourHours) { EXPECT_EQ(days(30), std::chrono::hours(720)); }

}  // namespace
}  // namespace lexres
