#include <doctest.h>

#include "mixkit/audit.hpp"

using namespace mixkit;

TEST_CASE("exact half-power ceilings") {
  CHECK(ceil_pow2_half_string(31) == "46341");      // ceil(2^15.5)
  CHECK(ceil_pow2_half_string(46) == "8388608");    // 2^23
  CHECK(ceil_pow2_half_string(4) == "4");
  CHECK(ceil_pow2_half_string(0) == "1");
}

TEST_CASE("size audit holds at n = 2 and n = 3") {
  SizeAuditReport r2 = paper_size_audit(2);
  CHECK(r2.all_ok);
  CHECK(r2.size_gn_ok);
  REQUIRE(r2.rows.size() == 2);
  CHECK(r2.rows[0].q == "46341");
  // s_1 = |BL_2| sits between 2^32 and 2^33
  CHECK(r2.rows[0].s == "6903037952");
  CHECK(r2.rows[0].s_bounds_ok);
  CHECK(r2.rows[1].bl_bounds_ok);
  CHECK(r2.vn_lower_ratio > 1.0);
  CHECK(r2.vn_lower_ratio < 4.0);
  // |GL_i| = (1 - o(1)) 2^{2^{2n+i}}: the computed ratio is the GMP fraction
  CHECK(r2.rows[1].gl_over_pow > 0.5);
  CHECK(r2.rows[1].gl_over_pow <= 1.0);

  SizeAuditReport r3 = paper_size_audit(3);
  CHECK(r3.all_ok);
  CHECK(r3.rows[1].q == "8388608");  // island 2: ceil(2^{24-1})
  for (const auto& row : r3.rows) {
    CHECK(row.bl_bounds_ok);
    CHECK(row.s_bounds_ok);
    CHECK(row.w_bounds_ok);
  }
}
