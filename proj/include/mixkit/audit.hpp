#pragma once

#include <string>
#include <vector>

namespace mixkit {

// Exact arbitrary-precision verification of the construction's size
// arithmetic at the true (doubly exponential) parameters: fh depth
// 2^{2n+i-2}, threshold 2^{2n+i-6}, long stretch ceil(2^{8n-i/2}), short
// stretch 2^{5n}, bad-leaf target 2^{2^{2n+i-1}}. Checks, per island, the
// bad-leaf bounds, the coordinate-expander size bounds, and the tree-size
// lower bound, then the assembled family's total size bounds. The upper
// bounds with unspecified constants are asserted with C = 4.
struct SizeAuditRow {
  int island = 0;
  std::string q;          // exact ceil(2^{8n-i/2})
  std::string gmp, bmp, gl, bl, s, w;
  bool bl_bounds_ok = false;
  bool s_bounds_ok = false;
  bool w_bounds_ok = false;
  double gl_over_pow = 0.0;  // |GL_i| / 2^{2^{2n+i}} in (1/2, 1]
};

struct SizeAuditReport {
  int n = 0;
  std::vector<SizeAuditRow> rows;
  std::string total_vertices;
  bool size_gn_ok = false;
  double vn_lower_ratio = 0.0;  // |V_n| / (n 2^{2^{3n}+5n})
  bool all_ok = false;
};

SizeAuditReport paper_size_audit(int n);

// ceil(2^{a/2}) for nonnegative integer a, exact; decimal string.
std::string ceil_pow2_half_string(int a);

}  // namespace mixkit
