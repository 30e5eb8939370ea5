#include "mixkit/audit.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace mixkit {

namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt pow2(long e) { return BigInt(1) << e; }

BigInt ceil_pow2_half(int a) {
  if (a < 0) throw std::invalid_argument("ceil_pow2_half: negative exponent");
  if (a % 2 == 0) return pow2(a / 2);
  BigInt square = pow2(a);
  BigInt root = boost::multiprecision::sqrt(square);  // floor
  return root * root == square ? root : root + 1;
}

long floor_log2(const BigInt& x) { return static_cast<long>(boost::multiprecision::msb(x)); }

// sum_{L=0}^{lmax} C(d, L), exact
BigInt binomial_prefix_sum(long d, long lmax) {
  BigInt term = 1, sum = 0;
  for (long l = 0; l <= lmax; ++l) {
    sum += term;
    term = term * (d - l) / (l + 1);
  }
  return sum;
}

double ratio_as_double(const BigInt& num, const BigInt& den) {
  // num/den for hugely sized integers of similar magnitude
  long shift = std::max(floor_log2(num), floor_log2(den)) - 52;
  if (shift < 0) shift = 0;
  return static_cast<double>((num >> shift).convert_to<double>()) /
         static_cast<double>((den >> shift).convert_to<double>());
}

}  // namespace

std::string ceil_pow2_half_string(int a) { return ceil_pow2_half(a).str(); }

SizeAuditReport paper_size_audit(int n) {
  if (n < 2) throw std::invalid_argument("paper_size_audit: n must be >= 2");
  SizeAuditReport rep;
  rep.n = n;
  rep.all_ok = true;

  const BigInt short_stretch = pow2(5L * n);
  std::vector<BigInt> bl(n + 1), w(n + 1);
  const BigInt big_c = 4;  // stands in for the unspecified absolute constants

  for (int i = 1; i <= n; ++i) {
    SizeAuditRow row;
    row.island = i;
    const BigInt q = ceil_pow2_half(16 * n - i);
    row.q = q.str();

    if (i == 1) {
      // Single good-leaf tree of depth 2^{2n+1}, every edge short-stretched.
      const long depth = 1L << (2 * n + 1);
      BigInt v_bs = pow2(depth + 1) - 1;
      BigInt e_bs = v_bs - 1;
      BigInt v_t = v_bs + e_bs * (short_stretch - 1);
      w[i] = v_t;
      row.gl = (pow2(depth)).str();
      row.bl = "0";
      row.gmp = "0";
      row.bmp = "0";
      row.bl_bounds_ok = true;
      row.gl_over_pow = 1.0;
      bl[i] = 0;
    } else {
      const long d = 1L << (2 * n + i - 2);
      const long good_extra = (1L << (2 * n + i)) - d;
      // threshold 2^{2n+i-6}; for 2n+i-6 = -1 (n=2, i=1 never reaches here)
      const long theta_exp = 2 * n + i - 6;
      // g = 2L - d <= theta  <=>  L <= (d + theta)/2
      long lmax;
      if (theta_exp >= 0) {
        lmax = (d + (1L << theta_exp)) / 2;
      } else {
        lmax = d / 2;  // fractional threshold below 1 admits g <= 0 only
      }
      BigInt gmp = binomial_prefix_sum(d, lmax);
      BigInt bmp = pow2(d) - gmp;
      BigInt gl = gmp << good_extra;
      const long target_exp = 1L << (2 * n + i - 1);
      const long b = target_exp - floor_log2(bmp);
      BigInt bli = bmp << b;
      bl[i] = bli;
      row.gmp = gmp.str();
      row.bmp = bmp.str();
      row.gl = gl.str();
      row.bl = bli.str();
      row.bl_bounds_ok = bli >= pow2(target_exp) && bli <= pow2(target_exp + 1);
      row.gl_over_pow = ratio_as_double(gl, pow2(1L << (2 * n + i)));

      BigInt v_fh = pow2(d + 1) - 1;
      BigInt e_fh = v_fh - 1;
      BigInt e_good = gmp * (pow2(good_extra + 1) - 2);
      BigInt e_bad = bmp * (pow2(b + 1) - 2);
      BigInt v_bs = v_fh + e_good + e_bad;
      w[i] = v_bs + e_good * (short_stretch - 1) + (e_fh + e_bad) * (q - 1);
    }
    rep.rows.push_back(row);
  }

  // s_i = prod_{j>i} |BL_j|; H_i and W_i bounds; assembled size.
  std::vector<BigInt> s(n + 1, 1);
  for (int i = n - 1; i >= 1; --i) s[i] = s[i + 1] * bl[i + 1];
  BigInt vn = 0;
  for (int i = 1; i <= n; ++i) {
    auto& row = rep.rows[i - 1];
    row.s = s[i].str();
    row.w = w[i].str();
    const long we = (1L << (2 * n + i)) + 5L * n;
    row.w_bounds_ok = w[i] >= pow2(we) && w[i] <= big_c * pow2(we);
    if (i < n) {
      const long se = (1L << (3 * n)) - (1L << (2 * n + i));
      row.s_bounds_ok = s[i] >= pow2(se) && s[i] <= pow2(se + (n - i));
    } else {
      row.s_bounds_ok = s[i] == 1;
    }
    rep.all_ok = rep.all_ok && row.bl_bounds_ok && row.s_bounds_ok && row.w_bounds_ok;
    vn += w[i] * s[i];
  }
  for (int i = 1; i < n; ++i) vn -= s[i];  // stitching identifications
  rep.total_vertices = vn.str();
  const BigInt vn_lo = BigInt(n) * pow2((1L << (3 * n)) + 5L * n);
  const BigInt vn_hi = big_c * BigInt(n) * pow2((1L << (3 * n)) + 6L * n);
  rep.size_gn_ok = vn >= vn_lo && vn <= vn_hi;
  rep.vn_lower_ratio = ratio_as_double(vn, vn_lo);
  rep.all_ok = rep.all_ok && rep.size_gn_ok;
  return rep;
}

}  // namespace mixkit
