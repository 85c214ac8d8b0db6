#include "twistlab/util.hpp"

#include <cmath>
#include <cstdio>

namespace twistlab {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return std::string(buf);
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa, double b, double fb,
               double m, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa, double b,
                     double fb, double m, double fm, double whole, double tol, int depth) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = simpson(f, a, fa, m, fm, lm, flm);
  double right = simpson(f, m, fm, b, fb, rm, frm);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth) {
  if (a == b) return 0.0;
  double m = 0.5 * (a + b);
  double fa = f(a), fb = f(b), fm = f(m);
  double whole = simpson(f, a, fa, b, fb, m, fm);
  return adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

}  // namespace twistlab
