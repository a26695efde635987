#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string_view>
#include <thread>
#include <vector>

#include "harmap/runtime.hpp"

namespace harmap {

using cplx = std::complex<double>;

namespace detail {

// Fixed-shape pairwise reduction; the summation tree depends only on the
// element count, so results do not change with thread count or chunking.
template <class T>
T pairwise_sum(std::span<const T> xs) {
  if (xs.empty()) return T{};
  if (xs.size() <= 8) {
    T s = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) s += xs[i];
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

template <class T>
T pairwise_sum(const std::vector<T>& xs) {
  return pairwise_sum(std::span<const T>(xs));
}

struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule on [a, b]; Newton on the Legendre recurrence.
inline Quadrature gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  Quadrature q{std::vector<double>(n), std::vector<double>(n)};
  const double xm = 0.5 * (b + a);
  const double xl = 0.5 * (b - a);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 1.0;
    for (int iter = 0; iter < 128; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double step = p1 / pp;
      z -= step;
      if (std::fabs(step) < 1e-15) break;
    }
    q.nodes[i] = xm - xl * z;
    q.nodes[n - 1 - i] = xm + xl * z;
    double p1 = 1.0, p2 = 0.0;
    for (int j = 0; j < n; ++j) {
      const double p3 = p2;
      p2 = p1;
      p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
    }
    pp = n * (z * p1 - p2) / (z * z - 1.0);
    q.weights[i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
    q.weights[n - 1 - i] = q.weights[i];
  }
  return q;
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double fa, double fm, double fb, double whole, double tol,
                                   int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                 double tol = 1e-10, int max_depth = 48) {
  if (!(b >= a)) throw std::invalid_argument("integrate_adaptive: need b >= a");
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Additive Kronecker sequence with the generalized golden ratio as base and a
// seeded phase per dimension. Low discrepancy, fully deterministic, and cheap;
// backs every operation that takes a sample count plus a seed.
class KroneckerSeq {
 public:
  KroneckerSeq(int dim, std::uint64_t seed) : state_(dim), alpha_(dim) {
    if (dim < 1) throw std::invalid_argument("KroneckerSeq: dim must be >= 1");
    double x = 1.5;
    for (int i = 0; i < 64; ++i) x = std::pow(1.0 + x, 1.0 / (dim + 1));
    double a = 1.0;
    for (int k = 0; k < dim; ++k) {
      a /= x;
      alpha_[k] = a;
      state_[k] = double(splitmix64(seed + 0x9E3779B9ull * std::uint64_t(k + 1)) >> 11) * 0x1.0p-53;
    }
  }

  void next(std::span<double> out) {
    for (std::size_t k = 0; k < state_.size(); ++k) {
      state_[k] += alpha_[k];
      if (state_[k] >= 1.0) state_[k] -= 1.0;
      if (k < out.size()) out[k] = state_[k];
    }
  }

  // Area-uniform point of the disk |z| < radius from two sequence dimensions.
  static cplx disk_point(double u0, double u1, double radius) {
    return std::polar(radius * std::sqrt(u0), 2.0 * std::numbers::pi * u1);
  }

 private:
  std::vector<double> state_;
  std::vector<double> alpha_;
};

// Runs body(i) for i in [0, n). Bodies must write only to disjoint slots; the
// chunk layout is fixed, so any later reduction over the slots is stable.
template <class F>
void parallel_for(std::size_t n, F&& body) {
  const int nt = std::min<std::size_t>(runtime::threads(), n);
  if (nt <= 1 || n < 64) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> head{0};
  const std::size_t chunk = std::max<std::size_t>(1, n / (8 * std::size_t(nt)));
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t b = head.fetch_add(chunk, std::memory_order_relaxed);
        if (b >= n) return;
        const std::size_t e = std::min(n, b + chunk);
        for (std::size_t i = b; i < e; ++i) body(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

// Total turning of a closed polyline around the origin, in turns.
inline double winding_turns(std::span<const cplx> pts) {
  if (pts.size() < 3) throw std::invalid_argument("winding_turns: need at least 3 points");
  double total = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const cplx a = pts[i];
    const cplx b = pts[(i + 1) % pts.size()];
    total += std::arg(b / a);
  }
  return total / (2.0 * std::numbers::pi);
}

inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

}  // namespace detail
}  // namespace harmap
