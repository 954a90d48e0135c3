#include "ultrawave/fft.hpp"

#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace uw {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

namespace {

// Twiddle tables keyed by length, shared across calls.
const std::vector<cplx>& twiddles(std::size_t n) {
  static std::mutex mu;
  static std::unordered_map<std::size_t, std::vector<cplx>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<cplx> w(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    double ang = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    w[k] = cplx(std::cos(ang), std::sin(ang));
  }
  return cache.emplace(n, std::move(w)).first->second;
}

}  // namespace

void fft_inplace(std::span<cplx> a, int sign) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  if (!is_pow2(n)) throw std::invalid_argument("fft: length must be a power of two");

  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  const auto& w = twiddles(n);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t step = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        cplx tw = w[k * step];
        if (sign > 0) tw = std::conj(tw);
        cplx u = a[i + k];
        cplx v = a[i + k + len / 2] * tw;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

void fft2_inplace(std::span<cplx> data, std::size_t n0, std::size_t n1, int sign) {
  if (data.size() != n0 * n1) throw std::invalid_argument("fft2: size mismatch");
  for (std::size_t r = 0; r < n0; ++r)
    fft_inplace(data.subspan(r * n1, n1), sign);
  std::vector<cplx> col(n0);
  for (std::size_t c = 0; c < n1; ++c) {
    for (std::size_t r = 0; r < n0; ++r) col[r] = data[r * n1 + c];
    fft_inplace(col, sign);
    for (std::size_t r = 0; r < n0; ++r) data[r * n1 + c] = col[r];
  }
}

}  // namespace uw
