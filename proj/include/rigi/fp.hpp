#pragma once

#include <cstdint>
#include <random>

namespace rigi {

// Arithmetic in the prime field Z_p with p = 2^61 - 1 (Mersenne).
// Single-word representatives in [0, p); reduction uses the Mersenne fold.
class Fp {
 public:
  static constexpr std::uint64_t P = (std::uint64_t(1) << 61) - 1;

  Fp() = default;
  Fp(long long x) {
    long long r = x % static_cast<long long>(P);
    if (r < 0) r += static_cast<long long>(P);
    v_ = static_cast<std::uint64_t>(r);
  }

  static Fp from_raw(std::uint64_t v) {
    Fp f;
    f.v_ = v;
    return f;
  }

  std::uint64_t raw() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) {
    std::uint64_t s = a.v_ + b.v_;
    if (s >= P) s -= P;
    return from_raw(s);
  }
  friend Fp operator-(Fp a, Fp b) {
    std::uint64_t s = a.v_ + P - b.v_;
    if (s >= P) s -= P;
    return from_raw(s);
  }
  friend Fp operator-(Fp a) { return from_raw(a.v_ == 0 ? 0 : P - a.v_); }
  friend Fp operator*(Fp a, Fp b) {
    unsigned __int128 t = static_cast<unsigned __int128>(a.v_) * b.v_;
    std::uint64_t lo = static_cast<std::uint64_t>(t) & P;
    std::uint64_t hi = static_cast<std::uint64_t>(t >> 61);
    std::uint64_t s = lo + hi;
    if (s >= P) s -= P;
    return from_raw(s);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp pow(std::uint64_t e) const {
    Fp base = *this, acc = Fp(1);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  // p is prime, so a^(p-2) inverts nonzero a.
  Fp inverse() const { return pow(P - 2); }

  // Uniform sample from [0, p); the single value 2^61-1 is rejected.
  template <class Rng>
  static Fp random(Rng& rng) {
    for (;;) {
      std::uint64_t v = rng() >> 3;
      if (v != P) return from_raw(v);
    }
  }

 private:
  std::uint64_t v_ = 0;
};

// Deterministic stream splitting for per-trial seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace rigi
