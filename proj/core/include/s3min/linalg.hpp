#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace s3min {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Tolerance for unit-norm point checks.
inline constexpr double kPointTol = 1e-12;
/// Tolerance for orthogonality of 4x4 matrices.
inline constexpr double kMatTol = 1e-10;
/// Quantization scale used to deduplicate group elements (9 decimal digits).
inline constexpr double kDedupScale = 1e9;

/// Pack a pair of complex numbers (w1, w2) into ambient coordinates
/// (Re w1, Im w1, Re w2, Im w2).
inline Vec4 from_c2(Complex w1, Complex w2) {
  return Vec4(w1.real(), w1.imag(), w2.real(), w2.imag());
}

inline std::pair<Complex, Complex> to_c2(const Vec4& x) {
  return {Complex(x[0], x[1]), Complex(x[2], x[3])};
}

/// Real 4x4 matrix of the complex-linear map (w1,w2) -> (a w1 + b w2, c w1 + d w2).
Mat4 complex_linear(Complex a, Complex b, Complex c, Complex d);

/// The standard complex structure J(w1,w2) = (i w1, i w2).
const Mat4& complex_structure();

/// Matrix of complex conjugation (w1,w2) -> (conj w1, conj w2).
const Mat4& conjugation();

/// Unique (up to sign) unit vector orthogonal to a, b, c in R^4.
Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c);

/// Quantized key of a matrix, for hashing group elements.
using MatKey = std::array<std::int64_t, 16>;

inline std::int64_t quantize(double x, double scale = kDedupScale) {
  std::int64_t q = std::llround(x * scale);
  return q == 0 ? 0 : q;  // collapse -0
}

MatKey mat_key(const Mat4& m, double scale = kDedupScale);

struct MatKeyHash {
  std::size_t operator()(const MatKey& k) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : k) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Deterministic PRNG helpers. std::mt19937_64 is bit-identical across
/// platforms; the double conversion below avoids unspecified distribution
/// implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Uniform point on the unit 3-sphere.
  Vec4 next_s3();

 private:
  std::uint64_t state_;
};

/// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  if (a > kPi) a -= 2.0 * kPi;
  return a;
}

}  // namespace s3min
