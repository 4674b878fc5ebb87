#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace maxwell {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr bool operator==(const Vec2&) const = default;
};

constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& a) { return std::hypot(a.x, a.y); }

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid mesh topology/geometry, unsupported domain/kind combination.
class MeshError : public Error {
 public:
  using Error::Error;
};

/// Inverted elements, indefinite matrices, solver breakdown.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Bad input values (unknown names, out-of-range parameters).
class InputError : public Error {
 public:
  using Error::Error;
};

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace maxwell
