/*
 * Copyright (C) 2026 uNet Scheduling Contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
*/

#ifndef UNET_GEOMETRY_HPP
#define UNET_GEOMETRY_HPP

#include <cmath>
#include <vector>

namespace unet {

/// 3D point/vector in meters.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
  double norm_xy() const { return std::hypot(x, y); }

  bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
};

inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

inline Vec3 lerp(const Vec3& a, const Vec3& b, double t) {
  return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t, a.z + (b.z - a.z) * t};
}

/// Unit vector in the horizontal plane; zero-length input yields {0,0,0}.
inline Vec3 unit_xy(const Vec3& v) {
  const double n = v.norm_xy();
  if (n == 0.0) return {0.0, 0.0, 0.0};
  return {v.x / n, v.y / n, 0.0};
}

/// Rotate a horizontal vector by +90 degrees (counterclockwise, z up).
inline Vec3 rot90_ccw(const Vec3& v) { return {-v.y, v.x, 0.0}; }

/// Rotate a horizontal vector by -90 degrees (clockwise, z up).
inline Vec3 rot90_cw(const Vec3& v) { return {v.y, -v.x, 0.0}; }

inline double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
  const Vec3 ab = b - a;
  const double len2 = ab.dot(ab);
  if (len2 == 0.0) return distance(p, a);
  double t = (p - a).dot(ab) / len2;
  t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
  return distance(p, a + ab * t);
}

/// Total length of a polyline given as consecutive waypoints.
inline double polyline_length(const std::vector<Vec3>& pts) {
  double total = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) total += distance(pts[i - 1], pts[i]);
  return total;
}

/// Interior turn angles of a polyline, in radians (0 = straight through).
/// Zero-length segments are skipped.
std::vector<double> polyline_turn_angles(const std::vector<Vec3>& pts);

}  // namespace unet

#endif  // UNET_GEOMETRY_HPP
