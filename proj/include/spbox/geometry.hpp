#pragma once

#include <cmath>
#include <stdexcept>

#include "spbox/rng.hpp"

namespace spbox {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double dot(const Vec3& o) const noexcept { return x * o.x + y * o.y + z * o.z; }
    double norm() const noexcept { return std::sqrt(dot(*this)); }

    Vec3 operator+(const Vec3& o) const noexcept { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const noexcept { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const noexcept { return {x * s, y * s, z * s}; }
    Vec3 operator-() const noexcept { return {-x, -y, -z}; }
};

// A direction on the unit sphere. The constructor enforces unit norm to
// absolute tolerance 1e-9; use normalized() to build one from a raw vector.
class UnitVector {
public:
    static constexpr double kNormTolerance = 1e-9;

    explicit UnitVector(const Vec3& v) : v_(v) {
        if (std::abs(v.norm() - 1.0) > kNormTolerance)
            throw std::domain_error("UnitVector: vector is not normalized");
    }

    static UnitVector normalized(const Vec3& v) {
        const double n = v.norm();
        if (!(n > 0.0) || !std::isfinite(n))
            throw std::domain_error("UnitVector: cannot normalize zero or non-finite vector");
        return UnitVector(v * (1.0 / n));
    }

    const Vec3& vec() const noexcept { return v_; }
    double dot(const Vec3& o) const noexcept { return v_.dot(o); }
    double dot(const UnitVector& o) const noexcept { return v_.dot(o.v_); }

private:
    Vec3 v_;
};

inline UnitVector unit_x() { return UnitVector({1.0, 0.0, 0.0}); }
inline UnitVector unit_z() { return UnitVector({0.0, 0.0, 1.0}); }

// Direction in the x-z plane at the given angle from +z.
inline UnitVector unit_in_xz_plane(double angle_rad) {
    return UnitVector({std::sin(angle_rad), 0.0, std::cos(angle_rad)});
}

// Uniform direction on the sphere via the cylindrical (Archimedes) map.
// Consumes exactly two variates: z = 1 - 2u, phi = 2*pi*v.
inline UnitVector sample_unit_vector(Rng& rng) {
    const double z = 1.0 - 2.0 * rng.uniform();
    const double phi = 2.0 * M_PI * rng.uniform();
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return UnitVector({r * std::cos(phi), r * std::sin(phi), z});
}

// Some unit vector orthogonal to u; picks the coordinate axis least aligned
// with u to keep the cross product well conditioned.
inline UnitVector orthogonal_to(const UnitVector& u) {
    const Vec3& v = u.vec();
    Vec3 axis = (std::abs(v.x) <= std::abs(v.y) && std::abs(v.x) <= std::abs(v.z))
                    ? Vec3{1.0, 0.0, 0.0}
                    : (std::abs(v.y) <= std::abs(v.z) ? Vec3{0.0, 1.0, 0.0} : Vec3{0.0, 0.0, 1.0});
    const Vec3 c{v.y * axis.z - v.z * axis.y, v.z * axis.x - v.x * axis.z,
                 v.x * axis.y - v.y * axis.x};
    return UnitVector::normalized(c);
}

// Direction at the given angle from `from`, rotated by `plane_phi` about it.
inline UnitVector at_angle_from(const UnitVector& from, double angle_rad, double plane_phi) {
    const UnitVector e1 = orthogonal_to(from);
    const Vec3& f = from.vec();
    const Vec3& a = e1.vec();
    const Vec3 e2{f.y * a.z - f.z * a.y, f.z * a.x - f.x * a.z, f.x * a.y - f.y * a.x};
    const Vec3 tangent = a * std::cos(plane_phi) + e2 * std::sin(plane_phi);
    return UnitVector::normalized(f * std::cos(angle_rad) + tangent * std::sin(angle_rad));
}

}  // namespace spbox
