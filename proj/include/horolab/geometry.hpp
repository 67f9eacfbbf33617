#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace horolab {

using Complex = std::complex<double>;

// A point in C^d, d small (1 or 2 for everything in the catalog).
using CPoint = std::vector<Complex>;

inline CPoint make_point(Complex z) { return {z}; }
inline CPoint make_point(Complex z1, Complex z2) { return {z1, z2}; }

inline double norm_sq(const CPoint& p) {
    double s = 0.0;
    for (const auto& c : p) s += std::norm(c);
    return s;
}

inline double euclid_norm(const CPoint& p) { return std::sqrt(norm_sq(p)); }

inline CPoint operator-(const CPoint& a, const CPoint& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    CPoint r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline CPoint operator+(const CPoint& a, const CPoint& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    CPoint r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline CPoint operator*(double s, const CPoint& a) {
    CPoint r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline double euclid_dist(const CPoint& a, const CPoint& b) {
    return euclid_norm(a - b);
}

// Hermitian inner product sum z_i * conj(w_i).
inline Complex hermitian_dot(const CPoint& z, const CPoint& w) {
    Complex s = 0.0;
    for (size_t i = 0; i < z.size(); ++i) s += z[i] * std::conj(w[i]);
    return s;
}

inline CPoint normalized(const CPoint& p) {
    double n = euclid_norm(p);
    if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
    return (1.0 / n) * p;
}

// atanh with a guard against arguments that drift to 1 by rounding.
inline double safe_atanh(double x) {
    if (x < 0.0) throw std::domain_error("safe_atanh: negative argument");
    if (x >= 1.0) return std::numeric_limits<double>::infinity();
    return std::atanh(x);
}

// Axis-aligned window box for unbounded kinds and rasterization.
struct Window {
    double xmin = -1.0, xmax = 1.0, ymin = -1.0, ymax = 1.0;

    bool contains(Complex z) const {
        return z.real() > xmin && z.real() < xmax && z.imag() > ymin && z.imag() < ymax;
    }
    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
};

// Deterministic RNG; every sampler takes an explicit seed.
using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng);
}

}  // namespace horolab
