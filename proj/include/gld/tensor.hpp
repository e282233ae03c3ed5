#ifndef GLD_TENSOR_HPP
#define GLD_TENSOR_HPP

#include <array>

namespace gld {

// Small fixed-size algebra. One-dimensional problems reuse the same types
// with the second axis left at zero, so L z L^T collapses to L11^2 z.

using Point = std::array<double, 2>;

struct Mat2 {
    double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;
};

/// Symmetric 2x2 tensor, upper triangle only.
struct Sym2 {
    double s11 = 0.0, s12 = 0.0, s22 = 0.0;

    double operator[](int c) const { return c == 0 ? s11 : (c == 1 ? s12 : s22); }
    double& operator[](int c) { return c == 0 ? s11 : (c == 1 ? s12 : s22); }
};

inline Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

inline Sym2 operator+(const Sym2& a, const Sym2& b) { return {a.s11 + b.s11, a.s12 + b.s12, a.s22 + b.s22}; }
inline Sym2 operator-(const Sym2& a, const Sym2& b) { return {a.s11 - b.s11, a.s12 - b.s12, a.s22 - b.s22}; }
inline Sym2 operator*(double k, const Sym2& a) { return {k * a.s11, k * a.s12, k * a.s22}; }
inline bool operator==(const Sym2& a, const Sym2& b) {
    return a.s11 == b.s11 && a.s12 == b.s12 && a.s22 == b.s22;
}

/// L z L^T evaluated on the upper triangle.
inline Sym2 conjugate(const Mat2& L, const Sym2& z) {
    // rows of L z
    const double m11 = L.a11 * z.s11 + L.a12 * z.s12;
    const double m12 = L.a11 * z.s12 + L.a12 * z.s22;
    const double m21 = L.a21 * z.s11 + L.a22 * z.s12;
    const double m22 = L.a21 * z.s12 + L.a22 * z.s22;
    return {m11 * L.a11 + m12 * L.a12,
            m11 * L.a21 + m12 * L.a22,
            m21 * L.a21 + m22 * L.a22};
}

/// Symmetric part (G + G^T)/2.
inline Sym2 sym_part(const Mat2& G) { return {G.a11, 0.5 * (G.a12 + G.a21), G.a22}; }

}  // namespace gld

#endif  // GLD_TENSOR_HPP
