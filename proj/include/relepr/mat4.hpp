// Minimal fixed-size 4-vector / 4x4-matrix arithmetic over a scalar type.
// Row-major, index order (t, x, y, z) = (0, 1, 2, 3).
#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace relepr {

template <typename S>
struct Vec4 {
    std::array<S, 4> v{};

    S& operator[](std::size_t i) { return v[i]; }
    const S& operator[](std::size_t i) const { return v[i]; }
};

template <typename S>
struct Mat4 {
    // a[4*row + col]
    std::array<S, 16> a{};

    S& operator()(std::size_t mu, std::size_t nu) { return a[4 * mu + nu]; }
    const S& operator()(std::size_t mu, std::size_t nu) const { return a[4 * mu + nu]; }

    static Mat4 identity() {
        Mat4 m;
        m(0, 0) = m(1, 1) = m(2, 2) = m(3, 3) = S(1);
        return m;
    }

    Mat4 transposed() const {
        Mat4 t;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) t(i, j) = (*this)(j, i);
        return t;
    }
};

template <typename S>
Mat4<S> operator*(const Mat4<S>& x, const Mat4<S>& y) {
    Mat4<S> r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            S s{};
            for (std::size_t k = 0; k < 4; ++k) s += x(i, k) * y(k, j);
            r(i, j) = s;
        }
    return r;
}

template <typename S>
Vec4<S> operator*(const Mat4<S>& m, const Vec4<S>& p) {
    Vec4<S> r;
    for (std::size_t i = 0; i < 4; ++i) {
        S s{};
        for (std::size_t k = 0; k < 4; ++k) s += m(i, k) * p[k];
        r[i] = s;
    }
    return r;
}

// eta = diag(-1, 1, 1, 1); conjugation eta * M^T * eta flips the sign of
// the mixed time-space entries.
template <typename S>
Mat4<S> eta_transpose_eta(const Mat4<S>& m) {
    Mat4<S> r = m.transposed();
    for (std::size_t i = 1; i < 4; ++i) {
        r(0, i) = -r(0, i);
        r(i, 0) = -r(i, 0);
    }
    return r;
}

// M^T eta M - eta, max-abs entry.
template <typename S>
S gram_residual(const Mat4<S>& m) {
    S worst{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            S s{};
            for (std::size_t k = 0; k < 4; ++k) {
                S sgn = (k == 0) ? S(-1) : S(1);
                s += m(k, i) * sgn * m(k, j);
            }
            S want = (i == j) ? ((i == 0) ? S(-1) : S(1)) : S(0);
            S d = std::abs(s - want);
            if (d > worst) worst = d;
        }
    return worst;
}

template <typename S>
S det4(const Mat4<S>& m) {
    auto det3 = [&](std::size_t r0, std::size_t r1, std::size_t r2, std::size_t c0,
                    std::size_t c1, std::size_t c2) {
        return m(r0, c0) * (m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1)) -
               m(r0, c1) * (m(r1, c0) * m(r2, c2) - m(r1, c2) * m(r2, c0)) +
               m(r0, c2) * (m(r1, c0) * m(r2, c1) - m(r1, c1) * m(r2, c0));
    };
    return m(0, 0) * det3(1, 2, 3, 1, 2, 3) - m(0, 1) * det3(1, 2, 3, 0, 2, 3) +
           m(0, 2) * det3(1, 2, 3, 0, 1, 3) - m(0, 3) * det3(1, 2, 3, 0, 1, 2);
}

template <typename S>
S max_abs_entry(const Mat4<S>& m) {
    S worst{};
    for (S x : m.a) {
        S d = std::abs(x);
        if (d > worst) worst = d;
    }
    return worst;
}

template <typename S>
S max_abs_diff(const Mat4<S>& x, const Mat4<S>& y) {
    S worst{};
    for (std::size_t i = 0; i < 16; ++i) {
        S d = std::abs(x.a[i] - y.a[i]);
        if (d > worst) worst = d;
    }
    return worst;
}

// Elementary transforms; sign conventions follow the frame convention
// where R_z(t) carries +sin t at row x, column y.
template <typename S>
Mat4<S> boost_x_m(S xi) {
    Mat4<S> m = Mat4<S>::identity();
    S c = std::cosh(xi), s = std::sinh(xi);
    m(0, 0) = c; m(0, 1) = s;
    m(1, 0) = s; m(1, 1) = c;
    return m;
}

template <typename S>
Mat4<S> boost_z_m(S xi) {
    Mat4<S> m = Mat4<S>::identity();
    S c = std::cosh(xi), s = std::sinh(xi);
    m(0, 0) = c; m(0, 3) = s;
    m(3, 0) = s; m(3, 3) = c;
    return m;
}

template <typename S>
Mat4<S> rot_x_m(S t) {
    Mat4<S> m = Mat4<S>::identity();
    S c = std::cos(t), s = std::sin(t);
    m(2, 2) = c; m(2, 3) = s;
    m(3, 2) = -s; m(3, 3) = c;
    return m;
}

template <typename S>
Mat4<S> rot_y_m(S t) {
    Mat4<S> m = Mat4<S>::identity();
    S c = std::cos(t), s = std::sin(t);
    m(1, 1) = c; m(1, 3) = -s;
    m(3, 1) = s; m(3, 3) = c;
    return m;
}

template <typename S>
Mat4<S> rot_z_m(S t) {
    Mat4<S> m = Mat4<S>::identity();
    S c = std::cos(t), s = std::sin(t);
    m(1, 1) = c; m(1, 2) = s;
    m(2, 1) = -s; m(2, 2) = c;
    return m;
}

template <typename T, typename S>
Mat4<T> mat4_cast(const Mat4<S>& m) {
    Mat4<T> r;
    for (std::size_t i = 0; i < 16; ++i) r.a[i] = static_cast<T>(m.a[i]);
    return r;
}

}  // namespace relepr
