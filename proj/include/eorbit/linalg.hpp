#pragma once

#include <vector>
#include <string>
#include <stdexcept>

#include "eorbit/rational.hpp"

namespace eorbit {

using IVec = std::vector<long long>;
using QVec = std::vector<Rat>;
using IMat = std::vector<IVec>;  // row-major, square unless noted
using QMat = std::vector<QVec>;

// A point of the weight space, stored as exact ω-basis coordinates.
using Weight = QVec;

inline QVec to_qvec(const IVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

inline QMat to_qmat(const IMat& m) {
    QMat r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = to_qvec(m[i]);
    return r;
}

inline IMat identity_imat(size_t n) {
    IMat m(n, IVec(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// y = A x (column-vector convention).
inline QVec mat_apply(const IMat& a, const QVec& x) {
    QVec y(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        Rat s;
        for (size_t j = 0; j < x.size(); ++j) s += Rat(a[i][j]) * x[j];
        y[i] = s;
    }
    return y;
}

inline QVec mat_apply(const QMat& a, const QVec& x) {
    QVec y(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        Rat s;
        for (size_t j = 0; j < x.size(); ++j) s += a[i][j] * x[j];
        y[i] = s;
    }
    return y;
}

inline IMat mat_mul(const IMat& a, const IMat& b) {
    size_t n = a.size();
    IMat c(n, IVec(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            long long aik = a[i][k];
            if (aik == 0) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
        }
    return c;
}

inline QMat mat_mul(const QMat& a, const QMat& b) {
    size_t n = a.size();
    QMat c(n, QVec(b[0].size()));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

inline QMat transpose(const QMat& a) {
    QMat t(a[0].size(), QVec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

inline IMat transpose(const IMat& a) {
    IMat t(a[0].size(), IVec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

// Exact inverse via Gauss–Jordan; throws std::domain_error when singular.
inline QMat mat_inverse(const QMat& m) {
    size_t n = m.size();
    QMat a = m;
    QMat inv(n, QVec(n));
    for (size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("mat_inverse: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = a[col][col];
        for (size_t j = 0; j < n; ++j) { a[col][j] /= d; inv[col][j] /= d; }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            Rat f = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

inline long long mat_det_sign(const IMat& m) {
    // Determinant of a Weyl-group element is ±1; compute exactly over rationals.
    size_t n = m.size();
    QMat a = to_qmat(m);
    long long sign = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("mat_det_sign: singular matrix");
        if (piv != col) { std::swap(a[piv], a[col]); sign = -sign; }
        for (size_t i = col + 1; i < n; ++i) {
            if (a[i][col].is_zero()) continue;
            Rat f = a[i][col] / a[col][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    Rat prod(1);
    for (size_t i = 0; i < n; ++i) prod *= a[i][i];
    if (prod == Rat(1)) return sign;
    if (prod == Rat(-1)) return -sign;
    throw std::domain_error("mat_det_sign: determinant is not ±1");
}

inline QVec operator+(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVec operator-(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVec operator-(const QVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline QVec operator*(const Rat& c, const QVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline std::string vec_str(const QVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

struct QVecHash {
    size_t operator()(const QVec& v) const {
        size_t h = v.size();
        for (const Rat& r : v) h = h * 1000003u ^ r.hash();
        return h;
    }
};

struct IMatHash {
    size_t operator()(const IMat& m) const {
        size_t h = m.size();
        for (const IVec& row : m)
            for (long long v : row) h = h * 1000003u ^ std::hash<long long>()(v);
        return h;
    }
};

} // namespace eorbit
