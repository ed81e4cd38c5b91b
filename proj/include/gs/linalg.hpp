#pragma once

#include "gs/rational.hpp"

#include <vector>
#include <stdexcept>

namespace gs {

// Weight vectors and small exact matrices over Q.  A Weight is a coordinate
// vector in the ambient Euclidean realization of a root system (A_{n-1} lives
// in n coordinates, B/C/D_n in n, E/F/G in the standard 8/4/3-coordinate
// realizations).
using Weight = std::vector<Rat>;
using Mat = std::vector<std::vector<Rat>>;

inline Weight operator+(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw std::invalid_argument("weight dim mismatch");
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline Weight operator-(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw std::invalid_argument("weight dim mismatch");
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline Weight operator*(const Rat& c, const Weight& a) {
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}
inline Weight operator-(const Weight& a) { return Rat(-1) * a; }

inline Rat dot(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw std::invalid_argument("weight dim mismatch");
    Rat s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const Weight& a) {
    for (const auto& x : a) if (!x.is_zero()) return false;
    return true;
}

// Coroot pairing <v, alpha^vee> = 2 (v, alpha) / (alpha, alpha).
inline Rat pair_coroot(const Weight& v, const Weight& alpha) {
    return Rat(2) * dot(v, alpha) / dot(alpha, alpha);
}

inline Mat identity_mat(size_t n) {
    Mat m(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i) m[i][i] = Rat(1);
    return m;
}

inline Weight apply(const Mat& m, const Weight& v) {
    size_t n = m.size();
    if (v.size() != n) throw std::invalid_argument("matrix/vector dim mismatch");
    Weight r(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r[i] += m[i][j] * v[j];
    return r;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    size_t n = a.size();
    Mat r(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

// Solve M x = v exactly; M square nonsingular on its span.  Returns empty
// optional-by-flag via thrown error when singular/inconsistent systems arise.
// Gaussian elimination over Q; sizes here are at most 8x8 plus lattice work.
std::vector<Rat> solve(Mat m, Weight v);

// Rank of a rational matrix (rows = vectors).
int rank_of(Mat m);

} // namespace gs
