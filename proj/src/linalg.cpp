#include "gs/linalg.hpp"

namespace gs {

std::vector<Rat> solve(Mat m, Weight v) {
    size_t n = m.size();
    for (auto& row : m) if (row.size() != n) throw std::invalid_argument("solve: not square");
    if (v.size() != n) throw std::invalid_argument("solve: rhs dim mismatch");
    // Augment and eliminate.
    for (size_t c = 0, r = 0; c < n && r < n; ++c) {
        size_t p = r;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) continue;
        std::swap(m[p], m[r]);
        std::swap(v[p], v[r]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < n; ++j) m[r][j] *= inv;
        v[r] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[r][j];
            v[i] -= f * v[r];
        }
        ++r;
    }
    // Back-substitution already done (reduced form); read off solution.
    std::vector<Rat> x(n);
    for (size_t r2 = 0; r2 < n; ++r2) {
        size_t lead = n;
        for (size_t c = 0; c < n; ++c)
            if (!m[r2][c].is_zero()) { lead = c; break; }
        if (lead == n) {
            if (!v[r2].is_zero()) throw std::domain_error("solve: inconsistent system");
            continue;
        }
        x[lead] = v[r2];
    }
    return x;
}

int rank_of(Mat m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    for (size_t c = 0; c < cols && (size_t)rank < rows; ++c) {
        size_t p = rank;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        Rat inv = Rat(1) / m[rank][c];
        for (size_t j = c; j < cols; ++j) m[rank][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if ((int)i == rank || m[i][c].is_zero()) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace gs
