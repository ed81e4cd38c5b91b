#include "gs/weyl.hpp"

namespace gs {

WeylElement weyl_identity(const RootSystem& rs) {
    return WeylElement{identity_mat(rs.ambient_dim()), std::vector<int>{}};
}

WeylElement reflection_in(const Weight& alpha, int ambient_dim) {
    if ((int)alpha.size() != ambient_dim)
        throw std::invalid_argument("reflection: dimension mismatch");
    if (is_zero(alpha)) throw std::invalid_argument("reflection: zero vector");
    Mat m = identity_mat(ambient_dim);
    Rat n2 = dot(alpha, alpha);
    for (int i = 0; i < ambient_dim; ++i)
        for (int j = 0; j < ambient_dim; ++j)
            m[i][j] -= Rat(2) * alpha[i] * alpha[j] / n2;
    return WeylElement{std::move(m), std::nullopt};
}

WeylElement reflection(const RootSystem& rs, const Weight& alpha) {
    if (!rs.is_root(alpha))
        throw std::invalid_argument("reflection: not a root: " + weight_str(alpha));
    return reflection_in(alpha, rs.ambient_dim());
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
    WeylElement r{mat_mul(a.matrix, b.matrix), std::nullopt};
    if (a.word && b.word) {
        r.word = *a.word;
        r.word->insert(r.word->end(), b.word->begin(), b.word->end());
    }
    return r;
}

bool in_WP(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
    Weight diff = w.act(lambda) - lambda;
    // diff in P  <=>  <diff, alpha^vee> in Z for every simple alpha, and diff
    // lies in the root-space span (automatic for Weyl images).
    for (const auto& a : rs.simple_roots())
        if (!pair_coroot(diff, a).is_integer()) return false;
    return true;
}

WeylElement product_of_set(const RootSystem& rs, const std::vector<Weight>& S) {
    for (size_t i = 0; i < S.size(); ++i)
        for (size_t j = i + 1; j < S.size(); ++j)
            if (!dot(S[i], S[j]).is_zero())
                throw std::invalid_argument("product_of_set: roots not pairwise orthogonal");
    WeylElement w = weyl_identity(rs);
    for (const auto& a : S) w = compose(w, reflection(rs, a));
    return w;
}

} // namespace gs
