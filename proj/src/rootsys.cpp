#include "gs/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gs {

namespace {

Weight ei(int n, int i) {
    Weight w(n);
    w[i] = Rat(1);
    return w;
}

std::vector<std::pair<long long, long long>> key_of(const Weight& w) {
    std::vector<std::pair<long long, long long>> k;
    k.reserve(w.size());
    for (const auto& x : w) k.emplace_back(x.num(), x.den());
    return k;
}

// E8 root set in the even coordinate system of R^8.
std::vector<Weight> e8_roots() {
    std::vector<Weight> roots;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int si = -1; si <= 1; si += 2)
                for (int sj = -1; sj <= 1; sj += 2) {
                    Weight w(8);
                    w[i] = Rat(si);
                    w[j] = Rat(sj);
                    roots.push_back(w);
                }
    for (int mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;  // even number of minus signs
        Weight w(8);
        for (int i = 0; i < 8; ++i) w[i] = Rat(mask & (1 << i) ? -1 : 1, 2);
        roots.push_back(w);
    }
    return roots;
}

} // namespace

std::string type_decomposition_str(const TypeDecomposition& td) {
    if (td.empty()) return "trivial";
    std::string s;
    for (size_t i = 0; i < td.size(); ++i) {
        if (i) s += "x";
        s += td[i].str();
    }
    return s;
}

RootSystem RootSystem::build(const std::string& type_str, int rank) {
    if (type_str.size() != 1 || type_str[0] < 'A' || type_str[0] > 'G')
        throw std::invalid_argument("unknown Cartan type: " + type_str);
    return build((CartanType)type_str[0], rank);
}

RootSystem RootSystem::build(CartanType type, int rank) {
    RootSystem rs;
    rs.type_ = type;
    rs.rank_ = rank;
    const int n = rank;

    switch (type) {
    case CartanType::A: {
        if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
        int m = n + 1;  // ambient coordinates
        rs.ambient_ = m;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j) rs.roots_.push_back(ei(m, i) - ei(m, j));
        for (int i = 0; i < n; ++i) rs.simples_.push_back(ei(m, i) - ei(m, i + 1));
        // omega_i = e_1+...+e_i - (i/m) sum e_j
        for (int i = 1; i <= n; ++i) {
            Weight w(m);
            for (int j = 0; j < i; ++j) w[j] = Rat(1);
            for (int j = 0; j < m; ++j) w[j] -= Rat(i, m);
            rs.fweights_.push_back(w);
        }
        break;
    }
    case CartanType::B: {
        if (n < 2) throw std::invalid_argument("B_n needs n >= 2");
        rs.ambient_ = n;
        for (int i = 0; i < n; ++i) {
            rs.roots_.push_back(ei(n, i));
            rs.roots_.push_back(-ei(n, i));
            for (int j = i + 1; j < n; ++j)
                for (int si = -1; si <= 1; si += 2)
                    for (int sj = -1; sj <= 1; sj += 2)
                        rs.roots_.push_back(Rat(si) * ei(n, i) + Rat(sj) * ei(n, j));
        }
        for (int i = 0; i + 1 < n; ++i) rs.simples_.push_back(ei(n, i) - ei(n, i + 1));
        rs.simples_.push_back(ei(n, n - 1));
        for (int i = 1; i < n; ++i) {
            Weight w(n);
            for (int j = 0; j < i; ++j) w[j] = Rat(1);
            rs.fweights_.push_back(w);
        }
        {
            Weight w(n);
            for (int j = 0; j < n; ++j) w[j] = Rat(1, 2);
            rs.fweights_.push_back(w);
        }
        break;
    }
    case CartanType::C: {
        if (n < 2) throw std::invalid_argument("C_n needs n >= 2");
        rs.ambient_ = n;
        for (int i = 0; i < n; ++i) {
            rs.roots_.push_back(Rat(2) * ei(n, i));
            rs.roots_.push_back(Rat(-2) * ei(n, i));
            for (int j = i + 1; j < n; ++j)
                for (int si = -1; si <= 1; si += 2)
                    for (int sj = -1; sj <= 1; sj += 2)
                        rs.roots_.push_back(Rat(si) * ei(n, i) + Rat(sj) * ei(n, j));
        }
        for (int i = 0; i + 1 < n; ++i) rs.simples_.push_back(ei(n, i) - ei(n, i + 1));
        rs.simples_.push_back(Rat(2) * ei(n, n - 1));
        for (int i = 1; i <= n; ++i) {
            Weight w(n);
            for (int j = 0; j < i; ++j) w[j] = Rat(1);
            rs.fweights_.push_back(w);
        }
        break;
    }
    case CartanType::D: {
        if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
        rs.ambient_ = n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int si = -1; si <= 1; si += 2)
                    for (int sj = -1; sj <= 1; sj += 2)
                        rs.roots_.push_back(Rat(si) * ei(n, i) + Rat(sj) * ei(n, j));
        for (int i = 0; i + 1 < n; ++i) rs.simples_.push_back(ei(n, i) - ei(n, i + 1));
        rs.simples_.push_back(ei(n, n - 2) + ei(n, n - 1));
        for (int i = 1; i <= n - 2; ++i) {
            Weight w(n);
            for (int j = 0; j < i; ++j) w[j] = Rat(1);
            rs.fweights_.push_back(w);
        }
        {
            Weight w(n);
            for (int j = 0; j < n; ++j) w[j] = Rat(1, 2);
            w[n - 1] = Rat(-1, 2);
            rs.fweights_.push_back(w);
            for (auto& x : w) x = Rat(1, 2);
            rs.fweights_.push_back(w);
        }
        break;
    }
    case CartanType::G: {
        if (n != 2) throw std::invalid_argument("G_2 has rank 2");
        rs.ambient_ = 3;
        auto add_pm = [&](Weight w) {
            rs.roots_.push_back(w);
            rs.roots_.push_back(-w);
        };
        add_pm(ei(3, 0) - ei(3, 1));
        add_pm(ei(3, 1) - ei(3, 2));
        add_pm(ei(3, 0) - ei(3, 2));
        add_pm(Rat(2) * ei(3, 0) - ei(3, 1) - ei(3, 2));
        add_pm(Rat(2) * ei(3, 1) - ei(3, 0) - ei(3, 2));
        add_pm(Rat(2) * ei(3, 2) - ei(3, 0) - ei(3, 1));
        // Bourbaki: alpha1 = e1-e2 (short), alpha2 = -2e1+e2+e3 (long);
        // fundamental weights computed in finalize().
        rs.simples_.push_back(ei(3, 0) - ei(3, 1));
        rs.simples_.push_back(Rat(-2) * ei(3, 0) + ei(3, 1) + ei(3, 2));
        break;
    }
    case CartanType::F: {
        if (n != 4) throw std::invalid_argument("F_4 has rank 4");
        rs.ambient_ = 4;
        for (int i = 0; i < 4; ++i) {
            rs.roots_.push_back(ei(4, i));
            rs.roots_.push_back(-ei(4, i));
            for (int j = i + 1; j < 4; ++j)
                for (int si = -1; si <= 1; si += 2)
                    for (int sj = -1; sj <= 1; sj += 2)
                        rs.roots_.push_back(Rat(si) * ei(4, i) + Rat(sj) * ei(4, j));
        }
        for (int mask = 0; mask < 16; ++mask) {
            Weight w(4);
            for (int i = 0; i < 4; ++i) w[i] = Rat(mask & (1 << i) ? -1 : 1, 2);
            rs.roots_.push_back(w);
        }
        rs.simples_.push_back(ei(4, 1) - ei(4, 2));
        rs.simples_.push_back(ei(4, 2) - ei(4, 3));
        rs.simples_.push_back(ei(4, 3));
        {
            Weight w(4);
            w[0] = Rat(1, 2); w[1] = Rat(-1, 2); w[2] = Rat(-1, 2); w[3] = Rat(-1, 2);
            rs.simples_.push_back(w);
        }
        break;
    }
    case CartanType::E: {
        if (n < 6 || n > 8) throw std::invalid_argument("E_n needs 6 <= n <= 8");
        rs.ambient_ = 8;
        std::vector<Weight> all = e8_roots();
        // Bourbaki simple roots of E8.
        std::vector<Weight> s8;
        {
            Weight a1(8);
            a1[0] = Rat(1, 2); a1[7] = Rat(1, 2);
            for (int i = 1; i <= 6; ++i) a1[i] = Rat(-1, 2);
            s8.push_back(a1);
            s8.push_back(ei(8, 0) + ei(8, 1));                  // alpha2
            for (int i = 1; i <= 6; ++i) s8.push_back(ei(8, i) - ei(8, i - 1));  // alpha3..alpha8
        }
        rs.simples_.assign(s8.begin(), s8.begin() + n);
        // Roots of E_n = integer combinations of the chosen simples inside E8.
        Mat m(8, std::vector<Rat>(8));
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < 8; ++r) m[r][c] = rs.simples_[c][r];
        for (const auto& root : all) {
            std::vector<Rat> x;
            try {
                x = solve(m, root);
            } catch (const std::domain_error&) {
                continue;  // not in the span
            }
            bool ok = true;
            for (int c = 0; c < n; ++c)
                if (!x[c].is_integer()) { ok = false; break; }
            for (int c = n; c < 8; ++c)
                if (!x[c].is_zero()) { ok = false; break; }
            if (ok) rs.roots_.push_back(root);
        }
        break;
    }
    default:
        throw std::invalid_argument("unknown Cartan type");
    }

    rs.finalize();
    return rs;
}

void RootSystem::finalize() {
    // Deduplicate and index roots.
    std::sort(roots_.begin(), roots_.end(), [](const Weight& a, const Weight& b) {
        return key_of(a) < key_of(b);
    });
    roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
    for (size_t i = 0; i < roots_.size(); ++i) root_lookup_[key_of(roots_[i])] = (int)i;

    // Fundamental weights: solve <w_i, alpha_j^vee> = delta_ij in the span of
    // the simple roots (A_{n-1} weights get the sum-zero representative, which
    // matches the explicit formulas above; for E/F/G we always solve).
    if (fweights_.empty() || (int)fweights_.size() != rank_) {
        fweights_.clear();
        int k = rank_;
        Mat gram(k, std::vector<Rat>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                gram[i][j] = pair_coroot(simples_[i], simples_[j]);
        // w_i = sum_j c_j alpha_j with gram^T c = delta_i
        for (int i = 0; i < k; ++i) {
            Weight rhs(k);
            rhs[i] = Rat(1);
            Mat gt(k, std::vector<Rat>(k));
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) gt[a][b] = gram[b][a];
            auto c = solve(gt, rhs);
            Weight w(ambient_);
            for (int j = 0; j < k; ++j) w = w + c[j] * simples_[j];
            fweights_.push_back(w);
        }
    }
}

std::vector<Weight> RootSystem::positive_roots() const {
    // alpha > 0 iff <rho_dominant, alpha> > 0 for a regular dominant vector;
    // use the sum of fundamental weights.
    Weight reg(ambient_);
    for (const auto& w : fweights_) reg = reg + w;
    std::vector<Weight> pos;
    for (const auto& r : roots_)
        if (dot(reg, r) > Rat(0)) pos.push_back(r);
    if (pos.size() * 2 != roots_.size())
        throw std::logic_error("positive system does not halve the root set");
    return pos;
}

bool RootSystem::is_root(const Weight& w) const { return root_index(w) >= 0; }

int RootSystem::root_index(const Weight& w) const {
    auto it = root_lookup_.find(key_of(w));
    return it == root_lookup_.end() ? -1 : it->second;
}

bool RootSystem::is_simply_laced() const {
    Rat len = dot(roots_[0], roots_[0]);
    for (const auto& r : roots_)
        if (dot(r, r) != len) return false;
    return true;
}

Weight RootSystem::rho() const {
    Weight s(ambient_);
    for (const auto& r : positive_roots()) s = s + r;
    return Rat(1, 2) * s;
}

std::vector<Weight> RootSystem::lattice_2P_plus_R() const {
    std::vector<Weight> gens;
    for (const auto& w : fweights_) gens.push_back(Rat(2) * w);
    for (const auto& a : simples_) gens.push_back(a);
    return gens;
}

Weight canonical_lambda(const RootSystem& rs) {
    int n = rs.rank();
    switch (rs.type()) {
    case CartanType::B: {
        // rho(C_n)/2 = (n, n-1, ..., 1)/2
        Weight w(n);
        for (int i = 0; i < n; ++i) w[i] = Rat(n - i, 2);
        return w;
    }
    case CartanType::C: {
        // rho(B_n) = (2n-1, 2n-3, ..., 1)/2
        Weight w(n);
        for (int i = 0; i < n; ++i) w[i] = Rat(2 * (n - i) - 1, 2);
        return w;
    }
    case CartanType::F: {
        // Half sum of positive coroots; the F4 tables are stated for the dual
        // normalization (the integral system at this point is B4, which no
        // weight reaches in the primal normalization).
        Weight s(rs.ambient_dim());
        for (const auto& r : rs.positive_roots()) {
            Weight cr = (Rat(2) / dot(r, r)) * r;
            s = s + cr;
        }
        return Rat(1, 4) * s;
    }
    default:
        return Rat(1, 2) * rs.rho();
    }
}

namespace {

// Dynkin-diagram classifier for one connected component.
// bonds[i][j] = <ai, aj^vee> * <aj, ai^vee>  (0,1,2,3); lengths via dot.
TypeRank classify_component(const std::vector<Weight>& s) {
    int k = (int)s.size();
    if (k == 1) return {CartanType::A, 1};
    std::vector<std::vector<int>> bond(k, std::vector<int>(k, 0));
    std::vector<int> deg(k, 0);
    int max_bond = 1;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            Rat b = pair_coroot(s[i], s[j]) * pair_coroot(s[j], s[i]);
            bond[i][j] = (int)b.to_int();
            if (bond[i][j] > 0) {
                ++deg[i];
                max_bond = std::max(max_bond, bond[i][j]);
            }
        }
    int max_deg = *std::max_element(deg.begin(), deg.end());

    if (max_bond == 3) {
        if (k == 2) return {CartanType::G, 2};
        throw std::invalid_argument("invalid diagram: triple bond in rank > 2");
    }
    if (max_bond == 2) {
        // B, C or F4: find the double bond and compare lengths across it.
        if (max_deg > 2) throw std::invalid_argument("invalid diagram: branch with double bond");
        int a = -1, b = -1;
        for (int i = 0; i < k && a < 0; ++i)
            for (int j = 0; j < k; ++j)
                if (bond[i][j] == 2 && bond[j][i] >= 1) { a = i; b = j; break; }
        // Ends of the chain; walk from each end.
        if (k == 2) {
            // B2 = C2; report B by convention.
            return {CartanType::B, 2};
        }
        // Count how many nodes on the long-root side vs short side.
        // F4: double bond in the middle (2 nodes each side).
        std::vector<int> ends;
        for (int i = 0; i < k; ++i) if (deg[i] == 1) ends.push_back(i);
        if (ends.size() != 2) throw std::invalid_argument("invalid diagram");
        // Walk the chain from ends[0].
        std::vector<int> order{ends[0]};
        std::vector<bool> used(k, false);
        used[ends[0]] = true;
        while ((int)order.size() < k) {
            int cur = order.back();
            bool advanced = false;
            for (int j = 0; j < k; ++j)
                if (!used[j] && bond[cur][j] > 0) {
                    order.push_back(j);
                    used[j] = true;
                    advanced = true;
                    break;
                }
            if (!advanced) throw std::invalid_argument("invalid diagram: disconnected chain");
        }
        int pos = -1;
        for (int i = 0; i + 1 < k; ++i)
            if (bond[order[i]][order[i + 1]] == 2 || bond[order[i + 1]][order[i]] == 2) pos = i;
        if (pos == 1 && k == 4) {
            // Could be F4 (double bond between positions 1,2 of 4-chain).
            Rat l0 = dot(s[order[0]], s[order[0]]);
            Rat l3 = dot(s[order[3]], s[order[3]]);
            if (l0 != l3) return {CartanType::F, 4};
        }
        // The double bond must be at one end for B/C.
        if (pos != 0 && pos != k - 2) {
            if (k == 4) return {CartanType::F, 4};
            throw std::invalid_argument("invalid diagram: interior double bond");
        }
        // Short root at the extreme end -> B; long root -> C.
        int end_node = (pos == 0) ? order[0] : order[k - 1];
        Rat end_len = dot(s[end_node], s[end_node]);
        Rat other_len;
        for (int i = 0; i < k; ++i)
            if (i != end_node) { other_len = dot(s[i], s[i]); break; }
        return {end_len < other_len ? CartanType::B : CartanType::C, k};
    }

    // Simply laced.
    if (max_deg <= 2) return {CartanType::A, k};
    if (max_deg >= 4) throw std::invalid_argument("invalid diagram: degree 4 node");
    int branch = -1;
    for (int i = 0; i < k; ++i) if (deg[i] == 3) branch = i;
    // Arm lengths from the branch node.
    std::vector<int> arms;
    std::vector<bool> used(k, false);
    used[branch] = true;
    for (int j = 0; j < k; ++j) {
        if (bond[branch][j] == 0 || used[j]) continue;
        int len = 0, cur = j;
        used[j] = true;
        ++len;
        bool more = true;
        while (more) {
            more = false;
            for (int t = 0; t < k; ++t)
                if (!used[t] && bond[cur][t] > 0) {
                    used[t] = true;
                    cur = t;
                    ++len;
                    more = true;
                    break;
                }
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3) throw std::invalid_argument("invalid diagram: bad branching");
    if (arms[0] == 1 && arms[1] == 1) return {CartanType::D, k};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        return {CartanType::E, k};
    throw std::invalid_argument("invalid diagram: not of finite type");
}

} // namespace

TypeDecomposition identify_type(const std::vector<Weight>& simple_system) {
    int k = (int)simple_system.size();
    TypeDecomposition td;
    if (k == 0) return td;
    // Connected components over the orthogonality graph.
    std::vector<int> comp(k, -1);
    int nc = 0;
    for (int i = 0; i < k; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> stack{i};
        comp[i] = nc;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (int j = 0; j < k; ++j)
                if (comp[j] < 0 && !dot(simple_system[cur], simple_system[j]).is_zero()) {
                    comp[j] = nc;
                    stack.push_back(j);
                }
        }
        ++nc;
    }
    for (int c = 0; c < nc; ++c) {
        std::vector<Weight> part;
        for (int i = 0; i < k; ++i)
            if (comp[i] == c) part.push_back(simple_system[i]);
        td.push_back(classify_component(part));
    }
    std::sort(td.begin(), td.end());
    return td;
}

IntegralSubsystem integral_subsystem(const RootSystem& rs, const Weight& lambda) {
    IntegralSubsystem out;
    for (const auto& a : rs.roots()) {
        Rat p = pair_coroot(lambda, a);
        if (!p.is_integer()) continue;
        out.roots.push_back(a);
        if (p > Rat(0)) out.positive.push_back(a);
        if (p.is_zero())
            throw std::invalid_argument("integral_subsystem: lambda singular on an integral root");
    }
    // Simple = indecomposable positive roots.
    std::set<std::vector<std::pair<long long, long long>>> pos_keys;
    for (const auto& a : out.positive) pos_keys.insert(key_of(a));
    for (const auto& a : out.positive) {
        bool decomposable = false;
        for (const auto& b : out.positive) {
            Weight c = a - b;
            if (is_zero(c)) continue;
            if (pos_keys.count(key_of(c))) { decomposable = true; break; }
        }
        if (!decomposable) out.simple.push_back(a);
    }
    out.type_id = identify_type(out.simple);
    return out;
}

long long gk_dimension(const RootSystem& rs, const Weight& lambda) {
    auto sub = integral_subsystem(rs, lambda);
    return 2LL * ((long long)rs.num_positive() - (long long)sub.positive.size());
}

// ---------------------------------------------------------------------------
// Lattice quotients by integer Smith normal form.

namespace {

// Hermite-style row reduction of integer matrix; returns basis rows.
std::vector<std::vector<long long>> z_row_basis(std::vector<std::vector<long long>> m) {
    if (m.empty()) return m;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < m.size(); ++c) {
        // gcd column elimination
        while (true) {
            size_t p = m.size();
            long long best = 0;
            for (size_t i = r; i < m.size(); ++i)
                if (m[i][c] != 0 && (best == 0 || std::abs(m[i][c]) < std::abs(best))) {
                    best = m[i][c];
                    p = i;
                }
            if (p == m.size()) break;  // column zero below r
            std::swap(m[p], m[r]);
            bool clean = true;
            for (size_t i = r + 1; i < m.size(); ++i) {
                if (m[i][c] == 0) continue;
                long long q = m[i][c] / m[r][c];
                for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][c] != 0) clean = false;
            }
            if (clean) { ++r; break; }
        }
    }
    m.resize(r);
    return m;
}

void snf(std::vector<std::vector<long long>>& a, std::vector<std::vector<long long>>& u) {
    // Smith normal form of a (rows x cols); u accumulates row ops so that
    // (u * original) = column-ops-applied diag. We only need row transforms
    // for coset labels, so column ops are applied to a alone.
    size_t rows = a.size();
    if (rows == 0) return;
    size_t cols = a[0].size();
    u.assign(rows, std::vector<long long>(rows, 0));
    for (size_t i = 0; i < rows; ++i) u[i][i] = 1;

    auto row_sub = [&](size_t i, size_t k, long long q) {
        for (size_t j = 0; j < cols; ++j) a[i][j] -= q * a[k][j];
        for (size_t j = 0; j < rows; ++j) u[i][j] -= q * u[k][j];
    };
    auto col_sub = [&](size_t j, size_t k, long long q) {
        for (size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][k];
    };

    size_t t = 0;
    while (t < rows && t < cols) {
        // find pivot = smallest nonzero |entry| in submatrix
        size_t pi = rows, pj = cols;
        long long best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (best == 0 || std::abs(a[i][j]) < std::abs(best))) {
                    best = a[i][j];
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;  // all zero
        std::swap(a[pi], a[t]);
        std::swap(u[pi], u[t]);
        for (size_t i = 0; i < rows; ++i) std::swap(a[i][pj], a[i][t]);
        bool dirty = false;
        for (size_t i = t + 1; i < rows; ++i)
            if (a[i][t] != 0) {
                row_sub(i, t, a[i][t] / a[t][t]);
                if (a[i][t] != 0) dirty = true;
            }
        for (size_t j = t + 1; j < cols; ++j)
            if (a[t][j] != 0) {
                col_sub(j, t, a[t][j] / a[t][t]);
                if (a[t][j] != 0) dirty = true;
            }
        if (dirty) continue;
        // divisibility fix-up; standard but rarely needed at these sizes
        bool fixed = true;
        for (size_t i = t + 1; i < rows && fixed; ++i)
            for (size_t j = t + 1; j < cols && fixed; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    for (size_t jj = 0; jj < cols; ++jj) a[t][jj] += a[i][jj];
                    for (size_t jj = 0; jj < rows; ++jj) u[t][jj] += u[i][jj];
                    fixed = false;
                }
        if (fixed) ++t;
    }
    // normalize signs
    for (size_t i = 0; i < std::min(rows, cols); ++i)
        if (a[i][i] < 0) {
            for (size_t j = 0; j < cols; ++j) a[i][j] = -a[i][j];
            for (size_t j = 0; j < rows; ++j) u[i][j] = -u[i][j];
        }
}

} // namespace

LatticeQuotient::LatticeQuotient(std::vector<Weight> num_gens, std::vector<Weight> den_gens) {
    if (num_gens.empty()) throw std::invalid_argument("quotient: empty numerator");
    size_t amb = num_gens[0].size();
    // Scale all generators to a common integer grid.
    long long scale = 1;
    for (const auto& g : num_gens)
        for (const auto& x : g) scale = std::lcm(scale, x.den());
    for (const auto& g : den_gens)
        for (const auto& x : g) scale = std::lcm(scale, x.den());
    scale_ = scale;

    auto to_int = [&](const Weight& w) {
        std::vector<long long> v(amb);
        for (size_t i = 0; i < amb; ++i) v[i] = (Rat(scale) * w[i]).to_int();
        return v;
    };

    std::vector<std::vector<long long>> numm;
    for (const auto& g : num_gens) numm.push_back(to_int(g));
    auto basis = z_row_basis(numm);
    dim_ = (int)basis.size();

    // Keep basis as rational weights for later coordinate solves.
    Mat bmat(amb, std::vector<Rat>(amb));
    for (int c = 0; c < dim_; ++c)
        for (size_t r = 0; r < amb; ++r) bmat[r][c] = Rat(basis[c][r]);
    // Express den generators in the Z-basis of num.
    std::vector<std::vector<long long>> denm;
    for (const auto& g : den_gens) {
        auto gi = to_int(g);
        Weight rhs(amb);
        for (size_t i = 0; i < amb; ++i) rhs[i] = Rat(gi[i]);
        std::vector<Rat> x;
        try {
            x = solve(bmat, rhs);
        } catch (const std::domain_error&) {
            throw std::invalid_argument("quotient: denominator not contained in numerator span");
        }
        std::vector<long long> row(dim_);
        for (int c = 0; c < dim_; ++c) {
            if (!x[c].is_integer())
                throw std::invalid_argument("quotient: denominator not a sublattice of numerator");
            row[c] = x[c].to_int();
        }
        for (int c = dim_; c < (int)amb; ++c)
            if (!x[c].is_zero())
                throw std::invalid_argument("quotient: denominator not contained in numerator span");
        denm.push_back(row);
    }
    basis_.clear();
    for (int c = 0; c < dim_; ++c) {
        Weight w(amb);
        for (size_t r = 0; r < amb; ++r) w[r] = Rat(basis[c][r], scale);
        basis_.push_back(w);
    }

    if (denm.empty()) denm.push_back(std::vector<long long>(dim_, 0));
    // SNF works on (den rows) x (num basis cols); but coset labels need the
    // transform on the cols. Transpose so rows index the num basis.
    std::vector<std::vector<long long>> at(dim_, std::vector<long long>(denm.size(), 0));
    for (size_t i = 0; i < denm.size(); ++i)
        for (int j = 0; j < dim_; ++j) at[j][i] = denm[i][j];
    snf(at, U_);
    factors_.assign(dim_, 0);
    for (int i = 0; i < dim_; ++i)
        factors_[i] = (i < (int)std::min(at.size(), at[0].size())) ? at[i][i] : 0;
    // factor 0 means infinite cyclic direction (den has lower rank); the
    // quotients used here are finite, but keep 0 to be explicit.
}

std::vector<long long> LatticeQuotient::invariant_factors() const {
    std::vector<long long> out;
    for (long long f : factors_)
        if (f != 1) out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

long long LatticeQuotient::order() const {
    long long o = 1;
    for (long long f : factors_) {
        if (f == 0) return 0;  // infinite
        o *= f;
    }
    return o;
}

std::vector<long long> LatticeQuotient::coset(const Weight& w) const {
    size_t amb = basis_.empty() ? w.size() : basis_[0].size();
    Mat bmat(amb, std::vector<Rat>(amb));
    for (int c = 0; c < dim_; ++c)
        for (size_t r = 0; r < amb; ++r) bmat[r][c] = basis_[c][r];
    auto x = solve(bmat, w);
    std::vector<long long> coords(dim_);
    for (int c = 0; c < dim_; ++c) {
        if (!x[c].is_integer())
            throw std::invalid_argument("coset: weight not in the numerator lattice");
        coords[c] = x[c].to_int();
    }
    for (int c = dim_; c < (int)amb; ++c)
        if (!x[c].is_zero())
            throw std::invalid_argument("coset: weight not in the numerator lattice");
    // label = U * coords mod invariant factors
    std::vector<long long> label(dim_, 0);
    for (int i = 0; i < dim_; ++i) {
        long long s = 0;
        for (int j = 0; j < dim_; ++j) s += U_[i][j] * coords[j];
        long long f = factors_[i];
        if (f > 0) {
            s %= f;
            if (s < 0) s += f;
        }
        label[i] = s;
    }
    return label;
}

LatticeQuotient quotient(const RootSystem&, const std::vector<Weight>& num,
                         const std::vector<Weight>& den) {
    return LatticeQuotient(num, den);
}

std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ", ";
        s += w[i].str();
    }
    return s + ")";
}

} // namespace gs
