#pragma once

#include "gs/linalg.hpp"

#include <string>
#include <vector>
#include <map>

namespace gs {

// Simple Cartan types.  Validity: A n>=1, B n>=2, C n>=2, D n>=3 (D2/D3 are
// rejected as redundant aliases of A1xA1/A3), E 6..8, F 4, G 2.
enum class CartanType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct TypeRank {
    CartanType type;
    int rank;

    friend bool operator==(const TypeRank& a, const TypeRank& b) {
        return a.type == b.type && a.rank == b.rank;
    }
    friend bool operator<(const TypeRank& a, const TypeRank& b) {
        if (a.type != b.type) return a.type < b.type;
        return a.rank < b.rank;
    }
    std::string str() const { return std::string(1, (char)type) + std::to_string(rank); }
};

// Multiset of simple factors, e.g. A1 x A1 x A1 x A1, sorted canonically.
using TypeDecomposition = std::vector<TypeRank>;

std::string type_decomposition_str(const TypeDecomposition& td);

// A full root system in its Bourbaki coordinate realization.
class RootSystem {
public:
    static RootSystem build(CartanType type, int rank);
    static RootSystem build(const std::string& type_str, int rank);

    CartanType type() const { return type_; }
    int rank() const { return rank_; }
    int ambient_dim() const { return ambient_; }
    TypeRank type_rank() const { return {type_, rank_}; }

    const std::vector<Weight>& roots() const { return roots_; }
    const std::vector<Weight>& simple_roots() const { return simples_; }
    const std::vector<Weight>& fundamental_weights() const { return fweights_; }
    std::vector<Weight> positive_roots() const;

    size_t num_positive() const { return roots_.size() / 2; }

    bool is_root(const Weight& w) const;
    // Index into roots() or -1.
    int root_index(const Weight& w) const;

    bool is_simply_laced() const;

    // rho = half sum of positive roots (positive = positive on the simple base).
    Weight rho() const;

    // Generators of the weight lattice P (fundamental weights) and the root
    // lattice R (simple roots).
    std::vector<Weight> lattice_P() const { return fweights_; }
    std::vector<Weight> lattice_R() const { return simples_; }
    // Generators of 2P + R.
    std::vector<Weight> lattice_2P_plus_R() const;

private:
    CartanType type_;
    int rank_ = 0;
    int ambient_ = 0;
    std::vector<Weight> roots_;
    std::vector<Weight> simples_;
    std::vector<Weight> fweights_;
    std::map<std::vector<std::pair<long long, long long>>, int> root_lookup_;

    void finalize();
};

// Infinitesimal character fixed per type: rho/2 for simply laced, G2, F4;
// rho(C_n)/2 for B_n; rho(B_n) for C_n.
Weight canonical_lambda(const RootSystem& rs);

struct IntegralSubsystem {
    std::vector<Weight> roots;      // all of Delta(lambda)
    std::vector<Weight> positive;   // alpha with <lambda, alpha^vee> > 0
    std::vector<Weight> simple;     // simple base of the positive system
    TypeDecomposition type_id;      // Cartan type per connected component
};

// Delta(lambda) = { alpha : <lambda, alpha^vee> in Z }, its positive system
// for lambda, a simple base, and the Cartan type identified per component.
// lambda must be regular on Delta(lambda); degenerate inputs are rejected.
IntegralSubsystem integral_subsystem(const RootSystem& rs, const Weight& lambda);

// Identify the Cartan type decomposition of an abstract simple system given
// by its roots (graph-isomorphism on the Dynkin diagram built from the
// computed Cartan matrix; stable under any reordering of the simple roots).
TypeDecomposition identify_type(const std::vector<Weight>& simple_system);

// 2 (|Delta^+| - |Delta^+(lambda)|); the complex dimension attached to the
// canonical infinitesimal character.
long long gk_dimension(const RootSystem& rs, const Weight& lambda);

// Finite abelian quotient num/den of two lattices given by generator lists,
// computed by integer Smith normal form over a basis of num.  Half-integral
// generators are scaled to integers internally by a recorded denominator.
class LatticeQuotient {
public:
    LatticeQuotient(std::vector<Weight> num_gens, std::vector<Weight> den_gens);

    // Elementary divisors > 1 (empty means the quotient is trivial).
    std::vector<long long> invariant_factors() const;
    long long order() const;

    // Coset label of a lattice point of num; the label of 0 is all zeros.
    std::vector<long long> coset(const Weight& w) const;

private:
    std::vector<Weight> basis_;          // Z-basis of num
    std::vector<std::vector<long long>> to_basis_num_;  // row-reduce helper
    std::vector<long long> factors_;     // all diagonal entries (incl. 1s)
    std::vector<std::vector<long long>> U_;  // SNF row transform
    long long scale_ = 1;
    int dim_ = 0;
};

// Convenience: P/(2P+R), P/R, etc.
LatticeQuotient quotient(const RootSystem& rs, const std::vector<Weight>& num,
                         const std::vector<Weight>& den);

std::string weight_str(const Weight& w);

} // namespace gs
