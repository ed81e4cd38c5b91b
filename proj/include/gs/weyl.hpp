#pragma once

#include "gs/rootsys.hpp"

#include <optional>

namespace gs {

// An exact orthogonal transformation of the ambient space of a root system,
// with an optional word in simple reflections (kept only when the element was
// built from a word).  Equality of elements is matrix equality.
struct WeylElement {
    Mat matrix;
    std::optional<std::vector<int>> word;  // indices into simple_roots()

    Weight act(const Weight& v) const { return apply(matrix, v); }

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.matrix == b.matrix;
    }
};

WeylElement weyl_identity(const RootSystem& rs);

// s_alpha(v) = v - <v, alpha^vee> alpha; alpha must be a root of rs.
WeylElement reflection(const RootSystem& rs, const Weight& alpha);

// Reflection in an arbitrary nonzero vector (no root membership check);
// used for reflection subgroups of subsystems.
WeylElement reflection_in(const Weight& alpha, int ambient_dim);

WeylElement compose(const WeylElement& a, const WeylElement& b);

// w in W_P(lambda)  <=>  w lambda - lambda lies in the integral weight
// lattice P of rs.
bool in_WP(const RootSystem& rs, const WeylElement& w, const Weight& lambda);

// Order-independent product of reflections in a set of mutually orthogonal
// roots; throws if a non-orthogonal pair is present.
WeylElement product_of_set(const RootSystem& rs, const std::vector<Weight>& S);

} // namespace gs
