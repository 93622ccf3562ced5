#pragma once

#include "exth/octonion.hpp"
#include "exth/rational.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace exth {

// Doubled integer coordinates: the vector 2x for x in the Coxeter order.
using OctCoords = std::array<int64_t, 8>;

// Coxeter's maximal order in the definite octonions, as the row lattice of an
// 8x8 integer matrix of doubled coordinates.  The basis is derived once by
// Hermite normal form from the twelve generators 1, e1..e7, h1..h4 with
//   h1 = (1+e1+e2+e4)/2   h2 = (1+e1+e3+e7)/2
//   h3 = (1+e1+e5+e6)/2   h4 = (e1+e2+e3+e5)/2
// rather than hard-coded; the unimodularity test certifies the reduction.
class CoxeterOrder {
public:
    static const CoxeterOrder& instance();

    // Lower-triangular HNF basis, rows = doubled coordinates.
    const std::array<OctCoords, 8>& doubled_basis() const { return basis_; }
    // Gram matrix <b_i, b_j> of the trace pairing on the basis (an E8 matrix).
    const std::array<std::array<int64_t, 8>, 8>& gram() const { return gram_; }

    // Membership of the element with doubled coordinates v.
    bool contains_doubled(const OctCoords& v) const;
    // Coordinates in the order basis; false if v is not in the lattice.
    bool coords_from_doubled(const OctCoords& v, std::array<int64_t, 8>& out) const;
    OctCoords doubled_from_coords(const std::array<int64_t, 8>& coords) const;

    bool contains(const Octonion<Rational>& x) const;

    // Basis element as an exact octonion.
    Octonion<Rational> basis_element(int i) const;

private:
    CoxeterOrder();
    std::array<OctCoords, 8> basis_;
    std::array<std::array<int64_t, 8>, 8> gram_;
};

// All x in the Coxeter order with N(x) = m, as doubled coordinates in
// lexicographic order.  Results are memoized per process.
const std::vector<OctCoords>& norm_shell(int64_t m);

// Octonion from doubled coordinates.
Octonion<Rational> oct_from_doubled(const OctCoords& v);

}  // namespace exth
