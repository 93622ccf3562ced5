#pragma once

#include "exth/albert.hpp"
#include "exth/coxeter.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace exth {

enum class LatticeName { JZ, JE };

inline std::string to_string(LatticeName n) { return n == LatticeName::JZ ? "jz" : "je"; }
std::optional<LatticeName> lattice_from_string(const std::string& s);

using Coords27 = std::array<int64_t, 27>;

// An Albert lattice as a first-class value: the standard lattice
// J_Z = Her3(O_Z) with unit I and the usual adjoint, or its isotope J_E on
// the same underlying Z^27 with unit E#, twisted adjoint
//   X -> (E#, X#) E# - E x X#
// and the trace form obtained by polarizing det at the unit.
class AlbertLattice {
public:
    static const AlbertLattice& get(LatticeName name);

    LatticeName name() const { return name_; }
    bool isotope() const { return name_ == LatticeName::JE; }

    const AlbertElement<Rational>& unit() const { return unit_; }
    const AlbertElement<Rational>& basis(int i) const { return basis_[i]; }
    const std::array<std::array<int64_t, 27>, 27>& gram() const { return gram_; }

    // Isotope data (JE only): E = [2,2,2; beta,beta,beta] and E#.
    const AlbertElement<Rational>& isotope_e() const { return E_; }
    const AlbertElement<Rational>& isotope_esharp() const { return Esharp_; }

    template <class K>
    AlbertElement<K> adjoint_l(const AlbertElement<K>& T) const {
        const auto sharp = exth::adjoint(T);
        if (!isotope()) return sharp;
        const auto esh = promote<K>(Esharp_);
        const auto e = promote<K>(E_);
        return pair_form(esh, sharp) * esh - cross(e, sharp);
    }

    template <class K>
    K trace_l(const AlbertElement<K>& T) const {
        if (!isotope()) return trace(T);
        return pair_form(promote<K>(E_), T);
    }

    // (A,B)_L = D1(A;unit) D1(B;unit) - D2(A,B;unit); evaluated through the
    // closed forms (A,unit#)(B,unit#)... certified at construction against
    // the det_polarize route on every basis pair.
    template <class K>
    K pair_l(const AlbertElement<K>& A, const AlbertElement<K>& B) const {
        if (!isotope()) return pair_form(A, B);
        const auto e = promote<K>(E_);
        return pair_form(e, A) * pair_form(e, B) - pair_form(cross(A, B), promote<K>(Esharp_));
    }

    template <class K>
    K pair_l_polarized(const AlbertElement<K>& A, const AlbertElement<K>& B) const {
        const auto u = promote<K>(unit_);
        const auto [d1a, d2] = det_polarize(A, B, u);
        const K d1b = det_linear_coeff(B, u);
        return d1a * d1b - d2;
    }

    template <class K>
    AlbertElement<K> cross_l(const AlbertElement<K>& A, const AlbertElement<K>& B) const {
        return adjoint_l(A + B) - adjoint_l(A) - adjoint_l(B);
    }

    // Rank with respect to this lattice's structure maps.
    template <class K>
    int rank_l(const AlbertElement<K>& T) const {
        if (T.is_zero()) return 0;
        if (adjoint_l(T).is_zero()) return 1;
        if (det(T) == K(0)) return 2;
        return 3;
    }

    // Integer coordinates in the lattice basis; nullopt if T is not in the
    // lattice.
    std::optional<Coords27> coords(const AlbertElement<Rational>& T) const;
    AlbertElement<Rational> from_coords(const Coords27& c) const;

    // Largest integer c with T/c in the lattice; throws for T = 0 or T
    // outside the lattice.
    int64_t content(const AlbertElement<Rational>& T) const;
    static int64_t content(const Coords27& c);

    template <class K>
    static AlbertElement<K> promote(const AlbertElement<Rational>& v) {
        if constexpr (std::is_same_v<K, Rational>) {
            return v;
        } else {
            AlbertElement<K> r;
            r.a = K(v.a);
            r.b = K(v.b);
            r.c = K(v.c);
            for (int i = 0; i < 8; ++i) {
                r.x.c[i] = K(v.x.c[i]);
                r.y.c[i] = K(v.y.c[i]);
                r.z.c[i] = K(v.z.c[i]);
            }
            return r;
        }
    }

private:
    explicit AlbertLattice(LatticeName name);

    LatticeName name_;
    AlbertElement<Rational> unit_;
    AlbertElement<Rational> E_, Esharp_;
    std::array<AlbertElement<Rational>, 27> basis_;
    std::array<std::array<int64_t, 27>, 27> gram_;
};

}  // namespace exth
