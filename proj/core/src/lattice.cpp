#include "exth/lattice.hpp"

#include <numeric>
#include <stdexcept>

namespace exth {

std::optional<LatticeName> lattice_from_string(const std::string& s) {
    if (s == "jz" || s == "JZ") return LatticeName::JZ;
    if (s == "je" || s == "JE") return LatticeName::JE;
    return std::nullopt;
}

AlbertLattice::AlbertLattice(LatticeName name) : name_(name) {
    const auto& order = CoxeterOrder::instance();

    // Basis: E1, E2, E3, then the three octonion slots tensored with the
    // Coxeter basis.
    for (int i = 0; i < 3; ++i) basis_[i] = AlbertElement<Rational>::diag_unit(i);
    for (int slot = 0; slot < 3; ++slot)
        for (int i = 0; i < 8; ++i) {
            AlbertElement<Rational> v;
            auto& dst = slot == 0 ? v.x : slot == 1 ? v.y : v.z;
            dst = order.basis_element(i);
            basis_[3 + 8 * slot + i] = v;
        }

    // Isotope data: E = [2,2,2; beta,beta,beta], beta = (-1 + e1 + ... + e7)/2.
    Octonion<Rational> beta;
    beta.c[0] = Rational(-1, 2);
    for (int i = 1; i < 8; ++i) beta.c[i] = Rational(1, 2);
    E_ = albert_from(Rational(2), Rational(2), Rational(2), beta, beta, beta);
    Esharp_ = adjoint(E_);

    unit_ = name_ == LatticeName::JZ ? AlbertElement<Rational>::identity() : Esharp_;

    for (int i = 0; i < 27; ++i)
        for (int j = i; j < 27; ++j) {
            const Rational g = pair_l(basis_[i], basis_[j]);
            if (!g.is_integer()) throw std::logic_error("AlbertLattice: non-integral gram");
            gram_[i][j] = gram_[j][i] = g.numerator().get_si();
        }

    // Certify the closed-form trace pairing against det polarization at the
    // unit on every basis pair.
    for (int i = 0; i < 27; ++i)
        for (int j = i; j < 27; ++j)
            if (pair_l_polarized(basis_[i], basis_[j]) != Rational(gram_[i][j]))
                throw std::logic_error("AlbertLattice: polarization mismatch");
}

const AlbertLattice& AlbertLattice::get(LatticeName name) {
    static const AlbertLattice jz(LatticeName::JZ);
    static const AlbertLattice je(LatticeName::JE);
    return name == LatticeName::JZ ? jz : je;
}

std::optional<Coords27> AlbertLattice::coords(const AlbertElement<Rational>& T) const {
    Coords27 out{};
    const Rational* diag[3] = {&T.a, &T.b, &T.c};
    for (int i = 0; i < 3; ++i) {
        if (!diag[i]->is_integer()) return std::nullopt;
        if (!diag[i]->numerator().fits_slong_p()) return std::nullopt;
        out[i] = diag[i]->numerator().get_si();
    }
    const auto& order = CoxeterOrder::instance();
    const Octonion<Rational>* slots[3] = {&T.x, &T.y, &T.z};
    for (int s = 0; s < 3; ++s) {
        OctCoords doubled;
        for (int k = 0; k < 8; ++k) {
            Rational d = slots[s]->c[k] + slots[s]->c[k];
            if (!d.is_integer() || !d.numerator().fits_slong_p()) return std::nullopt;
            doubled[k] = d.numerator().get_si();
        }
        std::array<int64_t, 8> oc;
        if (!order.coords_from_doubled(doubled, oc)) return std::nullopt;
        for (int k = 0; k < 8; ++k) out[3 + 8 * s + k] = oc[k];
    }
    return out;
}

AlbertElement<Rational> AlbertLattice::from_coords(const Coords27& c) const {
    AlbertElement<Rational> r;
    r.a = Rational(c[0]);
    r.b = Rational(c[1]);
    r.c = Rational(c[2]);
    const auto& order = CoxeterOrder::instance();
    for (int s = 0; s < 3; ++s) {
        std::array<int64_t, 8> oc;
        for (int k = 0; k < 8; ++k) oc[k] = c[3 + 8 * s + k];
        const OctCoords doubled = order.doubled_from_coords(oc);
        auto& dst = s == 0 ? r.x : s == 1 ? r.y : r.z;
        dst = oct_from_doubled(doubled);
    }
    return r;
}

int64_t AlbertLattice::content(const Coords27& c) {
    int64_t g = 0;
    for (int64_t v : c) g = std::gcd(g, v < 0 ? -v : v);
    return g;
}

int64_t AlbertLattice::content(const AlbertElement<Rational>& T) const {
    const auto c = coords(T);
    if (!c) throw std::domain_error("content: element is not in the lattice");
    const int64_t g = content(*c);
    if (g == 0) throw std::domain_error("content: zero element");
    return g;
}

}  // namespace exth
