#pragma once

#include "exth/octonion.hpp"
#include "exth/quadext.hpp"
#include "exth/rational.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace exth {

// Hermitian 3x3 matrix over the octonions in the layout
//   [a, b, c; x, y, z] = ( a       z   conj(y)
//                          conj(z) b   x
//                          y  conj(x)  c )
// with a,b,c in the scalar ring K and x,y,z octonions over K.
template <class K>
struct AlbertElement {
    K a{}, b{}, c{};
    Octonion<K> x, y, z;

    static AlbertElement identity() {
        AlbertElement r;
        r.a = r.b = r.c = K(1);
        return r;
    }
    static AlbertElement diag_unit(int i) {
        AlbertElement r;
        (i == 0 ? r.a : i == 1 ? r.b : r.c) = K(1);
        return r;
    }

    friend AlbertElement operator+(const AlbertElement& u, const AlbertElement& v) {
        return {u.a + v.a, u.b + v.b, u.c + v.c, u.x + v.x, u.y + v.y, u.z + v.z};
    }
    friend AlbertElement operator-(const AlbertElement& u, const AlbertElement& v) {
        return {u.a - v.a, u.b - v.b, u.c - v.c, u.x - v.x, u.y - v.y, u.z - v.z};
    }
    AlbertElement operator-() const { return {-a, -b, -c, -x, -y, -z}; }
    friend AlbertElement operator*(const K& s, const AlbertElement& v) {
        return {s * v.a, s * v.b, s * v.c, s * v.x, s * v.y, s * v.z};
    }
    friend bool operator==(const AlbertElement& u, const AlbertElement& v) {
        return u.a == v.a && u.b == v.b && u.c == v.c && u.x == v.x && u.y == v.y && u.z == v.z;
    }
    friend bool operator!=(const AlbertElement& u, const AlbertElement& v) { return !(u == v); }

    bool is_zero() const {
        return a == K(0) && b == K(0) && c == K(0) && x.is_zero() && y.is_zero() && z.is_zero();
    }
};

// Adjoint [bc-N(x), ca-N(y), ab-N(z); conj(yz)-ax, conj(zx)-by, conj(xy)-cz].
template <class K>
AlbertElement<K> adjoint(const AlbertElement<K>& A) {
    AlbertElement<K> r;
    r.a = A.b * A.c - oct_norm(A.x);
    r.b = A.c * A.a - oct_norm(A.y);
    r.c = A.a * A.b - oct_norm(A.z);
    r.x = oct_conj(oct_mul(A.y, A.z)) - A.a * A.x;
    r.y = oct_conj(oct_mul(A.z, A.x)) - A.b * A.y;
    r.z = oct_conj(oct_mul(A.x, A.y)) - A.c * A.z;
    return r;
}

template <class K>
K det(const AlbertElement<K>& A) {
    return A.a * A.b * A.c + oct_trace3(A.x, A.y, A.z) - A.a * oct_norm(A.x) -
           A.b * oct_norm(A.y) - A.c * oct_norm(A.z);
}

// (A,B) = aa' + bb' + cc' + <x,x'> + <y,y'> + <z,z'>.
template <class K>
K pair_form(const AlbertElement<K>& A, const AlbertElement<K>& B) {
    return A.a * B.a + A.b * B.b + A.c * B.c + oct_inner(A.x, B.x) + oct_inner(A.y, B.y) +
           oct_inner(A.z, B.z);
}

template <class K>
K trace(const AlbertElement<K>& A) {
    return A.a + A.b + A.c;
}

// A x B = (A+B)# - A# - B#.
template <class K>
AlbertElement<K> cross(const AlbertElement<K>& A, const AlbertElement<K>& B) {
    return adjoint(A + B) - adjoint(A) - adjoint(B);
}

// A o B = (AB + BA)/2 as octonion matrices.  The result is Hermitian again;
// assembled entry by entry to stay inside the [a,b,c;x,y,z] storage.
template <class K>
AlbertElement<K> jordan_product(const AlbertElement<K>& A, const AlbertElement<K>& B) {
    using O = Octonion<K>;
    const auto half = [](const K& v) {
        return v / K(2);
    };
    auto rows = [](const AlbertElement<K>& M) {
        std::array<std::array<O, 3>, 3> m;
        m[0] = {K(M.a) * O::one(), M.z, oct_conj(M.y)};
        m[1] = {oct_conj(M.z), K(M.b) * O::one(), M.x};
        m[2] = {M.y, oct_conj(M.x), K(M.c) * O::one()};
        return m;
    };
    const auto ma = rows(A), mb = rows(B);
    std::array<std::array<O, 3>, 3> s{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            O acc;
            for (int k = 0; k < 3; ++k)
                acc = acc + oct_mul(ma[i][k], mb[k][j]) + oct_mul(mb[i][k], ma[k][j]);
            s[i][j] = acc;
        }
    AlbertElement<K> r;
    r.a = half(s[0][0].c[0]);
    r.b = half(s[1][1].c[0]);
    r.c = half(s[2][2].c[0]);
    r.x = half(K(1)) * s[1][2];
    r.y = half(K(1)) * s[2][0];
    r.z = half(K(1)) * s[0][1];
    return r;
}

// Rank per the stratification by # and det.
template <class K>
int rank(const AlbertElement<K>& A) {
    if (A.is_zero()) return 0;
    const auto sharp = adjoint(A);
    if (sharp.is_zero()) return 1;
    if (det(A) == K(0)) return 2;
    return 3;
}

// Positive semidefinite via the seven minor determinants.
inline bool is_psd(const AlbertElement<Rational>& A) {
    const Rational zero(0);
    if (A.a < zero || A.b < zero || A.c < zero) return false;
    if (A.b * A.c - oct_norm(A.x) < zero) return false;
    if (A.c * A.a - oct_norm(A.y) < zero) return false;
    if (A.a * A.b - oct_norm(A.z) < zero) return false;
    return !(det(A) < zero);
}

namespace detail {

// Dense truncated polynomial over K; just enough ring structure to push a
// formal parameter through the adjoint/determinant templates.
template <class K>
struct TPoly {
    std::vector<K> c;  // c[i] = coefficient of t^i

    TPoly() = default;
    TPoly(int v) : c{K(v)} {}  // NOLINT: implicit ring constant
    explicit TPoly(std::vector<K> cs) : c(std::move(cs)) {}

    K coeff(size_t i) const { return i < c.size() ? c[i] : K(0); }

    friend TPoly operator+(const TPoly& p, const TPoly& q) {
        TPoly r;
        r.c.resize(std::max(p.c.size(), q.c.size()));
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = p.coeff(i) + q.coeff(i);
        return r;
    }
    friend TPoly operator-(const TPoly& p, const TPoly& q) {
        TPoly r;
        r.c.resize(std::max(p.c.size(), q.c.size()));
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = p.coeff(i) - q.coeff(i);
        return r;
    }
    TPoly operator-() const {
        TPoly r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }
    friend TPoly operator*(const TPoly& p, const TPoly& q) {
        TPoly r;
        if (p.c.empty() || q.c.empty()) return r;
        r.c.assign(p.c.size() + q.c.size() - 1, K(0));
        for (size_t i = 0; i < p.c.size(); ++i)
            for (size_t j = 0; j < q.c.size(); ++j) r.c[i + j] += p.c[i] * q.c[j];
        return r;
    }
    TPoly& operator+=(const TPoly& q) { return *this = *this + q; }
    TPoly& operator-=(const TPoly& q) { return *this = *this - q; }
    TPoly& operator*=(const TPoly& q) { return *this = *this * q; }
    friend bool operator==(const TPoly& p, const TPoly& q) {
        for (size_t i = 0; i < std::max(p.c.size(), q.c.size()); ++i)
            if (!(p.coeff(i) == q.coeff(i))) return false;
        return true;
    }

    static TPoly var(const K& scale) { return TPoly(std::vector<K>{K(0), scale}); }
};

template <class K>
AlbertElement<TPoly<K>> lift_linear(const AlbertElement<K>& P, const AlbertElement<K>& A) {
    AlbertElement<TPoly<K>> r;
    auto mk = [](const K& p, const K& a) { return TPoly<K>(std::vector<K>{p, a}); };
    r.a = mk(P.a, A.a);
    r.b = mk(P.b, A.b);
    r.c = mk(P.c, A.c);
    for (int i = 0; i < 8; ++i) {
        r.x.c[i] = mk(P.x.c[i], A.x.c[i]);
        r.y.c[i] = mk(P.y.c[i], A.y.c[i]);
        r.z.c[i] = mk(P.z.c[i], A.z.c[i]);
    }
    return r;
}

}  // namespace detail

// Coefficient of t in det(P + tA), by symbolic expansion of the cubic form.
template <class K>
K det_linear_coeff(const AlbertElement<K>& A, const AlbertElement<K>& P) {
    return det(detail::lift_linear(P, A)).coeff(1);
}

// Coefficient of s*t in det(P + sA + tB): expand in s over polynomials in t.
template <class K>
K det_bilinear_coeff(const AlbertElement<K>& A, const AlbertElement<K>& B,
                     const AlbertElement<K>& P) {
    using T = detail::TPoly<K>;
    AlbertElement<detail::TPoly<T>> e;
    auto mk = [](const K& p, const K& a, const K& b) {
        // (p + t*b) + s*(a): inner polynomials in t, outer in s.
        return detail::TPoly<T>(std::vector<T>{T(std::vector<K>{p, b}), T(std::vector<K>{a})});
    };
    e.a = mk(P.a, A.a, B.a);
    e.b = mk(P.b, A.b, B.b);
    e.c = mk(P.c, A.c, B.c);
    for (int i = 0; i < 8; ++i) {
        e.x.c[i] = mk(P.x.c[i], A.x.c[i], B.x.c[i]);
        e.y.c[i] = mk(P.y.c[i], A.y.c[i], B.y.c[i]);
        e.z.c[i] = mk(P.z.c[i], A.z.c[i], B.z.c[i]);
    }
    return det(e).coeff(1).coeff(1);
}

// (D1, D2) with D1 = d/dt det(P+tA)|_0 and D2 = d^2/dsdt det(P+sA+tB)|_0.
template <class K>
std::pair<K, K> det_polarize(const AlbertElement<K>& A, const AlbertElement<K>& B,
                             const AlbertElement<K>& P) {
    return {det_linear_coeff(A, P), det_bilinear_coeff(A, B, P)};
}

template <class K>
AlbertElement<K> albert_from(const K& a, const K& b, const K& c, const Octonion<K>& x,
                             const Octonion<K>& y, const Octonion<K>& z) {
    return {a, b, c, x, y, z};
}

}  // namespace exth
