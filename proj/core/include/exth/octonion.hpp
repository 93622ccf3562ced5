#pragma once

#include <array>
#include <cstdint>

namespace exth {

// Structure constants for the 8-dimensional composition algebra in the basis
// (e0 = 1, e1, ..., e7).  The seven oriented lines
//   (1,2,4) (2,3,5) (3,4,6) (4,5,7) (5,6,1) (6,7,2) (7,1,3)
// multiply cyclically, e_i e_j = -e_j e_i off a line, e_i^2 = -1.
struct OctTable {
    // sign[i][j] in {-1,0,1}; idx[i][j] = k with e_i e_j = sign * e_k.
    int8_t sign[8][8];
    uint8_t idx[8][8];

    constexpr OctTable() : sign{}, idx{} {
        constexpr int lines[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                                     {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};
        for (int i = 0; i < 8; ++i) {
            sign[0][i] = sign[i][0] = 1;
            idx[0][i] = idx[i][0] = static_cast<uint8_t>(i);
        }
        for (int i = 1; i < 8; ++i) {
            sign[i][i] = -1;
            idx[i][i] = 0;
        }
        for (const auto& l : lines) {
            const int rot[3][3] = {{l[0], l[1], l[2]}, {l[1], l[2], l[0]}, {l[2], l[0], l[1]}};
            for (const auto& r : rot) {
                sign[r[0]][r[1]] = 1;
                idx[r[0]][r[1]] = static_cast<uint8_t>(r[2]);
                sign[r[1]][r[0]] = -1;
                idx[r[1]][r[0]] = static_cast<uint8_t>(r[2]);
            }
        }
    }
};

inline constexpr OctTable kOctTable{};

// Octonion with coordinates in an exact coefficient ring K (Rational, QuadExt,
// or a plain integer type in enumeration kernels).
template <class K>
struct Octonion {
    std::array<K, 8> c{};

    static Octonion zero() { return {}; }
    static Octonion one() { return unit(0); }
    static Octonion unit(int i) {
        Octonion r;
        r.c[static_cast<size_t>(i)] = K(1);
        return r;
    }

    friend Octonion operator+(const Octonion& a, const Octonion& b) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend Octonion operator-(const Octonion& a, const Octonion& b) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    Octonion operator-() const {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = -c[i];
        return r;
    }
    friend Octonion operator*(const K& s, const Octonion& a) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = s * a.c[i];
        return r;
    }
    friend bool operator==(const Octonion& a, const Octonion& b) { return a.c == b.c; }
    friend bool operator!=(const Octonion& a, const Octonion& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& v : c)
            if (!(v == K(0))) return false;
        return true;
    }
};

template <class K>
Octonion<K> oct_mul(const Octonion<K>& x, const Octonion<K>& y) {
    Octonion<K> r;
    for (int i = 0; i < 8; ++i) {
        if (x.c[i] == K(0)) continue;
        for (int j = 0; j < 8; ++j) {
            if (y.c[j] == K(0)) continue;
            const K t = x.c[i] * y.c[j];
            if (kOctTable.sign[i][j] > 0)
                r.c[kOctTable.idx[i][j]] += t;
            else
                r.c[kOctTable.idx[i][j]] -= t;
        }
    }
    return r;
}

template <class K>
Octonion<K> oct_conj(const Octonion<K>& x) {
    Octonion<K> r;
    r.c[0] = x.c[0];
    for (int i = 1; i < 8; ++i) r.c[i] = -x.c[i];
    return r;
}

template <class K>
K oct_trace(const Octonion<K>& x) {
    return x.c[0] + x.c[0];
}

template <class K>
K oct_norm(const Octonion<K>& x) {
    K s(0);
    for (int i = 0; i < 8; ++i) s += x.c[i] * x.c[i];
    return s;
}

// <x,y> = N(x+y) - N(x) - N(y) = Tr(x conj(y)) = 2 sum x_i y_i.
template <class K>
K oct_inner(const Octonion<K>& x, const Octonion<K>& y) {
    K s(0);
    for (int i = 0; i < 8; ++i) s += x.c[i] * y.c[i];
    return s + s;
}

// Tr(xyz), well defined by trace-associativity.
template <class K>
K oct_trace3(const Octonion<K>& x, const Octonion<K>& y, const Octonion<K>& z) {
    return oct_trace(oct_mul(oct_mul(x, y), z));
}

}  // namespace exth
