#include "exth/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace exth {

namespace {

Rational sigma_pow(int64_t n, int k) {
    Int s = 0;
    for (int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        Int dp = 1, ep = 1;
        const int64_t e = n / d;
        for (int i = 0; i < k; ++i) {
            dp *= d;
            ep *= e;
        }
        s += dp;
        if (e != d) s += ep;
    }
    return Rational(s);
}

void check_same_weight(const QSeries& f, const QSeries& g) {
    if (f.weight != g.weight)
        throw std::domain_error("QSeries: mixed weights " + std::to_string(f.weight) + " and " +
                                std::to_string(g.weight));
}

}  // namespace

QSeries QSeries::truncated(int prec) const {
    QSeries r(weight, std::min(prec, this->prec()));
    for (int i = 0; i <= r.prec(); ++i) r.coeffs[i] = coeffs[i];
    return r;
}

QSeries add(const QSeries& f, const QSeries& g) {
    check_same_weight(f, g);
    QSeries r(f.weight, std::min(f.prec(), g.prec()));
    for (int i = 0; i <= r.prec(); ++i) r.coeffs[i] = f.at(i) + g.at(i);
    return r;
}

QSeries sub(const QSeries& f, const QSeries& g) {
    check_same_weight(f, g);
    QSeries r(f.weight, std::min(f.prec(), g.prec()));
    for (int i = 0; i <= r.prec(); ++i) r.coeffs[i] = f.at(i) - g.at(i);
    return r;
}

QSeries mul(const QSeries& f, const QSeries& g) {
    QSeries r(f.weight + g.weight, std::min(f.prec(), g.prec()));
    for (int i = 0; i <= std::min(f.prec(), r.prec()); ++i) {
        if (f.at(i).is_zero()) continue;
        for (int j = 0; i + j <= r.prec() && j <= g.prec(); ++j)
            r.coeffs[i + j] += f.at(i) * g.at(j);
    }
    return r;
}

QSeries scale(const Rational& s, const QSeries& f) {
    QSeries r = f;
    for (auto& c : r.coeffs) c *= s;
    return r;
}

QSeries eisenstein(int k, int prec) {
    // -2k/B_k for the supported weights.
    Rational factor;
    switch (k) {
        case 4: factor = Rational(240); break;
        case 6: factor = Rational(-504); break;
        case 12: factor = Rational(65520, 691); break;
        default: throw std::domain_error("eisenstein: unsupported weight " + std::to_string(k));
    }
    QSeries r(k, prec);
    r.coeffs[0] = Rational(1);
    for (int n = 1; n <= prec; ++n) r.coeffs[n] = factor * sigma_pow(n, k - 1);
    return r;
}

QSeries delta(int prec) {
    // q prod (1-q^n)^24: expand the eta product, then raise to the 24th
    // power by repeated squaring.
    QSeries eta(0, prec);
    eta.coeffs[0] = Rational(1);
    for (int n = 1; n <= prec; ++n) {
        // multiply by (1 - q^n)
        for (int i = prec; i >= n; --i) eta.coeffs[i] -= eta.coeffs[i - n];
    }
    QSeries pow(0, prec);
    pow.coeffs[0] = Rational(1);
    QSeries base = eta;
    int e = 24;
    while (e > 0) {
        if (e & 1) pow = mul(pow, base);
        base = mul(base, base);
        e >>= 1;
    }
    QSeries r(12, prec);
    for (int i = 1; i <= prec; ++i) r.coeffs[i] = pow.coeffs[i - 1];
    return r;
}

std::vector<QSeries> graded_basis(int k, Space space, int prec) {
    if (k < 4 || k % 2 != 0) return {};
    // Monomials E4^a E6^b with 4a + 6b = k.
    std::vector<QSeries> rows;
    const QSeries e4 = eisenstein(4, prec), e6 = eisenstein(6, prec);
    for (int b = 0; 6 * b <= k; ++b) {
        if ((k - 6 * b) % 4 != 0) continue;
        const int a = (k - 6 * b) / 4;
        QSeries m(k, prec);
        m.coeffs[0] = Rational(1);
        for (int i = 0; i < a; ++i) m = mul(m, e4);
        for (int i = 0; i < b; ++i) m = mul(m, e6);
        m.weight = k;
        rows.push_back(std::move(m));
    }
    // Row reduce to echelon form with pivot columns 0, 1, 2, ...
    std::vector<QSeries> basis;
    for (int col = 0; col <= prec && !rows.empty(); ++col) {
        size_t piv = rows.size();
        for (size_t r = 0; r < rows.size(); ++r)
            if (!rows[r].at(col).is_zero()) {
                piv = r;
                break;
            }
        if (piv == rows.size()) continue;
        QSeries p = scale(Rational(1) / rows[piv].at(col), rows[piv]);
        rows.erase(rows.begin() + static_cast<long>(piv));
        for (auto& r : rows)
            if (!r.at(col).is_zero()) r = sub(r, scale(r.at(col), p));
        for (auto& br : basis)
            if (!br.at(col).is_zero()) br = sub(br, scale(br.at(col), p));
        basis.push_back(std::move(p));
    }
    const int dim = static_cast<int>(basis.size());
    if (prec < dim + 1)
        throw std::domain_error("graded_basis: precision too small for weight " +
                                std::to_string(k));
    if (space == Space::S) {
        // Cusp subspace: echelon rows with pivot at q^1 or later.
        std::vector<QSeries> cusp;
        for (auto& b : basis)
            if (b.at(0).is_zero()) cusp.push_back(std::move(b));
        return cusp;
    }
    return basis;
}

int dim_m(int k, int prec_hint) {
    const int prec = prec_hint > 0 ? prec_hint : k / 6 + 3;
    return static_cast<int>(graded_basis(k, Space::M, prec).size());
}

int dim_s(int k, int prec_hint) {
    const int prec = prec_hint > 0 ? prec_hint : k / 6 + 3;
    return static_cast<int>(graded_basis(k, Space::S, prec).size());
}

std::vector<Rational> identify(const QSeries& f, int k, Space space) {
    if (f.weight != k) throw std::domain_error("identify: weight mismatch");
    const auto basis = graded_basis(k, space, f.prec());
    // With pivots at distinct q-powers, coordinates are read off directly.
    std::vector<Rational> coords(basis.size());
    QSeries rem = f;
    for (size_t i = 0; i < basis.size(); ++i) {
        int piv = -1;
        for (int c = 0; c <= basis[i].prec(); ++c)
            if (!basis[i].at(c).is_zero()) {
                piv = c;
                break;
            }
        coords[i] = rem.at(piv);
        if (!coords[i].is_zero()) rem = sub(rem, scale(coords[i], basis[i]));
    }
    if (!rem.is_zero())
        throw std::domain_error("identify: series is not in the space at this precision");
    return coords;
}

QSeries hecke(int64_t p, const QSeries& f) {
    if (p < 2) throw std::domain_error("hecke: p must be a prime >= 2");
    const int out_prec = f.prec() / static_cast<int>(p);
    QSeries r(f.weight, out_prec);
    Rational pk1 = pow(Rational(p), f.weight - 1);
    for (int n = 0; n <= out_prec; ++n) {
        Rational v = f.at(n * static_cast<int>(p));
        if (n == 0) {
            // a(0) picks up 1 + p^{k-1}
            v += pk1 * f.at(0);
        } else if (n % p == 0) {
            v += pk1 * f.at(n / static_cast<int>(p));
        }
        r.coeffs[n] = v;
    }
    return r;
}

int span_rank(const std::vector<QSeries>& fs, int prec) {
    if (fs.empty()) return 0;
    for (const auto& f : fs) {
        check_same_weight(fs.front(), f);
        if (f.prec() < prec) throw std::domain_error("span_rank: insufficient precision");
    }
    std::vector<std::vector<Rational>> m;
    for (const auto& f : fs) {
        std::vector<Rational> row(static_cast<size_t>(prec));
        for (int j = 1; j <= prec; ++j) row[j - 1] = f.at(j);
        m.push_back(std::move(row));
    }
    int rank = 0;
    for (int col = 0; col < prec; ++col) {
        size_t piv = m.size();
        for (size_t r = static_cast<size_t>(rank); r < m.size(); ++r)
            if (!m[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv == m.size()) continue;
        std::swap(m[static_cast<size_t>(rank)], m[piv]);
        const Rational inv = Rational(1) / m[static_cast<size_t>(rank)][col];
        for (int j = col; j < prec; ++j) m[static_cast<size_t>(rank)][j] *= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == static_cast<size_t>(rank) || m[r][col].is_zero()) continue;
            const Rational f0 = m[r][col];
            for (int j = col; j < prec; ++j) m[r][j] -= f0 * m[static_cast<size_t>(rank)][j];
        }
        ++rank;
    }
    return rank;
}

std::string to_csv(const QSeries& f) {
    std::ostringstream os;
    os << "n,coeff\n";
    for (int n = 0; n <= f.prec(); ++n) os << n << ',' << f.at(n).str() << '\n';
    return os.str();
}

}  // namespace exth
