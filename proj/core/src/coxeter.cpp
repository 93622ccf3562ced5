#include "exth/coxeter.hpp"

#include "exth/shortvec.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace exth {

namespace {

// Row-style Hermite normal form of the span of `rows`, small integer inputs.
// Returns a lower-triangular square basis (pivot of row i at column i).
std::vector<std::vector<int64_t>> hnf_rows(std::vector<std::vector<int64_t>> rows, int n) {
    std::vector<std::vector<int64_t>> basis;
    for (int col = n - 1; col >= 0; --col) {
        // Reduce column `col` across all remaining rows by gcd steps.
        for (;;) {
            int piv = -1;
            for (size_t r = 0; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                if (piv < 0 || std::abs(rows[r][col]) < std::abs(rows[piv][col]))
                    piv = static_cast<int>(r);
            }
            if (piv < 0) break;
            bool done = true;
            for (size_t r = 0; r < rows.size(); ++r) {
                if (static_cast<int>(r) == piv || rows[r][col] == 0) continue;
                int64_t q = rows[r][col] / rows[piv][col];
                for (int k = 0; k < n; ++k) rows[r][k] -= q * rows[piv][k];
                if (rows[r][col] != 0) done = false;
            }
            if (done) {
                auto row = rows[piv];
                if (row[col] < 0)
                    for (auto& v : row) v = -v;
                basis.push_back(row);
                rows.erase(rows.begin() + piv);
                break;
            }
        }
    }
    std::reverse(basis.begin(), basis.end());
    // Reduce entries below each pivot into canonical range.
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            int64_t p = basis[j][j];
            int64_t q = basis[j][j] != 0 ? (basis[i][j] % p + p) % p : 0;
            q = (basis[i][j] - q) / p;
            for (int k = 0; k < n; ++k) basis[i][k] -= q * basis[j][k];
        }
    return basis;
}

}  // namespace

CoxeterOrder::CoxeterOrder() {
    std::vector<std::vector<int64_t>> gens;
    gens.push_back({2, 0, 0, 0, 0, 0, 0, 0});
    for (int i = 1; i < 8; ++i) {
        std::vector<int64_t> v(8, 0);
        v[i] = 2;
        gens.push_back(v);
    }
    gens.push_back({1, 1, 1, 0, 1, 0, 0, 0});
    gens.push_back({1, 1, 0, 1, 0, 0, 0, 1});
    gens.push_back({1, 1, 0, 0, 0, 1, 1, 0});
    gens.push_back({0, 1, 1, 1, 0, 1, 0, 0});

    auto rows = hnf_rows(std::move(gens), 8);
    if (rows.size() != 8) throw std::logic_error("CoxeterOrder: HNF rank != 8");
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) basis_[i][j] = rows[i][j];

    // Gram of the halved basis under <x,y> = 2 sum x_i y_i:
    // <b_i,b_j> = (1/2) sum basis_[i][k] basis_[j][k].
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            int64_t s = 0;
            for (int k = 0; k < 8; ++k) s += basis_[i][k] * basis_[j][k];
            if (s % 2 != 0) throw std::logic_error("CoxeterOrder: odd gram entry");
            gram_[i][j] = s / 2;
        }
}

const CoxeterOrder& CoxeterOrder::instance() {
    static const CoxeterOrder order;
    return order;
}

bool CoxeterOrder::coords_from_doubled(const OctCoords& v, std::array<int64_t, 8>& out) const {
    OctCoords r = v;
    for (int i = 7; i >= 0; --i) {
        if (r[i] % basis_[i][i] != 0) return false;
        int64_t q = r[i] / basis_[i][i];
        out[i] = q;
        if (q != 0)
            for (int k = 0; k <= i; ++k) r[k] -= q * basis_[i][k];
    }
    for (int k = 0; k < 8; ++k)
        if (r[k] != 0) return false;
    return true;
}

bool CoxeterOrder::contains_doubled(const OctCoords& v) const {
    std::array<int64_t, 8> c;
    return coords_from_doubled(v, c);
}

OctCoords CoxeterOrder::doubled_from_coords(const std::array<int64_t, 8>& coords) const {
    OctCoords v{};
    for (int i = 0; i < 8; ++i)
        if (coords[i] != 0)
            for (int k = 0; k < 8; ++k) v[k] += coords[i] * basis_[i][k];
    return v;
}

bool CoxeterOrder::contains(const Octonion<Rational>& x) const {
    OctCoords v;
    for (int i = 0; i < 8; ++i) {
        Rational d = x.c[i] + x.c[i];
        if (!d.is_integer()) return false;
        if (!d.numerator().fits_slong_p()) return false;
        v[i] = d.numerator().get_si();
    }
    return contains_doubled(v);
}

Octonion<Rational> CoxeterOrder::basis_element(int i) const {
    Octonion<Rational> r;
    for (int k = 0; k < 8; ++k) r.c[k] = Rational(basis_[i][k], 2);
    return r;
}

Octonion<Rational> oct_from_doubled(const OctCoords& v) {
    Octonion<Rational> r;
    for (int k = 0; k < 8; ++k) r.c[k] = Rational(v[k], 2);
    return r;
}

const std::vector<OctCoords>& norm_shell(int64_t m) {
    static std::map<int64_t, std::vector<OctCoords>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    std::vector<OctCoords> shell;
    if (m == 0) {
        shell.push_back(OctCoords{});
    } else if (m > 0) {
        const auto& order = CoxeterOrder::instance();
        // <x,x> = 2N(x), so N(x) = m is the gram-norm 2m shell.
        std::vector<std::vector<int64_t>> gram(8, std::vector<int64_t>(8));
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) gram[i][j] = order.gram()[i][j];
        short_vectors_visit(gram, 2 * m, {}, [&](const std::vector<int64_t>& coords) {
            std::array<int64_t, 8> c;
            for (int i = 0; i < 8; ++i) c[i] = coords[i];
            shell.push_back(order.doubled_from_coords(c));
        });
        std::sort(shell.begin(), shell.end());
    }
    return cache.emplace(m, std::move(shell)).first->second;
}

}  // namespace exth
