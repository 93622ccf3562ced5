#pragma once

#include "exth/rational.hpp"

#include <string>
#include <vector>

namespace exth {

// Exact q-expansion c_0 + c_1 q + ... + c_prec q^prec of a declared weight.
struct QSeries {
    int weight = 0;
    std::vector<Rational> coeffs;  // size prec+1

    QSeries() = default;
    QSeries(int w, int prec) : weight(w), coeffs(static_cast<size_t>(prec) + 1) {}

    int prec() const { return static_cast<int>(coeffs.size()) - 1; }
    const Rational& at(int n) const { return coeffs[static_cast<size_t>(n)]; }
    bool is_zero() const {
        for (const auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }
    QSeries truncated(int prec) const;
};

// Addition requires equal weights; multiplication adds weights and truncates
// to the smaller precision.
QSeries add(const QSeries& f, const QSeries& g);
QSeries sub(const QSeries& f, const QSeries& g);
QSeries mul(const QSeries& f, const QSeries& g);
QSeries scale(const Rational& s, const QSeries& f);

// Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n for
// k in {4, 6, 12}.
QSeries eisenstein(int k, int prec);

// Discriminant form q prod (1-q^n)^24.
QSeries delta(int prec);

// Row-reduced (Miller-style) basis of M_k or S_k from monomials E4^a E6^b,
// pivots at q^0, q^1, ...; the dimension emerges from the construction.
enum class Space { M, S };
std::vector<QSeries> graded_basis(int k, Space space, int prec);

int dim_m(int k, int prec_hint = -1);
int dim_s(int k, int prec_hint = -1);

// Coordinates of f against graded_basis(k, space): solved on the first dim
// coefficients and REQUIRED to match exactly on every surplus coefficient of
// f.  Throws std::domain_error if f is not (to this precision) in the space.
std::vector<Rational> identify(const QSeries& f, int k, Space space);

// Classical level-one Hecke operator T_p; output precision floor(prec/p).
QSeries hecke(int64_t p, const QSeries& f);

// Rank over Q of the coefficient matrix with columns q^1..q^prec.
int span_rank(const std::vector<QSeries>& fs, int prec);

std::string to_csv(const QSeries& f);

}  // namespace exth
