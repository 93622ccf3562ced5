#include "exth/shortvec.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace exth {

namespace {

constexpr double kMargin = 1e-6;

struct Enumerator {
    int n;
    const std::vector<std::vector<int64_t>>& gram;
    int64_t target;
    const std::vector<SignConstraint>& constraints;
    const std::function<void(const std::vector<int64_t>&)>& visit;

    std::vector<std::vector<double>> L;  // unit lower triangular
    std::vector<double> D;               // positive pivots
    // Per constraint: lambda (functional in w-coordinates) and prefix
    // Cauchy-Schwarz norms M[i] = sum_{j<=i} lambda_j^2 / D_j.
    std::vector<std::vector<double>> lambda;
    std::vector<std::vector<double>> csnorm;

    std::vector<int64_t> v;
    std::vector<double> center;   // center[j] = sum_{k>j} L[k][j] v_k
    std::vector<double> fixedw;   // per constraint: sum_{j>level} lambda_j w_j

    void cholesky() {
        L.assign(n, std::vector<double>(n, 0.0));
        D.assign(n, 0.0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < i; ++j) {
                double s = static_cast<double>(gram[i][j]);
                for (int k = 0; k < j; ++k) s -= L[i][k] * L[j][k] * D[k];
                L[i][j] = s / D[j];
            }
            double s = static_cast<double>(gram[i][i]);
            for (int k = 0; k < i; ++k) s -= L[i][k] * L[i][k] * D[k];
            if (s <= 0.0)
                throw std::domain_error("short_vectors: gram matrix not positive definite");
            D[i] = s;
            L[i][i] = 1.0;
        }
    }

    void setup_constraints() {
        lambda.clear();
        csnorm.clear();
        for (const auto& sc : constraints) {
            if (static_cast<int>(sc.functional.size()) != n)
                throw std::invalid_argument("short_vectors: constraint dimension mismatch");
            // Solve lambda U = l where w = U v, U[j][k] = L[k][j] for k >= j.
            // l.v = lambda.w, so lambda_j = l_j - sum_{k>j} lambda_k L[k][j].
            std::vector<double> lam(n, 0.0);
            for (int j = n - 1; j >= 0; --j) {
                double s = static_cast<double>(sc.functional[j]);
                for (int k = j + 1; k < n; ++k) s -= lam[k] * L[k][j];
                lam[j] = s;
            }
            std::vector<double> M(n, 0.0);
            double acc = 0.0;
            for (int j = 0; j < n; ++j) {
                acc += lam[j] * lam[j] / D[j];
                M[j] = acc;
            }
            lambda.push_back(std::move(lam));
            csnorm.push_back(std::move(M));
        }
    }

    bool exact_accept() const {
        __int128 q = 0;
        for (int a = 0; a < n; ++a) {
            if (v[a] == 0) continue;
            for (int b = 0; b < n; ++b)
                if (v[b] != 0) q += static_cast<__int128>(gram[a][b]) * v[a] * v[b];
        }
        if (q != target) return false;
        for (const auto& sc : constraints) {
            __int128 s = 0;
            for (int a = 0; a < n; ++a) s += static_cast<__int128>(sc.functional[a]) * v[a];
            if (s < 0) return false;
        }
        return true;
    }

    void recurse(int i, double rem) {
        if (i < 0) {
            if (exact_accept()) visit(v);
            return;
        }
        const double c = center[i];
        const double r = std::sqrt(std::max(rem, 0.0) / D[i]) + kMargin;
        const auto lo = static_cast<int64_t>(std::ceil(-c - r));
        const auto hi = static_cast<int64_t>(std::floor(-c + r));
        for (int64_t xi = lo; xi <= hi; ++xi) {
            const double w = static_cast<double>(xi) + c;
            const double rem2 = rem - D[i] * w * w;
            if (rem2 < -kMargin) continue;
            v[i] = xi;
            bool pruned = false;
            for (size_t t = 0; t < constraints.size(); ++t) {
                const double fw = fixedw[t] + lambda[t][i] * w;
                if (i > 0) {
                    const double reach = std::sqrt(std::max(rem2, 0.0) * csnorm[t][i - 1]);
                    if (fw + reach < -kMargin) {
                        pruned = true;
                        break;
                    }
                } else if (fw < -kMargin) {
                    pruned = true;
                    break;
                }
            }
            if (pruned) continue;
            // Descend with updated centers and constraint prefixes.
            std::vector<double> savedc;
            if (i > 0) {
                savedc.assign(center.begin(), center.begin() + i);
                if (xi != 0)
                    for (int j = 0; j < i; ++j) center[j] += L[i][j] * static_cast<double>(xi);
            }
            std::vector<double> savedf = fixedw;
            for (size_t t = 0; t < constraints.size(); ++t) fixedw[t] += lambda[t][i] * w;
            recurse(i - 1, rem2);
            fixedw = savedf;
            if (i > 0) std::copy(savedc.begin(), savedc.end(), center.begin());
        }
        v[i] = 0;
    }

    void run() {
        if (target < 0) return;
        if (target == 0) {
            v.assign(n, 0);
            if (exact_accept()) visit(v);
            return;
        }
        cholesky();
        setup_constraints();
        v.assign(n, 0);
        center.assign(n, 0.0);
        fixedw.assign(constraints.size(), 0.0);
        recurse(n - 1, static_cast<double>(target) + kMargin);
    }
};

}  // namespace

void short_vectors_visit(const std::vector<std::vector<int64_t>>& gram, int64_t m,
                         const std::vector<SignConstraint>& constraints,
                         const std::function<void(const std::vector<int64_t>&)>& visit) {
    const int n = static_cast<int>(gram.size());
    for (const auto& row : gram)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("short_vectors: gram matrix not square");
    Enumerator e{n, gram, m, constraints, visit, {}, {}, {}, {}, {}, {}, {}};
    e.run();
}

std::vector<std::vector<int64_t>> short_vectors(const std::vector<std::vector<int64_t>>& gram,
                                                int64_t m,
                                                const std::vector<SignConstraint>& constraints) {
    std::vector<std::vector<int64_t>> out;
    short_vectors_visit(gram, m, constraints,
                        [&](const std::vector<int64_t>& v) { out.push_back(v); });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace exth
