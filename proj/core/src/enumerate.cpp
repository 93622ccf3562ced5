#include "exth/enumerate.hpp"

#include "exth/shortvec.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace exth {

int64_t sigma3(int64_t n) {
    if (n < 1) throw std::domain_error("sigma3: n must be positive");
    int64_t s = 0;
    for (int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        s += d * d * d;
        const int64_t e = n / d;
        if (e != d) s += e * e * e;
    }
    return s;
}

namespace {

// Integer kernel on doubled coordinates: the element 2T of Her3(O) has
// integer diagonal and integer octonion coordinates whenever T is integral.
using DAlbert = AlbertElement<int64_t>;

DAlbert doubled_from_coords(const Coords27& c) {
    const auto& order = CoxeterOrder::instance();
    DAlbert r;
    r.a = 2 * c[0];
    r.b = 2 * c[1];
    r.c = 2 * c[2];
    for (int s = 0; s < 3; ++s) {
        std::array<int64_t, 8> oc;
        for (int k = 0; k < 8; ++k) oc[k] = c[3 + 8 * s + k];
        const OctCoords d = order.doubled_from_coords(oc);
        auto& dst = s == 0 ? r.x : s == 1 ? r.y : r.z;
        for (int k = 0; k < 8; ++k) dst.c[k] = d[k];
    }
    return r;
}

struct IsotopeKernel {
    DAlbert Ed, Eshd;  // doubled E and E#

    IsotopeKernel() {
        const auto& L = AlbertLattice::get(LatticeName::JE);
        auto dbl = [](const AlbertElement<Rational>& v) {
            DAlbert r;
            auto cv = [](const Rational& q) {
                Rational d = q + q;
                return d.numerator().get_si();
            };
            r.a = cv(v.a);
            r.b = cv(v.b);
            r.c = cv(v.c);
            for (int k = 0; k < 8; ++k) {
                r.x.c[k] = cv(v.x.c[k]);
                r.y.c[k] = cv(v.y.c[k]);
                r.z.c[k] = cv(v.z.c[k]);
            }
            return r;
        };
        Ed = dbl(L.isotope_e());
        Eshd = dbl(L.isotope_esharp());
    }

    // 2 Tr_E(T) = (E_d, T_d) / 2; returns 4 Tr_E(T).
    int64_t trace4(const DAlbert& Td) const { return pair_form(Ed, Td); }

    // T^{#E} = 0 iff (E#_d, S_d) E#_d == 2 (E_d x S_d) with S_d = adjoint(T_d).
    bool adjoint_is_zero(const DAlbert& Td) const {
        const DAlbert Sd = adjoint(Td);
        const int64_t p = pair_form(Eshd, Sd);
        const DAlbert lhs = p * Eshd;
        const DAlbert rhs = int64_t{2} * cross(Ed, Sd);
        return lhs == rhs;
    }
};

const IsotopeKernel& isotope_kernel() {
    static const IsotopeKernel k;
    return k;
}

int64_t content_of(const Coords27& c) { return AlbertLattice::content(c); }

Coords27 to27(const std::array<int32_t, 27>& v) {
    Coords27 c;
    for (int i = 0; i < 27; ++i) c[i] = v[i];
    return c;
}

std::array<int32_t, 27> to32(const Coords27& v) {
    std::array<int32_t, 27> c;
    for (int i = 0; i < 27; ++i) c[i] = static_cast<int32_t>(v[i]);
    return c;
}

// ---------- parametric J_Z enumeration ----------

using D8 = std::array<int64_t, 8>;

D8 dmul(const D8& x, const D8& y) {
    D8 r{};
    for (int i = 0; i < 8; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < 8; ++j) {
            if (y[j] == 0) continue;
            const int64_t t = x[i] * y[j];
            if (kOctTable.sign[i][j] > 0)
                r[kOctTable.idx[i][j]] += t;
            else
                r[kOctTable.idx[i][j]] -= t;
        }
    }
    return r;
}

struct ParametricJob {
    int a, b, c;
    size_t ybegin, yend;  // chunk of the N(y)=ca shell; yend==0 marks a
                          // degenerate (some diagonal zero) composition
};

// Emits coordinates for one all-positive composition chunk.
template <class Emit>
void run_positive_chunk(const ParametricJob& job, const Emit& emit) {
    const auto& order = CoxeterOrder::instance();
    const auto& ys = norm_shell(static_cast<int64_t>(job.c) * job.a);
    const auto& zs = norm_shell(static_cast<int64_t>(job.a) * job.b);
    const int64_t a2 = 2 * job.a;
    for (size_t yi = job.ybegin; yi < job.yend; ++yi) {
        const D8& yd = ys[yi];
        for (const D8& zd : zs) {
            // x = conj(yz)/a; in doubled coordinates 2x = conj(yd zd)/(2a).
            const D8 w = dmul(yd, zd);
            D8 xd;
            bool ok = true;
            for (int k = 0; k < 8; ++k) {
                const int64_t v = k == 0 ? w[0] : -w[k];
                if (v % a2 != 0) {
                    ok = false;
                    break;
                }
                xd[k] = v / a2;
            }
            if (!ok) continue;
            std::array<int64_t, 8> xcoords;
            if (!order.coords_from_doubled(xd, xcoords)) continue;
            // conj(zx) = b y and conj(xy) = c z, all doubled.
            const D8 zx = dmul(zd, xd);
            bool eq = true;
            for (int k = 0; k < 8 && eq; ++k)
                eq = (k == 0 ? zx[0] : -zx[k]) == 2 * job.b * yd[k];
            if (!eq) continue;
            const D8 xy = dmul(xd, yd);
            for (int k = 0; k < 8 && eq; ++k)
                eq = (k == 0 ? xy[0] : -xy[k]) == 2 * job.c * zd[k];
            if (!eq) continue;
            Coords27 out{};
            out[0] = job.a;
            out[1] = job.b;
            out[2] = job.c;
            for (int k = 0; k < 8; ++k) out[3 + k] = xcoords[k];
            std::array<int64_t, 8> yc, zc;
            order.coords_from_doubled(yd, yc);
            order.coords_from_doubled(zd, zc);
            for (int k = 0; k < 8; ++k) out[11 + k] = yc[k];
            for (int k = 0; k < 8; ++k) out[19 + k] = zc[k];
            emit(out);
        }
    }
}

template <class Emit>
void run_degenerate(const ParametricJob& job, const Emit& emit) {
    const auto& order = CoxeterOrder::instance();
    const int a = job.a, b = job.b, c = job.c;
    const int nz = (a > 0) + (b > 0) + (c > 0);
    if (nz == 1) {
        Coords27 out{};
        out[0] = a;
        out[1] = b;
        out[2] = c;
        emit(out);
        return;
    }
    // Exactly one zero: the two nonzero slots pin the opposite octonion slot.
    int slot;                   // octonion slot index (0 = x, 1 = y, 2 = z)
    int64_t norm;
    if (a == 0) {
        slot = 0;
        norm = static_cast<int64_t>(b) * c;
    } else if (b == 0) {
        slot = 1;
        norm = static_cast<int64_t>(c) * a;
    } else {
        slot = 2;
        norm = static_cast<int64_t>(a) * b;
    }
    for (const D8& od : norm_shell(norm)) {
        std::array<int64_t, 8> oc;
        order.coords_from_doubled(od, oc);
        Coords27 out{};
        out[0] = a;
        out[1] = b;
        out[2] = c;
        for (int k = 0; k < 8; ++k) out[3 + 8 * slot + k] = oc[k];
        emit(out);
    }
}

std::vector<ParametricJob> parametric_jobs(int trace) {
    constexpr size_t kChunk = 2048;
    std::vector<ParametricJob> jobs;
    for (int a = 0; a <= trace; ++a)
        for (int b = 0; b + a <= trace; ++b) {
            const int c = trace - a - b;
            const int nz = (a > 0) + (b > 0) + (c > 0);
            if (nz <= 2) {
                jobs.push_back({a, b, c, 0, 0});
            } else {
                const size_t ysize = norm_shell(static_cast<int64_t>(c) * a).size();
                for (size_t lo = 0; lo < ysize; lo += kChunk)
                    jobs.push_back({a, b, c, lo, std::min(lo + kChunk, ysize)});
            }
        }
    return jobs;
}

void visit_parametric(int trace, int workers, const Rank1Visitor& fn, ShellStats& stats) {
    if (trace < 1) throw std::domain_error("enumerate: trace must be positive");
    const auto jobs = parametric_jobs(trace);
    std::atomic<size_t> next{0};
    std::vector<ShellStats> partial(static_cast<size_t>(workers));
    auto work = [&](int w) {
        auto emit = [&](const Coords27& coords) {
            const int64_t cont = content_of(coords);
            partial[w].count++;
            partial[w].weighted += sigma3(cont);
            if (fn) fn(w, coords, cont);
        };
        for (;;) {
            const size_t j = next.fetch_add(1);
            if (j >= jobs.size()) break;
            if (jobs[j].yend == 0)
                run_degenerate(jobs[j], emit);
            else
                run_positive_chunk(jobs[j], emit);
        }
    };
    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (const auto& p : partial) {
        stats.count += p.count;
        stats.weighted += p.weighted;
    }
}

// ---------- gram-based enumeration ----------

void visit_general(const AlbertLattice& L, int trace, const EnumOptions& opts,
                   const Rank1Visitor& fn, ShellStats& stats) {
    if (trace < 1) throw std::domain_error("enumerate: trace must be positive");
    std::vector<std::vector<int64_t>> gram(27, std::vector<int64_t>(27));
    for (int i = 0; i < 27; ++i)
        for (int j = 0; j < 27; ++j) gram[i][j] = L.gram()[i][j];

    std::vector<SignConstraint> constraints;
    if (L.isotope() && trace >= 3) {
        // Positive-cone pruning: (S,T)_L >= 0 for a few positive rank-1 S of
        // trace 2 (pairings of PSD elements are nonnegative).
        Rank1Shell seed = enumerate_rank1_general(L, 2, opts);
        const size_t take = std::min<size_t>(8, seed.elements.size());
        for (size_t s = 0; s < take; ++s) {
            SignConstraint sc;
            sc.functional.assign(27, 0);
            for (int i = 0; i < 27; ++i)
                for (int j = 0; j < 27; ++j)
                    sc.functional[i] += L.gram()[i][j] * seed.elements[s][j];
            constraints.push_back(std::move(sc));
        }
    }

    const bool iso = L.isotope();
    const auto& kern = isotope_kernel();
    const int64_t m = static_cast<int64_t>(trace) * trace;
    short_vectors_visit(gram, m, constraints, [&](const std::vector<int64_t>& v) {
        Coords27 coords;
        for (int i = 0; i < 27; ++i) coords[i] = v[i];
        const DAlbert Td = doubled_from_coords(coords);
        if (iso) {
            if (kern.trace4(Td) != 4 * trace) return;
            if (!kern.adjoint_is_zero(Td)) return;
        } else {
            if (Td.a + Td.b + Td.c != 2 * trace) return;
            if (!adjoint(Td).is_zero()) return;
        }
        const int64_t cont = content_of(coords);
        stats.count++;
        stats.weighted += sigma3(cont);
        if (fn) fn(0, coords, cont);
    });
}

void check_budget(const AlbertLattice& L, int trace, const EnumOptions& opts) {
    const int limit = L.isotope() ? 2 : 8;
    if (trace > limit && !opts.force)
        throw BudgetExceeded("enumeration of " + to_string(L.name()) + " trace " +
                             std::to_string(trace) + " exceeds the default budget (use --force)");
}

Rank1Shell materialize(const AlbertLattice& L, int trace, const EnumOptions& opts,
                       bool parametric) {
    Rank1Shell shell;
    shell.lattice = L.name();
    shell.trace = trace;
    std::vector<std::vector<std::array<int32_t, 27>>> parts(
        static_cast<size_t>(std::max(1, opts.workers)));
    ShellStats stats;
    auto fn = [&](int w, const Coords27& c, int64_t) { parts[w].push_back(to32(c)); };
    if (parametric)
        visit_parametric(trace, std::max(1, opts.workers), fn, stats);
    else
        visit_general(L, trace, opts, fn, stats);
    size_t total = 0;
    for (const auto& p : parts) total += p.size();
    shell.elements.reserve(total);
    for (auto& p : parts)
        shell.elements.insert(shell.elements.end(), p.begin(), p.end());
    std::sort(shell.elements.begin(), shell.elements.end());
    shell.weighted = stats.weighted;
    return shell;
}

}  // namespace

Rank1Shell enumerate_rank1_parametric(int trace, const EnumOptions& opts) {
    return materialize(AlbertLattice::get(LatticeName::JZ), trace, opts, /*parametric=*/true);
}

Rank1Shell enumerate_rank1_general(const AlbertLattice& L, int trace, const EnumOptions& opts) {
    check_budget(L, trace, opts);
    return materialize(L, trace, opts, /*parametric=*/false);
}

ShellStats visit_rank1(const AlbertLattice& L, int trace, const EnumOptions& opts,
                       const Rank1Visitor& fn) {
    check_budget(L, trace, opts);
    if (!opts.cache_dir.empty() && opts.use_cache) {
        Rank1Shell cached;
        if (shell_cache_load(opts.cache_dir, L.name(), trace, cached)) {
            for (const auto& e : cached.elements) {
                const Coords27 c = to27(e);
                if (fn) fn(0, c, content_of(c));
            }
            return cached.stats();
        }
    }
    ShellStats stats;
    if (L.name() == LatticeName::JZ)
        visit_parametric(trace, std::max(1, opts.workers), fn, stats);
    else
        visit_general(L, trace, opts, fn, stats);
    return stats;
}

}  // namespace exth
