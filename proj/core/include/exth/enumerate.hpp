#pragma once

#include "exth/lattice.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace exth {

// Sum of cubes of divisors.
int64_t sigma3(int64_t n);

struct EnumOptions {
    int workers = 1;
    bool force = false;          // unlock expensive isotope traces (> 2)
    std::string cache_dir;       // empty: no disk cache
    bool use_cache = true;
};

// Raised when an enumeration exceeds the default compute budget and --force
// was not given.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShellStats {
    int64_t count = 0;
    int64_t weighted = 0;  // sum of sigma3(content) over the shell
};

// One trace shell of the rank-1 positive cone, in canonical (lexicographic)
// coordinate order.
struct Rank1Shell {
    LatticeName lattice;
    int trace = 0;
    std::vector<std::array<int32_t, 27>> elements;
    int64_t weighted = 0;

    ShellStats stats() const { return {static_cast<int64_t>(elements.size()), weighted}; }
};

// Per-element visitor; invoked concurrently from `opts.workers` threads with
// a stable worker id.  Exact reductions downstream make the merge order
// irrelevant.
using Rank1Visitor = std::function<void(int worker, const Coords27&, int64_t content)>;

// Streams the shell of trace n, dispatching to the parametric algorithm for
// J_Z and the gram-based one for the isotope.  Serves from the disk cache
// when available.  Returns exact count and weighted count.
ShellStats visit_rank1(const AlbertLattice& L, int trace, const EnumOptions& opts,
                       const Rank1Visitor& fn = nullptr);

// Composition-by-composition solve on J_Z: for trace n and diagonal
// (a,b,c) with all entries positive, enumerate y, z over the norm shells
// N(y) = ca, N(z) = ab and solve x = conj(yz)/a, keeping solutions whose
// remaining adjoint equations vanish.
Rank1Shell enumerate_rank1_parametric(int trace, const EnumOptions& opts = {});

// Lattice-agnostic algorithm: short vectors of the trace form at norm n^2,
// filtered to adjoint_l = 0 and trace_l = n.
Rank1Shell enumerate_rank1_general(const AlbertLattice& L, int trace,
                                   const EnumOptions& opts = {});

// Disk cache (one file per lattice/trace pair, checksummed, atomic write).
bool shell_cache_load(const std::string& dir, LatticeName lattice, int trace, Rank1Shell& out);
void shell_cache_store(const std::string& dir, const Rank1Shell& shell);

}  // namespace exth
