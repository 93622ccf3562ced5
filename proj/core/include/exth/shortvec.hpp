#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace exth {

// Linear functional with a sign requirement: keep v only if l.v >= 0.
// Subtrees whose best attainable l.v is provably negative are discarded.
struct SignConstraint {
    std::vector<int64_t> functional;
};

// Visits every v in Z^n with v^T gram v == m (both signs; m == 0 visits the
// zero vector) satisfying all constraints.  gram must be symmetric positive
// definite.  Bounds are computed in floating point with an absolute safety
// margin; every emitted vector passes an exact integer norm and constraint
// check, so the output is exact.  Visit order is an implementation detail.
void short_vectors_visit(const std::vector<std::vector<int64_t>>& gram, int64_t m,
                         const std::vector<SignConstraint>& constraints,
                         const std::function<void(const std::vector<int64_t>&)>& visit);

// Materialized variant, sorted lexicographically.
std::vector<std::vector<int64_t>> short_vectors(const std::vector<std::vector<int64_t>>& gram,
                                                int64_t m,
                                                const std::vector<SignConstraint>& constraints = {});

}  // namespace exth
