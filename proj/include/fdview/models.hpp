#ifndef FDVIEW_MODELS_HPP
#define FDVIEW_MODELS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fdview/types.hpp"

namespace fdview {

class Engine;
class Var;

/// A posted benchmark model: the variables to branch on plus the solution
/// limit the benchmark is conventionally run with (-1 = enumerate all).
struct BuiltModel {
    std::vector<Var*> decision_vars;
    std::int64_t default_limit = -1;
};

/// Magic series of length n over [0, n-1]: s_i equals the number of
/// occurrences of value i. View modes express the occurrence literals as
/// reified views and -s_i as an affine view; no-view mode flattens into
/// n*n auxiliary 0/1 variables with channeling constraints.
BuiltModel build_magicseries(Engine& engine, int n);

/// Langford pairing L(2, n): positions of the two occurrences of each
/// number i differ by i + 1, all 2n positions distinct. The second
/// occurrence is a shift of the first; no-view mode channels it through an
/// auxiliary variable.
BuiltModel build_langford(Engine& engine, int n);

/// sum(weights[i] * x_i) = rhs, every x_i in [lo, hi]. Coefficients become
/// affine views (auxiliary channeled variables in no-view mode).
BuiltModel build_knapsack(Engine& engine, std::span<const std::int64_t> weights,
    std::int64_t rhs, std::int64_t lo, std::int64_t hi);

/// Balanced incomplete block design (v, k, lambda) over the 0/1 incidence
/// matrix, with the pairwise scalar products written through negated
/// disjunctions so negation views are exercised. Instances failing the
/// standard divisibility conditions are flagged infeasible before search.
BuiltModel build_bibd(Engine& engine, int v, int k, int lambda);

struct SlabOrder {
    std::int64_t weight;
    int color;
};

/// Steel-mill slab assignment: per-slab load limits plus at most two
/// colors per slab, the color occupancies channeled through order-on-slab
/// literals.
BuiltModel build_slab(Engine& engine, std::span<const SlabOrder> orders,
    std::span<const std::int64_t> capacities, int color_count);

/// Named desk-scale instances used by the benchmark harness. For knapsack
/// `n` selects the item count, for bibd it is ignored in favour of
/// (v, k, lambda), for slab the built-in mini instance is used.
struct BenchInstance {
    std::string name;
    int n = 0;
    int v = 7;
    int k = 3;
    int lambda = 1;
};

bool known_bench(const std::string& name);
int default_bench_n(const std::string& name);
BuiltModel build_named(Engine& engine, const BenchInstance& instance);

}

#endif
