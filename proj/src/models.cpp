#include "fdview/models.hpp"

#include <algorithm>
#include <cassert>
#include <memory>

#include "fdview/constraints.hpp"
#include "fdview/engine.hpp"
#include "fdview/var.hpp"

namespace fdview {

namespace {

    // Expression helpers. View modes build views; no-view mode performs the
    // flattening: a fresh variable channeled by an ordinary constraint. The
    // variable-view regime has no reified view, so occurrence literals fall
    // back to the flattened encoding there as well.

    Var* affine_term(Engine& e, Var& x, std::int64_t a, std::int64_t b)
    {
        if (e.mode() != EngineMode::no_view)
            return &e.affine_view(x, a, b);
        const AffineFn fn{a, b};
        const std::int64_t img1 = fn.forward(x.min());
        const std::int64_t img2 = fn.forward(x.max());
        Var& y = e.make_var(std::min(img1, img2), std::max(img1, img2));
        e.post(std::make_unique<AffineChannel>(y, x, fn));
        return &y;
    }

    Var* shift_term(Engine& e, Var& x, std::int64_t k) { return affine_term(e, x, 1, k); }

    Var* literal_term(Engine& e, Var& x, std::int64_t i)
    {
        if (e.mode() == EngineMode::domain_view)
            return &e.literal_view(x, i);
        Var& b = e.make_var(0, 1);
        e.post(std::make_unique<ReifyEq>(b, x, i));
        return &b;
    }

    Var* negation_term(Engine& e, Var& b) { return affine_term(e, b, -1, 1); }

    void post_clause(Engine& e, std::vector<Var*> pos, std::vector<Var*> neg = {})
    {
        e.post(std::make_unique<BoolClause>(std::move(pos), std::move(neg)));
    }

}

BuiltModel build_magicseries(Engine& engine, int n)
{
    assert(n >= 1);
    BuiltModel model;
    std::vector<Var*> s;
    for (int i = 0; i < n; ++i)
        s.push_back(&engine.make_var(0, n - 1));
    for (int i = 0; i < n; ++i) {
        // sum_j (s_j = i) - s_i = 0
        std::vector<Var*> terms;
        for (int j = 0; j < n; ++j)
            terms.push_back(literal_term(engine, *s[j], i));
        terms.push_back(affine_term(engine, *s[i], -1, 0));
        engine.post(std::make_unique<LinearEq>(std::move(terms), 0));
    }
    model.decision_vars = s;
    model.default_limit = -1;
    return model;
}

BuiltModel build_langford(Engine& engine, int n)
{
    assert(n >= 1);
    BuiltModel model;
    std::vector<Var*> firsts;
    std::vector<Var*> all;
    for (int i = 1; i <= n; ++i) {
        // Second occurrence of number i sits i+1 positions after the first.
        Var& p = engine.make_var(0, 2 * n - 2 - i);
        firsts.push_back(&p);
        all.push_back(&p);
        all.push_back(shift_term(engine, p, i + 1));
    }
    engine.post(std::make_unique<AllDifferent>(all));
    model.decision_vars = firsts;
    model.default_limit = -1;
    return model;
}

BuiltModel build_knapsack(Engine& engine, std::span<const std::int64_t> weights,
    std::int64_t rhs, std::int64_t lo, std::int64_t hi)
{
    BuiltModel model;
    std::vector<Var*> terms;
    for (std::int64_t w : weights) {
        assert(w != 0);
        Var& x = engine.make_var(lo, hi);
        model.decision_vars.push_back(&x);
        terms.push_back(affine_term(engine, x, w, 0));
    }
    engine.post(std::make_unique<LinearEq>(std::move(terms), rhs));
    model.default_limit = -1;
    return model;
}

BuiltModel build_bibd(Engine& engine, int v, int k, int lambda)
{
    BuiltModel model;
    model.default_limit = 1;
    std::int64_t replication, blocks;
    if (v == 1 && k == 1) {
        // Degenerate single-treatment design: lambda blocks, every cell 1.
        replication = lambda;
        blocks = lambda;
    } else {
        // Standard necessary conditions; fail the model before any search
        // when replication or block counts are not integral.
        const std::int64_t r_num = static_cast<std::int64_t>(lambda) * (v - 1);
        const std::int64_t b_num = static_cast<std::int64_t>(lambda) * v * (v - 1);
        if (k < 2 || v < 2 || r_num % (k - 1) != 0
            || b_num % (static_cast<std::int64_t>(k) * (k - 1)) != 0) {
            engine.post(std::make_unique<LinearEq>(std::vector<Var*>{}, 1));
            return model;
        }
        replication = r_num / (k - 1);
        blocks = b_num / (static_cast<std::int64_t>(k) * (k - 1));
    }

    std::vector<std::vector<Var*>> m(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) {
        for (std::int64_t j = 0; j < blocks; ++j) {
            Var& cell = engine.make_var(0, 1);
            m[static_cast<std::size_t>(i)].push_back(&cell);
            model.decision_vars.push_back(&cell);
        }
    }
    for (int i = 0; i < v; ++i)
        engine.post(std::make_unique<LinearEq>(m[static_cast<std::size_t>(i)], replication));
    for (std::int64_t j = 0; j < blocks; ++j) {
        std::vector<Var*> col;
        for (int i = 0; i < v; ++i)
            col.push_back(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        engine.post(std::make_unique<LinearEq>(std::move(col), k));
    }
    // Pairwise scalar products: sum_j (row1_j and row2_j) = lambda, with the
    // conjunction written as not(not a or not b) so negation views carry the
    // boolean structure in the view regimes.
    for (int i1 = 0; i1 < v; ++i1) {
        for (int i2 = i1 + 1; i2 < v; ++i2) {
            std::vector<Var*> products;
            for (std::int64_t j = 0; j < blocks; ++j) {
                Var* a = m[static_cast<std::size_t>(i1)][static_cast<std::size_t>(j)];
                Var* b = m[static_cast<std::size_t>(i2)][static_cast<std::size_t>(j)];
                Var& p = engine.make_var(0, 1);
                Var* na = negation_term(engine, *a);
                Var* nb = negation_term(engine, *b);
                Var* np = negation_term(engine, p);
                post_clause(engine, {na, nb, &p});
                post_clause(engine, {a, np});
                post_clause(engine, {b, np});
                products.push_back(&p);
            }
            engine.post(std::make_unique<LinearEq>(std::move(products), lambda));
        }
    }
    return model;
}

BuiltModel build_slab(Engine& engine, std::span<const SlabOrder> orders,
    std::span<const std::int64_t> capacities, int color_count)
{
    BuiltModel model;
    model.default_limit = 1;
    const int slabs = static_cast<int>(capacities.size());
    if (orders.empty()) {
        model.default_limit = 1;
        return model;
    }
    assert(slabs >= 1);

    std::vector<Var*> assign;
    for (std::size_t o = 0; o < orders.size(); ++o) {
        Var& x = engine.make_var(0, slabs - 1);
        assign.push_back(&x);
        model.decision_vars.push_back(&x);
    }

    // One order-on-slab literal per (order, slab), shared by the load and
    // color constraints.
    std::vector<std::vector<Var*>> on_slab(orders.size());
    for (std::size_t o = 0; o < orders.size(); ++o)
        for (int s = 0; s < slabs; ++s)
            on_slab[o].push_back(literal_term(engine, *assign[o], s));

    for (int s = 0; s < slabs; ++s) {
        std::vector<Var*> load_terms;
        for (std::size_t o = 0; o < orders.size(); ++o)
            load_terms.push_back(
                affine_term(engine, *on_slab[o][static_cast<std::size_t>(s)], orders[o].weight, 0));
        engine.post(std::make_unique<LinearLeq>(std::move(load_terms),
            capacities[static_cast<std::size_t>(s)]));
    }

    // Color constraint on slab s: sum_c [any order of color c on s] <= 2.
    for (int s = 0; s < slabs; ++s) {
        std::vector<Var*> color_terms;
        for (int c = 0; c < color_count; ++c) {
            std::vector<Var*> lits;
            for (std::size_t o = 0; o < orders.size(); ++o)
                if (orders[o].color == c)
                    lits.push_back(on_slab[o][static_cast<std::size_t>(s)]);
            if (lits.empty())
                continue;
            Var& used = engine.make_var(0, 1);
            for (Var* lit : lits)
                post_clause(engine, {&used}, {lit}); // lit -> used
            post_clause(engine, lits, {&used}); // used -> some lit
            color_terms.push_back(&used);
        }
        engine.post(std::make_unique<LinearLeq>(std::move(color_terms), 2));
    }
    return model;
}

bool known_bench(const std::string& name)
{
    return name == "magicseries" || name == "langford" || name == "knapsack"
        || name == "bibd" || name == "slab";
}

int default_bench_n(const std::string& name)
{
    if (name == "magicseries")
        return 6;
    if (name == "langford")
        return 7;
    if (name == "knapsack")
        return 4;
    return 0;
}

namespace {

    // Desk-scale knapsack instances: the first n weights, targets chosen so
    // every size has solutions.
    constexpr std::int64_t knapsack_weights[] = {2, 3, 5, 7, 4, 6};

    // The slab mini instance: seven orders over three colors, four slabs.
    constexpr SlabOrder slab_orders[] = {
        {2, 0}, {3, 0}, {2, 1}, {2, 1}, {1, 2}, {1, 2}, {3, 2}};
    constexpr std::int64_t slab_capacities[] = {5, 5, 5, 5};
    constexpr int slab_colors = 3;

}

BuiltModel build_named(Engine& engine, const BenchInstance& instance)
{
    const int n = instance.n > 0 ? instance.n : default_bench_n(instance.name);
    if (instance.name == "magicseries")
        return build_magicseries(engine, n);
    if (instance.name == "langford")
        return build_langford(engine, n);
    if (instance.name == "knapsack") {
        assert(n >= 1 && n <= 6);
        return build_knapsack(engine,
            std::span<const std::int64_t>(knapsack_weights, static_cast<std::size_t>(n)),
            12, 0, 3);
    }
    if (instance.name == "bibd")
        return build_bibd(engine, instance.v, instance.k, instance.lambda);
    if (instance.name == "slab")
        return build_slab(engine, slab_orders, slab_capacities, slab_colors);
    std::abort();
}

}
