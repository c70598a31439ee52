#include "extracta/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "extracta/errors.hpp"
#include "extracta/printing.hpp"

namespace extracta {

std::string to_string(InstanceClass c) {
    switch (c) {
        case InstanceClass::monomial: return "monomial";
        case InstanceClass::point: return "point";
        case InstanceClass::principal: return "principal";
    }
    return "?";
}

namespace {

int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Ring random_ring(std::mt19937_64& rng, int min_vars, int max_vars) {
    static const std::vector<std::string> pool{"x", "y", "z", "w"};
    int n = rand_int(rng, min_vars, max_vars);
    return Ring(std::vector<std::string>(pool.begin(), pool.begin() + n));
}

Monomial random_monomial(std::mt19937_64& rng, int nvars, int max_degree) {
    std::vector<int> exps(nvars, 0);
    int degree = rand_int(rng, 1, max_degree);
    for (int d = 0; d < degree; ++d) ++exps[rand_int(rng, 0, nvars - 1)];
    return Monomial(std::move(exps));
}

MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, const Ring& ring) {
    int count = rand_int(rng, 1, 4);
    std::vector<Monomial> gens;
    for (int i = 0; i < count; ++i) gens.push_back(random_monomial(rng, ring.nvars(), 4));
    return MonomialIdeal(ring, std::move(gens));
}

Rational random_coordinate(std::mt19937_64& rng) {
    // Zero-heavy so some points land on the local-variable hyperplanes.
    int pick = rand_int(rng, 0, 9);
    if (pick < 4) return 0;
    if (pick < 8) return rand_int(rng, -2, 2);
    Rational q(rand_int(rng, -3, 3), 2);
    q.canonicalize();
    return q;
}

RationalPointSet random_point_set(std::mt19937_64& rng, const Ring& ring, int max_points) {
    int count = rand_int(rng, 1, max_points);
    std::vector<std::vector<Rational>> pts;
    int attempts = 0;
    while (static_cast<int>(pts.size()) < count && attempts < 200) {
        ++attempts;
        std::vector<Rational> p;
        for (int i = 0; i < ring.nvars(); ++i) p.push_back(random_coordinate(rng));
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
    }
    return RationalPointSet(ring, std::move(pts));
}

Polynomial random_irreducible(std::mt19937_64& rng, const Ring& ring) {
    const int n = ring.nvars();
    auto var = [&](int i) { return Polynomial::variable(ring, i); };
    int pick = rand_int(rng, 0, 3);
    if (pick <= 1) {
        // Linear form; degree-one polynomials are irreducible.
        Polynomial f = Polynomial::zero(ring);
        while (f.is_zero() || f.is_constant()) {
            f = Polynomial::constant(ring, rand_int(rng, -2, 2));
            for (int i = 0; i < n; ++i)
                f = f + var(i) * Rational(rand_int(rng, -2, 2));
        }
        return f;
    }
    if (pick == 2 && n >= 2) {
        int i = rand_int(rng, 0, n - 1);
        int j = (i + 1 + rand_int(rng, 0, n - 2)) % n;
        int c = rand_int(rng, 1, 2);
        return var(i) * var(j) - Polynomial::constant(ring, c);
    }
    if (n >= 2) {
        int i = rand_int(rng, 0, n - 1);
        int j = (i + 1 + rand_int(rng, 0, n - 2)) % n;
        return var(i) * var(i) - var(j); // degree one in the second variable
    }
    return var(0) - Polynomial::constant(ring, rand_int(rng, -2, 2));
}

PrimaryDecomposition random_principal(std::mt19937_64& rng, const Ring& ring) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        int count = rand_int(rng, 1, 3);
        std::vector<std::pair<Polynomial, int>> factors;
        int total_degree = 0;
        for (int i = 0; i < count; ++i) {
            Polynomial p = random_irreducible(rng, ring);
            int e = rand_int(rng, 1, 2);
            total_degree += e * p.total_degree();
            factors.emplace_back(p, e);
        }
        if (total_degree > 5) continue;
        try {
            return principal_decomposition(factors);
        } catch (const DomainError&) {
            continue; // associate factors; redraw
        }
    }
    return principal_decomposition({{Polynomial::variable(ring, 0), 1}});
}

PrimaryDecomposition unit_ideal_decomposition(const Ring& ring) {
    return PrimaryDecomposition{Ideal(ring, {Polynomial::constant(ring, 1)}),
                                {},
                                Provenance::user_supplied,
                                true,
                                std::vector<Ideal>{}};
}

PrimaryDecomposition zero_ideal_decomposition(const Ring& ring) {
    return PrimaryDecomposition{Ideal(ring, {Polynomial::zero(ring)}),
                                {Ideal::zero(ring)},
                                Provenance::user_supplied,
                                true,
                                std::vector<Ideal>{Ideal::zero(ring)}};
}

/// A decomposable control ideal with its decomposition.
std::pair<Ideal, PrimaryDecomposition> random_control(std::mt19937_64& rng,
                                                      const Ring& ring) {
    int pick = rand_int(rng, 0, 9);
    if (pick < 3) {
        PrimaryDecomposition D = monomial_primary_decomposition(random_monomial_ideal(rng, ring));
        return {D.ideal, D};
    }
    if (pick < 6) {
        auto [ideal, D] = point_ideal(random_point_set(rng, ring, 2));
        return {ideal, D};
    }
    if (pick < 8) {
        PrimaryDecomposition D = random_principal(rng, ring);
        return {D.ideal, D};
    }
    if (pick == 8) return {Ideal(ring, {Polynomial::constant(ring, 1)}),
                           unit_ideal_decomposition(ring)};
    return {Ideal(ring, {Polynomial::zero(ring)}), zero_ideal_decomposition(ring)};
}

} // namespace

Polynomial random_polynomial(std::mt19937_64& rng, const Ring& ring, int max_degree,
                             int max_terms) {
    Polynomial f = Polynomial::zero(ring);
    int terms = rand_int(rng, 1, max_terms);
    for (int t = 0; t < terms; ++t) {
        int c = 0;
        while (c == 0) c = rand_int(rng, -3, 3);
        std::vector<int> exps(ring.nvars(), 0);
        int degree = rand_int(rng, 0, max_degree);
        for (int d = 0; d < degree; ++d) ++exps[rand_int(rng, 0, ring.nvars() - 1)];
        f = f + Polynomial::term(ring, c, Monomial(std::move(exps)));
    }
    return f;
}

std::vector<OrderSpec> mixed_order_pool(const Ring& ring) {
    const int n = ring.nvars();
    std::vector<OrderSpec> pool;
    auto try_add = [&](std::vector<std::vector<long long>> rows) {
        OrderSpec o = OrderSpec::from_matrix(ring, std::move(rows));
        if (o.order_class() != OrderClass::mixed) return;
        for (const auto& p : pool)
            if (p.same_matrix(o)) return;
        pool.push_back(std::move(o));
    };
    auto diag = [&](const std::vector<long long>& signs) {
        std::vector<std::vector<long long>> rows(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i) rows[i][i] = signs[i];
        return rows;
    };

    // Diagonal sign patterns (non-control unless the locals lead).
    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
        std::vector<long long> signs(n);
        for (int i = 0; i < n; ++i) signs[i] = (mask & (1 << i)) ? -1 : 1;
        try_add(diag(signs));
    }
    // Anti-diagonal: last variable local and leading (control for n = 2).
    {
        std::vector<std::vector<long long>> rows(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i) rows[i][n - 1 - i] = (i == 0) ? -1 : 1;
        try_add(rows);
    }
    // A shared top row mixing signs: every column has level 0.
    {
        std::vector<std::vector<long long>> rows;
        std::vector<long long> top(n, 1);
        top[n - 1] = -1;
        rows.push_back(top);
        for (int i = 0; i + 1 < n; ++i) {
            std::vector<long long> r(n, 0);
            r[i] = 1;
            rows.push_back(std::move(r));
        }
        try_add(rows);
    }
    {
        std::vector<std::vector<long long>> rows;
        std::vector<long long> top(n, -1);
        top[0] = 2;
        rows.push_back(top);
        for (int i = n - 1; i >= 1; --i) {
            std::vector<long long> r(n, 0);
            r[i] = -1;
            rows.push_back(std::move(r));
        }
        try_add(rows);
    }
    // Control block orders with one or two locals leading.
    for (int locals = 1; locals < n; ++locals) {
        std::vector<int> loc, glob;
        for (int i = 0; i < n; ++i)
            (i < locals ? loc : glob).push_back(i);
        try_add(make_block_order(ring, loc, glob).matrix());
        std::vector<int> loc2, glob2;
        for (int i = 0; i < n; ++i)
            (i >= n - locals ? loc2 : glob2).push_back(i);
        try_add(make_block_order(ring, loc2, glob2).matrix());
    }
    return pool;
}

std::vector<CorpusInstance> generate_corpus(const CorpusOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    std::vector<CorpusInstance> out;
    out.reserve(opt.count);
    for (int i = 0; i < opt.count; ++i) {
        InstanceClass cls = static_cast<InstanceClass>(i % 3);
        CorpusInstance inst = [&]() -> CorpusInstance {
            switch (cls) {
                case InstanceClass::monomial: {
                    Ring ring = random_ring(rng, 2, 4);
                    PrimaryDecomposition D = monomial_primary_decomposition(
                        random_monomial_ideal(rng, ring));
                    PrimaryDecomposition DH = monomial_primary_decomposition(
                        random_monomial_ideal(rng, ring));
                    auto [J, DJ] = random_control(rng, ring);
                    auto [L, DL] = random_control(rng, ring);
                    return {"", cls, ring, D.ideal, D, J, DJ, DH.ideal, DH, L,
                            std::nullopt, 0};
                }
                case InstanceClass::point: {
                    Ring ring = random_ring(rng, 2, 3);
                    RationalPointSet P = random_point_set(rng, ring, 5);
                    auto [I, D] = point_ideal(P);
                    RationalPointSet PH = random_point_set(rng, ring, 3);
                    auto [H, DH] = point_ideal(PH);
                    auto [J, DJ] = random_control(rng, ring);
                    auto [L, DL] = random_control(rng, ring);
                    return {"", cls, ring, I, D, J, DJ, H, DH, L, P, 0};
                }
                case InstanceClass::principal:
                default: {
                    Ring ring = random_ring(rng, 2, 3);
                    PrimaryDecomposition D = random_principal(rng, ring);
                    PrimaryDecomposition DH = random_principal(rng, ring);
                    auto [J, DJ] = random_control(rng, ring);
                    auto [L, DL] = random_control(rng, ring);
                    return {"", cls, ring, D.ideal, D, J, DJ, DH.ideal, DH, L,
                            std::nullopt, 0};
                }
            }
        }();
        inst.name = to_string(cls) + "-" + std::to_string(i);
        inst.probe_seed = rng();
        out.push_back(std::move(inst));
    }
    return out;
}

namespace {

std::vector<Polynomial> membership_probes(const CorpusInstance& inst,
                                          const Ideal& beta, std::mt19937_64& rng) {
    std::vector<Polynomial> probes;
    for (const auto& g : beta.gens()) probes.push_back(g);
    for (const auto& g : inst.I.gens()) probes.push_back(g);
    for (const auto& g : inst.J.gens()) probes.push_back(g);
    for (int i = 0; i < 20; ++i)
        probes.push_back(random_polynomial(rng, inst.ring, 3, 4));
    return probes;
}

/// A non-block control order equivalent to the lift's block order: first
/// row all -1 on the locals, second all +1 on the globals, then
/// interleaved unit tie-break rows.
OrderSpec scrambled_control_order(const ExtractionQuery& q) {
    const Ring& ring = q.lifted_ring;
    const int n = ring.nvars();
    std::vector<int> locals = q.order.local_vars();
    std::vector<int> globals = q.order.global_vars();
    std::vector<std::vector<long long>> rows;
    {
        std::vector<long long> r(n, 0);
        for (int v : locals) r[v] = -1;
        rows.push_back(std::move(r));
    }
    if (!globals.empty()) {
        std::vector<long long> r(n, 0);
        for (int v : globals) r[v] = 1;
        rows.push_back(std::move(r));
    }
    size_t gi = 0, li = 0;
    while (gi < globals.size() || li < locals.size()) {
        if (gi < globals.size()) {
            std::vector<long long> r(n, 0);
            r[globals[gi++]] = 1;
            rows.push_back(std::move(r));
        }
        if (li < locals.size()) {
            std::vector<long long> r(n, 0);
            r[locals[li++]] = -1;
            rows.push_back(std::move(r));
        }
    }
    return OrderSpec::from_matrix(ring, std::move(rows));
}

} // namespace

InstanceCheck check_instance(const CorpusInstance& inst, const CheckSelection& sel) {
    InstanceCheck out;
    out.name = inst.name;
    std::mt19937_64 rng(inst.probe_seed);

    ExtractionQuery q = lift(inst.I, inst.J);
    Ideal beta = beta_oracle(inst.D_I, inst.J);
    std::vector<Polynomial> probes = membership_probes(inst, beta, rng);

    if (sel.membership) {
        for (const auto& f : probes) {
            bool via_lift = extraction_membership(f, q);
            bool via_oracle = ideal_membership(f, beta);
            ++out.membership_probes;
            if (via_lift != via_oracle) {
                out.membership_ok = false;
                out.failures.push_back("membership mismatch on " + to_string(f));
            }
        }
    }

    if (sel.dimension) {
        std::vector<Ideal> kept = surviving_components(inst.D_I, inst.J);
        int expected = -1;
        for (const auto& c : kept) expected = std::max(expected, dim_ideal(c));
        int got = extraction_dim(q);
        if (got != expected) {
            out.dim_ok = false;
            out.failures.push_back("dim " + std::to_string(got) + " != oracle " +
                                   std::to_string(expected));
        }
    }

    if (sel.identities) {
        IdentityReport report = check_identities(inst.D_I, inst.D_J, inst.D_H, inst.L);
        if (!report.all_ok()) {
            out.identities_ok = false;
            for (const auto& e : report.entries)
                if (e.status == CheckStatus::fail)
                    out.failures.push_back("identity " + e.name + ": " + e.detail);
        }
    }

    if (sel.invariance) {
        // Equivalent control order (same characteristic, non-block rows).
        ExtractionQuery q_alt = with_order(q, scrambled_control_order(q));
        // Regenerated control ideal: redundant extra generator.
        std::vector<Polynomial> jgens = inst.J.gens();
        if (jgens.empty()) jgens.push_back(Polynomial::zero(inst.ring));
        jgens.push_back(jgens.size() >= 2 ? jgens[0] + jgens[1] : jgens[0] * Rational(2));
        ExtractionQuery q_regen = lift(inst.I, Ideal(inst.ring, jgens));

        for (const auto& f : probes) {
            bool base = extraction_membership(f, q);
            if (extraction_membership(f, q_alt) != base) {
                out.invariance_ok = false;
                out.failures.push_back("order-invariance mismatch on " + to_string(f));
            }
            if (extraction_membership(f, q_regen) != base) {
                out.invariance_ok = false;
                out.failures.push_back("generator-invariance mismatch on " + to_string(f));
            }
        }
    }

    if (sel.zero_dim && inst.points) {
        for (const auto& o : mixed_order_pool(inst.ring)) {
            Ideal contracted = zero_dim_contract_oracle(*inst.points, o);
            LocalizedIdealHandle h(inst.I, o);
            std::vector<Polynomial> zprobes = contracted.gens();
            for (const auto& g : inst.I.gens()) zprobes.push_back(g);
            for (int i = 0; i < 10; ++i)
                zprobes.push_back(random_polynomial(rng, inst.ring, 3, 4));
            for (const auto& f : zprobes) {
                if (loc_membership(embed_into(f, inst.ring), h) !=
                    ideal_membership(f, contracted)) {
                    out.zero_dim_ok = false;
                    out.failures.push_back("zero-dim contraction mismatch on " + to_string(f) +
                                           " under " + to_string(o));
                }
            }
        }
    }

    return out;
}

bool CorpusReport::all_ok() const {
    return std::all_of(results.begin(), results.end(),
                       [](const InstanceCheck& r) { return r.ok(); });
}

int CorpusReport::total_membership_probes() const {
    int total = 0;
    for (const auto& r : results) total += r.membership_probes;
    return total;
}

CorpusReport run_corpus(const std::vector<CorpusInstance>& corpus, int jobs,
                        const CheckSelection& sel) {
    CorpusReport report;
    report.results.resize(corpus.size());
    if (jobs < 1) jobs = 1;
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < corpus.size(); i = next.fetch_add(1))
            report.results[i] = check_instance(corpus[i], sel);
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    return report;
}

} // namespace extracta
