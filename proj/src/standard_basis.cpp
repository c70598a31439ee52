#include "extracta/standard_basis.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "extracta/errors.hpp"

namespace extracta {

std::pair<Monomial, Rational> leading_term(const Polynomial& f, const OrderSpec& o) {
    if (f.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
    const Monomial* best = nullptr;
    const Rational* coeff = nullptr;
    for (const auto& [m, c] : f.terms()) {
        if (!best || o.compare(m, *best) == Cmp::greater) {
            best = &m;
            coeff = &c;
        }
    }
    return {*best, *coeff};
}

Monomial leading_monomial(const Polynomial& f, const OrderSpec& o) {
    return leading_term(f, o).first;
}

int ecart(const Polynomial& f, const OrderSpec& o) {
    return f.total_degree() - leading_monomial(f, o).total_degree();
}

namespace {

using TermMap = Polynomial::TermMap;

Polynomial term_times(const Polynomial& f, const Rational& c, const Monomial& m) {
    return Polynomial::term(f.ring(), c, m) * f;
}

Polynomial normalized(const Polynomial& f, const OrderSpec& o) {
    auto [lm, lc] = leading_term(f, o);
    return f * (Rational(1) / lc);
}

/// acc -= c * m * src, in place.
void sub_scaled(TermMap& acc, const TermMap& src, const Rational& c, const Monomial& m) {
    for (const auto& [sm, sc] : src) {
        Monomial key = sm * m;
        auto it = acc.find(key);
        if (it == acc.end()) {
            Rational v = sc * c;
            if (v != 0) acc.emplace(std::move(key), -std::move(v));
        } else {
            it->second -= sc * c;
            if (it->second == 0) acc.erase(it);
        }
    }
}

const std::pair<const Monomial, Rational>& leading_entry(const TermMap& m, const OrderSpec& o) {
    const std::pair<const Monomial, Rational>* best = nullptr;
    for (const auto& t : m)
        if (!best || o.compare(t.first, best->first) == Cmp::greater) best = &t;
    return *best;
}

int map_total_degree(const TermMap& m) {
    int d = -1;
    for (const auto& [mono, c] : m) d = std::max(d, mono.total_degree());
    return d;
}

bool checking_enabled = false;

} // namespace

CertificateStats& certificate_stats() {
    static CertificateStats stats;
    return stats;
}

void set_certificate_checking(bool enabled) { checking_enabled = enabled; }
bool certificate_checking() { return checking_enabled; }

bool WeakNF::certificate_holds(const Polynomial& f, const std::vector<Polynomial>& divisors,
                               const OrderSpec& o) const {
    if (unit.is_zero()) return false;
    if (!leading_monomial(unit, o).is_one()) return false;
    Polynomial acc = unit * f - remainder;
    for (size_t i = 0; i < divisors.size(); ++i) acc = acc - quotients[i] * divisors[i];
    if (!acc.is_zero()) return false;
    if (!remainder.is_zero()) {
        Monomial lm = leading_monomial(remainder, o);
        for (const auto& g : divisors)
            if (!g.is_zero() && leading_monomial(g, o).divides(lm)) return false;
    }
    return true;
}

namespace {

/// The shared Mora loop. Tracks the unit and quotient cofactors only when
/// `track` is set; the remainder is identical either way.
WeakNF mora_reduce(const Polynomial& f, const std::vector<Polynomial>& divisors,
                   const OrderSpec& o, bool track) {
    const Ring& ring = f.ring();
    struct Entry {
        TermMap p;
        Monomial lm;
        Rational lc;
        int ec;
        TermMap cof_f;
        std::vector<TermMap> cof_g;
    };

    const size_t s = divisors.size();
    std::vector<Entry> T;
    for (size_t i = 0; i < s; ++i) {
        if (divisors[i].is_zero()) continue;
        if (divisors[i].ring() != ring)
            throw std::invalid_argument("divisor ring mismatch in weak normal form");
        auto [lm, lc] = leading_term(divisors[i], o);
        Entry e{divisors[i].terms(), lm, lc,
                divisors[i].total_degree() - lm.total_degree(), {}, {}};
        if (track) {
            e.cof_g.resize(s);
            e.cof_g[i].emplace(Monomial::one(ring.nvars()), 1);
        }
        T.push_back(std::move(e));
    }

    TermMap h = f.terms();
    TermMap cof_f;
    cof_f.emplace(Monomial::one(ring.nvars()), 1);
    std::vector<TermMap> cof_g(track ? s : 0);

    const size_t original_count = T.size();
    while (!h.empty()) {
        const auto& [h_lm, h_lc] = leading_entry(h, o);
        int h_ec = map_total_degree(h) - h_lm.total_degree();

        // Minimal ecart first (Mora's rule); among equals prefer original
        // divisors, then short ones, to keep the certificate small.
        int best = -1;
        auto better = [&](int a, int b) {
            if (T[a].ec != T[b].ec) return T[a].ec < T[b].ec;
            bool orig_a = static_cast<size_t>(a) < original_count;
            bool orig_b = static_cast<size_t>(b) < original_count;
            if (orig_a != orig_b) return orig_a;
            return T[a].p.size() < T[b].p.size();
        };
        for (size_t i = 0; i < T.size(); ++i) {
            if (!T[i].lm.divides(h_lm)) continue;
            if (best < 0 || better(static_cast<int>(i), best)) best = static_cast<int>(i);
        }
        if (best < 0) break;

        if (T[best].ec > h_ec) {
            Entry e{h, h_lm, h_lc, h_ec, {}, {}};
            if (track) {
                e.cof_f = cof_f;
                e.cof_g = cof_g;
            }
            T.push_back(std::move(e));
        }

        const Entry& t = T[best];
        Rational c = h_lc / t.lc;
        Monomial m = h_lm.divided_by(t.lm);
        sub_scaled(h, t.p, c, m);
        if (track) {
            sub_scaled(cof_f, t.cof_f, c, m);
            for (size_t i = 0; i < s; ++i)
                if (!t.cof_g[i].empty()) sub_scaled(cof_g[i], t.cof_g[i], c, m);
        }
    }

    WeakNF out{Polynomial(ring, std::move(h)),
               track ? Polynomial(ring, std::move(cof_f)) : Polynomial::constant(ring, 1),
               {}};
    if (track) {
        out.quotients.reserve(s);
        for (size_t i = 0; i < s; ++i)
            out.quotients.push_back(-Polynomial(ring, std::move(cof_g[i])));
    }
    return out;
}

} // namespace

WeakNF mora_weak_nf(const Polynomial& f, const std::vector<Polynomial>& divisors,
                    const OrderSpec& o) {
    WeakNF out = mora_reduce(f, divisors, o, true);
    if (checking_enabled) {
        bool ok = out.certificate_holds(f, divisors, o);
        certificate_stats().checked.fetch_add(1, std::memory_order_relaxed);
        if (!ok) {
            certificate_stats().failed.fetch_add(1, std::memory_order_relaxed);
            throw std::logic_error("weak normal form certificate failed");
        }
    }
    return out;
}

Polynomial mora_remainder(const Polynomial& f, const std::vector<Polynomial>& divisors,
                          const OrderSpec& o) {
    if (checking_enabled) return mora_weak_nf(f, divisors, o).remainder;
    return mora_reduce(f, divisors, o, false).remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const OrderSpec& o) {
    auto [fm, fc] = leading_term(f, o);
    auto [gm, gc] = leading_term(g, o);
    Monomial l = lcm(fm, gm);
    return term_times(f, Rational(1) / fc, l.divided_by(fm)) -
           term_times(g, Rational(1) / gc, l.divided_by(gm));
}

namespace {

/// Full normal form with tail reduction; valid (terminating) for global
/// orders only. Divisors indexed by `active`.
Polynomial full_normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                            const std::vector<bool>& active, const OrderSpec& o) {
    TermMap r;
    TermMap h = f.terms();
    while (!h.empty()) {
        auto [lm, lc] = leading_entry(h, o);
        bool reduced = false;
        for (size_t i = 0; i < G.size(); ++i) {
            if (!active[i]) continue;
            Monomial gm = leading_monomial(G[i], o);
            if (!gm.divides(lm)) continue;
            Rational gc = leading_term(G[i], o).second;
            sub_scaled(h, G[i].terms(), lc / gc, lm.divided_by(gm));
            reduced = true;
            break;
        }
        if (!reduced) {
            r.emplace(lm, lc);
            h.erase(lm);
        }
    }
    return Polynomial(f.ring(), std::move(r));
}

} // namespace

std::vector<Polynomial> compute_standard_basis(const std::vector<Polynomial>& gens,
                                               const OrderSpec& o, const SbOptions& opt) {
    std::vector<Polynomial> G;
    std::vector<Monomial> lms;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.ring() != o.ring())
            throw std::invalid_argument("generator ring does not match order's ring");
        Polynomial n = normalized(g, o);
        lms.push_back(leading_monomial(n, o));
        G.push_back(std::move(n));
    }
    if (G.empty()) return {};

    const Polynomial one = Polynomial::constant(o.ring(), 1);
    for (const auto& lm : lms)
        if (lm.is_one()) return {one};

    // Normal strategy: pairs by ascending lcm total degree.
    using PairKey = std::tuple<int, int, int>; // (deg lcm, i, j)
    std::set<PairKey> pending;
    auto push_pairs_for = [&](int j) {
        for (int i = 0; i < j; ++i)
            pending.insert({lcm(lms[i], lms[j]).total_degree(), i, j});
    };
    for (int j = 1; j < static_cast<int>(G.size()); ++j) push_pairs_for(j);

    auto pair_pending = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        return pending.count({lcm(lms[i], lms[j]).total_degree(), i, j}) > 0;
    };

    while (!pending.empty()) {
        auto [deg, i, j] = *pending.begin();
        pending.erase(pending.begin());

        if (opt.product_criterion && coprime(lms[i], lms[j])) continue;
        if (opt.chain_criterion) {
            Monomial l = lcm(lms[i], lms[j]);
            bool skip = false;
            for (int k = 0; k < static_cast<int>(G.size()) && !skip; ++k) {
                if (k == i || k == j) continue;
                if (lms[k].divides(l) && !pair_pending(i, k) && !pair_pending(j, k))
                    skip = true;
            }
            if (skip) continue;
        }

        Polynomial s = s_polynomial(G[i], G[j], o);
        if (s.is_zero()) continue;
        Polynomial rem = mora_remainder(s, G, o);
        if (rem.is_zero()) continue;

        Polynomial r = normalized(rem, o);
        Monomial rlm = leading_monomial(r, o);
        if (rlm.is_one()) return {one};
        lms.push_back(rlm);
        G.push_back(std::move(r));
        push_pairs_for(static_cast<int>(G.size()) - 1);
    }

    // Minimalize: drop elements whose leading monomial is divided by
    // another kept one.
    std::vector<bool> keep(G.size(), true);
    for (size_t i = 0; i < G.size(); ++i) {
        for (size_t j = 0; j < G.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (lms[j].divides(lms[i]) && (lms[j] != lms[i] || j < i)) keep[i] = false;
        }
    }

    if (o.is_global()) {
        // Tail reduction yields the unique reduced Groebner basis.
        for (size_t i = 0; i < G.size(); ++i) {
            if (!keep[i]) continue;
            std::vector<bool> others = keep;
            others[i] = false;
            G[i] = normalized(full_normal_form(G[i], G, others, o), o);
        }
    }

    std::vector<Polynomial> out;
    for (size_t i = 0; i < G.size(); ++i)
        if (keep[i]) out.push_back(G[i]);
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return o.compare(leading_monomial(a, o), leading_monomial(b, o)) == Cmp::greater;
    });
    return out;
}

LocalizedIdealHandle::LocalizedIdealHandle(Ideal ideal, OrderSpec order)
    : ideal_(std::move(ideal)), order_(std::move(order)), cache_(std::make_shared<Cache>()) {
    if (ideal_.ring() != order_.ring())
        throw std::invalid_argument("ideal and order rings differ");
}

const std::vector<Polynomial>& LocalizedIdealHandle::standard_basis() const {
    std::call_once(cache_->once, [this] {
        cache_->sb = compute_standard_basis(ideal_.gens(), order_);
        cache_->done.store(true, std::memory_order_release);
    });
    return cache_->sb;
}

bool loc_membership(const Polynomial& f, const LocalizedIdealHandle& h) {
    if (f.is_zero()) return true;
    return mora_remainder(f, h.standard_basis(), h.order()).is_zero();
}

bool is_loc_whole_ring(const LocalizedIdealHandle& h) {
    return loc_membership(Polynomial::constant(h.ideal().ring(), 1), h);
}

std::vector<Polynomial> groebner_basis(const Ideal& I, const OrderSpec& o,
                                       const SbOptions& opt) {
    if (!o.is_global()) throw DomainError("Groebner basis requires a global order");
    if (I.ring() != o.ring()) throw std::invalid_argument("ideal and order rings differ");
    return compute_standard_basis(I.gens(), o, opt);
}

Ideal canonicalized(const Ideal& I) {
    return Ideal(I.ring(), groebner_basis(I, OrderSpec::degrevlex(I.ring())));
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    if (I.ring() != J.ring()) return false;
    return canonicalized(I).gens() == canonicalized(J).gens();
}

bool is_unit_ideal(const Ideal& I) {
    auto gb = groebner_basis(I, OrderSpec::degrevlex(I.ring()));
    return gb.size() == 1 && gb[0] == Polynomial::constant(I.ring(), 1);
}

bool ideal_membership(const Polynomial& f, const Ideal& I) {
    if (f.ring() != I.ring()) throw std::invalid_argument("polynomial ring mismatch");
    if (f.is_zero()) return true;
    OrderSpec o = OrderSpec::degrevlex(I.ring());
    auto gb = groebner_basis(I, o);
    return mora_remainder(f, gb, o).is_zero();
}

bool ideal_sum_is_whole_ring(const Ideal& I, const Ideal& J) {
    if (I.ring() != J.ring()) throw std::invalid_argument("ideal ring mismatch");
    std::vector<Polynomial> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return is_unit_ideal(Ideal(I.ring(), std::move(gens)));
}

Ideal eliminate(const Ideal& I, const std::vector<int>& drop_vars) {
    const Ring& ring = I.ring();
    std::vector<bool> drop(ring.nvars(), false);
    for (int v : drop_vars) drop.at(v) = true;

    std::vector<int> kept;
    for (int i = 0; i < ring.nvars(); ++i)
        if (!drop[i]) kept.push_back(i);
    if (kept.empty())
        throw std::invalid_argument("cannot eliminate every variable");

    if (drop_vars.empty()) return canonicalized(I);

    auto degrevlex_rows = [](int k) {
        std::vector<std::vector<long long>> rows;
        rows.emplace_back(k, 1);
        for (int i = k - 1; i >= 1; --i) {
            std::vector<long long> r(k, 0);
            r[i] = -1;
            rows.push_back(std::move(r));
        }
        return rows;
    };
    std::vector<int> dropped;
    for (int i = 0; i < ring.nvars(); ++i)
        if (drop[i]) dropped.push_back(i);
    std::vector<BlockPart> parts{{degrevlex_rows(static_cast<int>(dropped.size())), dropped},
                                 {degrevlex_rows(static_cast<int>(kept.size())), kept}};
    OrderSpec elim_order = make_block_order_from_parts(ring, parts);

    auto gb = compute_standard_basis(I.gens(), elim_order);

    std::vector<std::string> kept_names;
    for (int i : kept) kept_names.push_back(ring.var_name(i));
    Ring sub(kept_names);

    std::vector<Polynomial> kept_gens;
    for (const auto& g : gb) {
        bool uses_dropped = false;
        for (int v : g.support_vars())
            if (drop[v]) { uses_dropped = true; break; }
        if (uses_dropped) continue;
        Polynomial::TermMap terms;
        for (const auto& [m, c] : g.terms()) {
            std::vector<int> exps;
            exps.reserve(kept.size());
            for (int i : kept) exps.push_back(m.exp(i));
            terms.emplace(Monomial(std::move(exps)), c);
        }
        kept_gens.emplace_back(sub, std::move(terms));
    }
    return canonicalized(Ideal(sub, std::move(kept_gens)));
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
    const Ring& ring = I.ring();
    if (ring != J.ring()) throw std::invalid_argument("ideal ring mismatch");
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal::zero(ring);

    std::vector<std::string> names{fresh_var_name("z", ring.var_names())};
    names.insert(names.end(), ring.var_names().begin(), ring.var_names().end());
    Ring ext(names);
    Polynomial z = Polynomial::variable(ext, 0);
    Polynomial one_minus_z = Polynomial::constant(ext, 1) - z;

    std::vector<Polynomial> gens;
    for (const auto& f : I.nonzero_gens()) gens.push_back(z * embed_into(f, ext));
    for (const auto& g : J.nonzero_gens()) gens.push_back(one_minus_z * embed_into(g, ext));
    return eliminate(Ideal(ext, std::move(gens)), {0});
}

bool radical_membership(const Polynomial& f, const Ideal& I) {
    const Ring& ring = I.ring();
    if (f.ring() != ring) throw std::invalid_argument("polynomial ring mismatch");
    if (f.is_zero()) return true;

    std::vector<std::string> names = ring.var_names();
    names.push_back(fresh_var_name("z", names));
    Ring ext(names);
    Polynomial z = Polynomial::variable(ext, ext.nvars() - 1);

    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(embed_into(g, ext));
    gens.push_back(Polynomial::constant(ext, 1) - z * embed_into(f, ext));
    return is_unit_ideal(Ideal(ext, std::move(gens)));
}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
    for (const auto& m : gens)
        if (m.nvars() != ring_.nvars())
            throw std::invalid_argument("monomial width does not match ring");
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (const auto& m : gens) {
        bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                     [&](const Monomial& k) { return k.divides(m); });
        if (!redundant) gens_.push_back(m);
    }
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && gens_[0].is_one();
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Monomial& g) { return contains(g); });
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
    std::vector<Monomial> gens;
    for (const auto& a : gens_)
        for (const auto& b : other.gens_) gens.push_back(lcm(a, b));
    return MonomialIdeal(ring_, std::move(gens));
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
    return ring_ == other.ring_ && gens_ == other.gens_;
}

Ideal MonomialIdeal::to_ideal() const {
    std::vector<Polynomial> gens;
    for (const auto& m : gens_) gens.push_back(Polynomial::term(ring_, 1, m));
    return Ideal(ring_, std::move(gens));
}

MonomialIdeal leading_ideal(const std::vector<Polynomial>& basis, const OrderSpec& o) {
    std::vector<Monomial> lms;
    for (const auto& g : basis)
        if (!g.is_zero()) lms.push_back(leading_monomial(g, o));
    return MonomialIdeal(o.ring(), std::move(lms));
}

int dim_monomial_ideal(const MonomialIdeal& M) {
    if (M.is_unit()) return -1;
    const int n = M.ring().nvars();
    std::vector<unsigned> supports;
    for (const auto& g : M.min_gens()) {
        unsigned s = 0;
        for (int i = 0; i < n; ++i)
            if (g.exp(i) > 0) s |= 1u << i;
        supports.push_back(s);
    }
    int best = -1;
    for (unsigned u = 0; u < (1u << n); ++u) {
        bool independent = std::none_of(supports.begin(), supports.end(),
                                        [&](unsigned s) { return (s & ~u) == 0; });
        if (independent) best = std::max(best, __builtin_popcount(u));
    }
    return best;
}

namespace {

void require_global_degree_order(const OrderSpec& o) {
    if (!o.is_global()) throw DomainError("a global degree order is required");
    const auto& row0 = o.matrix().at(0);
    long long w = row0.at(0);
    bool degree_row = w > 0 && std::all_of(row0.begin(), row0.end(),
                                           [&](long long v) { return v == w; });
    if (!degree_row) throw DomainError("a global degree order is required");
}

} // namespace

std::vector<std::vector<int>> strongly_independent_sets(const Ideal& I, const OrderSpec& o) {
    require_global_degree_order(o);
    MonomialIdeal lead = leading_ideal(groebner_basis(I, o), o);
    const int n = I.ring().nvars();
    std::vector<unsigned> supports;
    for (const auto& g : lead.min_gens()) {
        unsigned s = 0;
        for (int i = 0; i < n; ++i)
            if (g.exp(i) > 0) s |= 1u << i;
        supports.push_back(s);
    }
    std::vector<unsigned> independent;
    for (unsigned u = 0; u < (1u << n); ++u) {
        bool ok = std::none_of(supports.begin(), supports.end(),
                               [&](unsigned s) { return (s & ~u) == 0; });
        if (ok) independent.push_back(u);
    }
    std::vector<std::vector<int>> out;
    for (unsigned u : independent) {
        bool maximal = std::none_of(independent.begin(), independent.end(), [&](unsigned v) {
            return v != u && (u & ~v) == 0;
        });
        if (!maximal) continue;
        std::vector<int> vars;
        for (int i = 0; i < n; ++i)
            if (u & (1u << i)) vars.push_back(i);
        out.push_back(std::move(vars));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return out;
}

int dim_ideal(const Ideal& I) {
    OrderSpec o = OrderSpec::degrevlex(I.ring());
    return dim_monomial_ideal(leading_ideal(groebner_basis(I, o), o));
}

int dim_leading_ideal_loc(const LocalizedIdealHandle& h) {
    if (!h.order().is_control())
        throw DomainError("dimension surrogate undefined for non-control orders");
    return dim_monomial_ideal(leading_ideal(h.standard_basis(), h.order()));
}

} // namespace extracta
