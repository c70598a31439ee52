#include "extracta/decomp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "extracta/errors.hpp"
#include "extracta/printing.hpp"

namespace extracta {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::monomial_split: return "monomial-split";
        case Provenance::point: return "point";
        case Provenance::factored_principal: return "factored-principal";
        case Provenance::user_supplied: return "user-supplied";
    }
    return "?";
}

std::optional<Provenance> provenance_from_string(std::string_view s) {
    if (s == "monomial-split") return Provenance::monomial_split;
    if (s == "point") return Provenance::point;
    if (s == "factored-principal") return Provenance::factored_principal;
    if (s == "user-supplied") return Provenance::user_supplied;
    return std::nullopt;
}

Ideal intersect_all(const Ring& ring, const std::vector<Ideal>& components) {
    if (components.empty())
        return Ideal(ring, {Polynomial::constant(ring, 1)});
    Ideal acc = components[0];
    for (size_t i = 1; i < components.size(); ++i)
        acc = ideal_intersection(acc, components[i]);
    return canonicalized(acc);
}

void PrimaryDecomposition::verify() const {
    for (const auto& c : components)
        if (c.ring() != ideal.ring())
            throw DomainError("decomposition component ring mismatch");
    if (!ideal_equal(intersect_all(ideal.ring(), components), ideal))
        throw DomainError("decomposition components do not intersect to the ideal");
    if (!minimal) return;
    if (provenance != Provenance::monomial_split && provenance != Provenance::point) return;

    if (!component_radicals || component_radicals->size() != components.size())
        throw DomainError("minimal decomposition lacks component radicals");
    for (size_t i = 0; i < components.size(); ++i)
        for (size_t j = i + 1; j < components.size(); ++j)
            if (ideal_equal((*component_radicals)[i], (*component_radicals)[j]))
                throw DomainError("decomposition radicals are not distinct");
    for (size_t j = 0; j < components.size(); ++j) {
        if (components.size() == 1) break;
        std::vector<Ideal> others;
        for (size_t i = 0; i < components.size(); ++i)
            if (i != j) others.push_back(components[i]);
        Ideal rest = intersect_all(ideal.ring(), others);
        bool contains_rest = std::all_of(
            rest.gens().begin(), rest.gens().end(),
            [&](const Polynomial& g) { return ideal_membership(g, components[j]); });
        if (contains_rest) throw DomainError("decomposition has a redundant component");
    }
}

RationalPointSet::RationalPointSet(Ring r, std::vector<std::vector<Rational>> pts)
    : ring(std::move(r)), points(std::move(pts)) {
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != ring.nvars())
            throw std::invalid_argument("point dimension does not match ring");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw std::invalid_argument("points must be distinct");
}

Ideal RationalPointSet::maximal_ideal_of(int point_index) const {
    const auto& p = points.at(point_index);
    std::vector<Polynomial> gens;
    for (int i = 0; i < ring.nvars(); ++i)
        gens.push_back(Polynomial::variable(ring, i) -
                       Polynomial::constant(ring, p[i]));
    return Ideal(ring, std::move(gens));
}

namespace {

/// Recursive coprime-part splitting; leaves have pure-power generators
/// only and are irreducible.
void split_monomial(const MonomialIdeal& M, std::vector<MonomialIdeal>& leaves) {
    for (const auto& g : M.min_gens()) {
        int first_var = -1;
        int support = 0;
        for (int i = 0; i < g.nvars(); ++i)
            if (g.exp(i) > 0) {
                if (first_var < 0) first_var = i;
                ++support;
            }
        if (support >= 2) {
            Monomial u = Monomial::var(g.nvars(), first_var, g.exp(first_var));
            Monomial v = g.divided_by(u);
            std::vector<Monomial> with_u = M.min_gens();
            with_u.push_back(u);
            std::vector<Monomial> with_v = M.min_gens();
            with_v.push_back(v);
            split_monomial(MonomialIdeal(M.ring(), std::move(with_u)), leaves);
            split_monomial(MonomialIdeal(M.ring(), std::move(with_v)), leaves);
            return;
        }
    }
    leaves.push_back(M);
}

unsigned support_mask(const MonomialIdeal& M) {
    unsigned mask = 0;
    for (const auto& g : M.min_gens())
        for (int i = 0; i < g.nvars(); ++i)
            if (g.exp(i) > 0) mask |= 1u << i;
    return mask;
}

Ideal support_prime(const Ring& ring, unsigned mask) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < ring.nvars(); ++i)
        if (mask & (1u << i)) gens.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, std::move(gens));
}

} // namespace

PrimaryDecomposition monomial_primary_decomposition(const MonomialIdeal& M) {
    const Ring& ring = M.ring();
    if (M.is_unit())
        return {M.to_ideal(), {}, Provenance::monomial_split, true,
                std::vector<Ideal>{}};
    if (M.is_zero())
        return {Ideal::zero(ring), {Ideal::zero(ring)}, Provenance::monomial_split, true,
                std::vector<Ideal>{Ideal::zero(ring)}};

    std::vector<MonomialIdeal> leaves;
    split_monomial(M, leaves);

    // Merge leaves with equal radical (equal generator support), then
    // drop redundant components.
    std::vector<std::pair<unsigned, MonomialIdeal>> merged;
    for (const auto& leaf : leaves) {
        unsigned mask = support_mask(leaf);
        auto it = std::find_if(merged.begin(), merged.end(),
                               [&](const auto& e) { return e.first == mask; });
        if (it == merged.end())
            merged.emplace_back(mask, leaf);
        else
            it->second = it->second.intersect(leaf);
    }

    std::vector<std::pair<unsigned, MonomialIdeal>> kept = merged;
    for (size_t j = 0; j < kept.size();) {
        if (kept.size() == 1) break;
        MonomialIdeal rest = MonomialIdeal::zero(ring);
        bool first = true;
        for (size_t i = 0; i < kept.size(); ++i) {
            if (i == j) continue;
            rest = first ? kept[i].second : rest.intersect(kept[i].second);
            first = false;
        }
        if (kept[j].second.contains(rest))
            kept.erase(kept.begin() + static_cast<long>(j));
        else
            ++j;
    }

    PrimaryDecomposition out{M.to_ideal(), {}, Provenance::monomial_split, true,
                             std::vector<Ideal>{}};
    for (const auto& [mask, comp] : kept) {
        out.components.push_back(comp.to_ideal());
        out.component_radicals->push_back(support_prime(ring, mask));
    }
    out.verify();
    return out;
}

PrimaryDecomposition principal_decomposition(
    const std::vector<std::pair<Polynomial, int>>& factors) {
    if (factors.empty()) throw std::invalid_argument("empty factor list");
    const Ring& ring = factors[0].first.ring();
    for (const auto& [p, e] : factors) {
        if (p.ring() != ring) throw std::invalid_argument("factor ring mismatch");
        if (p.is_zero() || p.is_constant())
            throw std::invalid_argument("factors must be nonconstant");
        if (e < 1) throw std::invalid_argument("factor multiplicity must be positive");
    }
    for (size_t i = 0; i < factors.size(); ++i)
        for (size_t j = i + 1; j < factors.size(); ++j)
            if (ideal_equal(Ideal(ring, {factors[i].first}), Ideal(ring, {factors[j].first})))
                throw DomainError("factors generate equal principal ideals");

    Polynomial product = Polynomial::constant(ring, 1);
    PrimaryDecomposition out{Ideal::zero(ring), {}, Provenance::factored_principal, true,
                             std::vector<Ideal>{}};
    for (const auto& [p, e] : factors) {
        product = product * p.pow(e);
        out.components.push_back(Ideal(ring, {p.pow(e)}));
        out.component_radicals->push_back(Ideal(ring, {p}));
    }
    out.ideal = Ideal(ring, {product});
    if (!ideal_equal(intersect_all(ring, out.components), out.ideal))
        throw DomainError("factorization product does not match the intersection");
    return out;
}

std::pair<Ideal, PrimaryDecomposition> point_ideal(const RationalPointSet& P) {
    if (P.points.empty()) throw std::invalid_argument("empty point set");
    PrimaryDecomposition D{Ideal::zero(P.ring), {}, Provenance::point, true,
                           std::vector<Ideal>{}};
    for (size_t i = 0; i < P.points.size(); ++i) {
        Ideal m = P.maximal_ideal_of(static_cast<int>(i));
        D.components.push_back(m);
        D.component_radicals->push_back(m);
    }
    D.ideal = intersect_all(P.ring, D.components);
    D.verify();
    return {D.ideal, D};
}

std::vector<Ideal> surviving_components(const PrimaryDecomposition& D, const Ideal& J) {
    if (J.ring() != D.ideal.ring())
        throw std::invalid_argument("control ideal ring mismatch");
    std::vector<Ideal> kept;
    for (const auto& Q : D.components)
        if (!ideal_sum_is_whole_ring(Q, J)) kept.push_back(Q);
    return kept;
}

Ideal beta_oracle(const PrimaryDecomposition& D, const Ideal& J) {
    return intersect_all(D.ideal.ring(), surviving_components(D, J));
}

Ideal contract_oracle(const PrimaryDecomposition& D, const OrderSpec& o) {
    if (o.ring() != D.ideal.ring())
        throw std::invalid_argument("order ring mismatch");
    if (!o.is_control())
        throw DomainError("contraction filter is proven only for control orders");
    std::vector<Polynomial> locals;
    for (int v : o.local_vars()) locals.push_back(Polynomial::variable(o.ring(), v));
    Ideal J_loc(o.ring(), std::move(locals));
    return beta_oracle(D, J_loc);
}

Ideal zero_dim_contract_oracle(const RationalPointSet& P, const OrderSpec& o) {
    if (o.ring() != P.ring) throw std::invalid_argument("order ring mismatch");
    std::vector<int> locals = o.local_vars();
    std::vector<Ideal> kept;
    for (size_t i = 0; i < P.points.size(); ++i) {
        bool survives = std::all_of(locals.begin(), locals.end(), [&](int v) {
            return P.points[i][v] == 0;
        });
        if (survives) kept.push_back(P.maximal_ideal_of(static_cast<int>(i)));
    }
    return intersect_all(P.ring, kept);
}

int dim_oracle(const PrimaryDecomposition& D) {
    int best = -1;
    for (const auto& c : D.components) best = std::max(best, dim_ideal(c));
    return best;
}

PrimaryDecomposition radical_of_decomposition(const PrimaryDecomposition& D) {
    if (!D.component_radicals || D.component_radicals->size() != D.components.size())
        throw DomainError("decomposition lacks radical annotations");
    const Ring& ring = D.ideal.ring();

    std::vector<Ideal> primes;
    for (const auto& r : *D.component_radicals) {
        bool dup = std::any_of(primes.begin(), primes.end(),
                               [&](const Ideal& p) { return ideal_equal(p, r); });
        if (!dup) primes.push_back(canonicalized(r));
    }
    auto contained_in = [](const Ideal& A, const Ideal& B) {
        return std::all_of(A.gens().begin(), A.gens().end(),
                           [&](const Polynomial& g) { return ideal_membership(g, B); });
    };
    std::vector<Ideal> minimal_primes;
    for (const auto& p : primes) {
        bool has_smaller = std::any_of(primes.begin(), primes.end(), [&](const Ideal& q) {
            return !ideal_equal(p, q) && contained_in(q, p);
        });
        if (!has_smaller) minimal_primes.push_back(p);
    }

    PrimaryDecomposition out{intersect_all(ring, minimal_primes), minimal_primes,
                             D.provenance, true, minimal_primes};
    return out;
}

} // namespace extracta
