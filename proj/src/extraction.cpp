#include "extracta/extraction.hpp"

#include <algorithm>
#include <stdexcept>

#include "extracta/errors.hpp"
#include "extracta/printing.hpp"

namespace extracta {

ExtractionQuery lift(const Ideal& I, const Ideal& J) {
    const Ring& ring = I.ring();
    if (J.ring() != ring) throw std::invalid_argument("I and J must share a ring");

    // <0> is lifted literally as the single generator 0 (t_1 - 0).
    std::vector<Polynomial> control_gens = J.gens();
    if (control_gens.empty()) control_gens.push_back(Polynomial::zero(ring));
    const int s = static_cast<int>(control_gens.size());

    std::vector<std::string> names = ring.var_names();
    std::vector<std::string> lift_names;
    for (int w = 1; w <= s; ++w) {
        std::string t = fresh_var_name("t" + std::to_string(w), names);
        names.push_back(t);
        lift_names.push_back(t);
    }
    Ring lifted(names);

    std::vector<Polynomial> gens;
    for (const auto& f : I.gens()) gens.push_back(embed_into(f, lifted));
    for (int w = 0; w < s; ++w) {
        Polynomial t = Polynomial::variable(lifted, ring.nvars() + w);
        gens.push_back(t - embed_into(control_gens[w], lifted));
    }
    Ideal lifted_ideal(lifted, std::move(gens));

    std::vector<int> local_vars, global_vars;
    for (int i = 0; i < ring.nvars(); ++i) global_vars.push_back(i);
    for (int w = 0; w < s; ++w) local_vars.push_back(ring.nvars() + w);
    OrderSpec order = make_block_order(lifted, local_vars, global_vars);

    LocalizedIdealHandle handle(lifted_ideal, order);
    return {I, Ideal(ring, control_gens), lifted, std::move(lifted_ideal),
            std::move(order), std::move(handle), std::move(lift_names)};
}

ExtractionQuery with_order(const ExtractionQuery& q, const OrderSpec& order) {
    if (order.ring() != q.lifted_ring)
        throw std::invalid_argument("replacement order lives in the wrong ring");
    if (!order.is_control())
        throw DomainError("replacement order must be a control order");
    if (order.characteristic() != q.order.characteristic())
        throw DomainError("replacement order must have the same characteristic");
    ExtractionQuery out = q;
    out.order = order;
    out.handle = LocalizedIdealHandle(q.lifted_ideal, order);
    return out;
}

bool extraction_membership(const Polynomial& f, const ExtractionQuery& q) {
    if (f.ring() != q.original.ring())
        throw std::invalid_argument("probe polynomial must live in the original ring");
    return loc_membership(embed_into(f, q.lifted_ring), q.handle);
}

bool extraction_radical_membership(const Polynomial& f, const ExtractionQuery& q) {
    if (f.ring() != q.original.ring())
        throw std::invalid_argument("probe polynomial must live in the original ring");

    // Extend A' by a fresh global z inserted directly below the local
    // block, keeping the order a control order with z most significant
    // among the globals.
    std::vector<std::string> names = q.lifted_ring.var_names();
    std::string zname = fresh_var_name("z", names);
    names.push_back(zname);
    Ring ext(names);
    const int zcol = ext.nvars() - 1;

    int min_global_level = static_cast<int>(q.order.matrix().size());
    for (const auto& cl : q.order.column_levels())
        if (cl.global) min_global_level = std::min(min_global_level, cl.level);

    std::vector<std::vector<long long>> rows;
    for (int r = 0; r < static_cast<int>(q.order.matrix().size()); ++r) {
        if (r == min_global_level) {
            std::vector<long long> zrow(ext.nvars(), 0);
            zrow[zcol] = 1;
            rows.push_back(std::move(zrow));
        }
        std::vector<long long> row = q.order.matrix()[r];
        row.push_back(0);
        rows.push_back(std::move(row));
    }
    if (min_global_level == static_cast<int>(q.order.matrix().size())) {
        std::vector<long long> zrow(ext.nvars(), 0);
        zrow[zcol] = 1;
        rows.push_back(std::move(zrow));
    }
    OrderSpec ext_order = OrderSpec::from_matrix(ext, std::move(rows));

    std::vector<Polynomial> gens;
    for (const auto& g : q.lifted_ideal.gens()) gens.push_back(embed_into(g, ext));
    gens.push_back(Polynomial::constant(ext, 1) -
                   Polynomial::variable(ext, zcol) * embed_into(f, ext));
    LocalizedIdealHandle h(Ideal(ext, std::move(gens)), ext_order);
    return is_loc_whole_ring(h);
}

bool extraction_is_trivial(const ExtractionQuery& q) {
    return is_loc_whole_ring(q.handle);
}

int extraction_dim(const ExtractionQuery& q) {
    return dim_leading_ideal_loc(q.handle);
}

bool loc_ideal_equal(const ExtractionQuery& q1, const std::vector<Polynomial>& gens1,
                     const ExtractionQuery& q2, const std::vector<Polynomial>& gens2) {
    if (q1.original.ring() != q2.original.ring())
        throw std::invalid_argument("queries live in different rings");
    for (const auto& g : gens1)
        if (!extraction_membership(g, q2)) return false;
    for (const auto& g : gens2)
        if (!extraction_membership(g, q1)) return false;
    return true;
}

ExtractionResult extract(const Ideal& I, const Ideal& J) {
    ExtractionQuery q = lift(I, J);
    bool trivial = extraction_is_trivial(q);
    return {trivial, std::move(q), std::nullopt};
}

ExtractionResult extract_with_oracle(const PrimaryDecomposition& D, const Ideal& J) {
    ExtractionQuery q = lift(D.ideal, J);
    Ideal beta = beta_oracle(D, J);
    bool trivial = extraction_is_trivial(q);
    return {trivial, std::move(q), beta.gens()};
}

bool IdentityReport::all_ok() const {
    return std::none_of(entries.begin(), entries.end(),
                        [](const Entry& e) { return e.status == CheckStatus::fail; });
}

namespace {

std::vector<int> surviving_indices(const PrimaryDecomposition& D, const Ideal& J) {
    std::vector<int> idx;
    for (size_t i = 0; i < D.components.size(); ++i)
        if (!ideal_sum_is_whole_ring(D.components[i], J)) idx.push_back(static_cast<int>(i));
    return idx;
}

/// The kept components form a primary decomposition of beta(I, J).
PrimaryDecomposition sub_decomposition(const PrimaryDecomposition& D,
                                       const std::vector<int>& idx, Ideal value) {
    PrimaryDecomposition out{std::move(value), {}, D.provenance, D.minimal, std::nullopt};
    for (int i : idx) out.components.push_back(D.components[i]);
    if (D.component_radicals) {
        out.component_radicals.emplace();
        for (int i : idx) out.component_radicals->push_back((*D.component_radicals)[i]);
    }
    return out;
}

/// Union of two decompositions: a (generally non-minimal) decomposition of
/// the intersection of the two ideals.
PrimaryDecomposition union_decomposition(const PrimaryDecomposition& A,
                                         const PrimaryDecomposition& B) {
    PrimaryDecomposition out{ideal_intersection(A.ideal, B.ideal), {},
                             Provenance::user_supplied, false, std::nullopt};
    out.components = A.components;
    out.components.insert(out.components.end(), B.components.begin(), B.components.end());
    if (A.component_radicals && B.component_radicals) {
        out.component_radicals = A.component_radicals;
        out.component_radicals->insert(out.component_radicals->end(),
                                       B.component_radicals->begin(),
                                       B.component_radicals->end());
    }
    return out;
}

/// Witness membership against one query, each distinct generator reduced
/// once.
bool all_members(const ExtractionQuery& q, const std::vector<Polynomial>& a,
                 const std::vector<Polynomial>& b) {
    std::vector<const Polynomial*> distinct;
    auto add = [&](const Polynomial& g) {
        for (const auto* seen : distinct)
            if (*seen == g) return;
        distinct.push_back(&g);
    };
    for (const auto& g : a) add(g);
    for (const auto& g : b) add(g);
    for (const auto* g : distinct)
        if (!extraction_membership(*g, q)) return false;
    return true;
}

IdentityReport::Entry equality_entry(const std::string& name, const Ideal& lhs,
                                     const Ideal& rhs, bool membership_recheck_ok) {
    if (!ideal_equal(lhs, rhs))
        return {name, CheckStatus::fail,
                "lhs = <" + to_string(lhs) + ">, rhs = <" + to_string(rhs) + ">"};
    if (!membership_recheck_ok)
        return {name, CheckStatus::fail, "membership re-check disagreed"};
    return {name, CheckStatus::pass, ""};
}

} // namespace

IdentityReport check_identities(const PrimaryDecomposition& D_I,
                                const PrimaryDecomposition& D_J,
                                const PrimaryDecomposition& D_H, const Ideal& L) {
    const Ring& ring = D_I.ideal.ring();
    if (D_J.ideal.ring() != ring || D_H.ideal.ring() != ring || L.ring() != ring)
        throw std::invalid_argument("identity suite inputs must share a ring");

    const Ideal& I = D_I.ideal;
    const Ideal& J = D_J.ideal;
    const Ideal& H = D_H.ideal;
    IdentityReport report;

    Ideal beta_IJ = beta_oracle(D_I, J);
    std::vector<int> kept_J = surviving_indices(D_I, J);
    PrimaryDecomposition D_beta_IJ = sub_decomposition(D_I, kept_J, beta_IJ);

    // (1) extraction by the radical of the control ideal
    if (D_J.component_radicals) {
        Ideal sqrtJ = radical_of_decomposition(D_J).ideal;
        Ideal lhs = beta_oracle(D_I, sqrtJ);
        bool recheck = loc_ideal_equal(lift(I, sqrtJ), lhs.gens(), lift(I, J), beta_IJ.gens());
        report.entries.push_back(
            equality_entry("beta(I,rad(J)) == beta(I,J)", lhs, beta_IJ, recheck));
    } else {
        report.entries.push_back({"beta(I,rad(J)) == beta(I,J)", CheckStatus::skipped,
                                  "control decomposition lacks radical annotations"});
    }

    // (2) extraction of the radical
    if (D_I.component_radicals) {
        Ideal lhs = beta_oracle(radical_of_decomposition(D_I), J);
        Ideal rhs = kept_J.empty()
                        ? Ideal(ring, {Polynomial::constant(ring, 1)})
                        : radical_of_decomposition(D_beta_IJ).ideal;
        ExtractionQuery q_IJ = lift(I, J);
        bool recheck = true;
        for (const auto& g : rhs.gens())
            if (!extraction_radical_membership(g, q_IJ)) recheck = false;
        report.entries.push_back(
            equality_entry("beta(rad(I),J) == rad(beta(I,J))", lhs, rhs, recheck));
    } else {
        report.entries.push_back({"beta(rad(I),J) == rad(beta(I,J))", CheckStatus::skipped,
                                  "radical annotations unavailable"});
    }

    // (3) extraction distributes over intersection on the left
    {
        PrimaryDecomposition D_IH = union_decomposition(D_I, D_H);
        Ideal lhs = beta_oracle(D_IH, J);
        Ideal rhs = canonicalized(ideal_intersection(beta_IJ, beta_oracle(D_H, J)));
        ExtractionQuery q = lift(D_IH.ideal, J);
        bool recheck = all_members(q, lhs.gens(), rhs.gens());
        report.entries.push_back(
            equality_entry("beta(I^H,J) == beta(I,J)^beta(H,J)", lhs, rhs, recheck));
    }

    // (4) extraction distributes over intersection on the right
    {
        Ideal JL = ideal_intersection(J, L);
        Ideal lhs = beta_oracle(D_I, JL);
        Ideal rhs = canonicalized(ideal_intersection(beta_IJ, beta_oracle(D_I, L)));
        ExtractionQuery q = lift(I, JL);
        bool recheck = all_members(q, lhs.gens(), rhs.gens());
        report.entries.push_back(
            equality_entry("beta(I,J^L) == beta(I,J)^beta(I,L)", lhs, rhs, recheck));
    }

    // (5) idempotence
    {
        Ideal lhs = beta_oracle(D_beta_IJ, J);
        bool recheck =
            loc_ideal_equal(lift(beta_IJ, J), lhs.gens(), lift(I, J), beta_IJ.gens());
        report.entries.push_back(
            equality_entry("beta(beta(I,J),J) == beta(I,J)", lhs, beta_IJ, recheck));
    }

    // (6) control by the reverse extraction
    {
        Ideal beta_JI = beta_oracle(D_J, I);
        Ideal lhs = beta_oracle(D_I, beta_JI);
        bool recheck =
            loc_ideal_equal(lift(I, beta_JI), lhs.gens(), lift(I, J), beta_IJ.gens());
        report.entries.push_back(
            equality_entry("beta(I,beta(J,I)) == beta(I,J)", lhs, beta_IJ, recheck));
    }

    // (7) successive extractions commute
    {
        Ideal lhs = beta_oracle(D_beta_IJ, L);
        Ideal beta_IL = beta_oracle(D_I, L);
        PrimaryDecomposition D_beta_IL =
            sub_decomposition(D_I, surviving_indices(D_I, L), beta_IL);
        Ideal rhs = beta_oracle(D_beta_IL, J);
        bool recheck = loc_ideal_equal(lift(beta_IJ, L), lhs.gens(), lift(beta_IL, J),
                                       rhs.gens());
        report.entries.push_back(
            equality_entry("beta(beta(I,J),L) == beta(beta(I,L),J)", lhs, rhs, recheck));
    }

    // Lemma: lifting commutes with intersection, checked in A'
    {
        ExtractionQuery qI = lift(I, J);
        ExtractionQuery qH = lift(H, J);
        ExtractionQuery qIH = lift(ideal_intersection(I, H), J);
        Ideal lhs = qIH.lifted_ideal;
        Ideal rhs = ideal_intersection(qI.lifted_ideal, qH.lifted_ideal);
        report.entries.push_back(equality_entry("(I^H)' == I'^H'", lhs, rhs, true));
    }

    return report;
}

} // namespace extracta
