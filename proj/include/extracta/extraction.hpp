#ifndef EXTRACTA_EXTRACTION_HPP
#define EXTRACTA_EXTRACTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "extracta/decomp.hpp"
#include "extracta/order.hpp"
#include "extracta/polynomial.hpp"
#include "extracta/standard_basis.hpp"

namespace extracta {

/// The lifted data deciding membership in the extraction of I by J: the
/// enlarged ring A' with one fresh local variable per generator of J, the
/// lifted ideal I' = <I, t_w - g_w>, and a control order with the t's
/// local. Membership in I'^e, answered through the cached standard basis,
/// decides membership in beta(I, J).
struct ExtractionQuery {
    Ideal original;       // I, in A
    Ideal control;        // J, in A
    Ring lifted_ring;     // A'
    Ideal lifted_ideal;   // I'
    OrderSpec order;      // control order, t's local, original vars global
    LocalizedIdealHandle handle;
    std::vector<std::string> lift_names; // the fresh t variables, in J-generator order
};

ExtractionQuery lift(const Ideal& I, const Ideal& J);

/// Same query with the control order replaced by `order` (must be a
/// control order on the lifted ring with the same characteristic).
ExtractionQuery with_order(const ExtractionQuery& q, const OrderSpec& order);

bool extraction_membership(const Polynomial& f, const ExtractionQuery& q);
bool extraction_radical_membership(const Polynomial& f, const ExtractionQuery& q);
bool extraction_is_trivial(const ExtractionQuery& q);
/// Krull dimension of beta(I, J) through the lifted standard basis; -1 for
/// the trivial extraction.
int extraction_dim(const ExtractionQuery& q);

/// Membership-level equality of beta ideals: every witness generator of
/// either side is a member of the other. Witness lists normally come from
/// the decomposition oracle; both must be present.
bool loc_ideal_equal(const ExtractionQuery& q1, const std::vector<Polynomial>& gens1,
                     const ExtractionQuery& q2, const std::vector<Polynomial>& gens2);

struct ExtractionResult {
    bool trivial;
    ExtractionQuery query;
    std::optional<std::vector<Polynomial>> generators; // oracle route only
};

/// Membership-only extraction (no generators).
ExtractionResult extract(const Ideal& I, const Ideal& J);
/// Oracle-backed extraction carrying beta's generators.
ExtractionResult extract_with_oracle(const PrimaryDecomposition& D, const Ideal& J);

enum class CheckStatus { pass, fail, skipped };

struct IdentityReport {
    struct Entry {
        std::string name;
        CheckStatus status;
        std::string detail;
    };
    std::vector<Entry> entries;

    bool all_ok() const;
};

/// The identity suite: the seven extraction identities evaluated through
/// the decomposition oracle (with extraction-membership re-checks where
/// both sides have known generators), plus the lift-intersection equality
/// (I cap H)' = I' cap H' checked by reduced-GB equality in A'. The
/// radical identity (2) needs component radicals for I and the control
/// decomposition; it reports skipped when they are unavailable.
IdentityReport check_identities(const PrimaryDecomposition& D_I,
                                const PrimaryDecomposition& D_J,
                                const PrimaryDecomposition& D_H, const Ideal& L);

} // namespace extracta

#endif
