#ifndef EXTRACTA_DECOMP_HPP
#define EXTRACTA_DECOMP_HPP

#include <optional>
#include <string>
#include <vector>

#include "extracta/order.hpp"
#include "extracta/polynomial.hpp"
#include "extracta/standard_basis.hpp"

namespace extracta {

enum class Provenance { monomial_split, point, factored_principal, user_supplied };

std::string to_string(Provenance p);
std::optional<Provenance> provenance_from_string(std::string_view s);

/// A primary decomposition of `ideal`: intersection of `components` equals
/// the ideal. The oracle classes (monomial / point / factored-principal)
/// carry per-component radicals; user-supplied ones only when annotated.
struct PrimaryDecomposition {
    Ideal ideal;
    std::vector<Ideal> components;
    Provenance provenance;
    bool minimal = false;
    std::optional<std::vector<Ideal>> component_radicals;

    /// Re-intersects the components (ideal_intersection fold, reduced-GB
    /// equality against `ideal`), and for minimal decompositions of the
    /// monomial/point classes also checks radical distinctness and
    /// irredundancy. Throws DomainError on failure.
    void verify() const;
};

/// Distinct rational points; each generates the maximal ideal
/// <x1 - a1, ..., xn - an>.
struct RationalPointSet {
    Ring ring;
    std::vector<std::vector<Rational>> points;

    RationalPointSet(Ring r, std::vector<std::vector<Rational>> pts);
    Ideal maximal_ideal_of(int point_index) const;
};

/// Minimal primary decomposition of a monomial ideal by the classical
/// splitting of a generator with coprime non-trivial parts; leaves are
/// irreducible, components with equal radicals are merged afterwards.
PrimaryDecomposition monomial_primary_decomposition(const MonomialIdeal& M);

/// <prod p_i^{e_i}> = intersection of <p_i^{e_i}>. The caller asserts the
/// factors are irreducible and pairwise non-associate; associates are
/// rejected by a reduced-GB check, and the product is verified against the
/// reconstructed ideal.
PrimaryDecomposition principal_decomposition(
    const std::vector<std::pair<Polynomial, int>>& factors);

/// Vanishing ideal of the point set plus its decomposition into the
/// points' maximal ideals.
std::pair<Ideal, PrimaryDecomposition> point_ideal(const RationalPointSet& P);

/// Literal Definition-4.3 extraction: intersect the components Q with
/// Q + J proper; <1> when none survives. Non-minimal input decompositions
/// are fine.
Ideal beta_oracle(const PrimaryDecomposition& D, const Ideal& J);

/// Components of D kept by the filter Q + J proper (order preserved).
std::vector<Ideal> surviving_components(const PrimaryDecomposition& D, const Ideal& J);

/// Contraction of the localized ideal under a control order: intersect the
/// components Q with Q + <local vars> proper. Refuses non-control orders.
Ideal contract_oracle(const PrimaryDecomposition& D, const OrderSpec& o);

/// Zero-dimensional radical contraction under an arbitrary semigroup
/// order: keep exactly the points whose coordinates vanish at every local
/// variable; <1> when none survives.
Ideal zero_dim_contract_oracle(const RationalPointSet& P, const OrderSpec& o);

/// Max component dimension; -1 for the empty component list.
int dim_oracle(const PrimaryDecomposition& D);

/// Decomposition of sqrt(ideal) into the inclusion-minimal primes among
/// the component radicals. Requires per-component radicals.
PrimaryDecomposition radical_of_decomposition(const PrimaryDecomposition& D);

/// Fold of ideal_intersection over a component list; the whole ring for an
/// empty list.
Ideal intersect_all(const Ring& ring, const std::vector<Ideal>& components);

} // namespace extracta

#endif
