#ifndef EXTRACTA_STANDARD_BASIS_HPP
#define EXTRACTA_STANDARD_BASIS_HPP

#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "extracta/order.hpp"
#include "extracta/polynomial.hpp"

namespace extracta {

/// The >-maximal term of a nonzero polynomial. Throws on zero input.
std::pair<Monomial, Rational> leading_term(const Polynomial& f, const OrderSpec& o);
Monomial leading_monomial(const Polynomial& f, const OrderSpec& o);
/// deg f - deg LT(f); the quantity driving Mora's termination argument.
int ecart(const Polynomial& f, const OrderSpec& o);

/// Result of Mora's weak normal form: unit*f = sum(quotients[i]*G[i]) +
/// remainder holds exactly in the polynomial ring, the unit's leading term
/// is a nonzero constant, and the remainder is zero or has a leading term
/// not divisible by any LT(G[i]). For global orders the unit is 1 and this
/// is ordinary multivariate division.
struct WeakNF {
    Polynomial remainder;
    Polynomial unit;
    std::vector<Polynomial> quotients; // parallel to the divisor list

    bool certificate_holds(const Polynomial& f, const std::vector<Polynomial>& divisors,
                           const OrderSpec& o) const;
};

/// Running totals of certificate self-checks (used by the acceptance suite
/// to confirm every reduction's identity was verified).
struct CertificateStats {
    std::atomic<long long> checked{0};
    std::atomic<long long> failed{0};
};
CertificateStats& certificate_stats();
/// When enabled, every mora_weak_nf call verifies its own certificate and
/// records the outcome in certificate_stats().
void set_certificate_checking(bool enabled);
bool certificate_checking();

WeakNF mora_weak_nf(const Polynomial& f, const std::vector<Polynomial>& divisors,
                    const OrderSpec& o);

/// Same reduction without the unit/quotient bookkeeping; used where only
/// the remainder matters. Routes through mora_weak_nf when certificate
/// checking is enabled.
Polynomial mora_remainder(const Polynomial& f, const std::vector<Polynomial>& divisors,
                          const OrderSpec& o);

/// S-polynomial with both leading coefficients cleared.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const OrderSpec& o);

struct SbOptions {
    bool product_criterion = true;
    bool chain_criterion = false;
};

/// Buchberger loop with Mora's weak normal form as the reducer. Returns a
/// minimized standard basis with leading coefficients 1; for global orders
/// the result is the unique reduced Groebner basis. Any element with
/// constant leading term short-circuits to {1}. The zero ideal yields {}.
std::vector<Polynomial> compute_standard_basis(const std::vector<Polynomial>& gens,
                                               const OrderSpec& o,
                                               const SbOptions& opt = {});

/// An ideal together with a semigroup order, lazily caching the standard
/// basis of its extension in Loc_>(A). The cache is write-once: concurrent
/// first calls compute exactly once.
class LocalizedIdealHandle {
public:
    LocalizedIdealHandle(Ideal ideal, OrderSpec order);

    const Ideal& ideal() const { return ideal_; }
    const OrderSpec& order() const { return order_; }
    bool sb_computed() const { return cache_->done.load(std::memory_order_acquire); }
    const std::vector<Polynomial>& standard_basis() const;

private:
    Ideal ideal_;
    OrderSpec order_;
    struct Cache {
        std::once_flag once;
        std::atomic<bool> done{false};
        std::vector<Polynomial> sb;
    };
    std::shared_ptr<Cache> cache_;
};

/// f in I^e, decided by a zero weak normal form against the cached basis.
bool loc_membership(const Polynomial& f, const LocalizedIdealHandle& h);
/// 1 in I^e, i.e. the extension is Loc_>(A) itself.
bool is_loc_whole_ring(const LocalizedIdealHandle& h);

/// Unique reduced Groebner basis; requires a global order.
std::vector<Polynomial> groebner_basis(const Ideal& I, const OrderSpec& o,
                                       const SbOptions& opt = {});
/// Reduced degrevlex basis as a canonical generator list.
Ideal canonicalized(const Ideal& I);
bool ideal_equal(const Ideal& I, const Ideal& J);
bool is_unit_ideal(const Ideal& I);
/// Ordinary ideal membership in A via a degrevlex Groebner basis.
bool ideal_membership(const Polynomial& f, const Ideal& I);

/// 1 in I + J, via the reduced degrevlex basis of the sum.
bool ideal_sum_is_whole_ring(const Ideal& I, const Ideal& J);

/// Generators of I intersect K[remaining vars], as an ideal of the ring on
/// the remaining variables (original name order preserved).
Ideal eliminate(const Ideal& I, const std::vector<int>& drop_vars);

/// I intersect J via the auxiliary-variable elimination of z*I + (1-z)*J.
Ideal ideal_intersection(const Ideal& I, const Ideal& J);

/// f in sqrt(I), via 1 in I + <1 - z*f> in the ring extended by fresh z.
bool radical_membership(const Polynomial& f, const Ideal& I);

/// Monomial ideal kept as the antichain of minimal generators under
/// divisibility.
class MonomialIdeal {
public:
    MonomialIdeal(Ring ring, std::vector<Monomial> gens);
    static MonomialIdeal zero(const Ring& ring) { return MonomialIdeal(ring, {}); }

    const Ring& ring() const { return ring_; }
    const std::vector<Monomial>& min_gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    bool contains(const Monomial& m) const;
    bool contains(const MonomialIdeal& other) const;
    MonomialIdeal intersect(const MonomialIdeal& other) const;
    bool operator==(const MonomialIdeal& other) const;
    Ideal to_ideal() const;

private:
    Ring ring_;
    std::vector<Monomial> gens_;
};

/// Leading monomial ideal of a basis.
MonomialIdeal leading_ideal(const std::vector<Polynomial>& basis, const OrderSpec& o);

/// Max size of a variable subset u with no generator supported inside u;
/// -1 for the unit ideal, nvars for the zero ideal.
int dim_monomial_ideal(const MonomialIdeal& M);

/// All inclusion-maximal strongly independent variable sets mod I, read
/// off the leading ideal of a Groebner basis under a global degree order.
std::vector<std::vector<int>> strongly_independent_sets(const Ideal& I, const OrderSpec& o);

/// Krull dimension of A/I via the degrevlex leading ideal; -1 for the unit
/// ideal, nvars for the zero ideal.
int dim_ideal(const Ideal& I);

/// Dimension of the leading monomial ideal of the standard basis. Only
/// meaningful for control orders, where it equals dim(Loc/I^e); refused
/// with DomainError otherwise.
int dim_leading_ideal_loc(const LocalizedIdealHandle& h);

} // namespace extracta

#endif
