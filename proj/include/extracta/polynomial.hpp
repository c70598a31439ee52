#ifndef EXTRACTA_POLYNOMIAL_HPP
#define EXTRACTA_POLYNOMIAL_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "extracta/ring.hpp"

namespace extracta {

using Rational = mpq_class;

/// Sparse multivariate polynomial with exact rational coefficients.
/// Canonical form: the term map never stores a zero coefficient, so two
/// polynomials are equal iff their maps are equal. Immutable value type;
/// all arithmetic returns new values. Storage iteration order is the plain
/// lexicographic order on exponent vectors and carries no term-order
/// meaning.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
    Polynomial(Ring ring, TermMap terms);

    static Polynomial zero(const Ring& ring) { return Polynomial(ring); }
    static Polynomial constant(const Ring& ring, const Rational& c);
    static Polynomial variable(const Ring& ring, int var_index);
    static Polynomial term(const Ring& ring, const Rational& c, const Monomial& m);

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    /// Max total degree over terms; -1 for the zero polynomial.
    int total_degree() const;
    /// Coefficient of m (zero if absent).
    Rational coeff(const Monomial& m) const;
    bool is_constant() const;
    /// True iff f is a single term c*m with c != 0.
    bool is_term() const { return terms_.size() == 1; }
    /// Variable indices that occur with positive exponent in some term.
    std::vector<int> support_vars() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(int e) const;

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

private:
    Ring ring_;
    TermMap terms_;

    void check_same_ring(const Polynomial& other) const;
};

inline Polynomial operator*(const Rational& c, const Polynomial& f) { return f * c; }

/// Simultaneous substitution var -> polynomial. Every key must name a
/// variable of f's ring; every unassigned variable of f's ring must exist
/// in the target ring, where the result and all replacement polynomials
/// live. Ring homomorphism; equals the remainder of f under successive
/// division by {var - replacement}.
Polynomial substitute(const Polynomial& f,
                      const std::map<std::string, Polynomial>& assignments,
                      const Ring& target);

/// Rename-only embedding of f into a ring that contains all of f's
/// variables (by name).
Polynomial embed_into(const Polynomial& f, const Ring& target);

/// Exact evaluation at a rational point (one coordinate per ring variable).
Rational evaluate(const Polynomial& f, std::span<const Rational> point);

/// Finite generator list in a ring. Generators may include zero; the zero
/// ideal is canonically the empty list or {0}.
class Ideal {
public:
    Ideal(Ring ring, std::vector<Polynomial> gens);
    static Ideal zero(const Ring& ring) { return Ideal(ring, {}); }

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    /// Generators with zero polynomials dropped.
    std::vector<Polynomial> nonzero_gens() const;
    bool is_zero_ideal() const { return nonzero_gens().empty(); }

private:
    Ring ring_;
    std::vector<Polynomial> gens_;
};

} // namespace extracta

#endif
