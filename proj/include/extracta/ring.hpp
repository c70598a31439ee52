#ifndef EXTRACTA_RING_HPP
#define EXTRACTA_RING_HPP

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace extracta {

/// A named polynomial ring over the rationals: just the ordered list of
/// variable names. Copies are cheap (shared immutable state); two rings
/// compare equal iff they have the same variable names in the same order.
class Ring {
public:
    explicit Ring(std::vector<std::string> var_names);

    int nvars() const { return static_cast<int>(names_->size()); }
    const std::string& var_name(int i) const { return (*names_)[i]; }
    const std::vector<std::string>& var_names() const { return *names_; }
    std::optional<int> var_index(std::string_view name) const;
    bool has_var(std::string_view name) const { return var_index(name).has_value(); }

    bool operator==(const Ring& other) const;
    bool operator!=(const Ring& other) const { return !(*this == other); }

    static bool is_valid_identifier(std::string_view name);

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

/// Exponent vector of a monomial; length always equals the ambient ring's
/// variable count. Entries are non-negative. The operator<=> is a plain
/// lexicographic compare on the exponent tuple, used only as a storage key;
/// term order semantics come from OrderSpec.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps);
    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial var(int nvars, int index, int power = 1);

    int nvars() const { return static_cast<int>(exps_.size()); }
    int exp(int i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }
    int total_degree() const;
    bool is_one() const;

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    /// Exact quotient; caller guarantees divisibility.
    Monomial divided_by(const Monomial& other) const;

    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<int> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// `base`, with underscores appended until it avoids every taken name.
std::string fresh_var_name(std::string base, const std::vector<std::string>& taken);

} // namespace extracta

#endif
