#include "extracta/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace extracta {

Polynomial::Polynomial(Ring ring, TermMap terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.nvars() != ring_.nvars())
            throw std::invalid_argument("monomial width does not match ring");
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Polynomial Polynomial::constant(const Ring& ring, const Rational& c) {
    return term(ring, c, Monomial::one(ring.nvars()));
}

Polynomial Polynomial::variable(const Ring& ring, int var_index) {
    return term(ring, 1, Monomial::var(ring.nvars(), var_index));
}

Polynomial Polynomial::term(const Ring& ring, const Rational& c, const Monomial& m) {
    Polynomial f(ring);
    if (c != 0) f.terms_[m] = c;
    return f;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::vector<int> Polynomial::support_vars() const {
    std::vector<bool> used(ring_.nvars(), false);
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < m.nvars(); ++i)
            if (m.exp(i) > 0) used[i] = true;
    std::vector<int> out;
    for (int i = 0; i < ring_.nvars(); ++i)
        if (used[i]) out.push_back(i);
    return out;
}

void Polynomial::check_same_ring(const Polynomial& other) const {
    if (ring_ != other.ring_)
        throw std::invalid_argument("polynomial ring mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    check_same_ring(other);
    Polynomial out = *this;
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = out.terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    check_same_ring(other);
    Polynomial out = *this;
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = out.terms_.try_emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_same_ring(other);
    Polynomial out(ring_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            Monomial m = ma * mb;
            auto [it, inserted] = out.terms_.try_emplace(m, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial out = *this;
    for (auto& [m, coeff] : out.terms_) coeff *= c;
    return out;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial acc = Polynomial::constant(ring_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& other) const {
    return ring_ == other.ring_ && terms_ == other.terms_;
}

Polynomial substitute(const Polynomial& f,
                      const std::map<std::string, Polynomial>& assignments,
                      const Ring& target) {
    const Ring& src = f.ring();
    // Per-variable replacement: either the assigned polynomial or the
    // matching target variable.
    std::vector<Polynomial> images;
    images.reserve(src.nvars());
    for (int i = 0; i < src.nvars(); ++i) {
        const std::string& name = src.var_name(i);
        auto it = assignments.find(name);
        if (it != assignments.end()) {
            if (it->second.ring() != target)
                throw std::invalid_argument("replacement for '" + name +
                                            "' does not live in the target ring");
            images.push_back(it->second);
        } else {
            auto idx = target.var_index(name);
            if (!idx)
                throw std::invalid_argument("target ring is missing unassigned variable '" +
                                            name + "'");
            images.push_back(Polynomial::variable(target, *idx));
        }
    }
    for (const auto& [name, _] : assignments)
        if (!src.has_var(name))
            throw std::invalid_argument("substitution names unknown variable '" + name + "'");

    Polynomial out(target);
    for (const auto& [m, c] : f.terms()) {
        Polynomial t = Polynomial::constant(target, c);
        for (int i = 0; i < src.nvars(); ++i)
            if (m.exp(i) > 0) t = t * images[i].pow(m.exp(i));
        out = out + t;
    }
    return out;
}

Polynomial embed_into(const Polynomial& f, const Ring& target) {
    if (f.ring() == target) return f;
    // Fast path: pure exponent-vector relabeling.
    std::vector<int> where(f.ring().nvars());
    for (int i = 0; i < f.ring().nvars(); ++i) {
        auto idx = target.var_index(f.ring().var_name(i));
        if (!idx)
            throw std::invalid_argument("target ring is missing variable '" +
                                        f.ring().var_name(i) + "'");
        where[i] = *idx;
    }
    Polynomial::TermMap terms;
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> exps(target.nvars(), 0);
        for (int i = 0; i < m.nvars(); ++i) exps[where[i]] = m.exp(i);
        terms.emplace(Monomial(std::move(exps)), c);
    }
    return Polynomial(target, std::move(terms));
}

Rational evaluate(const Polynomial& f, std::span<const Rational> point) {
    if (static_cast<int>(point.size()) != f.ring().nvars())
        throw std::invalid_argument("evaluation point has wrong dimension");
    Rational sum = 0;
    for (const auto& [m, c] : f.terms()) {
        Rational prod = c;
        for (int i = 0; i < m.nvars(); ++i) {
            Rational p = 1;
            for (int e = 0; e < m.exp(i); ++e) p *= point[i];
            prod *= p;
        }
        sum += prod;
    }
    return sum;
}

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (const auto& g : gens_)
        if (g.ring() != ring_)
            throw std::invalid_argument("ideal generator ring mismatch");
}

std::vector<Polynomial> Ideal::nonzero_gens() const {
    std::vector<Polynomial> out;
    for (const auto& g : gens_)
        if (!g.is_zero()) out.push_back(g);
    return out;
}

} // namespace extracta
