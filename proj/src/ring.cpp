#include "extracta/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace extracta {

bool Ring::is_valid_identifier(std::string_view name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

Ring::Ring(std::vector<std::string> var_names) {
    if (var_names.empty())
        throw std::invalid_argument("ring must have at least one variable");
    std::set<std::string_view> seen;
    for (const auto& n : var_names) {
        if (!is_valid_identifier(n))
            throw std::invalid_argument("invalid variable name: '" + n + "'");
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate variable name: '" + n + "'");
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(var_names));
}

std::optional<int> Ring::var_index(std::string_view name) const {
    for (int i = 0; i < nvars(); ++i)
        if ((*names_)[i] == name) return i;
    return std::nullopt;
}

bool Ring::operator==(const Ring& other) const {
    return names_ == other.names_ || *names_ == *other.names_;
}

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
        if (e < 0) throw std::invalid_argument("negative exponent in monomial");
}

Monomial Monomial::var(int nvars, int index, int power) {
    std::vector<int> exps(nvars, 0);
    exps.at(index) = power;
    return Monomial(std::move(exps));
}

int Monomial::total_degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    if (nvars() != other.nvars()) return false;
    for (int i = 0; i < nvars(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<int> exps(exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i) exps[i] = exps_[i] + other.exps_[i];
    return Monomial(std::move(exps));
}

Monomial Monomial::divided_by(const Monomial& other) const {
    std::vector<int> exps(exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i) exps[i] = exps_[i] - other.exps_[i];
    return Monomial(std::move(exps));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<int> exps(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) exps[i] = std::max(a.exp(i), b.exp(i));
    return Monomial(std::move(exps));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    std::vector<int> exps(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) exps[i] = std::min(a.exp(i), b.exp(i));
    return Monomial(std::move(exps));
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exp(i) > 0 && b.exp(i) > 0) return false;
    return true;
}

std::string fresh_var_name(std::string base, const std::vector<std::string>& taken) {
    while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "_";
    return base;
}

} // namespace extracta
