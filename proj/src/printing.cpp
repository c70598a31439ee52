#include "extracta/printing.hpp"

#include <algorithm>
#include <sstream>

namespace extracta {

std::string to_string(const Rational& q) {
    return q.get_str();
}

std::string to_string(const Ring& ring, const Monomial& m) {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m.exp(i) == 0) continue;
        if (!first) os << "*";
        os << ring.var_name(i);
        if (m.exp(i) > 1) os << "^" << m.exp(i);
        first = false;
    }
    return os.str();
}

std::string to_string(const Polynomial& f, const OrderSpec& o) {
    if (f.is_zero()) return "0";
    std::vector<const std::pair<const Monomial, Rational>*> terms;
    for (const auto& t : f.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(), [&](const auto* a, const auto* b) {
        return o.compare(a->first, b->first) == Cmp::greater;
    });

    std::ostringstream os;
    bool first = true;
    for (const auto* t : terms) {
        Rational c = t->second;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (t->first.is_one()) {
            os << to_string(c);
        } else {
            if (c != 1) os << to_string(c) << "*";
            os << to_string(f.ring(), t->first);
        }
    }
    return os.str();
}

std::string to_string(const Polynomial& f) {
    return to_string(f, OrderSpec::degrevlex(f.ring()));
}

std::string to_string(const Ideal& I, const OrderSpec& o) {
    std::ostringstream os;
    for (size_t i = 0; i < I.gens().size(); ++i) {
        if (i) os << ", ";
        os << to_string(I.gens()[i], o);
    }
    if (I.gens().empty()) os << "0";
    return os.str();
}

std::string to_string(const Ideal& I) {
    return to_string(I, OrderSpec::degrevlex(I.ring()));
}

std::string to_string(const OrderSpec& o) {
    std::ostringstream os;
    os << "matrix([";
    for (size_t r = 0; r < o.matrix().size(); ++r) {
        if (r) os << ",";
        os << "[";
        for (size_t c = 0; c < o.matrix()[r].size(); ++c) {
            if (c) os << ",";
            os << o.matrix()[r][c];
        }
        os << "]";
    }
    os << "])";
    return os.str();
}

} // namespace extracta
