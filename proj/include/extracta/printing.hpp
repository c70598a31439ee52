#ifndef EXTRACTA_PRINTING_HPP
#define EXTRACTA_PRINTING_HPP

#include <string>

#include "extracta/order.hpp"
#include "extracta/polynomial.hpp"

namespace extracta {

std::string to_string(const Rational& q);
std::string to_string(const Ring& ring, const Monomial& m);
/// Terms printed in descending order of `o`; rationals as p/q.
std::string to_string(const Polynomial& f, const OrderSpec& o);
/// Default print order: degrevlex of f's ring.
std::string to_string(const Polynomial& f);
std::string to_string(const Ideal& I);
std::string to_string(const Ideal& I, const OrderSpec& o);
/// Always the explicit matrix form, which re-parses to the same matrix.
std::string to_string(const OrderSpec& o);

} // namespace extracta

#endif
