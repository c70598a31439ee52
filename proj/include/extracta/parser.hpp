#ifndef EXTRACTA_PARSER_HPP
#define EXTRACTA_PARSER_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extracta/decomp.hpp"
#include "extracta/errors.hpp"
#include "extracta/order.hpp"
#include "extracta/polynomial.hpp"

namespace extracta {

/// Parsed contents of one input file: a single ring declaration followed
/// by named ideals, orders, point sets and polynomials. Statements are
/// `;`-terminated, `#` starts a comment.
struct InputFile {
    std::optional<Ring> ring;
    std::map<std::string, Ideal> ideals;
    std::map<std::string, OrderSpec> orders;
    std::map<std::string, RationalPointSet> point_sets;
    std::map<std::string, Polynomial> polys;
    std::vector<std::string> ideal_names;  // declaration order
    std::vector<std::string> order_names;
    std::vector<std::string> point_set_names;
    std::vector<std::string> poly_names;
};

InputFile parse_input(std::string_view text);

/// One polynomial in the shared expression grammar.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

/// One order spec: lex | deglex | degrevlex | neglex | negdegrevlex |
/// block(<spec>: <vars>; ...) | matrix([[..],..]).
OrderSpec parse_order_spec(std::string_view text, const Ring& ring);

/// Decomposition file: a `provenance:` line, then one `component:` block
/// per component with one generator per line, each optionally followed by
/// a `radical:` block. Verified against `ideal` on load.
PrimaryDecomposition parse_decomposition(std::string_view text, const Ring& ring,
                                         const Ideal& ideal);

std::string format_decomposition(const PrimaryDecomposition& D);

} // namespace extracta

#endif
