#ifndef EXTRACTA_ORDER_HPP
#define EXTRACTA_ORDER_HPP

#include <string>
#include <vector>

#include "extracta/polynomial.hpp"
#include "extracta/ring.hpp"

namespace extracta {

enum class Cmp { less, equal, greater };

enum class OrderClass { global, local, mixed };

/// Level data of one matrix column: the row index (0-based) of its first
/// nonzero entry and whether that entry is positive (global) or negative
/// (local).
struct ColumnLevel {
    int var_index;
    int level;
    bool global;
};

/// Matrix-defined semigroup order on the monomials of a ring. The integer
/// matrix must have rank nvars over the rationals, which makes the row-wise
/// comparison a total order. Characteristic vector, column levels and the
/// control-order flag are computed eagerly at validation.
class OrderSpec {
public:
    /// Validates rank and builds the derived data. Throws DomainError with
    /// "not a total order" on rank deficiency.
    static OrderSpec from_matrix(const Ring& ring,
                                 std::vector<std::vector<long long>> rows);

    static OrderSpec lex(const Ring& ring);
    static OrderSpec deglex(const Ring& ring);
    static OrderSpec degrevlex(const Ring& ring);
    static OrderSpec neglex(const Ring& ring);
    static OrderSpec negdegrevlex(const Ring& ring);

    const Ring& ring() const { return ring_; }
    const std::vector<std::vector<long long>>& matrix() const { return rows_; }

    Cmp compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == Cmp::less;
    }
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == Cmp::greater;
    }

    /// Entry i is +1 iff x_i > 1, else -1.
    const std::vector<int>& characteristic() const { return characteristic_; }
    const std::vector<ColumnLevel>& column_levels() const { return levels_; }
    bool is_control() const { return is_control_; }
    bool is_global() const;
    bool is_local() const;
    OrderClass order_class() const;
    /// Indices of variables with local characteristic.
    std::vector<int> local_vars() const;
    std::vector<int> global_vars() const;

    bool same_matrix(const OrderSpec& other) const {
        return ring_ == other.ring_ && rows_ == other.rows_;
    }

private:
    OrderSpec(Ring ring, std::vector<std::vector<long long>> rows);

    Ring ring_;
    std::vector<std::vector<long long>> rows_;
    std::vector<int> characteristic_;
    std::vector<ColumnLevel> levels_;
    bool is_control_ = false;
};

/// Control order with the given characteristic: negdegrevlex rows on the
/// local block stacked above degrevlex rows on the global block. The two
/// index sets must partition the ring's variables.
OrderSpec make_block_order(const Ring& ring, const std::vector<int>& local_vars,
                           const std::vector<int>& global_vars);

/// Block order from arbitrary sub-order matrices on a partition of the
/// variables, stacked in the given part order.
struct BlockPart {
    std::vector<std::vector<long long>> rows; // square matrix on the part's vars
    std::vector<int> var_indices;
};
OrderSpec make_block_order_from_parts(const Ring& ring, const std::vector<BlockPart>& parts);

} // namespace extracta

#endif
