#include "extracta/order.hpp"

#include <algorithm>
#include <stdexcept>

#include <gmpxx.h>

#include "extracta/errors.hpp"

namespace extracta {

namespace {

/// Exact rank over the rationals via Gaussian elimination on mpq entries.
int rational_rank(const std::vector<std::vector<long long>>& rows, int ncols) {
    std::vector<std::vector<mpq_class>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<mpq_class> row;
        row.reserve(ncols);
        for (long long v : r) row.emplace_back(static_cast<long>(v));
        m.push_back(std::move(row));
    }
    int rank = 0;
    int nrows = static_cast<int>(m.size());
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int pivot = -1;
        for (int r = rank; r < nrows; ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < nrows; ++r) {
            if (m[r][col] == 0) continue;
            mpq_class factor = m[r][col] / m[rank][col];
            for (int c = col; c < ncols; ++c) m[r][c] -= factor * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

} // namespace

OrderSpec::OrderSpec(Ring ring, std::vector<std::vector<long long>> rows)
    : ring_(std::move(ring)), rows_(std::move(rows)) {
    const int n = ring_.nvars();
    // Column levels and characteristic from the first nonzero entry per
    // column, scanning rows top-down.
    characteristic_.assign(n, 0);
    for (int col = 0; col < n; ++col) {
        for (int row = 0; row < static_cast<int>(rows_.size()); ++row) {
            long long v = rows_[row][col];
            if (v != 0) {
                levels_.push_back({col, row, v > 0});
                characteristic_[col] = v > 0 ? 1 : -1;
                break;
            }
        }
    }
    // Thm-3.8 criterion: every local column's level strictly below every
    // global column's level; vacuous for pure local / pure global.
    int max_local = -1;
    int min_global = static_cast<int>(rows_.size());
    for (const auto& cl : levels_) {
        if (cl.global)
            min_global = std::min(min_global, cl.level);
        else
            max_local = std::max(max_local, cl.level);
    }
    is_control_ = max_local < min_global;
}

OrderSpec OrderSpec::from_matrix(const Ring& ring,
                                 std::vector<std::vector<long long>> rows) {
    const int n = ring.nvars();
    if (rows.empty()) throw DomainError("order matrix is empty");
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != n)
            throw std::invalid_argument("order matrix row length does not match ring");
    if (rational_rank(rows, n) != n)
        throw DomainError("order matrix is not a total order (rank < number of variables)");
    return OrderSpec(ring, std::move(rows));
}

OrderSpec OrderSpec::lex(const Ring& ring) {
    const int n = ring.nvars();
    std::vector<std::vector<long long>> rows(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) rows[i][i] = 1;
    return from_matrix(ring, std::move(rows));
}

OrderSpec OrderSpec::deglex(const Ring& ring) {
    const int n = ring.nvars();
    std::vector<std::vector<long long>> rows;
    rows.emplace_back(n, 1);
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<long long> r(n, 0);
        r[i] = 1;
        rows.push_back(std::move(r));
    }
    return from_matrix(ring, std::move(rows));
}

OrderSpec OrderSpec::degrevlex(const Ring& ring) {
    const int n = ring.nvars();
    std::vector<std::vector<long long>> rows;
    rows.emplace_back(n, 1);
    for (int i = n - 1; i >= 1; --i) {
        std::vector<long long> r(n, 0);
        r[i] = -1;
        rows.push_back(std::move(r));
    }
    return from_matrix(ring, std::move(rows));
}

OrderSpec OrderSpec::neglex(const Ring& ring) {
    const int n = ring.nvars();
    std::vector<std::vector<long long>> rows(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) rows[i][i] = -1;
    return from_matrix(ring, std::move(rows));
}

OrderSpec OrderSpec::negdegrevlex(const Ring& ring) {
    const int n = ring.nvars();
    std::vector<std::vector<long long>> rows;
    rows.emplace_back(n, -1);
    for (int i = n - 1; i >= 1; --i) {
        std::vector<long long> r(n, 0);
        r[i] = -1;
        rows.push_back(std::move(r));
    }
    return from_matrix(ring, std::move(rows));
}

Cmp OrderSpec::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != ring_.nvars() || b.nvars() != ring_.nvars())
        throw std::invalid_argument("monomial dimension does not match order's ring");
    if (a == b) return Cmp::equal;
    for (const auto& row : rows_) {
        __int128 s = 0;
        for (int i = 0; i < ring_.nvars(); ++i)
            s += static_cast<__int128>(row[i]) * (a.exp(i) - b.exp(i));
        if (s > 0) return Cmp::greater;
        if (s < 0) return Cmp::less;
    }
    // Full rank guarantees M*a = M*b implies a = b.
    return Cmp::equal;
}

bool OrderSpec::is_global() const {
    return std::all_of(characteristic_.begin(), characteristic_.end(),
                       [](int c) { return c > 0; });
}

bool OrderSpec::is_local() const {
    return std::all_of(characteristic_.begin(), characteristic_.end(),
                       [](int c) { return c < 0; });
}

OrderClass OrderSpec::order_class() const {
    if (is_global()) return OrderClass::global;
    if (is_local()) return OrderClass::local;
    return OrderClass::mixed;
}

std::vector<int> OrderSpec::local_vars() const {
    std::vector<int> out;
    for (int i = 0; i < ring_.nvars(); ++i)
        if (characteristic_[i] < 0) out.push_back(i);
    return out;
}

std::vector<int> OrderSpec::global_vars() const {
    std::vector<int> out;
    for (int i = 0; i < ring_.nvars(); ++i)
        if (characteristic_[i] > 0) out.push_back(i);
    return out;
}

OrderSpec make_block_order_from_parts(const Ring& ring,
                                      const std::vector<BlockPart>& parts) {
    const int n = ring.nvars();
    std::vector<bool> covered(n, false);
    for (const auto& part : parts)
        for (int v : part.var_indices) {
            if (v < 0 || v >= n || covered[v])
                throw std::invalid_argument("block parts must partition the ring's variables");
            covered[v] = true;
        }
    if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
        throw std::invalid_argument("block parts must partition the ring's variables");

    std::vector<std::vector<long long>> rows;
    for (const auto& part : parts) {
        const int k = static_cast<int>(part.var_indices.size());
        for (const auto& sub_row : part.rows) {
            if (static_cast<int>(sub_row.size()) != k)
                throw std::invalid_argument("block sub-matrix row length mismatch");
            std::vector<long long> row(n, 0);
            for (int j = 0; j < k; ++j) row[part.var_indices[j]] = sub_row[j];
            rows.push_back(std::move(row));
        }
    }
    return OrderSpec::from_matrix(ring, std::move(rows));
}

OrderSpec make_block_order(const Ring& ring, const std::vector<int>& local_vars,
                           const std::vector<int>& global_vars) {
    auto sub_rows = [](int k, long long deg_sign) {
        std::vector<std::vector<long long>> rows;
        if (k == 0) return rows;
        rows.emplace_back(k, deg_sign);
        for (int i = k - 1; i >= 1; --i) {
            std::vector<long long> r(k, 0);
            r[i] = -1;
            rows.push_back(std::move(r));
        }
        return rows;
    };
    std::vector<BlockPart> parts;
    if (!local_vars.empty())
        parts.push_back({sub_rows(static_cast<int>(local_vars.size()), -1), local_vars});
    if (!global_vars.empty())
        parts.push_back({sub_rows(static_cast<int>(global_vars.size()), 1), global_vars});
    if (parts.empty())
        throw std::invalid_argument("block order needs at least one variable");
    return make_block_order_from_parts(ring, parts);
}

} // namespace extracta
