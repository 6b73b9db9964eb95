#ifndef IDXLAB_LINALG_HPP
#define IDXLAB_LINALG_HPP

// Exact Gaussian elimination over a finite field.  RowSpace accumulates an
// echelon basis one row at a time, which keeps rank computations incremental
// when relation matrices are built generator by generator.

#include <map>
#include <vector>

#include "fields.hpp"
#include "poly.hpp"

namespace idxlab {

class RowSpace {
public:
    RowSpace(const Field* f, std::size_t cols) : f_(f), cols_(cols) {}

    // returns true when the row enlarged the span
    bool insert(std::vector<Fq> row) {
        if (row.size() != cols_) fail(errc::invariant_violation, "row width mismatch");
        std::size_t j = 0;
        while (j < cols_) {
            if (row[j].is_zero()) { ++j; continue; }
            auto it = rows_.find(j);
            if (it == rows_.end()) {
                Fq inv = row[j].inv();
                for (std::size_t i = j; i < cols_; ++i) row[i] *= inv;
                rows_.emplace(j, std::move(row));
                return true;
            }
            Fq c = row[j];
            const auto& base = it->second;
            for (std::size_t i = j; i < cols_; ++i) row[i] -= c * base[i];
        }
        return false;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    const Field* f_;
    std::size_t cols_;
    std::map<std::size_t, std::vector<Fq>> rows_; // pivot column -> normalized row
};

inline std::size_t matrix_rank(const Field* f, const std::vector<std::vector<Fq>>& m) {
    if (m.empty()) return 0;
    RowSpace rs(f, m[0].size());
    for (const auto& row : m) rs.insert(row);
    return rs.rank();
}

// rank of the Jacobian matrix of the generators at a point on their common
// zero locus; the point must lie on the locus
inline std::size_t jacobian_rank_at(const std::vector<Poly<Fq>>& gens, const std::vector<Fq>& point,
                                    const Field* f) {
    std::vector<std::vector<Fq>> m;
    for (const auto& g : gens) {
        if (!g.eval(point).is_zero())
            fail(errc::point_not_on_variety, "jacobian point is off the zero locus");
        std::vector<Fq> row;
        for (std::size_t i = 0; i < g.vars().size(); ++i) row.push_back(g.derivative(i).eval(point));
        m.push_back(std::move(row));
    }
    return matrix_rank(f, m);
}

} // namespace idxlab

#endif
