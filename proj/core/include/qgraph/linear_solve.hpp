#pragma once

#include <vector>

#include "qgraph/polynomial.hpp"
#include "qgraph/rational_function.hpp"

namespace qgraph {

/// Fraction-free (Bareiss) forward elimination over Q[z]. Every stored entry
/// stays a polynomial; the divisions in the update rule are exact by the
/// Sylvester identity, so no rational-function arithmetic happens until the
/// caller extracts results.
///
/// Rows whose pivot-column entry is zero at a stage are not touched; such a
/// row keeps its old scaling and is brought up to date lazily. level_[i]
/// records how many stages are reflected in row i: its stored entries equal
/// the true Bareiss values at that stage times nothing (they are exactly the
/// stage-level_[i] values). A row at level s is promoted to level t by
/// multiplying with pivot(t-1) and exactly dividing by pivot(s-1). On banded
/// systems this skips nearly all of the matrix.
class FractionFreeEliminator {
public:
    /// matrix: rows x cols, cols >= stages; the first `stages` rows serve as
    /// pivot rows, eliminating the first `stages` columns. Extra rows (index
    /// >= stages) and extra columns ride along, which is how right-hand sides
    /// and border rows are carried.
    FractionFreeEliminator(std::vector<std::vector<Polynomial>> matrix, int stages);

    /// Runs the elimination. Throws std::domain_error if the leading
    /// stages x stages block is singular. Row swaps happen only among pivot
    /// candidates (rows < stages), never with carried rows.
    void forward();

    /// Pivot used at stage k; pivot(stages-1) is det of the leading block up
    /// to the sign of the performed swaps and any row scaling done by the
    /// caller beforehand.
    const Polynomial& pivot(int k) const { return pivots_[static_cast<size_t>(k)]; }
    int swap_count() const { return swaps_; }

    /// Entry after elimination. Pivot rows are frozen at their pivotal stage;
    /// carried rows are materialized to the final stage.
    const Polynomial& entry(int i, int j) const { return m_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

    int rows() const { return static_cast<int>(m_.size()); }
    int cols() const { return m_.empty() ? 0 : static_cast<int>(m_[0].size()); }

private:
    void materialize(int i, int target_level);

    std::vector<std::vector<Polynomial>> m_;
    std::vector<int> level_;
    std::vector<Polynomial> pivots_;
    int stages_;
    int swaps_ = 0;
};

/// Exact solve of a square system over the rational functions, one forward
/// elimination shared by all right-hand sides. a is n x n, each rhs column
/// has length n. Throws std::domain_error on a singular matrix.
std::vector<std::vector<RationalFunction>> solve_linear_system(
    const std::vector<std::vector<RationalFunction>>& a,
    const std::vector<std::vector<RationalFunction>>& rhs_columns);

std::vector<RationalFunction> solve_linear_system(
    const std::vector<std::vector<RationalFunction>>& a,
    const std::vector<RationalFunction>& b);

/// border . a^-1 . rhs_j for each rhs column, computed as a ratio of two
/// bordered determinants read off one fraction-free elimination. No back
/// substitution and only one rational-function reduction per column, which is
/// much cheaper than a full solve when only the form is needed.
std::vector<RationalFunction> bilinear_solve(
    const std::vector<std::vector<Polynomial>>& a,
    const std::vector<std::vector<Polynomial>>& rhs_columns,
    const std::vector<Polynomial>& border);

}  // namespace qgraph
