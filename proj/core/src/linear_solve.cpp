#include "qgraph/linear_solve.hpp"

#include <stdexcept>
#include <utility>

namespace qgraph {

namespace {

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Polynomial g = poly_gcd(a, b);
    return (a * exact_div(b, g)).primitive_part();
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a == 0) return abs_rational(b);
    if (b == 0) return abs_rational(a);
    mpz_class num, den;
    mpz_gcd(num.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    Rational g(num, den);
    g.canonicalize();
    return g;
}

/// Scale an equation so its coefficients are coprime integers. Equations may
/// be rescaled freely: the solution and any determinant ratio both survive.
void make_row_primitive(std::vector<Polynomial>& row) {
    Rational g(0);
    for (const auto& p : row) {
        if (p.is_zero()) continue;
        g = rational_gcd(g, p.content());
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    Rational inv = Rational(1) / g;
    for (auto& p : row) p = p.scaled(inv);
}

std::vector<Polynomial> clear_row(const std::vector<const RationalFunction*>& row) {
    Polynomial lcm(1);
    for (const auto* rf : row) {
        if (rf->is_zero()) continue;
        lcm = poly_lcm(lcm, rf->denominator());
    }
    std::vector<Polynomial> out;
    out.reserve(row.size());
    for (const auto* rf : row) {
        if (rf->is_zero()) {
            out.emplace_back();
            continue;
        }
        out.push_back(rf->numerator() * exact_div(lcm, rf->denominator()));
    }
    make_row_primitive(out);
    return out;
}

}  // namespace

FractionFreeEliminator::FractionFreeEliminator(std::vector<std::vector<Polynomial>> matrix, int stages)
    : m_(std::move(matrix)), stages_(stages) {
    if (stages_ <= 0 || stages_ > rows() || stages_ > cols())
        throw std::invalid_argument("FractionFreeEliminator: bad stage count");
    level_.assign(m_.size(), 0);
    pivots_.reserve(static_cast<size_t>(stages_));
}

void FractionFreeEliminator::materialize(int i, int target_level) {
    int s = level_[static_cast<size_t>(i)];
    if (s == target_level) return;
    // Entries at level s scale to level t by pivot(t-1)/pivot(s-1); the
    // division is exact because entries at every level are true minors.
    const Polynomial& mul = pivots_[static_cast<size_t>(target_level - 1)];
    auto& row = m_[static_cast<size_t>(i)];
    if (s == 0) {
        for (auto& e : row)
            if (!e.is_zero()) e = e * mul;
    } else {
        const Polynomial& div = pivots_[static_cast<size_t>(s - 1)];
        for (auto& e : row)
            if (!e.is_zero()) e = exact_div(e * mul, div);
    }
    level_[static_cast<size_t>(i)] = target_level;
}

void FractionFreeEliminator::forward() {
    const int r = rows();
    const int c = cols();
    for (int k = 0; k < stages_; ++k) {
        // Zero entries are zero at every level, so the pivot hunt can look at
        // stored values before any materialization.
        if (m_[static_cast<size_t>(k)][static_cast<size_t>(k)].is_zero()) {
            int found = -1;
            for (int i = k + 1; i < stages_; ++i) {
                if (!m_[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero()) {
                    found = i;
                    break;
                }
            }
            if (found < 0) throw std::domain_error("singular system");
            std::swap(m_[static_cast<size_t>(k)], m_[static_cast<size_t>(found)]);
            std::swap(level_[static_cast<size_t>(k)], level_[static_cast<size_t>(found)]);
            ++swaps_;
        }
        if (k > 0) materialize(k, k);
        pivots_.push_back(m_[static_cast<size_t>(k)][static_cast<size_t>(k)]);
        const Polynomial& piv = pivots_.back();
        const auto& prow = m_[static_cast<size_t>(k)];
        for (int i = k + 1; i < r; ++i) {
            auto& row = m_[static_cast<size_t>(i)];
            if (row[static_cast<size_t>(k)].is_zero()) continue;
            materialize(i, k);
            const Polynomial elim = std::move(row[static_cast<size_t>(k)]);
            row[static_cast<size_t>(k)] = Polynomial();
            for (int j = k + 1; j < c; ++j) {
                const bool pz = prow[static_cast<size_t>(j)].is_zero();
                if (row[static_cast<size_t>(j)].is_zero() && pz) continue;
                Polynomial num = piv * row[static_cast<size_t>(j)];
                if (!pz) num -= elim * prow[static_cast<size_t>(j)];
                if (num.is_zero()) {
                    row[static_cast<size_t>(j)] = Polynomial();
                } else {
                    row[static_cast<size_t>(j)] = (k == 0) ? std::move(num)
                                                           : exact_div(num, pivots_[static_cast<size_t>(k - 1)]);
                }
            }
            level_[static_cast<size_t>(i)] = k + 1;
        }
    }
    // Carried rows below the pivot block may still be lazy; bring them to the
    // final stage so entry() reads consistently. Pivot rows stay frozen.
    for (int i = stages_; i < r; ++i) materialize(i, stages_);
}

std::vector<std::vector<RationalFunction>> solve_linear_system(
    const std::vector<std::vector<RationalFunction>>& a,
    const std::vector<std::vector<RationalFunction>>& rhs_columns) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return std::vector<std::vector<RationalFunction>>(rhs_columns.size());
    const int m = static_cast<int>(rhs_columns.size());
    std::vector<std::vector<Polynomial>> work;
    work.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a[static_cast<size_t>(i)].size()) != n)
            throw std::invalid_argument("solve_linear_system: matrix not square");
        std::vector<const RationalFunction*> row;
        row.reserve(static_cast<size_t>(n + m));
        for (int j = 0; j < n; ++j) row.push_back(&a[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        for (int j = 0; j < m; ++j) {
            if (static_cast<int>(rhs_columns[static_cast<size_t>(j)].size()) != n)
                throw std::invalid_argument("solve_linear_system: rhs length mismatch");
            row.push_back(&rhs_columns[static_cast<size_t>(j)][static_cast<size_t>(i)]);
        }
        work.push_back(clear_row(row));
    }
    FractionFreeEliminator elim(std::move(work), n);
    elim.forward();
    // Every row is the original equation rescaled, so ordinary back
    // substitution over the rational functions recovers the exact solution.
    std::vector<std::vector<RationalFunction>> out(
        static_cast<size_t>(m), std::vector<RationalFunction>(static_cast<size_t>(n)));
    for (int col = 0; col < m; ++col) {
        auto& x = out[static_cast<size_t>(col)];
        for (int i = n - 1; i >= 0; --i) {
            RationalFunction acc(elim.entry(i, n + col));
            for (int j = i + 1; j < n; ++j) {
                const Polynomial& mij = elim.entry(i, j);
                if (mij.is_zero() || x[static_cast<size_t>(j)].is_zero()) continue;
                acc -= RationalFunction(mij) * x[static_cast<size_t>(j)];
            }
            x[static_cast<size_t>(i)] = acc / RationalFunction(elim.entry(i, i));
        }
    }
    return out;
}

std::vector<RationalFunction> solve_linear_system(
    const std::vector<std::vector<RationalFunction>>& a,
    const std::vector<RationalFunction>& b) {
    return solve_linear_system(a, std::vector<std::vector<RationalFunction>>{b})[0];
}

std::vector<RationalFunction> bilinear_solve(
    const std::vector<std::vector<Polynomial>>& a,
    const std::vector<std::vector<Polynomial>>& rhs_columns,
    const std::vector<Polynomial>& border) {
    const int n = static_cast<int>(a.size());
    const int m = static_cast<int>(rhs_columns.size());
    if (n == 0) return std::vector<RationalFunction>(static_cast<size_t>(m));
    // Bordered matrix [[A, B], [border, 0]]. After n stages the border row's
    // entry in rhs column j is det [[A, b_j], [c, 0]] and pivot(n-1) is det A,
    // both under the same swaps and row scalings, so -entry/pivot equals
    // c . A^-1 . b_j.
    std::vector<std::vector<Polynomial>> work;
    work.reserve(static_cast<size_t>(n) + 1);
    for (int i = 0; i < n; ++i) {
        std::vector<Polynomial> row = a[static_cast<size_t>(i)];
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("bilinear_solve: matrix not square");
        for (int j = 0; j < m; ++j) row.push_back(rhs_columns[static_cast<size_t>(j)][static_cast<size_t>(i)]);
        make_row_primitive(row);
        work.push_back(std::move(row));
    }
    {
        // The border row appears in the numerator determinant only, so unlike
        // the system rows it must keep its scale.
        std::vector<Polynomial> brow = border;
        if (static_cast<int>(brow.size()) != n)
            throw std::invalid_argument("bilinear_solve: border length mismatch");
        brow.resize(static_cast<size_t>(n + m));
        work.push_back(std::move(brow));
    }
    FractionFreeEliminator elim(std::move(work), n);
    elim.forward();
    std::vector<RationalFunction> out;
    out.reserve(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j)
        out.emplace_back(-elim.entry(n, n + j), elim.pivot(n - 1));
    return out;
}

}  // namespace qgraph
