#include "rangehit/lp.hpp"

#include <stdexcept>

namespace rangehit::lp {

namespace {

// Full tableau: rows = constraints, columns = structural + slack/surplus +
// artificial variables, plus a rhs column. basis[r] is the variable basic in
// row r. The objective row is kept separately and updated on every pivot.
class Tableau {
public:
    Tableau(const Problem& p) : n_(p.num_vars) {
        const int m = static_cast<int>(p.constraints.size());
        rows_.resize(m);
        basis_.resize(m);

        // Count auxiliary columns first so every row can be sized at once.
        int slacks = 0, artificials = 0;
        for (const auto& c : p.constraints) {
            const bool flip = c.rhs < 0;
            Relation rel = c.rel;
            if (flip && rel != Relation::Equal) rel = (rel == Relation::LessEq) ? Relation::GreaterEq : Relation::LessEq;
            if (rel != Relation::Equal) ++slacks;
            if (rel != Relation::LessEq) ++artificials;
        }
        cols_ = n_ + slacks + artificials;
        first_artificial_ = n_ + slacks;

        int next_slack = n_, next_artificial = first_artificial_;
        for (int r = 0; r < m; ++r) {
            const Constraint& c = p.constraints[r];
            if (static_cast<int>(c.coeffs.size()) != n_) throw std::invalid_argument("lp: bad constraint width");
            const bool flip = c.rhs < 0;
            Relation rel = c.rel;
            if (flip && rel != Relation::Equal) rel = (rel == Relation::LessEq) ? Relation::GreaterEq : Relation::LessEq;

            rows_[r].assign(cols_ + 1, Rational(0));
            for (int j = 0; j < n_; ++j) rows_[r][j] = flip ? -c.coeffs[j] : c.coeffs[j];
            rows_[r][cols_] = flip ? -c.rhs : c.rhs;

            switch (rel) {
                case Relation::LessEq:
                    rows_[r][next_slack] = 1;
                    basis_[r] = next_slack++;
                    break;
                case Relation::GreaterEq:
                    rows_[r][next_slack++] = -1;
                    rows_[r][next_artificial] = 1;
                    basis_[r] = next_artificial++;
                    break;
                case Relation::Equal:
                    rows_[r][next_artificial] = 1;
                    basis_[r] = next_artificial++;
                    break;
            }
        }
    }

    // Minimizes sum of artificials. Returns false when that minimum is > 0.
    bool phase1() {
        if (first_artificial_ == cols_) return true;
        obj_.assign(cols_ + 1, Rational(0));
        for (int j = first_artificial_; j < cols_; ++j) obj_[j] = 1;
        price_out_basis();
        run(first_artificial_);
        if (obj_[cols_] != 0) return false;  // obj_[cols_] holds -objective value
        drive_out_artificials();
        return true;
    }

    // Minimizes c over structural variables; artificial columns are barred.
    Status phase2(const std::vector<Rational>& cost) {
        obj_.assign(cols_ + 1, Rational(0));
        for (int j = 0; j < n_; ++j) obj_[j] = cost[j];
        price_out_basis();
        return run(first_artificial_);
    }

    Rational objective_value() const { return -obj_[cols_]; }

    std::vector<Rational> structural_solution() const {
        std::vector<Rational> x(n_, Rational(0));
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (basis_[r] < n_) x[basis_[r]] = rows_[r][cols_];
        return x;
    }

private:
    void price_out_basis() {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational c = obj_[basis_[r]];
            if (c != 0) subtract_scaled(obj_, rows_[r], c);
        }
    }

    // factor is taken by value: callers pass entries of `target` itself, which
    // the loop overwrites.
    static void subtract_scaled(std::vector<Rational>& target, const std::vector<Rational>& row, Rational factor) {
        for (std::size_t j = 0; j < target.size(); ++j)
            if (row[j] != 0) target[j] -= factor * row[j];
    }

    void pivot(int r, int j) {
        const Rational inv = Rational(1) / rows_[r][j];
        for (auto& v : rows_[r]) v *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (static_cast<int>(i) == r || rows_[i][j] == 0) continue;
            subtract_scaled(rows_[i], rows_[r], rows_[i][j]);
        }
        if (obj_[j] != 0) subtract_scaled(obj_, rows_[r], obj_[j]);
        basis_[r] = j;
    }

    // Bland: entering = lowest eligible column; leaving = min ratio, ties by
    // lowest basis variable index.
    Status run(int usable_cols) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < usable_cols; ++j)
                if (obj_[j] < 0) { enter = j; break; }
            if (enter < 0) return Status::Optimal;

            int leave = -1;
            Rational best_ratio;
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                if (rows_[r][enter] <= 0) continue;
                Rational ratio = rows_[r][cols_] / rows_[r][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[leave])) {
                    leave = static_cast<int>(r);
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return Status::Unbounded;
            pivot(leave, enter);
        }
    }

    // After phase 1 an artificial may linger in the basis at value zero;
    // replace it with any non-artificial column, or drop the redundant row.
    void drive_out_artificials() {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (basis_[r] < first_artificial_) continue;
            int j = -1;
            for (int c = 0; c < first_artificial_; ++c)
                if (rows_[r][c] != 0) { j = c; break; }
            if (j >= 0) {
                pivot(static_cast<int>(r), j);
            } else {
                rows_.erase(rows_.begin() + static_cast<long>(r));
                basis_.erase(basis_.begin() + static_cast<long>(r));
                --r;
            }
        }
    }

    int n_ = 0;
    int cols_ = 0;
    int first_artificial_ = 0;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> obj_;
    std::vector<int> basis_;
};

}  // namespace

Result solve(const Problem& p) {
    if (static_cast<int>(p.objective.size()) != p.num_vars) throw std::invalid_argument("lp: bad objective width");
    Result res;
    if (p.num_vars == 0 && p.constraints.empty()) {
        res.status = Status::Optimal;
        res.objective = 0;
        return res;
    }
    Tableau t(p);
    if (!t.phase1()) {
        res.status = Status::Infeasible;
        return res;
    }
    std::vector<Rational> cost = p.objective;
    if (p.sense == Sense::Maximize)
        for (auto& c : cost) c = -c;
    res.status = t.phase2(cost);
    if (res.status != Status::Optimal) return res;
    res.objective = p.sense == Sense::Maximize ? -t.objective_value() : t.objective_value();
    res.solution = t.structural_solution();
    return res;
}

bool feasible(const Problem& p) {
    if (p.constraints.empty()) return true;
    Tableau t(p);
    return t.phase1();
}

}  // namespace rangehit::lp
