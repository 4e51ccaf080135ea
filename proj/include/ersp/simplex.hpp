#ifndef ERSP_SIMPLEX_HPP_
#define ERSP_SIMPLEX_HPP_

#include <vector>

namespace ersp {

enum class RowSense { LE, GE, EQ };

enum class LpStatus { Optimal, Infeasible, IterationLimit, Unbounded };

// Small dense LP: min c'x s.t. A x {<=,>=,=} b, x >= 0.
struct DenseLp {
    std::vector<RowSense> sense;
    std::vector<double> rhs;
    std::vector<double> obj;
    std::vector<std::vector<double>> cols;  // dense, one vector of length n_rows per column

    int n_rows() const { return static_cast<int>(rhs.size()); }
    int n_cols() const { return static_cast<int>(cols.size()); }

    int add_row(RowSense s, double b);
    int add_column(double cost, const std::vector<std::pair<int, double>>& entries);
};

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    double objective = 0.0;
    std::vector<double> x;      // structural variables only
    std::vector<double> duals;  // per row, original orientation
};

// Two-phase dense revised simplex with Bland's rule as the anti-cycling
// guard. Deterministic given the model.
LpResult solve_dense_lp(const DenseLp& lp, long max_iterations = 200000);

}  // namespace ersp

#endif  // ERSP_SIMPLEX_HPP_
