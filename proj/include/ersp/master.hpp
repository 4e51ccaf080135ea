#ifndef ERSP_MASTER_HPP_
#define ERSP_MASTER_HPP_

#include <string>
#include <vector>

#include "ersp/cuts.hpp"
#include "ersp/duals.hpp"
#include "ersp/instance.hpp"
#include "ersp/route.hpp"
#include "ersp/simplex.hpp"

namespace ersp {

struct Column {
    Path path;
    double cost = 0.0;
    int start_depot = 0;
    int end_depot = 0;
    std::vector<int> gamma;  // serve counts per task
    std::vector<int> alpha;  // lm-SRI coefficient per cut row
};

enum class SolveStatus { Optimal, Infeasible, IterationLimit };

struct LpSolution {
    SolveStatus status = SolveStatus::IterationLimit;
    double objective = 0.0;
    std::vector<double> z;  // per column
    DualPrices duals;
    bool artificial_active = false;
};

// Restricted master over the generated columns. Rows: start-depot equalities
// (= v_start), end-depot covers (>= v_end), task equalities (= 1), cut rows
// (<= 1). Artificial penalty columns keep every row coverable.
class RmpModel {
public:
    RmpModel(const Instance& inst);

    const Instance& instance() const { return *inst_; }
    const std::vector<Column>& columns() const { return columns_; }
    const std::vector<Cut>& cuts() const { return cuts_; }

    // Duplicate columns (same node sequence and charging plan) are ignored;
    // returns the number actually added.
    int add_columns(const std::vector<Path>& paths);
    void add_cut_row(const Cut& cut);

    // Drop columns not satisfying `keep`; used when an ng expansion filters
    // the pool.
    void filter_columns(const std::vector<char>& keep);

    LpSolution solve_lp(long max_iterations = 500000) const;

    double artificial_penalty() const { return penalty_; }
    std::string dump() const;  // plain-text row/column listing

private:
    const Instance* inst_;
    std::vector<Column> columns_;
    std::vector<Cut> cuts_;
    double penalty_ = 0.0;

    Column make_column(const Path& path) const;
    bool duplicate(const Column& col) const;
    DenseLp build_lp() const;
    friend struct PoolBnb;
};

struct IntegerSolution {
    bool found = false;
    bool proven_optimal = false;  // within the pool
    bool artificial_active = false;
    double objective = 0.0;
    std::vector<double> z;  // integral values per column
    long nodes_explored = 0;
};

// Branch-and-bound over the pooled columns (LP bounding, branching on the
// most fractional variable). node_limit 0 attempts plain rounding only.
IntegerSolution restore_integrality(const RmpModel& model, long node_limit = 20000);

}  // namespace ersp

#endif  // ERSP_MASTER_HPP_
