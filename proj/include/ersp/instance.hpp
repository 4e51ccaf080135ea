#ifndef ERSP_INSTANCE_HPP_
#define ERSP_INSTANCE_HPP_

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ersp/bits.hpp"

namespace ersp {

enum class NodeKind { Depot, Task, Charger };

// Operations graph with dense node indices: depots first, then tasks, then
// chargers. Arc metrics are stored as full n*n row-major matrices.
class Instance {
public:
    int n_depots = 0;
    int n_tasks = 0;
    int n_chargers = 0;

    std::vector<std::string> ids;                 // index -> external id
    std::vector<std::array<double, 2>> coords;    // may be empty for matrix-only instances
    std::vector<double> time_m, cost_m, batt_m;   // n*n row-major
    double B = 1.0;                               // battery capacity
    double T = 1.0;                               // planning horizon
    double mu_rate = 1.0;                         // depletion per distance
    std::vector<double> delta;                    // per node, 0 for non-chargers
    std::vector<int> v_start;                     // per depot (dense depot order)
    std::vector<int> v_end;                       // per depot
    bool explicit_matrices = false;               // matrices came from file, not coords

    int n() const { return n_depots + n_tasks + n_chargers; }
    bool is_depot(int i) const { return i < n_depots; }
    bool is_task(int i) const { return i >= n_depots && i < n_depots + n_tasks; }
    bool is_charger(int i) const { return i >= n_depots + n_tasks; }
    NodeKind kind(int i) const {
        if (is_depot(i)) return NodeKind::Depot;
        return is_task(i) ? NodeKind::Task : NodeKind::Charger;
    }
    int first_task() const { return n_depots; }
    int first_charger() const { return n_depots + n_tasks; }
    int task_index(int node) const { return node - n_depots; }

    double t(int i, int j) const { return time_m[i * n() + j]; }
    double c(int i, int j) const { return cost_m[i * n() + j]; }
    double b(int i, int j) const { return batt_m[i * n() + j]; }

    // distinct charging-cost levels sorted ascending; level_of maps a charger
    // to its 1-based level index
    std::vector<double> delta_levels() const;
    int level_of(int charger, const std::vector<double>& levels) const;

    int nearest_charger(int from) const;  // -1 if no chargers
    double total_arc_cost() const;

    void derive_matrices_from_coords();   // Euclidean t=c=dist, b=mu*dist
    void check_basic() const;             // throws on structural misuse
};

// Diagnostic validation: returns human-readable violations, empty if valid.
std::vector<std::string> validate_instance(const Instance& inst, double tol = 1e-12);

// JSON file round trip. load throws std::runtime_error naming the offending
// field on malformed input.
void save_instance(const Instance& inst, const std::string& path);
Instance load_instance(const std::string& path);

std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

bool instances_equal(const Instance& a, const Instance& b, double tol = 0.0);

// Generation parameters (rectangular lattice world).
struct GenParams {
    int n_tasks = 8;
    int area_width = 3;       // lattice cells
    int area_height = 3;
    double T_over_B = 4.0;
    double mu_rate = 0.6;
    int n_charge_levels = 1;  // D distinct delta values
    int fleet = 0;            // K; 0 -> ceil(n_tasks / 4)
    uint64_t seed = 1;
};

// Depots at the four rectangle corners, chargers at interior lattice points,
// tasks uniform in the rectangle; t = c = Euclidean distance, b = mu * dist,
// B = 1, T = T_over_B * B. delta drawn from D evenly spaced levels assigned
// round-robin to chargers. Pure function of params.
Instance generate_instance(const GenParams& params);

}  // namespace ersp

#endif  // ERSP_INSTANCE_HPP_
