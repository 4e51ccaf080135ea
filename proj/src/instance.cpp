#include "ersp/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ersp {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<double> Instance::delta_levels() const {
    std::vector<double> levels;
    for (int i = first_charger(); i < n(); ++i) levels.push_back(delta[i]);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end(),
                             [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                 levels.end());
    return levels;
}

int Instance::level_of(int charger, const std::vector<double>& levels) const {
    for (int d = 0; d < static_cast<int>(levels.size()); ++d)
        if (std::abs(delta[charger] - levels[d]) < 1e-12) return d + 1;
    throw std::logic_error("charger delta not among levels");
}

int Instance::nearest_charger(int from) const {
    int best = -1;
    double best_b = 0.0;
    for (int r = first_charger(); r < n(); ++r) {
        if (r == from) continue;
        if (best < 0 || b(from, r) < best_b) {
            best = r;
            best_b = b(from, r);
        }
    }
    return best;
}

double Instance::total_arc_cost() const {
    double s = 0.0;
    for (int i = 0; i < n(); ++i)
        for (int j = 0; j < n(); ++j)
            if (i != j) s += c(i, j);
    return s;
}

void Instance::derive_matrices_from_coords() {
    const int nn = n();
    time_m.assign(nn * nn, 0.0);
    cost_m.assign(nn * nn, 0.0);
    batt_m.assign(nn * nn, 0.0);
    for (int i = 0; i < nn; ++i) {
        for (int j = 0; j < nn; ++j) {
            if (i == j) continue;
            const double dx = coords[i][0] - coords[j][0];
            const double dy = coords[i][1] - coords[j][1];
            const double d = std::sqrt(dx * dx + dy * dy);
            time_m[i * nn + j] = d;
            cost_m[i * nn + j] = d;
            batt_m[i * nn + j] = mu_rate * d;
        }
    }
}

void Instance::check_basic() const {
    if (n() > kMaxNodes) throw std::runtime_error("instance exceeds node limit");
    if (static_cast<int>(ids.size()) != n()) throw std::runtime_error("ids size mismatch");
    if (static_cast<int>(delta.size()) != n()) throw std::runtime_error("delta size mismatch");
    if (static_cast<int>(v_start.size()) != n_depots || static_cast<int>(v_end.size()) != n_depots)
        throw std::runtime_error("depot requirement size mismatch");
    if (static_cast<int>(time_m.size()) != n() * n()) throw std::runtime_error("matrix size mismatch");
}

std::vector<std::string> validate_instance(const Instance& inst, double tol) {
    std::vector<std::string> out;
    const int nn = inst.n();
    auto add = [&out](const std::string& s) { out.push_back(s); };

    if (inst.n_tasks < 1) add("tasks empty");
    if (inst.n_depots < 1) add("depots empty");
    if (inst.B <= 0) add("B not positive");
    if (inst.T <= 0) add("T not positive");
    for (int i = inst.first_charger(); i < nn; ++i)
        if (inst.delta[i] <= 0) add("delta(" + inst.ids[i] + ") not positive");

    long start_total = 0, end_total = 0;
    for (int j = 0; j < inst.n_depots; ++j) {
        if (inst.v_start[j] < 0) add("v_start(" + inst.ids[j] + ") negative");
        if (inst.v_end[j] < 0) add("v_end(" + inst.ids[j] + ") negative");
        start_total += inst.v_start[j];
        end_total += inst.v_end[j];
    }
    if (start_total < 1) add("total v_start < 1");
    if (start_total < end_total) add("total v_start < total v_end");

    std::set<std::string> seen;
    for (const auto& id : inst.ids)
        if (!seen.insert(id).second) add("duplicate node id " + id);

    struct Metric {
        const char* name;
        const std::vector<double>* m;
    };
    const Metric metrics[] = {{"time", &inst.time_m}, {"cost", &inst.cost_m}, {"battery_use", &inst.batt_m}};
    for (const auto& metric : metrics) {
        const auto& m = *metric.m;
        for (int i = 0; i < nn; ++i)
            for (int j = 0; j < nn; ++j) {
                if (i == j) continue;
                if (m[i * nn + j] <= 0)
                    add(std::string(metric.name) + "(" + inst.ids[i] + "," + inst.ids[j] + ") not positive");
            }
        for (int a = 0; a < nn; ++a)
            for (int b = 0; b < nn; ++b) {
                if (a == b) continue;
                for (int c = 0; c < nn; ++c) {
                    if (c == a || c == b) continue;
                    if (m[a * nn + c] > m[a * nn + b] + m[b * nn + c] + tol) {
                        add(std::string(metric.name) + " triangle violation (" + inst.ids[a] + "," +
                            inst.ids[b] + "," + inst.ids[c] + ")");
                    }
                }
            }
    }
    return out;
}

Instance generate_instance(const GenParams& p) {
    if (p.n_tasks < 1) throw std::invalid_argument("n_tasks >= 1");
    if (p.area_width < 1 || p.area_height < 1) throw std::invalid_argument("area must be non-degenerate");
    if (p.n_charge_levels < 1) throw std::invalid_argument("n_charge_levels >= 1");
    if (p.T_over_B <= 0) throw std::invalid_argument("T_over_B > 0");
    if (p.mu_rate <= 0) throw std::invalid_argument("mu_rate > 0");

    const int n_chargers = (p.area_width - 1) * (p.area_height - 1);
    if (p.n_charge_levels > std::max(n_chargers, 0) && n_chargers > 0)
        throw std::invalid_argument("n_charge_levels exceeds charger count");
    if (n_chargers == 0 && p.n_charge_levels > 0 && p.n_charge_levels != 1)
        throw std::invalid_argument("n_charge_levels exceeds charger count");

    Instance inst;
    inst.n_depots = 4;
    inst.n_tasks = p.n_tasks;
    inst.n_chargers = n_chargers;
    inst.B = 1.0;
    inst.T = p.T_over_B * inst.B;
    inst.mu_rate = p.mu_rate;

    const double W = p.area_width, H = p.area_height;
    inst.coords.push_back({0.0, 0.0});
    inst.coords.push_back({W, 0.0});
    inst.coords.push_back({0.0, H});
    inst.coords.push_back({W, H});
    for (int d = 0; d < 4; ++d) inst.ids.push_back("d" + std::to_string(d));

    SplitMix64 rng(p.seed);
    for (int i = 0; i < p.n_tasks; ++i) {
        inst.ids.push_back("t" + std::to_string(i));
        inst.coords.push_back({rng.uniform(0.0, W), rng.uniform(0.0, H)});
    }
    for (int x = 1; x < p.area_width; ++x)
        for (int y = 1; y < p.area_height; ++y) {
            inst.ids.push_back("r" + std::to_string(inst.ids.size() - 4 - p.n_tasks));
            inst.coords.push_back({static_cast<double>(x), static_cast<double>(y)});
        }

    if (inst.n() > kMaxNodes) throw std::invalid_argument("instance exceeds node limit");

    inst.delta.assign(inst.n(), 0.0);
    const int D = p.n_charge_levels;
    for (int k = 0; k < n_chargers; ++k) {
        double level = 1.0;
        if (D > 1) level = 0.5 + 1.5 * static_cast<double>(k % D) / (D - 1);
        inst.delta[inst.first_charger() + k] = level;
    }

    const int K = p.fleet > 0 ? p.fleet : std::max(1, (p.n_tasks + 3) / 4);
    inst.v_start.assign(4, 0);
    inst.v_end.assign(4, 0);
    for (int k = 0; k < K; ++k) inst.v_start[k % 4]++;

    inst.derive_matrices_from_coords();
    inst.check_basic();
    return inst;
}

static ordered_json matrix_to_json(const Instance& inst, const std::vector<double>& m) {
    ordered_json out = ordered_json::object();
    const int nn = inst.n();
    for (int i = 0; i < nn; ++i) {
        ordered_json row = ordered_json::object();
        for (int j = 0; j < nn; ++j)
            if (i != j) row[inst.ids[j]] = m[i * nn + j];
        out[inst.ids[i]] = std::move(row);
    }
    return out;
}

std::string instance_to_json(const Instance& inst) {
    ordered_json j;
    auto names = [&inst](int begin, int end) {
        std::vector<std::string> v;
        for (int i = begin; i < end; ++i) v.push_back(inst.ids[i]);
        return v;
    };
    j["depots"] = names(0, inst.n_depots);
    j["tasks"] = names(inst.first_task(), inst.first_charger());
    j["chargers"] = names(inst.first_charger(), inst.n());
    if (!inst.coords.empty()) {
        ordered_json co = ordered_json::object();
        for (int i = 0; i < inst.n(); ++i) co[inst.ids[i]] = {inst.coords[i][0], inst.coords[i][1]};
        j["coords"] = std::move(co);
    }
    j["B"] = inst.B;
    j["T"] = inst.T;
    j["mu_rate"] = inst.mu_rate;
    ordered_json dj = ordered_json::object();
    for (int i = inst.first_charger(); i < inst.n(); ++i) dj[inst.ids[i]] = inst.delta[i];
    j["delta"] = std::move(dj);
    ordered_json vs = ordered_json::object(), ve = ordered_json::object();
    for (int i = 0; i < inst.n_depots; ++i) {
        vs[inst.ids[i]] = inst.v_start[i];
        ve[inst.ids[i]] = inst.v_end[i];
    }
    j["v_start"] = std::move(vs);
    j["v_end"] = std::move(ve);
    if (inst.explicit_matrices) {
        j["time"] = matrix_to_json(inst, inst.time_m);
        j["cost"] = matrix_to_json(inst, inst.cost_m);
        j["battery_use"] = matrix_to_json(inst, inst.batt_m);
    }
    return j.dump(2) + "\n";
}

namespace {

const json& require(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw std::runtime_error(std::string("instance file missing field \"") + key + "\"");
    return *it;
}

double require_number(const json& j, const std::string& context) {
    if (!j.is_number()) throw std::runtime_error("expected number at " + context);
    return j.get<double>();
}

}  // namespace

Instance instance_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("instance parse error: ") + e.what());
    }

    Instance inst;
    std::vector<std::string> depots = require(j, "depots").get<std::vector<std::string>>();
    std::vector<std::string> tasks = require(j, "tasks").get<std::vector<std::string>>();
    std::vector<std::string> chargers =
        j.contains("chargers") ? j["chargers"].get<std::vector<std::string>>() : std::vector<std::string>{};
    inst.n_depots = static_cast<int>(depots.size());
    inst.n_tasks = static_cast<int>(tasks.size());
    inst.n_chargers = static_cast<int>(chargers.size());
    for (const auto& v : {depots, tasks, chargers})
        for (const auto& id : v) inst.ids.push_back(id);
    if (inst.n() > kMaxNodes) throw std::runtime_error("instance exceeds node limit");

    inst.B = require_number(require(j, "B"), "B");
    inst.T = require_number(require(j, "T"), "T");
    inst.mu_rate = j.contains("mu_rate") ? require_number(j["mu_rate"], "mu_rate") : 1.0;

    if (j.contains("coords")) {
        const json& co = j["coords"];
        inst.coords.resize(inst.n());
        for (int i = 0; i < inst.n(); ++i) {
            auto it = co.find(inst.ids[i]);
            if (it == co.end()) throw std::runtime_error("coords missing node " + inst.ids[i]);
            if (!it->is_array() || it->size() != 2)
                throw std::runtime_error("coords of " + inst.ids[i] + " must be [x,y]");
            inst.coords[i] = {require_number((*it)[0], "coords." + inst.ids[i]),
                              require_number((*it)[1], "coords." + inst.ids[i])};
        }
    }

    inst.delta.assign(inst.n(), 0.0);
    const json& dj = require(j, "delta");
    for (int i = inst.first_charger(); i < inst.n(); ++i) {
        auto it = dj.find(inst.ids[i]);
        if (it == dj.end()) throw std::runtime_error("delta missing charger " + inst.ids[i]);
        inst.delta[i] = require_number(*it, "delta." + inst.ids[i]);
    }

    inst.v_start.assign(inst.n_depots, 0);
    inst.v_end.assign(inst.n_depots, 0);
    const json& vs = require(j, "v_start");
    for (int i = 0; i < inst.n_depots; ++i) {
        auto it = vs.find(inst.ids[i]);
        if (it == vs.end()) throw std::runtime_error("v_start missing depot " + inst.ids[i]);
        inst.v_start[i] = it->get<int>();
    }
    if (j.contains("v_end")) {
        const json& ve = j["v_end"];
        for (int i = 0; i < inst.n_depots; ++i)
            if (ve.contains(inst.ids[i])) inst.v_end[i] = ve[inst.ids[i]].get<int>();
    }

    auto load_matrix = [&](const char* key, std::vector<double>& m) {
        const json& mj = j[key];
        const int nn = inst.n();
        m.assign(nn * nn, 0.0);
        std::vector<int> index(nn, -1);
        for (int i = 0; i < nn; ++i) {
            auto it = mj.find(inst.ids[i]);
            if (it == mj.end()) throw std::runtime_error(std::string(key) + " missing row " + inst.ids[i]);
            for (int k = 0; k < nn; ++k) {
                if (k == i) continue;
                auto jt = it->find(inst.ids[k]);
                if (jt == it->end())
                    throw std::runtime_error(std::string(key) + " missing entry (" + inst.ids[i] + "," +
                                             inst.ids[k] + ")");
                m[i * nn + k] = require_number(*jt, std::string(key) + "." + inst.ids[i]);
            }
        }
    };

    if (j.contains("time") || j.contains("cost") || j.contains("battery_use")) {
        if (!(j.contains("time") && j.contains("cost") && j.contains("battery_use")))
            throw std::runtime_error("explicit matrices require all of time/cost/battery_use");
        inst.explicit_matrices = true;
        load_matrix("time", inst.time_m);
        load_matrix("cost", inst.cost_m);
        load_matrix("battery_use", inst.batt_m);
    } else {
        if (inst.coords.empty()) throw std::runtime_error("instance needs coords or explicit matrices");
        inst.derive_matrices_from_coords();
    }
    inst.check_basic();
    return inst;
}

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << instance_to_json(inst);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return instance_from_json(ss.str());
}

bool instances_equal(const Instance& a, const Instance& b, double tol) {
    if (a.n_depots != b.n_depots || a.n_tasks != b.n_tasks || a.n_chargers != b.n_chargers) return false;
    if (a.ids != b.ids || a.v_start != b.v_start || a.v_end != b.v_end) return false;
    auto close = [tol](double x, double y) { return std::abs(x - y) <= tol; };
    if (!close(a.B, b.B) || !close(a.T, b.T) || !close(a.mu_rate, b.mu_rate)) return false;
    auto vec_close = [&](const std::vector<double>& x, const std::vector<double>& y) {
        if (x.size() != y.size()) return false;
        for (size_t i = 0; i < x.size(); ++i)
            if (!close(x[i], y[i])) return false;
        return true;
    };
    return vec_close(a.delta, b.delta) && vec_close(a.time_m, b.time_m) && vec_close(a.cost_m, b.cost_m) &&
           vec_close(a.batt_m, b.batt_m);
}

}  // namespace ersp
