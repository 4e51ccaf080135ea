#ifndef ERSP_DUALS_HPP_
#define ERSP_DUALS_HPP_

#include <vector>

namespace ersp {

// Dual prices of the restricted master rows. kappa: start-depot equalities
// (free sign), mu: end-depot covers (>= 0), nu: task equalities (free),
// lambda: cut rows (<= 0). Missing cut duals default to 0.
struct DualPrices {
    std::vector<double> kappa;   // per depot index
    std::vector<double> mu;      // per depot index
    std::vector<double> nu;      // per task index
    std::vector<double> lambda;  // per cut id

    double lambda_of(int q) const {
        return q < static_cast<int>(lambda.size()) ? lambda[q] : 0.0;
    }
};

}  // namespace ersp

#endif  // ERSP_DUALS_HPP_
