#ifndef FIFWAVE_VERIFY_HPP
#define FIFWAVE_VERIFY_HPP

#include <string>
#include <vector>

namespace fif {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string details;
    double seconds = 0.0;
};

// Runs the full verification battery (desk-scale, deterministic).
// The second form runs a single numbered check; 0 means all.
std::vector<CriterionResult> run_acceptance();
std::vector<CriterionResult> run_acceptance(int only_id);

std::string acceptance_json(const std::vector<CriterionResult>& results);

}  // namespace fif

#endif
