#ifndef FIFWAVE_IO_HPP
#define FIFWAVE_IO_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "fifwave/cwt.hpp"
#include "fifwave/grid.hpp"
#include "fifwave/problem.hpp"
#include "fifwave/regularity.hpp"

namespace fif {

// 17-significant-digit decimal formatting; round-trips doubles exactly.
std::string format17(double v);

// Problem definition JSON:
// {"N": int, "y": [..], "gamma": [..], "q": [[c0..cm], ..], "delta": real}
InterpolationProblem load_problem(const std::filesystem::path& path);
InterpolationProblem problem_from_json_text(const std::string& text);
std::string problem_to_json_text(const InterpolationProblem& p);

// FNV-1a of the canonical problem serialization; report provenance tag.
std::uint64_t problem_hash(const InterpolationProblem& p);

// Write-to-temp-then-rename; the target appears only on success.
void atomic_write(const std::filesystem::path& path, const std::string& content);

// CSV with header "x,f".
std::string grid_csv(const FifGrid& g);

struct SpectrumRow {
    double omega;
    Complex value;
    double tail_bound;
};
// CSV with header "omega,re,im,abs,tail_bound".
std::string spectrum_csv(const std::vector<SpectrumRow>& rows);

// CSV with header "s,t,re,im,abs".
std::string scalogram_csv(const ScalogramGrid& sg);

struct ReportProvenance {
    std::uint64_t fixture_hash = 0;
    int scale_min_exp = 0;
    int scale_max_exp = 0;
    int wavelet_order = 0;
};
std::string regularity_report_json(const RegularityReport& rep, const ReportProvenance& prov);

}  // namespace fif

#endif
