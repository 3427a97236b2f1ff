#include "fifwave/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fifwave/errors.hpp"

namespace fif {

using nlohmann::json;

std::string format17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

InterpolationProblem problem_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("problem file: ") + e.what());
    }
    if (!j.is_object()) throw DomainError("problem file: top level must be an object");
    for (auto& [key, _] : j.items()) {
        if (key != "N" && key != "y" && key != "gamma" && key != "q" && key != "delta")
            throw DomainError("problem file: unknown key '" + key + "'");
    }
    for (const char* key : {"N", "y", "gamma", "q"})
        if (!j.contains(key)) throw DomainError(std::string("problem file: missing field '") + key + "'");

    InterpolationProblem p;
    try {
        p.N = j.at("N").get<int>();
        p.y = j.at("y").get<std::vector<double>>();
        p.gamma = j.at("gamma").get<std::vector<double>>();
        for (const auto& row : j.at("q"))
            p.q.emplace_back(row.get<std::vector<double>>());
        p.delta = j.value("delta", 1.0);
    } catch (const json::exception& e) {
        throw DomainError(std::string("problem file: ") + e.what());
    }
    return p;
}

InterpolationProblem load_problem(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open problem file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return problem_from_json_text(buf.str());
}

std::string problem_to_json_text(const InterpolationProblem& p) {
    json j;
    j["N"] = p.N;
    j["y"] = p.y;
    j["gamma"] = p.gamma;
    json q = json::array();
    for (const Poly& poly : p.q) q.push_back(poly.coeffs());
    j["q"] = q;
    j["delta"] = p.delta;
    return j.dump(2) + "\n";
}

std::uint64_t problem_hash(const InterpolationProblem& p) {
    // Canonical text keeps the hash stable across platforms.
    std::ostringstream os;
    os << p.N << '|' << p.delta << '|';
    for (double v : p.y) os << format17(v) << ',';
    os << '|';
    for (double v : p.gamma) os << format17(v) << ',';
    os << '|';
    for (const Poly& q : p.q) {
        for (double c : q.coeffs()) os << format17(c) << ',';
        os << ';';
    }
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : os.str()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open output file: " + tmp.string());
        out << content;
        if (!out.good()) throw Error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string grid_csv(const FifGrid& g) {
    std::ostringstream os;
    os << "x,f\n";
    for (std::int64_t i = 0; i < g.points(); ++i)
        os << format17(g.x_at(i)) << ',' << format17(g.values[static_cast<std::size_t>(i)]) << '\n';
    return os.str();
}

std::string spectrum_csv(const std::vector<SpectrumRow>& rows) {
    std::ostringstream os;
    os << "omega,re,im,abs,tail_bound\n";
    for (const SpectrumRow& r : rows) {
        os << format17(r.omega) << ',' << format17(r.value.real()) << ','
           << format17(r.value.imag()) << ',' << format17(std::abs(r.value)) << ','
           << format17(r.tail_bound) << '\n';
    }
    return os.str();
}

std::string scalogram_csv(const ScalogramGrid& sg) {
    std::ostringstream os;
    os << "s,t,re,im,abs\n";
    for (std::size_t si = 0; si < sg.scales.size(); ++si) {
        for (std::size_t ti = 0; ti < sg.translations.size(); ++ti) {
            const Complex& v = sg.values[si][ti];
            os << format17(sg.scales[si]) << ',' << format17(sg.translations[ti]) << ','
               << format17(v.real()) << ',' << format17(v.imag()) << ','
               << format17(std::abs(v)) << '\n';
        }
    }
    return os.str();
}

std::string regularity_report_json(const RegularityReport& rep, const ReportProvenance& prov) {
    json j;
    j["delta"] = rep.delta;
    j["K"] = rep.K;
    j["K_certificate"] = rep.K_certificate;
    j["K_star"] = rep.K_star;
    j["Omega"] = rep.Omega;
    j["bound_finite"] = rep.bound_finite;
    if (rep.bound_finite) j["bound_C"] = rep.bound_C;
    j["hypothesis_lip"] = rep.hypothesis_lip;
    j["hypothesis_poly"] = rep.hypothesis_poly;
    j["fitted_exponent"] = rep.fitted_exponent;
    j["fit_residual"] = rep.fit_residual;
    json psm = json::array();
    for (const auto& [s, m] : rep.per_scale_max) psm.push_back({s, m});
    j["per_scale_max"] = psm;
    j["provenance"] = {{"fixture_hash", prov.fixture_hash},
                       {"scale_min_exp", prov.scale_min_exp},
                       {"scale_max_exp", prov.scale_max_exp},
                       {"wavelet_order", prov.wavelet_order}};
    return j.dump(2) + "\n";
}

}  // namespace fif
