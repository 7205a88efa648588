#include "neph/serialize.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "neph/nephroid.hpp"

namespace neph::serialize {

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string to_json(const subord::BetaRoot& root) {
    std::ostringstream out;
    out << "{\"case\":\"" << subord::case_name(root.kind) << "\""
        << ",\"beta_star\":" << format_real(root.beta_star)
        << ",\"bracket\":[" << format_real(root.bracket_lo) << ","
        << format_real(root.bracket_hi) << "]"
        << ",\"residual\":" << format_real(root.residual)
        << ",\"iterations\":" << root.iterations << "}";
    return out.str();
}

std::string to_json(const subord::ContainmentReport& report) {
    std::ostringstream out;
    out << "{\"case\":\"" << subord::case_name(report.kind) << "\""
        << ",\"beta\":" << format_real(report.beta) << ",\"theta_grid\":[";
    for (size_t i = 0; i < report.theta_grid.size(); ++i) {
        if (i)
            out << ",";
        out << format_real(report.theta_grid[i]);
    }
    out << "],\"d_values\":[";
    for (size_t i = 0; i < report.d_values.size(); ++i) {
        if (i)
            out << ",";
        out << format_real(report.d_values[i]);
    }
    out << "],\"min_d\":" << format_real(report.min_d)
        << ",\"argmin_theta\":" << format_real(report.argmin_theta)
        << ",\"verdict\":" << (report.verdict ? "true" : "false") << "}";
    return out.str();
}

void write_scan_csv(const subord::ContainmentReport& report, std::ostream& out) {
    out << "theta,d1,d2,d\n";
    for (size_t i = 0; i < report.theta_grid.size(); ++i) {
        const double theta = report.theta_grid[i];
        const double d1 = nephroid::d1(theta);
        const double dv = report.d_values[i];
        out << format_real(theta) << ',' << format_real(d1) << ',' << format_real(d1 - dv) << ','
            << format_real(dv) << '\n';
    }
}

subord::BetaRoot beta_root_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    subord::BetaRoot root;
    root.kind = subord::case_from_name(j.at("case").get<std::string>());
    root.beta_star = j.at("beta_star").get<double>();
    root.bracket_lo = j.at("bracket").at(0).get<double>();
    root.bracket_hi = j.at("bracket").at(1).get<double>();
    root.residual = j.at("residual").get<double>();
    root.iterations = j.at("iterations").get<int>();
    return root;
}

} // namespace neph::serialize
