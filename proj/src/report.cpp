#include "nisv/report.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace nisv {

ReportFormat parse_format(const std::string& name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "text") return ReportFormat::Text;
    throw std::invalid_argument("unknown report format '" + name + "'");
}

namespace {

nlohmann::ordered_json to_json(const CheckReport& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    j["order"] = r.order;
    j["lambda_samples"] = r.lambda_samples;
    nlohmann::ordered_json defects = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.defects) defects[k] = v;
    j["defects"] = defects;
    nlohmann::ordered_json tols = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.tolerances) tols[k] = v;
    j["tolerances"] = tols;
    j["pass"] = r.pass;
    j["seed"] = r.seed;
    j["runtime_ms"] = r.runtime_ms;
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

} // namespace

std::string render_reports(const std::vector<CheckReport>& reports, ReportFormat fmt) {
    switch (fmt) {
        case ReportFormat::Json: {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& r : reports) arr.push_back(to_json(r));
            return arr.dump(2) + "\n";
        }
        case ReportFormat::Csv: {
            std::ostringstream os;
            os << "id,params,order,lambda_samples,defect_name,defect,tolerance,pass,seed,runtime_ms\n";
            for (const auto& r : reports) {
                std::ostringstream ps;
                bool first = true;
                for (const auto& [k, v] : r.params) {
                    if (!first) ps << ";";
                    ps << k << "=" << v;
                    first = false;
                }
                if (r.defects.empty()) {
                    os << r.id << "," << csv_escape(ps.str()) << "," << r.order << ","
                       << r.lambda_samples << ",,,," << (r.pass ? "true" : "false") << "," << r.seed
                       << "," << r.runtime_ms << "\n";
                }
                for (const auto& [name, val] : r.defects) {
                    auto it = r.tolerances.find(name);
                    os << r.id << "," << csv_escape(ps.str()) << "," << r.order << ","
                       << r.lambda_samples << "," << name << ",";
                    os.precision(17);
                    os << val << ",";
                    if (it != r.tolerances.end()) os << it->second;
                    os << "," << (r.pass ? "true" : "false") << "," << r.seed << "," << r.runtime_ms
                       << "\n";
                }
            }
            return os.str();
        }
        case ReportFormat::Text: {
            std::ostringstream os;
            os.precision(6);
            for (const auto& r : reports) {
                os << (r.pass ? "PASS" : "FAIL") << "  " << r.id;
                if (!r.params.empty()) {
                    os << " [";
                    bool first = true;
                    for (const auto& [k, v] : r.params) {
                        if (!first) os << ", ";
                        os << k << "=" << v;
                        first = false;
                    }
                    os << "]";
                }
                os << "  (order " << r.order << ", samples " << r.lambda_samples << ")\n";
                for (const auto& [name, val] : r.defects) {
                    os << "    " << name << " = " << std::scientific << val;
                    auto it = r.tolerances.find(name);
                    if (it != r.tolerances.end()) os << "  (tol " << it->second << ")";
                    os << std::defaultfloat << "\n";
                }
            }
            return os.str();
        }
    }
    throw std::logic_error("render_reports: unreachable");
}

void emit_report(const std::vector<CheckReport>& reports, ReportFormat fmt, const std::string& path) {
    std::string body = render_reports(reports, fmt);
    if (path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_report: cannot write '" + path + "'");
    out << body;
}

} // namespace nisv
