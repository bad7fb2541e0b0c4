#include "fcheck/emit.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace fcheck::verify {

using json = nlohmann::ordered_json;

namespace {

json number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

double read_number(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "nan") return std::nan("");
        if (s == "inf") return INFINITY;
        if (s == "-inf") return -INFINITY;
    }
    throw ParseError("report: expected a number", 0);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return fmt(v);
}

} // namespace

json to_json(const ReportDocument& doc) {
    json reports = json::array();
    for (const auto& r : doc.reports) {
        json w = json::array();
        for (const auto& x : r.witnesses) w.push_back(json{{"input", x.input}, {"residual", number(x.residual)}});
        json s = json::array();
        for (const auto& ser : r.series) {
            json pts = json::array();
            for (const auto& [n, v] : ser.points) pts.push_back(json::array({n, number(v.real()), number(v.imag())}));
            s.push_back(json{{"label", ser.label}, {"points", pts}});
        }
        json e = json::object();
        e["property_id"] = r.property_id;
        e["target_id"] = r.target_id;
        e["role"] = to_string(r.role);
        e["verdict"] = to_string(r.verdict);
        e["residual_max"] = number(r.residual_max);
        e["tolerance"] = number(r.tolerance);
        e["notes"] = r.notes;
        e["witnesses"] = w;
        if (!r.series.empty()) e["series"] = s;
        reports.push_back(e);
    }
    json j = json::object();
    j["version"] = kReportSchemaVersion;
    j["domain"] = doc.domain;
    j["target"] = doc.target;
    j["config"] = doc.config;
    j["reports"] = reports;
    return j;
}

std::string to_json_string(const ReportDocument& doc) { return to_json(doc).dump(2) + "\n"; }

ReportDocument parse_report_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("report: ") + e.what(), e.byte);
    }
    try {
        if (j.at("version").get<int>() != kReportSchemaVersion) throw ParseError("report: unsupported version", 0);
        ReportDocument doc;
        doc.domain = j.at("domain").get<std::string>();
        doc.target = j.at("target").get<std::string>();
        doc.config = j.at("config");
        for (const auto& e : j.at("reports")) {
            PropertyReport r;
            r.property_id = e.at("property_id").get<std::string>();
            r.target_id = e.at("target_id").get<std::string>();
            r.role = role_from_string(e.at("role").get<std::string>());
            r.verdict = verdict_from_string(e.at("verdict").get<std::string>());
            r.residual_max = read_number(e.at("residual_max"));
            r.tolerance = read_number(e.at("tolerance"));
            r.notes = e.at("notes").get<std::string>();
            for (const auto& w : e.at("witnesses"))
                r.witnesses.push_back({w.at("input").get<std::string>(), read_number(w.at("residual"))});
            if (e.contains("series"))
                for (const auto& s : e.at("series")) {
                    Series ser{s.at("label").get<std::string>(), {}};
                    for (const auto& p : s.at("points"))
                        ser.points.emplace_back(p.at(0).get<int>(), Complex(read_number(p.at(1)), read_number(p.at(2))));
                    r.series.push_back(std::move(ser));
                }
            doc.reports.push_back(std::move(r));
        }
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report: ") + e.what(), 0);
    }
}

std::string to_csv(const std::vector<PropertyReport>& reports) {
    std::ostringstream os;
    os << "property_id,target_id,role,verdict,tolerance,input,residual\n";
    for (const auto& r : reports)
        for (const auto& w : r.witnesses)
            os << csv_field(r.property_id) << ',' << csv_field(r.target_id) << ',' << to_string(r.role) << ','
               << to_string(r.verdict) << ',' << csv_number(r.tolerance) << ',' << csv_field(w.input) << ','
               << csv_number(w.residual) << '\n';
    return os.str();
}

std::string to_plot_csv(const std::vector<PropertyReport>& reports) {
    std::ostringstream os;
    os << "property_id,series,n,real,imag\n";
    for (const auto& r : reports)
        for (const auto& s : r.series)
            for (const auto& [n, v] : s.points)
                os << csv_field(r.property_id) << ',' << csv_field(s.label) << ',' << n << ','
                   << csv_number(v.real()) << ',' << csv_number(v.imag()) << '\n';
    return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << contents;
    out.close();
    if (!out) throw IoError("write failed for " + path);
}

} // namespace fcheck::verify
