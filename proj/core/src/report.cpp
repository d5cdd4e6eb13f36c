#include "trilog/report.hpp"

#include <json.hpp>

#include <sstream>

namespace trilog {

using nlohmann::json;

void Report::finalize() {
    pass = true;
    for (auto& l : intermediates) pass = pass && l.pass;
    if (residual.empty())
        residual = intermediates.empty() ? "0" : intermediates.back().residual;
}

std::string report_to_text(const Report& r) {
    std::ostringstream out;
    out << "[" << (r.pass ? "pass" : "FAIL") << "] " << r.check_id << "  " << r.ref
        << "  residual=" << r.residual;
    if (r.seconds > 0) out << "  (" << r.seconds << "s)";
    out << "\n";
    if (!r.statement.empty()) out << "    statement: " << r.statement << "\n";
    for (auto& l : r.intermediates) {
        out << "    [" << (l.pass ? "ok" : "FAIL") << "] " << l.label;
        if (!l.ref.empty()) out << "  " << l.ref;
        out << "  residual=" << l.residual;
        if (!l.note.empty()) out << "  [" << l.note << "]";
        out << "\n";
    }
    return out.str();
}

static json line_to_json(const CheckLine& l) {
    return json{{"label", l.label},
                {"paper_ref", l.ref},
                {"residual", l.residual},
                {"status", l.pass ? "pass" : "fail"},
                {"note", l.note}};
}

static json to_json_obj(const Report& r) {
    json j{{"check_id", r.check_id},
           {"paper_ref", r.ref},
           {"status", r.pass ? "pass" : "fail"},
           {"residual", r.residual},
           {"statement", r.statement},
           {"seconds", r.seconds},
           {"intermediates", json::array()}};
    for (auto& l : r.intermediates) j["intermediates"].push_back(line_to_json(l));
    return j;
}

std::string report_to_json(const Report& r) { return to_json_obj(r).dump(2); }

std::string reports_to_json(const std::vector<Report>& rs) {
    json j = json::array();
    for (auto& r : rs) j.push_back(to_json_obj(r));
    return j.dump(2);
}

Report report_from_json(const std::string& text) {
    json j = json::parse(text);
    Report r;
    r.check_id = j.at("check_id").get<std::string>();
    r.ref = j.at("paper_ref").get<std::string>();
    r.pass = j.at("status").get<std::string>() == "pass";
    r.residual = j.at("residual").get<std::string>();
    r.statement = j.value("statement", "");
    r.seconds = j.value("seconds", 0.0);
    for (auto& lj : j.at("intermediates")) {
        CheckLine l;
        l.label = lj.at("label").get<std::string>();
        l.ref = lj.at("paper_ref").get<std::string>();
        l.residual = lj.at("residual").get<std::string>();
        l.pass = lj.at("status").get<std::string>() == "pass";
        l.note = lj.value("note", "");
        r.intermediates.push_back(std::move(l));
    }
    return r;
}

}  // namespace trilog
