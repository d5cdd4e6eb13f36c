#pragma once

// Structured verification reports. A check either has an exactly-zero
// symbolic residual or a numeric residual below tolerance; every derivation
// step is recorded with the identity tag it validates.

#include <string>
#include <vector>

namespace trilog {

struct CheckLine {
    std::string label;     // short step name, e.g. "chain-rule coefficient at YXY"
    std::string ref;       // identity tag, e.g. "(3.8)"
    std::string residual;  // canonical text of the residual ("0" on pass)
    bool pass = false;
    std::string note;      // e.g. reduction applied
};

struct Report {
    std::string check_id;
    std::string ref;        // headline identity tag
    bool pass = false;
    std::string residual;   // final residual (symbolic text or numeric)
    std::string statement;  // the verified identity, rendered with named symbols
    std::vector<CheckLine> intermediates;
    double seconds = 0.0;

    void add(CheckLine line) { intermediates.push_back(std::move(line)); }
    void finalize();  // pass = all intermediates pass; residual from last line if empty
};

std::string report_to_text(const Report& r);
std::string report_to_json(const Report& r);
Report report_from_json(const std::string& json_text);
std::string reports_to_json(const std::vector<Report>& rs);

}  // namespace trilog
