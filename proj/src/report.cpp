#include "chern/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "chern/rational.hpp"

namespace chern {

Format parse_format(const std::string& name) {
    if (name == "table") return Format::Table;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "latex") return Format::Latex;
    throw SchemaError("unknown format '" + name + "'");
}

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Warn: return "WARN";
        case Status::Fail: return "FAIL";
    }
    return "?";
}

static std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

static std::string latex_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "\\&"; break;
            case '%': out += "\\%"; break;
            case '#': out += "\\#"; break;
            case '_': out += "\\_"; break;
            default: out += c;
        }
    }
    return out;
}

std::string render(const Report& r, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::Table: {
            if (!r.title.empty()) os << "== " << r.title << " ==\n";
            std::size_t width = 0;
            for (const auto& l : r.lines) width = std::max(width, l.name.size());
            for (const auto& l : r.lines) {
                os << status_name(l.status) << "  " << l.name;
                if (!l.detail.empty()) {
                    os << std::string(width - l.name.size() + 2, ' ') << l.detail;
                }
                os << "\n";
            }
            os << (r.ok() ? "OK" : "FAILED") << " (" << r.lines.size() << " checks, "
               << r.warn_count() << " warnings, " << r.fail_count() << " failures)\n";
            return os.str();
        }
        case Format::Json: {
            nlohmann::json j;
            j["title"] = r.title;
            j["checks"] = nlohmann::json::array();
            for (const auto& l : r.lines) {
                nlohmann::json c;
                c["name"] = l.name;
                c["status"] = status_name(l.status);
                c["detail"] = l.detail;
                j["checks"].push_back(c);
            }
            j["ok"] = r.ok();
            j["warnings"] = r.warn_count();
            j["failures"] = r.fail_count();
            return j.dump(2) + "\n";
        }
        case Format::Csv: {
            os << "status,name,detail\n";
            for (const auto& l : r.lines)
                os << status_name(l.status) << "," << csv_escape(l.name) << ","
                   << csv_escape(l.detail) << "\n";
            return os.str();
        }
        case Format::Latex: {
            os << "\\begin{tabular}{lll}\n";
            if (!r.title.empty())
                os << "\\multicolumn{3}{l}{" << latex_escape(r.title) << "}\\\\\n";
            os << "\\hline\n";
            for (const auto& l : r.lines)
                os << status_name(l.status) << " & " << latex_escape(l.name) << " & "
                   << latex_escape(l.detail) << "\\\\\n";
            os << "\\hline\n\\end{tabular}\n";
            return os.str();
        }
    }
    return os.str();
}

}  // namespace chern
