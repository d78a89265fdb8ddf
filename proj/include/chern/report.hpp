#pragma once

#include <string>
#include <utility>
#include <vector>

namespace chern {

enum class Status { Pass, Warn, Fail };

enum class Format { Table, Json, Csv, Latex };

Format parse_format(const std::string& name);  // throws SchemaError

struct CheckLine {
    std::string name;
    Status status = Status::Pass;
    std::string detail;
};

struct Report {
    std::string title;
    std::vector<CheckLine> lines;

    Report() = default;
    explicit Report(std::string t) : title(std::move(t)) {}

    void pass(const std::string& name, const std::string& detail = "") {
        lines.push_back({name, Status::Pass, detail});
    }
    void warn(const std::string& name, const std::string& detail = "") {
        lines.push_back({name, Status::Warn, detail});
    }
    void fail(const std::string& name, const std::string& detail = "") {
        lines.push_back({name, Status::Fail, detail});
    }
    void check(bool ok, const std::string& name, const std::string& detail = "") {
        if (ok) pass(name, detail);
        else fail(name, detail);
    }

    void merge(const Report& other) {
        lines.insert(lines.end(), other.lines.begin(), other.lines.end());
    }

    bool ok() const {
        for (const auto& l : lines)
            if (l.status == Status::Fail) return false;
        return true;
    }

    int warn_count() const {
        int n = 0;
        for (const auto& l : lines)
            if (l.status == Status::Warn) ++n;
        return n;
    }

    int fail_count() const {
        int n = 0;
        for (const auto& l : lines)
            if (l.status == Status::Fail) ++n;
        return n;
    }
};

std::string status_name(Status s);

std::string render(const Report& r, Format f);

}  // namespace chern
