// Copyright 2026 The sglab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sglab/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sglab/errors.hpp"

namespace sglab {

std::string to_string(ReportFormat f) { return f == ReportFormat::csv ? "csv" : "json-lines"; }

ReportFormat parse_report_format(const std::string &s) {
    if (s == "json-lines") {
        return ReportFormat::json_lines;
    }
    if (s == "csv") {
        return ReportFormat::csv;
    }
    throw InvalidArgument("unknown report format '" + s + "' (expected json-lines or csv)");
}

std::string format_double(double v) {
    if (!std::isfinite(v)) {
        return "null";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void write_string(std::ostream &os, const std::string &s) {
    // Reuse the library's escaping for strings only.
    os << Json(s).dump();
}

std::string csv_cell(const Json &v) {
    switch (v.type()) {
    case Json::value_t::number_float: {
        const double d = v.get<double>();
        return std::isfinite(d) ? format_double(d) : "";
    }
    case Json::value_t::string: {
        const auto s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) {
            return s;
        }
        std::string q = "\"";
        for (char c : s) {
            q += c == '"' ? std::string("\"\"") : std::string(1, c);
        }
        return q + "\"";
    }
    case Json::value_t::null:
        return "";
    default:
        return dump_json(v);
    }
}

} // namespace

void write_json(std::ostream &os, const Json &j) {
    switch (j.type()) {
    case Json::value_t::object: {
        os << '{';
        bool first = true;
        for (const auto &[k, v] : j.items()) {
            if (!first) {
                os << ',';
            }
            first = false;
            write_string(os, k);
            os << ':';
            write_json(os, v);
        }
        os << '}';
        break;
    }
    case Json::value_t::array: {
        os << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) {
                os << ',';
            }
            write_json(os, j[i]);
        }
        os << ']';
        break;
    }
    case Json::value_t::number_float:
        os << format_double(j.get<double>());
        break;
    case Json::value_t::string:
        write_string(os, j.get<std::string>());
        break;
    default:
        os << j.dump();
    }
}

std::string dump_json(const Json &j) {
    std::ostringstream os;
    write_json(os, j);
    return os.str();
}

void write_report(std::ostream &os, const Report &report, ReportFormat format) {
    if (format == ReportFormat::json_lines) {
        Json head = {{"type", "config"}};
        for (const auto &[k, v] : report.config.items()) {
            head[k] = v;
        }
        os << dump_json(head) << '\n';
        for (const auto &r : report.records) {
            Json line = {{"type", "record"}};
            for (const auto &[k, v] : r.items()) {
                line[k] = v;
            }
            os << dump_json(line) << '\n';
        }
        Json tail = {{"type", "summary"}};
        for (const auto &[k, v] : report.summary.items()) {
            tail[k] = v;
        }
        os << dump_json(tail) << '\n';
        return;
    }

    os << "# config " << dump_json(report.config) << '\n';
    std::vector<std::string> columns;
    if (!report.records.empty()) {
        for (const auto &[k, v] : report.records.front().items()) {
            columns.push_back(k);
        }
    }
    for (std::size_t c = 0; c < columns.size(); ++c) {
        os << (c ? "," : "") << columns[c];
    }
    os << '\n';
    for (const auto &r : report.records) {
        if (r.size() != columns.size()) {
            throw InvalidArgument("csv records must share one set of columns");
        }
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (!r.contains(columns[c])) {
                throw InvalidArgument("csv record is missing column '" + columns[c] + "'");
            }
            os << (c ? "," : "") << csv_cell(r.at(columns[c]));
        }
        os << '\n';
    }
    os << "# summary " << dump_json(report.summary) << '\n';
}

std::string render_report(const Report &report, ReportFormat format) {
    std::ostringstream os;
    write_report(os, report, format);
    return os.str();
}

void emit_report(const Report &report, ReportFormat format, const std::filesystem::path &path) {
    const std::string text = render_report(report, format);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open report file '" + path.string() + "' for writing");
    }
    out << text;
    out.flush();
    if (!out) {
        throw IoError("failed writing report file '" + path.string() + "'");
    }
}

} // namespace sglab
