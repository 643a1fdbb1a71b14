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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace sglab {

using Json = nlohmann::ordered_json;

enum class ReportFormat { json_lines, csv };

std::string to_string(ReportFormat f);
ReportFormat parse_report_format(const std::string &s);

/**
 * Pipeline output: the config echo, one flat record per shot / step / sweep
 * point, and a summary object. Field order is insertion order.
 */
struct Report {
    Json config = Json::object();
    std::vector<Json> records;
    Json summary = Json::object();
};

/// %.17g; non-finite values render as JSON null / empty CSV cell.
std::string format_double(double v);

/// Compact JSON with every double printed by `format_double`.
void write_json(std::ostream &os, const Json &j);
std::string dump_json(const Json &j);

/**
 * json-lines: {"type":"config",...}, then {"type":"record",...} per record,
 * then {"type":"summary",...}.
 * csv: a "# config <json>" comment line, one header row, one row per record,
 * and a trailing "# summary <json>" comment line. All records must share
 * the same keys.
 */
void write_report(std::ostream &os, const Report &report, ReportFormat format);
std::string render_report(const Report &report, ReportFormat format);

/// Writes the rendered report; throws IoError if the file cannot be written.
void emit_report(const Report &report, ReportFormat format, const std::filesystem::path &path);

} // namespace sglab
