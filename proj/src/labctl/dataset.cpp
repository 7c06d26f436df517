// Copyright 2026 The iexsim Authors
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

#include "labctl/dataset.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace labctl {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string to_csv(const Row& row) {
    std::ostringstream out;
    out << row.engine << ',' << row.seed << ',' << row.L << ',' << row.T << ','
        << format_double(row.p_or_nu) << ',' << row.realization << ',' << row.layer << ','
        << row.observable << ',' << format_double(row.value);
    return out.str();
}

Row parse_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    if (fields.size() != 9) throw std::runtime_error("csv: expected 9 fields, got line: " + line);
    Row row;
    row.engine = fields[0];
    row.seed = std::stoull(fields[1]);
    row.L = std::stoi(fields[2]);
    row.T = std::stoi(fields[3]);
    row.p_or_nu = std::stod(fields[4]);
    row.realization = std::stoi(fields[5]);
    row.layer = std::stoi(fields[6]);
    row.observable = fields[7];
    row.value = std::stod(fields[8]);
    return row;
}

std::vector<Row> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset: " + path);
    std::string line;
    std::vector<Row> rows;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line == kCsvHeader) continue;
        }
        rows.push_back(parse_csv_row(line));
    }
    return rows;
}

void write_csv(const std::string& path, const std::vector<Row>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write dataset: " + path);
    out << kCsvHeader << '\n';
    for (const Row& r : rows) out << to_csv(r) << '\n';
}

}  // namespace labctl
