#include "panelkit/csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace panelkit {

namespace {

// Splits one CSV record. Handles double-quoted fields with "" escapes; no
// multi-line fields (the panel format never produces them).
std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no) {
    std::vector<std::string> out;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(field));
            field.clear();
        } else if (c == '\r' && i + 1 == line.size()) {
            // trailing CR from CRLF input
        } else {
            field += c;
        }
    }
    if (quoted) {
        throw DataError("unterminated quoted field on line " + std::to_string(line_no));
    }
    out.push_back(std::move(field));
    return out;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

bool is_missing_token(const std::string& s) {
    return s.empty() || s == "NA";
}

double parse_number(const std::string& s, std::size_t line_no, const std::string& col) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw DataError("non-numeric token '" + s + "' in column '" + col + "' on line " +
                        std::to_string(line_no));
    }
    return v;
}

long parse_period(const std::string& s, std::size_t line_no) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw DataError("non-integer period '" + s + "' on line " + std::to_string(line_no));
    }
    return v;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

PanelDataset load_panel(std::istream& in, const CsvSchema& schema) {
    std::string header_line;
    if (!std::getline(in, header_line)) {
        throw DataError("empty CSV input");
    }
    std::vector<std::string> headers = split_csv_line(header_line, 1);
    for (auto& h : headers) h = trim(h);

    auto col_of = [&](const std::string& name) -> std::size_t {
        auto it = std::find(headers.begin(), headers.end(), name);
        if (it == headers.end()) {
            throw DataError("required column '" + name + "' not found in CSV header");
        }
        return static_cast<std::size_t>(it - headers.begin());
    };
    const std::size_t entity_idx = col_of(schema.entity_col);
    const std::size_t period_idx = col_of(schema.period_col);

    // Value columns: either the explicit subset or everything else in header order.
    std::vector<std::size_t> value_idx;
    std::vector<std::string> value_names;
    if (!schema.value_cols.empty()) {
        for (const auto& c : schema.value_cols) value_idx.push_back(col_of(c));
    } else {
        for (std::size_t j = 0; j < headers.size(); ++j) {
            if (j != entity_idx && j != period_idx) value_idx.push_back(j);
        }
    }
    for (std::size_t j : value_idx) {
        auto it = schema.renames.find(headers[j]);
        value_names.push_back(it == schema.renames.end() ? headers[j] : it->second);
    }

    struct Row {
        std::string entity;
        long period;
        std::vector<std::pair<bool, double>> vals;
    };
    std::vector<Row> rows;
    std::set<std::string> entity_set;
    long min_period = 0, max_period = 0;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::vector<std::string> fields = split_csv_line(line, line_no);
        if (fields.size() != headers.size()) {
            throw DataError("line " + std::to_string(line_no) + " has " +
                            std::to_string(fields.size()) + " fields, header has " +
                            std::to_string(headers.size()));
        }
        Row r;
        r.entity = trim(fields[entity_idx]);
        if (r.entity.empty()) {
            throw DataError("empty entity identifier on line " + std::to_string(line_no));
        }
        r.period = parse_period(trim(fields[period_idx]), line_no);
        for (std::size_t k = 0; k < value_idx.size(); ++k) {
            std::string tok = trim(fields[value_idx[k]]);
            if (is_missing_token(tok)) {
                r.vals.emplace_back(false, 0.0);
            } else {
                r.vals.emplace_back(true, parse_number(tok, line_no, headers[value_idx[k]]));
            }
        }
        if (rows.empty()) {
            min_period = max_period = r.period;
        } else {
            min_period = std::min(min_period, r.period);
            max_period = std::max(max_period, r.period);
        }
        entity_set.insert(r.entity);
        rows.push_back(std::move(r));
    }
    if (rows.empty()) {
        throw DataError("CSV contains a header but no data rows");
    }
    if (max_period - min_period + 1 > 100000) {
        throw DataError("period range too wide to materialize: " + std::to_string(min_period) +
                        ".." + std::to_string(max_period));
    }

    std::vector<std::string> entities(entity_set.begin(), entity_set.end());
    std::vector<int> periods;
    for (long p = min_period; p <= max_period; ++p) periods.push_back(static_cast<int>(p));

    PanelDataset panel(entities, periods);
    for (const auto& name : value_names) panel.add_variable(name);

    std::set<std::pair<std::string, long>> seen;
    for (const auto& r : rows) {
        if (!seen.insert({r.entity, r.period}).second) {
            throw DataError("duplicate (entity, period) pair: (" + r.entity + ", " +
                            std::to_string(r.period) + ")");
        }
        std::size_t i = panel.entity_index(r.entity);
        std::size_t t = panel.period_index(static_cast<int>(r.period));
        for (std::size_t k = 0; k < value_names.size(); ++k) {
            if (r.vals[k].first) panel.set(value_names[k], i, t, r.vals[k].second);
        }
    }
    return panel;
}

PanelDataset load_panel_text(const std::string& text, const CsvSchema& schema) {
    std::istringstream is(text);
    return load_panel(is, schema);
}

PanelDataset load_panel_file(const std::string& path, const CsvSchema& schema) {
    std::ifstream f(path);
    if (!f) throw DataError("cannot open input file: " + path);
    return load_panel(f, schema);
}

void write_panel_csv(const PanelDataset& panel, std::ostream& out, const CsvSchema& schema) {
    out << schema.entity_col << ',' << schema.period_col;
    for (const auto& name : panel.variable_names()) out << ',' << name;
    out << '\n';
    for (std::size_t i = 0; i < panel.n_entities(); ++i) {
        for (std::size_t t = 0; t < panel.n_periods(); ++t) {
            out << panel.entities()[i] << ',' << panel.periods()[t];
            for (const auto& name : panel.variable_names()) {
                out << ',';
                if (panel.is_present(name, i, t)) out << format_double(panel.value(name, i, t));
            }
            out << '\n';
        }
    }
}

std::string panel_to_csv(const PanelDataset& panel, const CsvSchema& schema) {
    std::ostringstream os;
    write_panel_csv(panel, os, schema);
    return os.str();
}

}  // namespace panelkit
