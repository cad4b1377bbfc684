#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "shapiro/report.hpp"

namespace shapiro {

std::optional<Format> parse_format(std::string_view s) {
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    if (s == "md" || s == "markdown") return Format::Markdown;
    return std::nullopt;
}

std::string format_cell(const Cell& c) {
    if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
    if (const auto* s = std::get_if<std::string>(&c)) return *s;
    const Real& r = std::get<Real>(c);
    char buf[64];
    if (r.decimals < 0) {
        std::snprintf(buf, sizeof buf, "%.15g", r.value);
    } else {
        std::snprintf(buf, sizeof buf, "%.*f", r.decimals, r.value);
    }
    return buf;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (const char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    q += '"';
    return q;
}

nlohmann::ordered_json json_cell(const Cell& c) {
    if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
    if (const auto* s = std::get_if<std::string>(&c)) return *s;
    const Real& r = std::get<Real>(c);
    if (r.decimals < 0) return r.value;
    const double scale = std::pow(10.0, r.decimals);
    return std::round(r.value * scale) / scale;
}

}  // namespace

void write_document(std::ostream& out, const Document& doc, Format f) {
    switch (f) {
        case Format::Csv: {
            for (std::size_t i = 0; i < doc.columns.size(); ++i) {
                out << (i ? "," : "") << csv_field(doc.columns[i]);
            }
            out << "\r\n";
            for (const auto& row : doc.rows) {
                for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(format_cell(row[i]));
                out << "\r\n";
            }
            break;
        }
        case Format::Json: {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& row : doc.rows) {
                nlohmann::ordered_json obj;
                for (std::size_t i = 0; i < row.size() && i < doc.columns.size(); ++i) {
                    obj[doc.columns[i]] = json_cell(row[i]);
                }
                arr.push_back(std::move(obj));
            }
            out << arr.dump(2) << '\n';
            break;
        }
        case Format::Markdown: {
            if (!doc.title.empty()) out << "**" << doc.title << "**\n\n";
            out << '|';
            for (const auto& c : doc.columns) out << ' ' << c << " |";
            out << "\n|";
            for (std::size_t i = 0; i < doc.columns.size(); ++i) out << "---|";
            out << '\n';
            for (const auto& row : doc.rows) {
                out << '|';
                for (const auto& cell : row) out << ' ' << format_cell(cell) << " |";
                out << '\n';
            }
            break;
        }
    }
}

}  // namespace shapiro
