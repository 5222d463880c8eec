#include "cli.hpp"

#include <algorithm>
#include <sstream>

namespace schreier::cli {

namespace {

std::string join_counts(const std::vector<Count>& values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += sep;
        out += values[i].str();
    }
    return out;
}

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// Minimal JSON string escaping; our strings are short ASCII labels.
std::string json_string(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    if (name == "text") return Format::text;
    return std::nullopt;
}

std::string render_table(const std::vector<std::vector<Count>>& rows, std::string_view source, Format format) {
    const std::size_t n_max = rows.empty() ? 0 : rows.front().size();
    std::string out;
    switch (format) {
        case Format::csv: {
            out += "k\\n";
            for (std::size_t n = 1; n <= n_max; ++n) out += "," + std::to_string(n);
            out += '\n';
            for (std::size_t k = 0; k < rows.size(); ++k) {
                out += std::to_string(k + 1) + "," + join_counts(rows[k], ',') + '\n';
            }
            break;
        }
        case Format::json: {
            // Counts are written as bare JSON numbers of any length.
            out += "{\"k_max\":" + std::to_string(rows.size()) + ",\"n_max\":" + std::to_string(n_max) +
                   ",\"source\":" + json_string(source) + ",\"cells\":[";
            for (std::size_t k = 0; k < rows.size(); ++k) {
                if (k > 0) out += ',';
                out += "[" + join_counts(rows[k], ',') + "]";
            }
            out += "]}\n";
            break;
        }
        case Format::text: {
            std::vector<std::vector<std::string>> grid;
            grid.push_back({"k\\n"});
            for (std::size_t n = 1; n <= n_max; ++n) grid[0].push_back(std::to_string(n));
            for (std::size_t k = 0; k < rows.size(); ++k) {
                grid.push_back({std::to_string(k + 1)});
                for (const auto& v : rows[k]) grid.back().push_back(v.str());
            }
            std::vector<std::size_t> width(n_max + 1, 0);
            for (const auto& line : grid) {
                for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
            }
            for (const auto& line : grid) {
                std::string text = pad_right(line[0], width[0]);
                for (std::size_t c = 1; c < line.size(); ++c) text += " " + pad_left(line[c], width[c]);
                out += text + '\n';
            }
            break;
        }
    }
    return out;
}

std::string render_sets(const std::vector<FiniteSet>& sets, Format format) {
    std::string out;
    switch (format) {
        case Format::text:
            for (const auto& s : sets) out += s.to_string() + '\n';
            break;
        case Format::csv:
            out += "index,size,set\n";
            for (std::size_t i = 0; i < sets.size(); ++i) {
                out += std::to_string(i) + "," + std::to_string(sets[i].size()) + ",\"" + sets[i].to_string() + "\"\n";
            }
            break;
        case Format::json: {
            out += '[';
            for (std::size_t i = 0; i < sets.size(); ++i) {
                if (i > 0) out += ',';
                out += '[';
                const auto elems = sets[i].elements();
                for (std::size_t j = 0; j < elems.size(); ++j) {
                    if (j > 0) out += ',';
                    out += std::to_string(elems[j]);
                }
                out += ']';
            }
            out += "]\n";
            break;
        }
    }
    return out;
}

std::string render_sequence(std::string_view name, int offset, const std::vector<Count>& values, Format format) {
    std::string out;
    switch (format) {
        case Format::text:
            // b-file layout: "index value"
            for (std::size_t i = 0; i < values.size(); ++i) {
                out += std::to_string(offset + static_cast<int>(i)) + " " + values[i].str() + '\n';
            }
            break;
        case Format::csv:
            out += "n,value\n";
            for (std::size_t i = 0; i < values.size(); ++i) {
                out += std::to_string(offset + static_cast<int>(i)) + "," + values[i].str() + '\n';
            }
            break;
        case Format::json:
            out += "{\"name\":" + json_string(name) + ",\"offset\":" + std::to_string(offset) + ",\"values\":[" +
                   join_counts(values, ',') + "]}\n";
            break;
    }
    return out;
}

std::string render_reports(const std::vector<Report>& reports) {
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& r : reports) {
        os << (r.passed ? "PASS " : "FAIL ") << r.suite << " | " << r.name << " | " << r.range << " | " << r.cases
           << " cases";
        if (r.counterexample) os << " | counterexample: " << *r.counterexample;
        os << '\n';
        if (r.passed) ++passed;
    }
    os << "summary: " << passed << "/" << reports.size() << " checks passed\n";
    return os.str();
}

}  // namespace schreier::cli
