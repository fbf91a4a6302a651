#include "tsaug/ucr_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string_view>

namespace tsaug {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

bool is_missing_token(std::string_view t) {
    if (t.empty()) return true;
    if (t.size() == 3) {
        auto low = [](char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); };
        return low(t[0]) == 'n' && low(t[1]) == 'a' && low(t[2]) == 'n';
    }
    if (t == "?") return true;
    return false;
}

double parse_value(std::string_view t, const std::string& path, std::size_t line_no) {
    if (is_missing_token(t)) return std::numeric_limits<double>::quiet_NaN();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                 ": malformed value '" + std::string(t) + "'");
    }
    return v;
}

// Split on the file's delimiter. Tab wins over comma; otherwise whitespace.
std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    char delim = '\0';
    if (line.find('\t') != std::string_view::npos) {
        delim = '\t';
    } else if (line.find(',') != std::string_view::npos) {
        delim = ',';
    }
    if (delim != '\0') {
        std::size_t start = 0;
        while (true) {
            std::size_t pos = line.find(delim, start);
            if (pos == std::string_view::npos) {
                out.push_back(trim(line.substr(start)));
                break;
            }
            out.push_back(trim(line.substr(start, pos - start)));
            start = pos + 1;
        }
    } else {
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i > start) out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

} // namespace

Dataset load_ucr_tsv(const std::string& path, Split split,
                     const std::string& dataset_name) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");

    Dataset ds;
    ds.name = dataset_name;
    ds.split = split;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;

        auto fields = split_fields(line);
        if (fields.size() < 2) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected label plus at least one value");
        }
        LabeledSeries item;
        item.label = std::string(fields[0]);
        if (item.label.empty()) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": empty label");
        }
        item.values.reserve(fields.size() - 1);
        for (std::size_t i = 1; i < fields.size(); ++i) {
            item.values.push_back(parse_value(fields[i], path, line_no));
        }
        ds.items.push_back(std::move(item));
    }
    if (ds.items.empty()) {
        throw std::runtime_error("'" + path + "' contains no records");
    }
    ds.refresh_metadata();
    return ds;
}

std::string format_value(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 17);
    if (ec != std::errc{}) return "0";
    return std::string(buf, ptr);
}

void save_ucr_tsv(const Dataset& ds, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    std::string line;
    for (const auto& item : ds.items) {
        line.clear();
        line += item.label;
        for (double v : item.values) {
            line += '\t';
            line += format_value(v);
        }
        line += '\n';
        out << line;
    }
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

} // namespace tsaug
