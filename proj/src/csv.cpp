#include "acps/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace acps::csv {

std::string format_number(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_number: conversion failed");
    }
    return std::string(buf.data(), end);
}

std::string render(const Row& header, const std::vector<Row>& rows) {
    std::string out;
    auto append = [&out](const Row& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += row[i];
        }
        out += '\n';
    };
    append(header);
    for (const Row& r : rows) {
        append(r);
    }
    return out;
}

void write_file(const std::filesystem::path& path, const Row& header, const std::vector<Row>& rows) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << render(header, rows);
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

std::vector<Row> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::vector<Row> rows;
    std::string line;
    while (std::getline(in, line)) {
        Row row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            row.push_back(cell);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace acps::csv
