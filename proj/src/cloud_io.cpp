// SPDX-FileCopyrightText: 2026 pcaac contributors
// SPDX-License-Identifier: Apache-2.0

#include "pcaac/cloud_io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string_view>

#include "pcaac/errors.hpp"

namespace pcaac {
namespace {

std::string read_whole_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open for reading: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) {
        throw IoError("read failed: " + path);
    }
    return ss.str();
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

double parse_double(std::string_view tok, std::size_t line_no) {
    std::string_view body = tok;
    if (!body.empty() && body.front() == '+') body.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (body.empty() || ec != std::errc{} ||
        ptr != body.data() + body.size()) {
        throw FormatError("line " + std::to_string(line_no) +
                          ": not a number: '" + std::string(tok) + "'");
    }
    if (!std::isfinite(v)) {
        throw FormatError("line " + std::to_string(line_no) +
                          ": non-finite coordinate");
    }
    return v;
}

long parse_nonneg_int(std::string_view tok, std::size_t line_no, long max_val,
                      const char* what) {
    long v = -1;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 0 ||
        v > max_val) {
        throw FormatError("line " + std::to_string(line_no) + ": bad " +
                          std::string(what) + " '" + std::string(tok) + "'");
    }
    return v;
}

int parse_label_code(std::string_view tok, std::size_t line_no, int max_code) {
    return static_cast<int>(parse_nonneg_int(tok, line_no, max_code, "label code"));
}

void format_point(char* buf, std::size_t n, const Point3& p) {
    std::snprintf(buf, n, "%.17g %.17g %.17g", p.x, p.y, p.z);
}

}  // namespace

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open for writing: " + tmp);
        }
        out.write(content.data(),
                  static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw IoError("write failed: " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        throw IoError("rename failed: " + tmp + " -> " + path + ": " +
                      ec.message());
    }
}

LabeledCloud load_xyz(const std::string& path) {
    const std::string data = read_whole_file(path);
    LabeledCloud cloud;
    std::vector<NoiseLabel> truth;
    int field_count = 0;  // 0 until first data line fixes it

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= data.size()) {
        std::size_t eol = data.find('\n', pos);
        if (eol == std::string::npos) eol = data.size();
        std::string_view line(data.data() + pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (eol == data.size() && line.empty()) break;

        auto fields = split_fields(line);
        if (fields.empty() || fields[0][0] == '#') continue;
        if (fields.size() != 3 && fields.size() != 4) {
            throw FormatError("line " + std::to_string(line_no) +
                              ": expected 3 or 4 fields, got " +
                              std::to_string(fields.size()));
        }
        if (field_count == 0) {
            field_count = static_cast<int>(fields.size());
        } else if (static_cast<int>(fields.size()) != field_count) {
            throw FormatError("line " + std::to_string(line_no) +
                              ": mixed labeled and unlabeled lines");
        }
        Point3 p{parse_double(fields[0], line_no),
                 parse_double(fields[1], line_no),
                 parse_double(fields[2], line_no)};
        cloud.points.push_back(p);
        if (field_count == 4) {
            truth.push_back(static_cast<NoiseLabel>(
                parse_label_code(fields[3], line_no, 3)));
        }
        if (eol == data.size()) break;
    }
    if (field_count == 4) {
        cloud.truth = std::move(truth);
    }
    return cloud;
}

void save_xyz(const LabeledCloud& cloud, const std::string& path,
              LabelColumn labels) {
    if (labels == LabelColumn::Truth && !cloud.truth) {
        throw ContractError("save_xyz: truth labels requested but absent");
    }
    if (labels == LabelColumn::Predicted && !cloud.predicted) {
        throw ContractError("save_xyz: predicted labels requested but absent");
    }
    std::string out;
    out.reserve(cloud.size() * 48);
    char buf[96];
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        format_point(buf, sizeof buf, cloud.points[i]);
        out += buf;
        if (labels == LabelColumn::Truth) {
            out += ' ';
            out += std::to_string(static_cast<int>((*cloud.truth)[i]));
        } else if (labels == LabelColumn::Predicted) {
            out += ' ';
            out += std::to_string(static_cast<int>((*cloud.predicted)[i]));
        }
        out += '\n';
    }
    write_file_atomic(path, out);
}

namespace {

struct PlyHeader {
    std::size_t vertex_count = 0;
    // property slot indexes on the vertex element, -1 when absent
    int ix = -1, iy = -1, iz = -1, ilabel = -1;
    int property_count = 0;
    std::size_t header_lines = 0;
};

PlyHeader parse_ply_header(const std::string& data, const std::string& path) {
    PlyHeader h;
    std::istringstream in(data);
    std::string line;
    std::size_t line_no = 0;

    auto next_line = [&]() -> bool {
        if (!std::getline(in, line)) return false;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        ++line_no;
        return true;
    };

    if (!next_line() || line != "ply") {
        throw FormatError(path + ": missing 'ply' magic");
    }
    bool in_vertex = false;
    bool format_seen = false;
    bool ended = false;
    while (next_line()) {
        auto fields = split_fields(line);
        if (fields.empty() || fields[0] == "comment") continue;
        if (fields[0] == "format") {
            if (fields.size() < 2 || fields[1] != "ascii") {
                throw FormatError(path + ": only ASCII PLY is supported");
            }
            format_seen = true;
        } else if (fields[0] == "element") {
            if (fields.size() < 3) {
                throw FormatError(path + ": line " + std::to_string(line_no) +
                                  ": bad element declaration");
            }
            in_vertex = (fields[1] == "vertex");
            if (in_vertex) {
                h.vertex_count = static_cast<std::size_t>(parse_nonneg_int(
                    fields[2], line_no, 1L << 40, "vertex count"));
            }
        } else if (fields[0] == "property" && in_vertex) {
            if (fields.size() < 3) {
                throw FormatError(path + ": line " + std::to_string(line_no) +
                                  ": bad property declaration");
            }
            const std::string_view name = fields[2];
            if (name == "x") h.ix = h.property_count;
            if (name == "y") h.iy = h.property_count;
            if (name == "z") h.iz = h.property_count;
            if (name == "label") h.ilabel = h.property_count;
            ++h.property_count;
        } else if (fields[0] == "end_header") {
            ended = true;
            break;
        }
    }
    if (!ended || !format_seen) {
        throw FormatError(path + ": truncated PLY header");
    }
    if (h.ix < 0 || h.iy < 0 || h.iz < 0) {
        throw FormatError(path + ": vertex element lacks x/y/z properties");
    }
    h.header_lines = line_no;
    return h;
}

}  // namespace

LabeledCloud load_ply(const std::string& path) {
    const std::string data = read_whole_file(path);
    const PlyHeader h = parse_ply_header(data, path);

    std::istringstream in(data);
    std::string line;
    for (std::size_t i = 0; i < h.header_lines; ++i) std::getline(in, line);

    LabeledCloud cloud;
    cloud.points.reserve(h.vertex_count);
    std::vector<NoiseLabel> truth;
    if (h.ilabel >= 0) truth.reserve(h.vertex_count);

    std::size_t line_no = h.header_lines;
    std::size_t read = 0;
    while (read < h.vertex_count) {
        if (!std::getline(in, line)) {
            throw FormatError(path + ": header declares " +
                              std::to_string(h.vertex_count) +
                              " vertices but data ends after " +
                              std::to_string(read));
        }
        if (!line.empty() && line.back() == '\r') line.pop_back();
        ++line_no;
        auto fields = split_fields(line);
        if (fields.empty()) continue;
        if (static_cast<int>(fields.size()) < h.property_count) {
            throw FormatError(path + ": line " + std::to_string(line_no) +
                              ": expected " + std::to_string(h.property_count) +
                              " properties, got " +
                              std::to_string(fields.size()));
        }
        Point3 p{parse_double(fields[h.ix], line_no),
                 parse_double(fields[h.iy], line_no),
                 parse_double(fields[h.iz], line_no)};
        cloud.points.push_back(p);
        if (h.ilabel >= 0) {
            truth.push_back(static_cast<NoiseLabel>(
                parse_label_code(fields[h.ilabel], line_no, 3)));
        }
        ++read;
    }
    if (h.ilabel >= 0) cloud.truth = std::move(truth);
    return cloud;
}

void save_ply(const LabeledCloud& cloud, const std::string& path,
              LabelColumn labels) {
    if (labels == LabelColumn::Truth && !cloud.truth) {
        throw ContractError("save_ply: truth labels requested but absent");
    }
    if (labels == LabelColumn::Predicted && !cloud.predicted) {
        throw ContractError("save_ply: predicted labels requested but absent");
    }
    std::string out;
    out.reserve(64 + cloud.size() * 48);
    out += "ply\nformat ascii 1.0\nelement vertex ";
    out += std::to_string(cloud.size());
    out += "\nproperty float x\nproperty float y\nproperty float z\n";
    if (labels != LabelColumn::None) {
        out += "property uchar label\n";
    }
    out += "end_header\n";
    char buf[96];
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        format_point(buf, sizeof buf, cloud.points[i]);
        out += buf;
        if (labels == LabelColumn::Truth) {
            out += ' ';
            out += std::to_string(static_cast<int>((*cloud.truth)[i]));
        } else if (labels == LabelColumn::Predicted) {
            out += ' ';
            out += std::to_string(static_cast<int>((*cloud.predicted)[i]));
        }
        out += '\n';
    }
    write_file_atomic(path, out);
}

std::vector<Prediction> load_predictions(const std::string& path) {
    const std::string data = read_whole_file(path);
    std::vector<Prediction> out;
    std::istringstream in(data);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto fields = split_fields(line);
        if (fields.empty() || fields[0][0] == '#') continue;
        if (fields.size() != 1) {
            throw FormatError("line " + std::to_string(line_no) +
                              ": expected one label code");
        }
        out.push_back(static_cast<Prediction>(
            parse_label_code(fields[0], line_no, 1)));
    }
    return out;
}

void save_predictions(const std::vector<Prediction>& predicted,
                      const std::string& path) {
    std::string out;
    out.reserve(predicted.size() * 2);
    for (Prediction p : predicted) {
        out += (p == Prediction::Noise) ? "1\n" : "0\n";
    }
    write_file_atomic(path, out);
}

}  // namespace pcaac
