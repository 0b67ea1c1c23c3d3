#include "symdom/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <system_error>

namespace symdom {

namespace fs = std::filesystem;

namespace {

std::string join(const std::vector<std::string>& cols) {
    std::string out;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out += ',';
        out += cols[i];
    }
    return out + '\n';
}

void coord_columns(const Factor& f, std::vector<std::string>& cols) {
    for (int k = 0; k < f.dim(); ++k) {
        cols.push_back("re" + std::to_string(k));
        cols.push_back("im" + std::to_string(k));
    }
}

void coord_values(const Element& x, std::string& line) {
    for (int k = 0; k < x.dim(); ++k) {
        line += ',' + format_double(x[k].real());
        line += ',' + format_double(x[k].imag());
    }
}

}  // namespace

void write_file_atomic(const std::string& path, const std::string& content) {
    const fs::path target(path);
    std::error_code ec;
    if (target.has_parent_path()) {
        fs::create_directories(target.parent_path(), ec);
        if (ec) throw Error(ErrorCode::io, "cannot create directory for '" + path + "': " + ec.message());
    }
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::io, "cannot open '" + tmp.string() + "' for writing");
        out << content;
        out.flush();
        if (!out) {
            fs::remove(tmp, ec);
            throw Error(ErrorCode::io, "write to '" + tmp.string() + "' failed");
        }
    }
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw Error(ErrorCode::io, "cannot rename onto '" + path + "': " + ec.message());
    }
}

void write_json_atomic(const std::string& path, const nlohmann::json& j) { write_file_atomic(path, j.dump(2) + "\n"); }

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<std::string> orbit_csv_header(const Factor& f) {
    std::vector<std::string> cols{"n"};
    coord_columns(f, cols);
    cols.push_back("norm");
    cols.push_back("kobayashi_step");
    return cols;
}

std::string orbit_csv(const OrbitRecord& r) {
    std::string out = join(orbit_csv_header(r.start.factor()));
    for (std::size_t n = 0; n < r.kobayashi_steps.size(); ++n) {
        std::string line = std::to_string(n);
        coord_values(r.points[n], line);
        line += ',' + format_double(r.norms[n]);
        line += ',' + format_double(r.kobayashi_steps[n]);
        out += line + '\n';
    }
    return out;
}

std::vector<std::string> horoball_csv_header(const Factor& f, const std::vector<double>& s_list) {
    std::vector<std::string> cols{"u", "v"};
    coord_columns(f, cols);
    cols.push_back("F");
    cols.push_back("in_ball");
    for (double s : s_list) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "member_%g", s);
        cols.push_back(buf);
    }
    return cols;
}

std::string horoball_csv(const Factor& f, const std::vector<GridRow>& rows, const std::vector<double>& s_list) {
    std::string out = join(horoball_csv_header(f, s_list));
    for (const auto& r : rows) {
        std::string line = format_double(r.u) + ',' + format_double(r.v);
        coord_values(r.x, line);
        line += ',' + format_double(r.F);
        line += r.in_ball ? ",1" : ",0";
        for (bool m : r.member) line += m ? ",1" : ",0";
        out += line + '\n';
    }
    return out;
}

std::string indexed_path(const std::string& path, int k, int count) {
    if (count == 1) return path;
    const fs::path p(path);
    fs::path out = p.parent_path() / (p.stem().string() + "_" + std::to_string(k) + p.extension().string());
    return out.string();
}

}  // namespace symdom
