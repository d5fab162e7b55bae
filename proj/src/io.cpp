#include "exb/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace exb::io {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    std::stringstream ss(line);
    while (std::getline(ss, cur, ',')) out.push_back(trim(cur));
    return out;
}

double parse_number(const std::string& tok, size_t line_no) {
    try {
        size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size())
            throw ParseError("trailing characters in number '" + tok +
                             "' on line " + std::to_string(line_no));
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad number '" + tok + "' on line " +
                         std::to_string(line_no));
    }
}

// Header plus fixed-width numeric rows; blank lines are skipped.
std::vector<std::vector<double>> read_table(const std::string& text,
                                            const std::string& header,
                                            size_t columns) {
    std::stringstream ss(text);
    std::string line;
    size_t line_no = 0;
    bool header_seen = false;
    std::vector<std::vector<double>> rows;
    while (std::getline(ss, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty()) continue;
        if (!header_seen) {
            std::string squeezed;
            for (char c : t)
                if (c != ' ' && c != '\t') squeezed += c;
            if (squeezed != header)
                throw ParseError("expected header '" + header + "', got '" +
                                 t + "'");
            header_seen = true;
            continue;
        }
        auto toks = split_csv_line(t);
        if (toks.size() != columns)
            throw ParseError("expected " + std::to_string(columns) +
                             " columns on line " + std::to_string(line_no));
        std::vector<double> row;
        for (const auto& tok : toks) row.push_back(parse_number(tok, line_no));
        rows.push_back(std::move(row));
    }
    if (!header_seen) throw ParseError("empty input, no '" + header +
                                       "' header found");
    return rows;
}

double infer_uniform_spacing(const std::vector<double>& x,
                             const char* what) {
    double d = x[1] - x[0];
    if (!(d > 0.0)) throw ParseError(std::string(what) +
                                     ": values must be strictly increasing");
    for (size_t i = 1; i + 1 < x.size(); ++i) {
        double di = x[i + 1] - x[i];
        if (std::fabs(di - d) > 1e-9 * std::max(1.0, std::fabs(d)))
            throw ParseError(std::string(what) +
                             ": spacing must be uniform");
        if (!(di > 0.0))
            throw ParseError(std::string(what) +
                             ": values must be strictly increasing");
    }
    return d;
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DensityProfile read_density_csv(const std::string& text) {
    auto rows = read_table(text, "x,rho", 2);
    if (rows.size() < 2)
        throw ParseError("density: need at least two rows to infer width");
    std::vector<double> x, rho;
    for (const auto& r : rows) {
        x.push_back(r[0]);
        if (r[1] < 0.0) throw ParseError("density: negative value");
        rho.push_back(r[1]);
    }
    double w = infer_uniform_spacing(x, "density");
    return DensityProfile(x.front() - 0.5 * w, x.back() + 0.5 * w, rho);
}

DensityProfile read_density_csv_file(const std::string& path) {
    return read_density_csv(read_file(path));
}

PotentialData read_potential_csv(const std::string& text) {
    // Sniff the header to choose between the 1D and 2D layouts.
    std::stringstream ss(text);
    std::string first;
    while (std::getline(ss, first)) {
        if (!trim(first).empty()) break;
    }
    std::string squeezed;
    for (char c : trim(first))
        if (c != ' ' && c != '\t') squeezed += c;

    PotentialData out;
    if (squeezed == "x,V") {
        auto rows = read_table(text, "x,V", 2);
        if (rows.size() < 2)
            throw ParseError("potential: need at least two rows");
        for (const auto& r : rows) {
            out.grid1.x.push_back(r[0]);
            out.grid1.V.push_back(r[1]);
        }
        out.grid1.dx = infer_uniform_spacing(out.grid1.x, "potential");
        return out;
    }
    if (squeezed == "x,y,V") {
        auto rows = read_table(text, "x,y,V", 3);
        if (rows.size() < 2)
            throw ParseError("potential: need at least two rows");
        // Row-major with x fastest: the first block shares one y value.
        size_t nx = 1;
        while (nx < rows.size() && rows[nx][1] == rows[0][1]) ++nx;
        if (nx < 2 || rows.size() % nx != 0)
            throw ParseError("potential: not a complete row-major lattice");
        size_t ny = rows.size() / nx;
        std::vector<double> xs(nx), ys(ny);
        for (size_t i = 0; i < nx; ++i) xs[i] = rows[i][0];
        for (size_t j = 0; j < ny; ++j) ys[j] = rows[j * nx][1];
        double dx = infer_uniform_spacing(xs, "potential x");
        double dy = ny >= 2 ? infer_uniform_spacing(ys, "potential y") : dx;
        for (size_t j = 0; j < ny; ++j)
            for (size_t i = 0; i < nx; ++i) {
                const auto& r = rows[j * nx + i];
                if (std::fabs(r[0] - xs[i]) > 1e-9 * std::max(1.0, dx) ||
                    r[1] != ys[j])
                    throw ParseError(
                        "potential: lattice rows out of row-major order");
            }
        out.two_d = true;
        out.grid2.nx = nx;
        out.grid2.ny = ny;
        out.grid2.dA = dx * dy;
        for (const auto& r : rows) out.grid2.V.push_back(r[2]);
        return out;
    }
    throw ParseError("expected header 'x,V' or 'x,y,V', got '" + trim(first) +
                     "'");
}

PotentialData read_potential_csv_file(const std::string& path) {
    return read_potential_csv(read_file(path));
}

std::vector<ConfinedInterval> read_intervals_csv(const std::string& text) {
    auto rows = read_table(text, "lo,hi,V", 3);
    if (rows.empty()) throw ParseError("intervals: no rows");
    std::vector<ConfinedInterval> out;
    for (const auto& r : rows) out.push_back({r[0], r[1], r[2]});
    return out;
}

std::vector<ConfinedInterval> read_intervals_csv_file(
    const std::string& path) {
    return read_intervals_csv(read_file(path));
}

}  // namespace exb::io
