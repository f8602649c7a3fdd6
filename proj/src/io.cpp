#include "hzeta/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace hzeta {

std::string fmt_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::string>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("write_csv: cannot open '" + path + "' for writing");
    out << header << "\n";
    for (const auto& r : rows) out << r << "\n";
    if (!out) throw Error("write_csv: write failed for '" + path + "'");
}

void write_orbits_csv(const std::string& path, const BranchSystem& sys,
                      const std::vector<OrbitClass>& classes) {
    std::vector<std::string> rows;
    rows.reserve(classes.size());
    for (const auto& c : classes) {
        std::string row = word_label(sys, c.word);
        row += "," + std::to_string(c.word_length);
        row += "," + fmt_double(c.trace);
        row += "," + fmt_double(c.norm_value);
        row += "," + std::to_string(c.det_sign);
        row += ",";
        row += c.primitive ? "1" : "0";
        row += "," + std::to_string(c.multiplicity_n);
        rows.push_back(std::move(row));
    }
    write_csv(path, "word,len,trace,norm,det,primitive,n_mult", rows);
}

void write_spectrum_csv(const std::string& path, const std::vector<SpectrumLine>& lines) {
    std::vector<std::string> rows;
    rows.reserve(lines.size());
    for (const auto& l : lines)
        rows.push_back(fmt_double(l.norm_value) + "," + std::to_string(l.det_sign) + "," +
                       std::to_string(l.multiplicity));
    write_csv(path, "norm,det,mult", rows);
}

void write_grid_csv(const std::string& path, const GridResult& grid) {
    std::vector<std::string> rows;
    rows.reserve(grid.points.size());
    for (const auto& p : grid.points) {
        std::string row = fmt_double(p.re) + "," + fmt_double(p.im);
        row += "," + fmt_double(p.z.real()) + "," + fmt_double(p.z.imag());
        row += "," + fmt_double(std::abs(p.z));
        row += "," + std::to_string(p.flag);
        rows.push_back(std::move(row));
    }
    write_csv(path, "re_s,im_s,re_Z,im_Z,abs_Z,flag", rows);
}

void write_zeros_csv(const std::string& path, const std::vector<Zero>& zeros) {
    std::vector<std::string> rows;
    rows.reserve(zeros.size());
    for (const auto& z : zeros)
        rows.push_back(fmt_double(z.s.real()) + "," + fmt_double(z.s.imag()) + "," +
                       fmt_double(z.residual));
    write_csv(path, "re,im,residual", rows);
}

} // namespace hzeta
