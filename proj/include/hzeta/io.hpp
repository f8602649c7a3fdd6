#pragma once

#include <string>
#include <vector>

#include "hzeta/resonances.hpp"
#include "hzeta/symbolic.hpp"

namespace hzeta {

// Shortest-roundtrip decimal rendering of a double (via std::to_chars).
std::string fmt_double(double x);

// Generic CSV writer: UTF-8, '\n' line endings, header row first.
void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::string>& rows);

// Schema: word,len,trace,norm,det,primitive,n_mult
void write_orbits_csv(const std::string& path, const BranchSystem& sys,
                      const std::vector<OrbitClass>& classes);

// Schema: norm,det,mult
void write_spectrum_csv(const std::string& path, const std::vector<SpectrumLine>& lines);

// Schema: re_s,im_s,re_Z,im_Z,abs_Z,flag
void write_grid_csv(const std::string& path, const GridResult& grid);

// Schema: re,im,residual
void write_zeros_csv(const std::string& path, const std::vector<Zero>& zeros);

} // namespace hzeta
