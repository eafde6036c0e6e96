#pragma once

#include <string>
#include <vector>

#include "groupsel/matrix.hpp"
#include "groupsel/permutation.hpp"

namespace groupsel {

// Matrix files are plain text: a header line `M N complex|real` followed by
// M rows of N entries.  Complex entries are `re im` token pairs, real entries
// single tokens, all printed with 17 significant digits so that a
// write-then-read round trip reproduces every double bit-identically.
ComplexMatrix read_matrix(const std::string& path);
void write_matrix(const std::string& path, const ComplexMatrix& m);

// Group files: the degree on the first line, then one generator image-array
// per line; the identity permutation is omitted.  Reading takes the closure.
PermutationGroup read_group(const std::string& path);
void write_group(const std::string& path, const PermutationGroup& group);

// 17-significant-digit decimal form used across all text output.
std::string format_double(double v);
std::string format_cplx(const cplx& v);

// Tab-separated report with a `#`-prefixed header naming the columns.
struct TsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string render_tsv(const TsvTable& table);
void write_tsv(const std::string& path, const TsvTable& table);

// Minimal static SVG charts: labeled bars for residual tables and a single
// polyline for sweeps.  Values are scaled to fit; no external assets.
void write_svg_bars(const std::string& path, const std::string& title,
                    const std::vector<std::string>& labels, const std::vector<double>& values);
void write_svg_polyline(const std::string& path, const std::string& title,
                        const std::vector<double>& x, const std::vector<double>& y);

// Writes via a temporary file in the same directory plus an atomic rename.
void atomic_write_text(const std::string& path, const std::string& content);

}  // namespace groupsel
