#include "groupsel/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "groupsel/errors.hpp"

namespace groupsel {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// std::stod throws out_of_range on subnormals, which must round trip; use
// strtod and keep any finite result.
double parse_double(const std::string& token, const std::string& path) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin)
    throw ValidationError(path + ": expected a number, got '" + token + "'");
  if (end != begin + token.size())
    throw ValidationError(path + ": trailing characters in number '" + token + "'");
  if (!std::isfinite(v)) throw ValidationError(path + ": non-finite entry '" + token + "'");
  return v;
}

long parse_long(const std::string& token, const std::string& path) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(token, &used);
  } catch (const std::exception&) {
    throw ValidationError(path + ": expected an integer, got '" + token + "'");
  }
  if (used != token.size())
    throw ValidationError(path + ": trailing characters in integer '" + token + "'");
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_cplx(const cplx& v) {
  return format_double(v.real()) + " " + format_double(v.imag());
}

void atomic_write_text(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot open " + tmp + " for writing");
    out << content;
    out.flush();
    if (!out) throw ValidationError("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw ValidationError("cannot rename " + tmp + " to " + path);
}

ComplexMatrix read_matrix(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string rows_tok, cols_tok, kind;
  if (!(in >> rows_tok >> cols_tok >> kind))
    throw ValidationError(path + ": missing 'M N complex|real' header");
  const long rows = parse_long(rows_tok, path);
  const long cols = parse_long(cols_tok, path);
  if (rows < 1 || cols < 1) throw ValidationError(path + ": dimensions must be positive");
  const bool complex_entries = kind == "complex";
  if (!complex_entries && kind != "real")
    throw ValidationError(path + ": entry kind must be 'complex' or 'real', got '" + kind + "'");

  ComplexMatrix m(static_cast<int>(rows), static_cast<int>(cols));
  std::string tok;
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) {
      if (!(in >> tok)) throw ValidationError(path + ": fewer entries than the header declares");
      const double re = parse_double(tok, path);
      double im = 0.0;
      if (complex_entries) {
        if (!(in >> tok)) throw ValidationError(path + ": dangling real part of a complex entry");
        im = parse_double(tok, path);
      }
      m(static_cast<int>(i), static_cast<int>(j)) = cplx(re, im);
    }
  if (in >> tok) throw ValidationError(path + ": more entries than the header declares");
  return m;
}

void write_matrix(const std::string& path, const ComplexMatrix& m) {
  if (m.rows() < 1 || m.cols() < 1) throw ValidationError("refusing to write an empty matrix");
  if (!m.all_finite()) throw ValidationError("refusing to write non-finite entries");
  const bool complex_entries = m.max_abs_imag() > 0.0;
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << ' ' << (complex_entries ? "complex" : "real") << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      if (complex_entries)
        out << format_cplx(m(i, j));
      else
        out << format_double(m(i, j).real());
    }
    out << '\n';
  }
  atomic_write_text(path, out.str());
}

PermutationGroup read_group(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  int degree = -1;
  std::vector<Permutation> generators;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<std::string> toks;
    std::string tok;
    while (fields >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (degree < 0) {
      if (toks.size() != 1) throw ValidationError(path + ": first line must be the degree alone");
      const long d = parse_long(toks[0], path);
      if (d < 1) throw ValidationError(path + ": degree must be positive");
      degree = static_cast<int>(d);
      continue;
    }
    if (static_cast<int>(toks.size()) != degree)
      throw ValidationError(path + ": generator line has " + std::to_string(toks.size()) +
                            " images, expected " + std::to_string(degree));
    std::vector<int> images(degree);
    for (int i = 0; i < degree; ++i) {
      const long v = parse_long(toks[static_cast<std::size_t>(i)], path);
      if (v < 0 || v >= degree)
        throw ValidationError(path + ": image " + std::to_string(v) + " out of range");
      images[i] = static_cast<int>(v);
    }
    generators.emplace_back(std::move(images));
  }
  if (degree < 0) throw ValidationError(path + ": empty group file");
  return PermutationGroup::closure(degree, std::move(generators));
}

void write_group(const std::string& path, const PermutationGroup& group) {
  std::ostringstream out;
  out << group.degree() << '\n';
  for (const Permutation& g : group.generators()) {
    if (g.is_identity()) continue;
    for (int i = 0; i < group.degree(); ++i) {
      if (i > 0) out << ' ';
      out << g(i);
    }
    out << '\n';
  }
  atomic_write_text(path, out.str());
}

std::string render_tsv(const TsvTable& table) {
  std::ostringstream out;
  out << '#';
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) out << '\t';
    out << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size())
      throw ValidationError("TSV row width does not match the header");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << '\t';
      out << row[c];
    }
    out << '\n';
  }
  return out.str();
}

void write_tsv(const std::string& path, const TsvTable& table) {
  atomic_write_text(path, render_tsv(table));
}

namespace {

constexpr int kSvgWidth = 640;
constexpr int kSvgHeight = 360;
constexpr int kMargin = 56;

std::string svg_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&')
      out += "&amp;";
    else if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else
      out += c;
  }
  return out;
}

std::string svg_open(const std::string& title) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSvgWidth << "\" height=\""
      << kSvgHeight << "\" viewBox=\"0 0 " << kSvgWidth << ' ' << kSvgHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kSvgWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"15\">" << svg_escape(title) << "</text>\n";
  return out.str();
}

std::string axis_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

}  // namespace

void write_svg_bars(const std::string& path, const std::string& title,
                    const std::vector<std::string>& labels, const std::vector<double>& values) {
  if (labels.size() != values.size())
    throw ValidationError("bar chart needs one label per value");
  if (values.empty()) throw ValidationError("bar chart needs at least one value");
  double vmax = 0.0;
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0)
      throw ValidationError("bar chart values must be finite and non-negative");
    vmax = std::max(vmax, v);
  }
  if (vmax == 0.0) vmax = 1.0;

  const double plot_w = kSvgWidth - 2.0 * kMargin;
  const double plot_h = kSvgHeight - 2.0 * kMargin;
  const double slot = plot_w / static_cast<double>(values.size());
  const double bar_w = slot * 0.7;

  std::ostringstream out;
  out << svg_open(title);
  out << "<line x1=\"" << kMargin << "\" y1=\"" << kSvgHeight - kMargin << "\" x2=\""
      << kSvgWidth - kMargin << "\" y2=\"" << kSvgHeight - kMargin
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "<text x=\"" << kMargin << "\" y=\"" << kMargin - 8
      << "\" font-family=\"sans-serif\" font-size=\"11\">" << svg_escape(axis_label(vmax))
      << "</text>\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double h = plot_h * values[i] / vmax;
    const double x = kMargin + slot * static_cast<double>(i) + (slot - bar_w) / 2.0;
    const double y = kSvgHeight - kMargin - h;
    out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << bar_w << "\" height=\"" << h
        << "\" fill=\"#4878a8\"/>\n";
    out << "<text x=\"" << x + bar_w / 2.0 << "\" y=\"" << kSvgHeight - kMargin + 16
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << svg_escape(labels[i]) << "</text>\n";
  }
  out << "</svg>\n";
  atomic_write_text(path, out.str());
}

void write_svg_polyline(const std::string& path, const std::string& title,
                        const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw ValidationError("polyline needs matching x and y lengths");
  if (x.size() < 2) throw ValidationError("polyline needs at least two points");
  double xmin = x[0], xmax = x[0], ymin = y[0], ymax = y[0];
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i]))
      throw ValidationError("polyline values must be finite");
    xmin = std::min(xmin, x[i]);
    xmax = std::max(xmax, x[i]);
    ymin = std::min(ymin, y[i]);
    ymax = std::max(ymax, y[i]);
  }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) ymax = ymin + 1.0;

  const double plot_w = kSvgWidth - 2.0 * kMargin;
  const double plot_h = kSvgHeight - 2.0 * kMargin;
  std::ostringstream pts;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) pts << ' ';
    const double px = kMargin + plot_w * (x[i] - xmin) / (xmax - xmin);
    const double py = kSvgHeight - kMargin - plot_h * (y[i] - ymin) / (ymax - ymin);
    pts << px << ',' << py;
  }

  std::ostringstream out;
  out << svg_open(title);
  out << "<line x1=\"" << kMargin << "\" y1=\"" << kSvgHeight - kMargin << "\" x2=\""
      << kSvgWidth - kMargin << "\" y2=\"" << kSvgHeight - kMargin
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin << "\" y2=\""
      << kSvgHeight - kMargin << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "<text x=\"" << kMargin << "\" y=\"" << kMargin - 8
      << "\" font-family=\"sans-serif\" font-size=\"11\">" << svg_escape(axis_label(ymax))
      << "</text>\n";
  out << "<text x=\"" << kMargin << "\" y=\"" << kSvgHeight - kMargin + 16
      << "\" font-family=\"sans-serif\" font-size=\"11\">" << svg_escape(axis_label(xmin))
      << "</text>\n";
  out << "<text x=\"" << kSvgWidth - kMargin << "\" y=\"" << kSvgHeight - kMargin + 16
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
      << svg_escape(axis_label(xmax)) << "</text>\n";
  out << "<polyline fill=\"none\" stroke=\"#4878a8\" stroke-width=\"1.5\" points=\"" << pts.str()
      << "\"/>\n";
  out << "</svg>\n";
  atomic_write_text(path, out.str());
}

}  // namespace groupsel
