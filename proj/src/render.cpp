#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "chordspace/io.hpp"

namespace chordspace {

namespace {

// Points run clockwise from the top, following the orientation of the circle.
double angle_of(std::size_t point, std::size_t points) {
  return 90.0 - 360.0 * static_cast<double>(point) / static_cast<double>(points);
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", std::abs(v) < 5e-5 ? 0.0 : v);
  return buf;
}

}  // namespace

RenderFormat parse_render_format(std::string_view text) {
  if (text == "dot") return RenderFormat::dot;
  if (text == "tikz") return RenderFormat::tikz;
  if (text == "svg" || text == "svg-via-dot") return RenderFormat::svg;
  throw StructuralError("unknown render format \"" + std::string(text) + "\"");
}

std::string render_dot(const ChordDiagram& d) {
  const std::size_t points = d.points();
  std::ostringstream out;
  out << "graph chord_diagram {\n"
      << "  layout=neato;\n"
      << "  label=\"" << d.encode() << "\";\n"
      << "  circle [shape=circle, label=\"\", width=2, fixedsize=true, pos=\"0,0!\"];\n"
      << "  node [shape=point, width=0.06];\n";
  for (std::size_t i = 0; i < points; ++i) {
    const double a = angle_of(i, points) * std::numbers::pi / 180.0;
    out << "  p" << i << " [pos=\"" << fixed(std::cos(a)) << "," << fixed(std::sin(a)) << "!\"];\n";
  }
  const auto partner = d.pairing();
  for (std::size_t i = 0; i < points; ++i) {
    const auto j = static_cast<std::size_t>(partner[i]);
    if (j < i) continue;
    const bool odd = d.framing()[d.labels()[i]] != 0;
    out << "  p" << i << " -- p" << j << " [style=" << (odd ? "dashed" : "solid") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_tikz(const ChordDiagram& d) {
  const std::size_t points = d.points();
  std::ostringstream out;
  out << "% " << d.encode() << "\n"
      << "\\begin{tikzpicture}\n"
      << "  \\draw (0,0) circle (1.5);\n";
  const auto partner = d.pairing();
  for (std::size_t i = 0; i < points; ++i) {
    const auto j = static_cast<std::size_t>(partner[i]);
    if (j < i) continue;
    const bool odd = d.framing()[d.labels()[i]] != 0;
    out << "  \\draw[" << (odd ? "dashed" : "solid") << "] (" << fixed(angle_of(i, points))
        << ":1.5) -- (" << fixed(angle_of(j, points)) << ":1.5);\n";
  }
  for (std::size_t i = 0; i < points; ++i) {
    out << "  \\fill (" << fixed(angle_of(i, points)) << ":1.5) circle (1.5pt);\n";
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

std::string render_svg(const ChordDiagram& d) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto input = dir / ("chordspace-" + std::to_string(::getpid()) + ".dot");
  {
    std::ofstream out(input);
    out << render_dot(d);
  }
  const std::string command = "dot -Tsvg '" + input.string() + "' 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(::popen(command.c_str(), "r"), &::pclose);
  std::string svg;
  if (pipe) {
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe.get())) > 0) svg.append(buf, got);
  }
  const int status = pipe ? ::pclose(pipe.release()) : -1;
  std::filesystem::remove(input);
  if (status != 0 || svg.empty()) {
    throw std::runtime_error("svg rendering needs Graphviz `dot` on PATH");
  }
  return svg;
}

}  // namespace chordspace
