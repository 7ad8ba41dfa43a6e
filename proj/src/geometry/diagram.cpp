#include "curvebraid/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace curvebraid {

std::string bplus_csv(const BPlusGraph &g) {
  std::ostringstream os;
  os.precision(12);
  os << "arc_id,label,point_index,re,im\n";
  for (const auto &arc : g.arcs)
    for (std::size_t k = 0; k < arc.points.size(); ++k)
      os << arc.id << ',' << arc.label << ',' << k << ',' << arc.points[k].real() << ','
         << arc.points[k].imag() << '\n';
  return os.str();
}

namespace {

const char *label_colour(int label) {
  static const char *palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  return palette[(label - 1 + 6) % 6];
}

} // namespace

std::string bplus_svg(const BPlusGraph &g, const RegionMap *regions) {
  const double w = g.window.xmax - g.window.xmin;
  const double h = g.window.ymax - g.window.ymin;
  const double scale = 600.0 / std::max(w, h);
  // SVG y grows downwards.
  const auto X = [&](Complex z) { return (z.real() - g.window.xmin) * scale; };
  const auto Y = [&](Complex z) { return (g.window.ymax - z.imag()) * scale; };

  std::ostringstream os;
  os.precision(6);
  os << std::fixed;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * scale << "\" height=\"" << h * scale
     << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (regions) {
    os << "<polygon fill=\"#f4f4f4\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (const auto &v : regions->boundary.vertices())
      os << X(v) << ',' << Y(v) << ' ';
    os << "\"/>\n";
  }
  for (const auto &arc : g.arcs) {
    os << "<polyline fill=\"none\" stroke=\"" << label_colour(arc.label) << "\" stroke-width=\"1.5\" points=\"";
    for (const auto &p : arc.points)
      os << X(p) << ',' << Y(p) << ' ';
    os << "\"><title>arc " << arc.id << " label " << arc.label << "</title></polyline>\n";
  }
  for (const auto &b : g.branches.points) {
    os << "<circle cx=\"" << X(b.z) << "\" cy=\"" << Y(b.z) << "\" r=\"4\" fill=\""
       << (b.simple ? "black" : "orange") << "\"/>\n";
  }
  if (regions) {
    for (const auto &r : regions->regions)
      os << "<text x=\"" << X(r.point) << "\" y=\"" << Y(r.point)
         << "\" font-size=\"14\" text-anchor=\"middle\">U" << r.index + 1 << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

} // namespace curvebraid
