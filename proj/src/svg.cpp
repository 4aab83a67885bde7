#include "framescope/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace framescope {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                "#9467bd", "#ff7f0e", "#8c564b"};

struct Box {
  double xmin = -1.0, xmax = 1.0, ymin = -1.0, ymax = 1.0;
  bool seeded = false;

  void take(double x, double y) {
    if (!seeded) {
      xmin = xmax = x;
      ymin = ymax = y;
      seeded = true;
      return;
    }
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
};

}

std::string render_spectrum_svg(const SpectralReport& report) {
  constexpr double kSize = 720.0;   // drawing square
  constexpr double kLegend = 150.0; // legend strip height

  Box box;
  for (const Complex& ev : report.eigenvalues_multiplier) {
    box.take(ev.real(), ev.imag());
  }
  for (const CertificateRecord& rec : report.certificates) {
    const SpectralRegion& region = rec.certificate.region;
    if (region.kind() == SpectralRegion::Kind::disk) {
      const Disk& d = region.disk();
      box.take(d.center.real() - d.radius, d.center.imag() - d.radius);
      box.take(d.center.real() + d.radius, d.center.imag() + d.radius);
    } else {
      for (const Complex& v : region.vertices()) box.take(v.real(), v.imag());
    }
  }
  double width = box.xmax - box.xmin;
  double height = box.ymax - box.ymin;
  const double span = std::max({width, height, 1e-9});
  // 10% margin on each side, equal scale on both axes so circles stay round.
  const double cx = 0.5 * (box.xmin + box.xmax);
  const double cy = 0.5 * (box.ymin + box.ymax);
  const double half = 0.5 * span * 1.2;
  const double scale = kSize / (2.0 * half);

  auto sx = [&](double x) { return (x - (cx - half)) * scale; };
  auto sy = [&](double y) { return kSize - (y - (cy - half)) * scale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kSize)
      << "\" height=\"" << num(kSize + kLegend) << "\" viewBox=\"0 0 "
      << num(kSize) << " " << num(kSize + kLegend) << "\">\n";
  svg << "  <rect x=\"0\" y=\"0\" width=\"" << num(kSize) << "\" height=\""
      << num(kSize + kLegend) << "\" fill=\"#ffffff\"/>\n";

  // Axes, clipped to the drawing square when the origin is in view.
  if (cx - half <= 0.0 && 0.0 <= cx + half) {
    svg << "  <line x1=\"" << num(sx(0.0)) << "\" y1=\"0\" x2=\""
        << num(sx(0.0)) << "\" y2=\"" << num(kSize)
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  }
  if (cy - half <= 0.0 && 0.0 <= cy + half) {
    svg << "  <line x1=\"0\" y1=\"" << num(sy(0.0)) << "\" x2=\"" << num(kSize)
        << "\" y2=\"" << num(sy(0.0))
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  }

  std::size_t color_index = 0;
  for (const CertificateRecord& rec : report.certificates) {
    const char* color = kPalette[color_index % (sizeof kPalette / sizeof *kPalette)];
    ++color_index;
    const SpectralRegion& region = rec.certificate.region;
    if (region.kind() == SpectralRegion::Kind::disk) {
      const Disk& d = region.disk();
      svg << "  <circle cx=\"" << num(sx(d.center.real())) << "\" cy=\""
          << num(sy(d.center.imag())) << "\" r=\"" << num(d.radius * scale)
          << "\" fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.5\"/>\n";
    } else if (region.vertices().size() >= 2) {
      svg << "  <polygon points=\"";
      for (std::size_t i = 0; i < region.vertices().size(); ++i) {
        const Complex& v = region.vertices()[i];
        if (i > 0) svg << " ";
        svg << num(sx(v.real())) << "," << num(sy(v.imag()));
      }
      svg << "\" fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.5\"/>\n";
    } else {
      const Complex& v = region.vertices()[0];
      svg << "  <circle cx=\"" << num(sx(v.real())) << "\" cy=\""
          << num(sy(v.imag())) << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
    }
  }

  for (const Complex& ev : report.eigenvalues_multiplier) {
    svg << "  <circle cx=\"" << num(sx(ev.real())) << "\" cy=\""
        << num(sy(ev.imag()))
        << "\" r=\"3\" fill=\"#000000\" stroke=\"none\"/>\n";
  }

  // Legend.
  double ly = kSize + 22.0;
  svg << "  <text x=\"12\" y=\"" << num(ly)
      << "\" font-family=\"monospace\" font-size=\"13\">eigenvalues ("
      << report.eigenvalues_multiplier.size() << ") as points</text>\n";
  color_index = 0;
  for (const CertificateRecord& rec : report.certificates) {
    ly += 20.0;
    const char* color = kPalette[color_index % (sizeof kPalette / sizeof *kPalette)];
    ++color_index;
    svg << "  <rect x=\"12\" y=\"" << num(ly - 10.0)
        << "\" width=\"12\" height=\"12\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    svg << "  <text x=\"32\" y=\"" << num(ly)
        << "\" font-family=\"monospace\" font-size=\"13\">" << rec.name
        << (rec.certificate.overall ? " [contained]" : " [violated]")
        << "</text>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}
