#include "pdiag/cli/render.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace pdiag::cli {
namespace {

std::string fixed2(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, 2);
  return ec == std::errc{} ? std::string(buf, end) : std::string("0.00");
}

double natural_log(const Integer& x) {
  long exp2 = 0;
  const double mantissa = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp2) * std::log(2.0);
}

// log_q(x), exact when x is a power of q.
Rational log_base(const Integer& x, const Integer& q) {
  Integer rest;
  const auto count = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
  if (rest == 1) return Rational(Integer(std::to_string(count)));
  return Rational(natural_log(x) / natural_log(q));
}

std::string vertex_label(const LatticePoint& p) {
  return "(" + p.x.get_str() + "," + std::to_string(p.y) + ")";
}

}  // namespace

RenderResult render_svg(const PolynomialDiagram& diagram, const RenderSpec& spec) {
  RenderResult result;
  const auto& vertices = diagram.vertices();
  const Integer& q = diagram.source().q();

  bool log_x = spec.log_x;
  if (diagram.degenerate())
    result.warnings.push_back("degenerate diagram (q = 1): every vertex has x = 1, drawn as a segment");
  if (log_x && q == 1) {
    result.warnings.push_back("log-x needs q >= 2; falling back to a linear x axis");
    log_x = false;
  }

  std::vector<Rational> xs;
  xs.reserve(vertices.size());
  for (const auto& v : vertices) xs.push_back(log_x ? log_base(v.x, q) : Rational(v.x));
  Rational x_min = xs.front(), x_max = xs.front();
  unsigned long y_max = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < x_min) x_min = xs[i];
    if (xs[i] > x_max) x_max = xs[i];
    y_max = std::max(y_max, vertices[i].y);
  }

  const double left = spec.margins;
  const double right = static_cast<double>(spec.width_px) - spec.margins;
  const double top = spec.margins;
  const double bottom = static_cast<double>(spec.height_px) - spec.margins;

  auto px = [&](std::size_t i) {
    if (x_max == x_min) return (left + right) / 2;
    const Rational t = (xs[i] - x_min) / (x_max - x_min);
    return left + t.get_d() * (right - left);
  };
  auto py = [&](std::size_t i) {
    const double t = y_max == 0 ? 0.0 : static_cast<double>(vertices[i].y) / static_cast<double>(y_max);
    return bottom - t * (bottom - top);
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width_px
      << "\" height=\"" << spec.height_px << "\" viewBox=\"0 0 " << spec.width_px << ' '
      << spec.height_px << "\">\n";
  svg << "  <title>polynomial diagram q=" << q.get_str() << " n=" << diagram.source().n()
      << " k=" << diagram.source().k() << (log_x ? " (log x)" : "") << "</title>\n";
  svg << "  <g id=\"axes\" stroke=\"#444\" stroke-width=\"1\">\n"
      << "    <line x1=\"" << fixed2(left) << "\" y1=\"" << fixed2(bottom) << "\" x2=\""
      << fixed2(right) << "\" y2=\"" << fixed2(bottom) << "\"/>\n"
      << "    <line x1=\"" << fixed2(left) << "\" y1=\"" << fixed2(bottom) << "\" x2=\""
      << fixed2(left) << "\" y2=\"" << fixed2(top) << "\"/>\n"
      << "  </g>\n";

  svg << "  <path id=\"diagram\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"#08519c\" "
         "stroke-width=\"2\" d=\"";
  for (std::size_t i = 0; i < vertices.size(); ++i)
    svg << (i ? " L " : "M ") << fixed2(px(i)) << ' ' << fixed2(py(i));
  svg << " Z\"/>\n";

  svg << "  <g id=\"vertices\" font-family=\"monospace\" font-size=\"12\">\n";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    svg << "    <circle cx=\"" << fixed2(px(i)) << "\" cy=\"" << fixed2(py(i))
        << "\" r=\"3\" fill=\"#08519c\"/>\n"
        << "    <text x=\"" << fixed2(px(i) + 5) << "\" y=\"" << fixed2(py(i) - 5) << "\">"
        << vertex_label(vertices[i]) << "</text>\n";
  }
  svg << "  </g>\n</svg>\n";

  result.svg = svg.str();
  return result;
}

}  // namespace pdiag::cli
