#include "quanthelly/svg.hpp"

#include <sstream>

#include "quanthelly/error.hpp"

namespace quanthelly {

namespace {

struct Box {
  Scalar x0, y0, x1, y1;
  bool set = false;

  void add(const Point& p) {
    if (!set) {
      x0 = x1 = p[0];
      y0 = y1 = p[1];
      set = true;
      return;
    }
    x0 = std::min(x0, p[0]);
    x1 = std::max(x1, p[0]);
    y0 = std::min(y0, p[1]);
    y1 = std::max(y1, p[1]);
  }
};

std::string num(const Scalar& s) { return format_decimal(s, 12); }

// SVG y grows downwards.
std::string coords(const Point& p) { return num(p[0]) + "," + num(-p[1]); }

std::string style_attrs(const SvgStyle& s, const Scalar& unit) {
  return " fill=\"" + s.fill + "\" stroke=\"" + s.stroke + "\" stroke-width=\"" +
         num(unit * parse_scalar(s.stroke_width)) + "\" opacity=\"" + s.opacity + "\"";
}

}  // namespace

std::string render_svg(const std::vector<SvgItem>& items, int width) {
  Box box;
  for (const auto& item : items) {
    if (const auto* b = std::get_if<ConvexBody>(&item.object)) {
      if (b->dim() != 2) throw DimensionError("render_svg: plane objects only");
      if (b->is_empty()) continue;
      for (const auto& p : b->bounded() ? b->vertex_list() : b->window()) box.add(p);
    } else if (const auto* p = std::get_if<Point>(&item.object)) {
      if (p->dim() != 2) throw DimensionError("render_svg: plane objects only");
      box.add(*p);
    } else if (std::get<Halfspace>(item.object).dim() != 2) {
      throw DimensionError("render_svg: plane objects only");
    }
  }
  if (!box.set) {
    box.add(Point{Scalar(-1), Scalar(-1)});
    box.add(Point{Scalar(1), Scalar(1)});
  }
  Scalar w = box.x1 - box.x0, h = box.y1 - box.y0;
  if (w == 0) w = 1;
  if (h == 0) h = 1;
  const Scalar span = std::max(w, h);
  const Scalar mx = w / 20, my = h / 20;
  const Scalar vx = box.x0 - mx, vy = -(box.y1 + my), vw = w + 2 * mx, vh = h + 2 * my;
  const Scalar unit = span / 400;
  const Scalar height = Scalar(width) * vh / vw;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << num(height)
      << "\" viewBox=\"" << num(vx) << " " << num(vy) << " " << num(vw) << " " << num(vh) << "\">\n";
  const ConvexBody frame = ConvexBody::box(Point{vx, -(vy + vh)}, Point{vx + vw, -vy});
  for (const auto& item : items) {
    const std::string attrs = style_attrs(item.style, unit);
    if (const auto* b = std::get_if<ConvexBody>(&item.object)) {
      if (b->is_empty()) continue;
      const auto& pts = b->bounded() ? b->vertex_list() : b->window();
      if (pts.size() == 1) {
        out << "  <circle cx=\"" << num(pts[0][0]) << "\" cy=\"" << num(-pts[0][1]) << "\" r=\"" << num(3 * unit)
            << "\"" << attrs << "/>\n";
        continue;
      }
      out << "  <polygon points=\"";
      for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << coords(pts[i]);
      out << "\"" << attrs << "/>\n";
    } else if (const auto* p = std::get_if<Point>(&item.object)) {
      out << "  <circle cx=\"" << num((*p)[0]) << "\" cy=\"" << num(-(*p)[1]) << "\" r=\"" << num(3 * unit) << "\""
          << attrs << "/>\n";
    } else {
      const Halfspace& hs = std::get<Halfspace>(item.object);
      // Boundary line clipped to the frame.
      const Vector& n = hs.normal();
      ConvexBody line = intersect(frame, ConvexBody::from_halfspaces(
                                             2, {hs, Halfspace(Vector{-n[0], -n[1]}, Scalar(-hs.offset()))}));
      if (line.is_empty()) continue;
      const auto& pts = line.vertex_list();
      const Point& a = pts.front();
      const Point& c = pts.back();
      out << "  <line x1=\"" << num(a[0]) << "\" y1=\"" << num(-a[1]) << "\" x2=\"" << num(c[0]) << "\" y2=\""
          << num(-c[1]) << "\"" << attrs << "/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace quanthelly
