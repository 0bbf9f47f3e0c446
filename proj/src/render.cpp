#include "rectpack/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace rectpack {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class Canvas {
 public:
  Canvas(i64 N, int size, int margin) : N_(N), scale_(static_cast<double>(size) / static_cast<double>(N)), margin_(margin) {}

  std::string rect(double x, double y, double w, double h, const std::string& style) const {
    std::ostringstream os;
    os << "<rect x=\"" << num(margin_ + x * scale_) << "\" y=\"" << num(margin_ + (N_ - y - h) * scale_)
       << "\" width=\"" << num(w * scale_) << "\" height=\"" << num(h * scale_) << "\" " << style << "/>\n";
    return os.str();
  }

  std::string polygon(const std::vector<std::pair<double, double>>& pts, const std::string& style) const {
    std::ostringstream os;
    os << "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) os << ' ';
      os << num(margin_ + pts[i].first * scale_) << ',' << num(margin_ + (N_ - pts[i].second) * scale_);
    }
    os << "\" " << style << "/>\n";
    return os.str();
  }

 private:
  i64 N_;
  double scale_;
  int margin_;
};

}  // namespace

std::string render_svg(const Packing& p, const RenderOptions& opts) {
  const i64 N = std::max<i64>(p.instance.N, 1);
  const int margin = 10;
  const int total = opts.size + 2 * margin;
  const Canvas cv(N, opts.size, margin);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total << "\" height=\"" << total
     << "\" viewBox=\"0 0 " << total << ' ' << total << "\">\n";
  os << cv.rect(0, 0, static_cast<double>(N), static_cast<double>(N), "fill=\"white\" stroke=\"black\" stroke-width=\"2\"");

  const auto items = placed_items(p);
  i64 max_p = 1;
  for (const auto& it : items) max_p = std::max(max_p, it.item.p);
  for (const auto& it : items) {
    const int shade = 230 - static_cast<int>(170 * it.item.p / max_p);
    std::ostringstream style;
    style << "fill=\"rgb(" << shade << ',' << shade << ",255)\" stroke=\"navy\" stroke-width=\"1\"";
    os << "<g><title>" << escape(it.item.id) << " p=" << it.item.p << "</title>\n";
    os << cv.rect(static_cast<double>(it.x), static_cast<double>(it.y), static_cast<double>(it.w()),
                  static_cast<double>(it.h()), style.str());
    os << "</g>\n";
  }
  for (const auto& c : opts.containers) {
    const char* color = c.label == ContainerLabel::Horizontal ? "darkgreen"
                        : c.label == ContainerLabel::Vertical ? "darkorange"
                                                              : "purple";
    os << cv.rect(static_cast<double>(c.x), static_cast<double>(c.y), static_cast<double>(c.w),
                  static_cast<double>(c.h),
                  std::string("fill=\"none\" stroke=\"") + color + "\" stroke-width=\"2\" stroke-dasharray=\"6,3\"");
  }
  if (opts.lshape && !opts.lshape->absent()) {
    const LShape& L = *opts.lshape;
    const double W = static_cast<double>(L.W_L), H = static_cast<double>(L.H_L);
    const double w = static_cast<double>(L.w_L), h = static_cast<double>(L.h_L);
    os << cv.polygon({{0, 0}, {W, 0}, {W, h}, {w, h}, {w, H}, {0, H}},
                     "fill=\"none\" stroke=\"crimson\" stroke-width=\"3\"");
  }
  if (opts.overlay_strips) {
    const double t = to_double(opts.strip_thickness) * static_cast<double>(N);
    const double n = static_cast<double>(N);
    const std::string style = "fill=\"gray\" fill-opacity=\"0.25\" stroke=\"gray\"";
    os << cv.rect(0, n - t, n, t, style);
    os << cv.rect(n - t, 0, t, n, style);
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace rectpack
