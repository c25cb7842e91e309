#include "brf/svg.hpp"

#include <algorithm>
#include <sstream>

#include "brf/enumeration.hpp"

namespace brf {

namespace {

constexpr long kCanvas = 720;
constexpr long kMargin = 48;
constexpr long kInner = kCanvas - 2 * kMargin;

struct Scaler {
  Rational min_x, min_y, span_x, span_y;

  static Scaler fit(const Instance& inst) {
    Scaler s{Rational(0), Rational(0), Rational(1), Rational(1)};
    if (inst.n == 0) return s;
    auto lo_hi = [](const std::vector<Rational>& v) {
      return std::minmax_element(v.begin() + 1, v.end());
    };
    auto [xlo, xhi] = lo_hi(inst.raw_x);
    auto [ylo, yhi] = lo_hi(inst.raw_y);
    s.min_x = *xlo;
    s.min_y = *ylo;
    s.span_x = *xhi - *xlo;
    s.span_y = *yhi - *ylo;
    if (s.span_x == 0) s.span_x = 1;
    if (s.span_y == 0) s.span_y = 1;
    return s;
  }

  // Millipixel position, rounded half up: exact, hence reproducible.
  static long milli(const Rational& frac, long offset) {
    Rational scaled = frac * kInner * 1000;
    mpz_class num = scaled.get_num(), den = scaled.get_den();
    mpz_class q = (2 * num + den) / (2 * den);
    return offset * 1000 + q.get_si();
  }

  long px(const Rational& x) const { return milli((x - min_x) / span_x, kMargin); }
  long py(const Rational& y) const {
    long m = milli((y - min_y) / span_y, kMargin);
    return kCanvas * 1000 - m;
  }
};

std::string fmt(long milli) {
  std::ostringstream os;
  if (milli < 0) {
    os << '-';
    milli = -milli;
  }
  os << milli / 1000;
  long rem = milli % 1000;
  if (rem) {
    os << '.';
    std::string d = std::to_string(rem);
    d.insert(0, 3 - d.size(), '0');
    while (d.back() == '0') d.pop_back();
    os << d;
  }
  return os.str();
}

void rect_element(std::ostringstream& os, const Scaler& sc, const Instance& inst,
                  const Rect& r, const char* style) {
  RawPoint lo = inst.raw_of(r.corner_a()), hi = inst.raw_of(r.corner_b());
  long x = sc.px(lo.x), y = sc.py(hi.y);
  long w = sc.px(hi.x) - x, h = sc.py(lo.y) - y;
  os << "  <rect x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(w)
     << "\" height=\"" << fmt(h) << "\" " << style << "/>\n";
}

}  // namespace

std::string render_svg(const Instance& inst, const Solution* sol) {
  Scaler sc = Scaler::fit(inst);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kCanvas << ' '
     << kCanvas << "\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << kCanvas << "\" height=\"" << kCanvas
     << "\" fill=\"white\"/>\n";
  // axes along the left and bottom edge of the drawing area
  os << "  <path d=\"M " << kMargin << ' ' << kMargin << " L " << kMargin << ' '
     << kCanvas - kMargin << " L " << kCanvas - kMargin << ' ' << kCanvas - kMargin
     << "\" fill=\"none\" stroke=\"#444\"/>\n";

  MinimalFamily mf = minimal_rectangles(inst);
  for (const Rect& r : mf.rects)
    rect_element(os, sc, inst, r, "fill=\"none\" stroke=\"#bbbbbb\"");
  if (sol) {
    for (const Rect& r : sol->independent)
      rect_element(os, sc, inst, r,
                   "fill=\"#4682b4\" fill-opacity=\"0.25\" stroke=\"#4682b4\"");
  }
  for (const Point& p : inst.a_points) {
    RawPoint raw = inst.raw_of(p);
    os << "  <circle cx=\"" << fmt(sc.px(raw.x)) << "\" cy=\"" << fmt(sc.py(raw.y))
       << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
  }
  for (const Point& p : inst.b_points) {
    RawPoint raw = inst.raw_of(p);
    os << "  <circle cx=\"" << fmt(sc.px(raw.x)) << "\" cy=\"" << fmt(sc.py(raw.y))
       << "\" r=\"4\" fill=\"black\"/>\n";
  }
  if (sol) {
    for (const Point& h : sol->hitting) {
      RawPoint raw = inst.raw_of(h);
      long x = sc.px(raw.x), y = sc.py(raw.y);
      os << "  <path d=\"M " << fmt(x - 5000) << ' ' << fmt(y - 5000) << " L "
         << fmt(x + 5000) << ' ' << fmt(y + 5000) << " M " << fmt(x - 5000) << ' '
         << fmt(y + 5000) << " L " << fmt(x + 5000) << ' ' << fmt(y - 5000)
         << "\" stroke=\"#c03030\" stroke-width=\"2\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace brf
