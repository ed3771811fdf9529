#include "vhc/render.hpp"

#include <cstdio>
#include <string_view>

namespace vhc {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

struct Frame {
  double unit;
  int n;
  double x(int col) const { return unit * col; }
  double y(int row) const { return unit * (n + 1 - row); }
  double width() const { return unit * (n + 1); }
  double height() const { return unit * (n + 1); }
};

}  // namespace

std::string role_label(const HookConfig& c, int position) {
  const DescentTable table = descent_table(c.perm());
  std::string out;
  if (table.is_bottom(position)) out.push_back('X');
  if (c.is_sw_endpoint(position)) out.push_back('Y');
  if (c.is_ne_endpoint(position)) out.push_back('Z');
  return out;
}

std::string render_svg(const HookConfig& c, const RenderOptions& opts) {
  const Frame f{opts.unit, c.size()};
  const Permutation& pi = c.perm();
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(f.width()) + "\" height=\"" +
       num(f.height()) + "\" viewBox=\"0 0 " + num(f.width()) + " " + num(f.height()) + "\">\n";
  s += "<g class=\"hooks\" fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
  for (const Hook& h : c.hooks()) {
    s += "<path d=\"M " + num(f.x(h.sw)) + " " + num(f.y(pi.at(h.sw))) + " L " + num(f.x(h.sw)) + " " +
         num(f.y(pi.at(h.ne))) + " L " + num(f.x(h.ne)) + " " + num(f.y(pi.at(h.ne))) + "\"/>\n";
  }
  s += "</g>\n";
  s += "<g class=\"points\" fill=\"black\">\n";
  for (int p = 1; p <= c.size(); ++p) {
    s += "<circle cx=\"" + num(f.x(p)) + "\" cy=\"" + num(f.y(pi.at(p))) + "\" r=\"" + num(opts.dot_radius) +
         "\"/>\n";
  }
  s += "</g>\n";
  if (opts.labels) {
    s += "<g class=\"labels\" font-family=\"serif\" font-size=\"" + num(opts.unit * 0.35) +
         "\" text-anchor=\"middle\">\n";
    for (int p = 1; p <= c.size(); ++p) {
      const std::string label = role_label(c, p);
      if (label.empty()) continue;
      s += "<text x=\"" + num(f.x(p)) + "\" y=\"" + num(f.y(pi.at(p)) + opts.unit * 0.45) + "\">" + label +
           "</text>\n";
    }
    s += "</g>\n";
  }
  s += "</svg>\n";
  return s;
}

std::string render_tikz(const HookConfig& c, const RenderOptions& opts) {
  const Permutation& pi = c.perm();
  std::string s = "\\begin{tikzpicture}[scale=0.5]\n";
  for (const Hook& h : c.hooks()) {
    s += "  \\draw[thick] (" + std::to_string(h.sw) + "," + std::to_string(pi.at(h.sw)) + ") -- (" +
         std::to_string(h.sw) + "," + std::to_string(pi.at(h.ne)) + ") -- (" + std::to_string(h.ne) + "," +
         std::to_string(pi.at(h.ne)) + ");\n";
  }
  for (int p = 1; p <= c.size(); ++p) {
    s += "  \\fill (" + std::to_string(p) + "," + std::to_string(pi.at(p)) + ") circle (" +
         num(opts.dot_radius / opts.unit) + ");\n";
  }
  if (opts.labels) {
    for (int p = 1; p <= c.size(); ++p) {
      const std::string label = role_label(c, p);
      if (label.empty()) continue;
      s += "  \\node[below] at (" + std::to_string(p) + "," + std::to_string(pi.at(p)) + ") {$" + label + "$};\n";
    }
  }
  s += "\\end{tikzpicture}\n";
  return s;
}

}  // namespace vhc
