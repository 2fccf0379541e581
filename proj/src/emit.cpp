#include "tropsvd/emit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "json.hpp"

namespace tropsvd {

std::string formatDouble(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string convergenceCsv(const ConvergenceTable& table) {
  const std::size_t n = table.factorsDescending.size();
  std::string out = "t";
  for (std::size_t i = 1; i <= n; ++i) out += ",log_d_" + std::to_string(i);
  for (std::size_t i = 1; i <= n; ++i) out += ",v_" + std::to_string(i);
  out += ",max_error\n";

  const double k = static_cast<double>(table.ramification);
  for (const ConvergenceRow& row : table.rows) {
    out += formatDouble(row.t);
    for (Eigen::Index i = 0; i < row.logSingularValues.size(); ++i)
      out += "," + formatDouble(row.logSingularValues[i]);
    for (std::size_t i = 0; i < n; ++i)
      out += "," + formatDouble(
                       static_cast<double>(table.factorsDescending[i]) / k);
    out += "," + formatDouble(row.maxError) + "\n";
  }
  return out;
}

std::string amoebaCsv(std::vector<Eigen::Vector2d> points) {
  std::sort(points.begin(), points.end(),
            [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
              return a.x() != b.x() ? a.x() < b.x() : a.y() < b.y();
            });
  std::string out = "log_t_abs_x,log_t_abs_y\n";
  for (const auto& p : points)
    out += formatDouble(p.x()) + "," + formatDouble(p.y()) + "\n";
  return out;
}

namespace {

constexpr double kWindow = 5.5;  // plotting window [-w, w]^2
constexpr int kCanvas = 640;

double toPixelX(double x) {
  return (x + kWindow) / (2.0 * kWindow) * kCanvas;
}
double toPixelY(double y) {
  return kCanvas - (y + kWindow) / (2.0 * kWindow) * kCanvas;
}

}  // namespace

std::string amoebaSvg(const std::vector<Eigen::Vector2d>& points,
                      const RaySet& rays) {
  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
      std::to_string(kCanvas) + "\" height=\"" + std::to_string(kCanvas) +
      "\" viewBox=\"0 0 " + std::to_string(kCanvas) + " " +
      std::to_string(kCanvas) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<line x1=\"" + formatDouble(toPixelX(-kWindow)) + "\" y1=\"" +
         formatDouble(toPixelY(0)) + "\" x2=\"" +
         formatDouble(toPixelX(kWindow)) + "\" y2=\"" +
         formatDouble(toPixelY(0)) + "\" stroke=\"#ddd\"/>\n";
  svg += "<line x1=\"" + formatDouble(toPixelX(0)) + "\" y1=\"" +
         formatDouble(toPixelY(-kWindow)) + "\" x2=\"" +
         formatDouble(toPixelX(0)) + "\" y2=\"" +
         formatDouble(toPixelY(kWindow)) + "\" stroke=\"#ddd\"/>\n";

  for (const auto& p : points) {
    if (std::abs(p.x()) > kWindow || std::abs(p.y()) > kWindow) continue;
    svg += "<circle cx=\"" + formatDouble(toPixelX(p.x())) + "\" cy=\"" +
           formatDouble(toPixelY(p.y())) +
           "\" r=\"1.6\" fill=\"steelblue\" fill-opacity=\"0.45\"/>\n";
  }

  for (const RealVector& dir : rays.directions) {
    // Stretch each ray from the vertex to the window boundary.
    double reach = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 2; ++i) {
      if (dir[i] > 0) reach = std::min(reach, (kWindow - rays.vertex[i]) / dir[i]);
      if (dir[i] < 0) reach = std::min(reach, (-kWindow - rays.vertex[i]) / dir[i]);
    }
    const double x2 = rays.vertex[0] + reach * dir[0];
    const double y2 = rays.vertex[1] + reach * dir[1];
    svg += "<line x1=\"" + formatDouble(toPixelX(rays.vertex[0])) +
           "\" y1=\"" + formatDouble(toPixelY(rays.vertex[1])) + "\" x2=\"" +
           formatDouble(toPixelX(x2)) + "\" y2=\"" + formatDouble(toPixelY(y2)) +
           "\" stroke=\"crimson\" stroke-width=\"2\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

namespace {

std::string joinLongs(const std::vector<long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

std::string smithText(const SmithDecomposition& d,
                      const VerificationReport& report) {
  std::string out;
  out += "exponents (ascending): " + joinLongs(d.exponents) + "\n";
  out += "exponents (descending): " + joinLongs(d.exponentsDescending()) + "\n";
  if (d.ramification != 1)
    out += "ramification: " + std::to_string(d.ramification) + "\n";
  out += "verification: residual=" + formatDouble(report.maxResidual) +
         " ord_det_p=" + (report.detPUnit ? report.ordDetP.str() : "n/a") +
         " ord_det_q=" + (report.detQUnit ? report.ordDetQ.str() : "n/a") +
         " pass=" + (report.pass ? "true" : "false") + "\n";
  return out;
}

std::string smithJson(const SmithDecomposition& d,
                      const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["exponents_ascending"] = d.exponents;
  j["exponents_descending"] = d.exponentsDescending();
  j["ramification"] = d.ramification;
  j["verification"] = {
      {"residual", report.maxResidual},
      {"ord_det_p", report.detPUnit ? report.ordDetP.str() : "n/a"},
      {"ord_det_q", report.detQUnit ? report.ordDetQ.str() : "n/a"},
      {"pass", report.pass}};
  return j.dump(2) + "\n";
}

std::string smithCsv(const SmithDecomposition& d,
                     const VerificationReport& report) {
  std::string out = "index,exponent_ascending,exponent_descending\n";
  const std::vector<long> desc = d.exponentsDescending();
  for (std::size_t i = 0; i < d.exponents.size(); ++i)
    out += std::to_string(i + 1) + "," + std::to_string(d.exponents[i]) +
           "," + std::to_string(desc[i]) + "\n";
  out += "residual,ord_det_p,ord_det_q,pass\n";
  out += formatDouble(report.maxResidual) + "," +
         (report.detPUnit ? report.ordDetP.str() : "n/a") + "," +
         (report.detQUnit ? report.ordDetQ.str() : "n/a") + "," +
         (report.pass ? "true" : "false") + "\n";
  return out;
}

std::string tropicalPointText(const TropicalPoint& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.coordinates.size(); ++i) {
    if (i) out += ", ";
    out += p.coordinates[i].str();
  }
  out += ")";
  return out;
}

}  // namespace tropsvd
