#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tropsvd/convergence.hpp"
#include "tropsvd/emit.hpp"
#include "tropsvd/jacobi_svd.hpp"
#include "tropsvd/parse.hpp"
#include "tropsvd/smith.hpp"
#include "tropsvd/tropical.hpp"

namespace {

using namespace tropsvd;

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<double> parseSchedule(const std::string& text) {
  std::vector<double> schedule;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string piece =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    double value = 0.0;
    const auto res =
        std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (res.ec != std::errc() || res.ptr != piece.data() + piece.size())
      throw InputError("malformed schedule value: '" + piece + "'");
    schedule.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return schedule;
}

void runSmith(const std::string& path, bool asJson, bool asCsv) {
  const SeriesMatrix a = parseMatrixDocument(readFile(path));
  const SmithDecomposition d = smithNormalForm(a);
  const VerificationReport report = verifyDecomposition(a, d);
  if (asJson)
    std::cout << smithJson(d, report);
  else if (asCsv)
    std::cout << smithCsv(d, report);
  else
    std::cout << smithText(d, report);
}

void runSvd(const std::string& path, double t) {
  const SeriesMatrix a = parseMatrixDocument(readFile(path));
  if (!(t > 0.0 && t < 1.0))
    throw InputError("t must lie strictly between 0 and 1");
  const ComplexMatrix e = evaluateMatrix(a, t);
  const SvdResult result = svd<double>(e);
  const int n = a.size();

  std::cout << "singular values (ascending):";
  for (int i = 0; i < n; ++i)
    std::cout << " " << formatDouble(result.singularValues[i]);
  std::cout << "\n";
  const double uResidual =
      (result.u.adjoint() * result.u - ComplexMatrix::Identity(n, n)).norm();
  const double wResidual =
      (result.w.adjoint() * result.w - ComplexMatrix::Identity(n, n)).norm();
  const double reconstruct =
      (result.u * result.singularValues.asDiagonal() * result.w - e).norm();
  std::cout << "unitarity residual (U): " << formatDouble(uResidual) << "\n";
  std::cout << "unitarity residual (W): " << formatDouble(wResidual) << "\n";
  std::cout << "reconstruction residual: " << formatDouble(reconstruct)
            << "\n";
}

void runConverge(const std::string& path, const std::string& scheduleText,
                 int precision) {
  const SeriesMatrix a = parseMatrixDocument(readFile(path), precision);
  const ConvergenceTable table =
      convergenceTable(a, parseSchedule(scheduleText));
  std::cout << convergenceCsv(table);
}

void runTrop(const std::string& path) {
  const std::vector<LaurentSeries> fs = parseVectorDocument(readFile(path));
  std::cout << tropicalPointText(tropPoint(fs)) << "\n";
}

void runAmoeba(double t, int count, const std::string& svgPath,
               std::uint64_t seed) {
  const std::vector<Eigen::Vector2d> points =
      amoebaSampleLine(Complex(1, 0), Complex(1, 0), Complex(1, 0), t, count,
                       seed);
  std::cout << amoebaCsv(points);
  if (!svgPath.empty()) {
    std::ofstream out(svgPath, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + svgPath);
    out << amoebaSvg(points, tropicalLine());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Smith normal forms of matrices over Laurent series, numeric SVDs of "
      "their evaluations, and the log/tropicalization maps relating them"};
  app.require_subcommand(1);

  std::string file;
  bool asJson = false, asCsv = false;
  CLI::App* smith = app.add_subcommand(
      "smith", "invariant factors and decomposition certificate");
  smith->add_option("file", file, "matrix document (JSON)")->required();
  CLI::Option* jsonFlag = smith->add_flag("--json", asJson, "emit JSON");
  smith->add_flag("--csv", asCsv, "emit CSV")->excludes(jsonFlag);

  double tValue = 0.0;
  CLI::App* svdCmd = app.add_subcommand(
      "svd", "singular values of the matrix evaluated at t");
  svdCmd->add_option("file", file, "matrix document (JSON)")->required();
  svdCmd->add_option("--t", tValue, "evaluation point in (0,1)")->required();

  std::string scheduleText = "1e-2,1e-4,1e-6,1e-8";
  int precision = LaurentSeries::kDefaultPrecision;
  std::uint64_t seed = 1;
  CLI::App* converge = app.add_subcommand(
      "converge", "log_t singular values against invariant factors (CSV)");
  converge->add_option("file", file, "matrix document (JSON)")->required();
  converge->add_option("--schedule", scheduleText,
                       "comma-separated decreasing t values");
  converge->add_option("--precision", precision,
                       "retained series coefficients");
  converge->add_option("--seed", seed, "seed for auxiliary sampling");

  CLI::App* trop = app.add_subcommand(
      "trop", "componentwise valuation of a series vector");
  trop->add_option("file", file, "vector document (JSON)")->required();

  int count = 0;
  std::string svgPath;
  CLI::App* amoeba = app.add_subcommand(
      "amoeba", "log-map samples of the line x + y + 1 = 0 (CSV)");
  amoeba->add_option("--t", tValue, "log base in (0,1)")->required();
  amoeba->add_option("--count", count, "number of samples")->required();
  amoeba->add_option("--svg", svgPath, "also write an SVG scatter");
  amoeba->add_option("--seed", seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(smith)) runSmith(file, asJson, asCsv);
    else if (app.got_subcommand(svdCmd)) runSvd(file, tValue);
    else if (app.got_subcommand(converge)) runConverge(file, scheduleText, precision);
    else if (app.got_subcommand(trop)) runTrop(file);
    else if (app.got_subcommand(amoeba)) runAmoeba(tValue, count, svgPath, seed);
    return 0;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
