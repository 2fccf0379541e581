#ifndef TROPSVD_EMIT_HPP
#define TROPSVD_EMIT_HPP

#include <string>
#include <vector>

#include "tropsvd/convergence.hpp"
#include "tropsvd/smith.hpp"
#include "tropsvd/tropical.hpp"

namespace tropsvd {

// Shortest round-trip decimal form, locale-independent (std::to_chars).
std::string formatDouble(double v);

// CSV with columns t, log_d_1..log_d_n, v_1..v_n, max_error. LF newlines,
// dot decimal separator, deterministic column order.
std::string convergenceCsv(const ConvergenceTable& table);

// Two-column CSV of log-map samples, sorted lexicographically so the output
// is canonical regardless of generation order.
std::string amoebaCsv(std::vector<Eigen::Vector2d> points);

// Static scatter of the samples with the ray set overlaid.
std::string amoebaSvg(const std::vector<Eigen::Vector2d>& points,
                      const RaySet& rays);

std::string smithText(const SmithDecomposition& d,
                      const VerificationReport& report);
std::string smithJson(const SmithDecomposition& d,
                      const VerificationReport& report);
// Exponent table followed by a one-row verification section.
std::string smithCsv(const SmithDecomposition& d,
                     const VerificationReport& report);

std::string tropicalPointText(const TropicalPoint& p);

}  // namespace tropsvd

#endif  // TROPSVD_EMIT_HPP
