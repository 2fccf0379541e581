#include "tropsvd/parse.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>

#include "json.hpp"

namespace tropsvd {

namespace {

class SeriesParser {
 public:
  SeriesParser(std::string_view text, int ramification)
      : text_(text), k_(ramification) {
    if (k_ < 1) throw InputError("ramification index must be >= 1");
  }

  // Accumulates term coefficients keyed by exponent in units of 1/k.
  std::map<long, Complex> run() {
    skipWs();
    if (atEnd()) throw EmptyInput();
    parseTerm(Complex(1.0, 0.0));
    while (true) {
      skipWs();
      if (atEnd()) break;
      const char c = peek();
      if (c == '+') {
        ++pos_;
        parseTerm(Complex(1.0, 0.0));
      } else if (c == '-') {
        ++pos_;
        parseTerm(Complex(-1.0, 0.0));
      } else {
        throw SyntaxError("expected '+' or '-' between terms", pos_);
      }
    }
    return terms_;
  }

 private:
  bool atEnd() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skipWs() {
    while (!atEnd() && (peek() == ' ' || peek() == '\t' || peek() == '\n' ||
                        peek() == '\r'))
      ++pos_;
  }

  void expect(char c, const char* what) {
    skipWs();
    if (atEnd() || peek() != c)
      throw SyntaxError(std::string("expected '") + c + "' " + what, pos_);
    ++pos_;
  }

  static bool isDigit(char c) { return c >= '0' && c <= '9'; }

  // [-] digits [. digits] [eE [+-] digits], at least one mantissa digit.
  double parseReal() {
    skipWs();
    const std::size_t start = pos_;
    std::size_t p = pos_;
    if (p < text_.size() && text_[p] == '-') ++p;
    std::size_t digits = 0;
    while (p < text_.size() && isDigit(text_[p])) ++p, ++digits;
    if (p < text_.size() && text_[p] == '.') {
      ++p;
      while (p < text_.size() && isDigit(text_[p])) ++p, ++digits;
    }
    if (digits == 0) throw SyntaxError("expected a number", start);
    if (p < text_.size() && (text_[p] == 'e' || text_[p] == 'E')) {
      std::size_t q = p + 1;
      if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
      std::size_t expDigits = 0;
      while (q < text_.size() && isDigit(text_[q])) ++q, ++expDigits;
      if (expDigits > 0) p = q;  // otherwise the 'e' is trailing input
    }
    double value = 0.0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + p, value);
    if (res.ec != std::errc() || res.ptr != text_.data() + p)
      throw SyntaxError("malformed number", start);
    pos_ = p;
    return value;
  }

  long parseInteger() {
    skipWs();
    const std::size_t start = pos_;
    std::size_t p = pos_;
    if (p < text_.size() && text_[p] == '-') ++p;
    std::size_t digits = 0;
    while (p < text_.size() && isDigit(text_[p])) ++p, ++digits;
    if (digits == 0) throw SyntaxError("expected an integer", start);
    long value = 0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + p, value);
    if (res.ec != std::errc())
      throw SyntaxError("integer out of range", start);
    pos_ = p;
    return value;
  }

  Complex parseCoeff() {
    skipWs();
    if (!atEnd() && peek() == '(') {
      ++pos_;
      const double re = parseReal();
      skipWs();
      if (atEnd() || (peek() != '+' && peek() != '-'))
        throw SyntaxError("expected '+' or '-' inside a complex coefficient",
                          pos_);
      const double sign = peek() == '-' ? -1.0 : 1.0;
      ++pos_;
      const double im = parseReal();
      expect('i', "after the imaginary part");
      expect(')', "to close the complex coefficient");
      return Complex(re, sign * im);
    }
    return Complex(parseReal(), 0.0);
  }

  // Exponent in units of 1/k.
  long parseExponent() {
    skipWs();
    if (!atEnd() && peek() == '(') {
      ++pos_;
      long num = parseInteger();
      skipWs();
      expect('/', "in a fractional exponent");
      const std::size_t denPos = pos_;
      long den = parseInteger();
      expect(')', "to close the exponent");
      if (den == 0) throw SyntaxError("zero denominator in exponent", denPos);
      if (den < 0) {
        num = -num;
        den = -den;
      }
      const long g = std::gcd(num < 0 ? -num : num, den);
      if (g > 1) {
        num /= g;
        den /= g;
      }
      if (k_ % den != 0) throw RamificationMismatch(den, k_);
      return num * (k_ / den);
    }
    return parseInteger() * k_;
  }

  void parseTerm(Complex sign) {
    skipWs();
    if (atEnd()) throw SyntaxError("expected a term", pos_);
    Complex coeff(1.0, 0.0);
    bool haveCoeff = false;
    if (peek() != 't') {
      coeff = parseCoeff();
      haveCoeff = true;
    }
    long exponent = 0;
    skipWs();
    if (!haveCoeff || (!atEnd() && peek() == '*')) {
      if (haveCoeff) {
        ++pos_;  // '*'
        skipWs();
      }
      if (atEnd() || peek() != 't')
        throw SyntaxError("expected 't'", pos_);
      ++pos_;
      skipWs();
      if (!atEnd() && peek() == '^') {
        ++pos_;
        exponent = parseExponent();
      } else {
        exponent = k_;  // bare t
      }
    }
    terms_[exponent] += sign * coeff;
  }

  std::string_view text_;
  int k_;
  std::size_t pos_ = 0;
  std::map<long, Complex> terms_;
};

}  // namespace

LaurentSeries parseSeries(std::string_view text, int ramification,
                          int precision) {
  SeriesParser parser(text, ramification);
  const std::map<long, Complex> terms = parser.run();
  if (terms.empty()) return LaurentSeries::zero();
  const long lead = terms.begin()->first;
  const long last = terms.rbegin()->first;
  std::vector<Complex> coeffs(static_cast<std::size_t>(last - lead + 1),
                              Complex(0.0, 0.0));
  for (const auto& [e, c] : terms)
    coeffs[static_cast<std::size_t>(e - lead)] = c;
  return LaurentSeries::fromTerms(ramification, lead, std::move(coeffs),
                                  precision);
}

namespace {

std::string formatReal(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string monoText(long exponent, int ramification) {
  if (exponent == 0) return "";
  long num = exponent;
  long den = ramification;
  const long g = std::gcd(num < 0 ? -num : num, den);
  num /= g;
  den /= g;
  if (den == 1) {
    if (num == 1) return "t";
    return "t^" + std::to_string(num);
  }
  return "t^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

}  // namespace

std::string printSeries(const LaurentSeries& s) {
  if (s.isZero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t j = 0; j < s.coefficients().size(); ++j) {
    const Complex c = s.coefficients()[j];
    if (c == Complex(0.0, 0.0)) continue;
    const long e = s.leadExponent() + static_cast<long>(j);
    const std::string mono = monoText(e, s.ramification());

    std::string body;
    bool negative = false;
    if (c.imag() == 0.0) {
      negative = c.real() < 0.0;
      const double mag = std::abs(c.real());
      if (mono.empty())
        body = formatReal(mag);
      else if (mag == 1.0)
        body = mono;
      else
        body = formatReal(mag) + "*" + mono;
    } else {
      body = "(" + formatReal(c.real()) + (c.imag() < 0.0 ? "-" : "+") +
             formatReal(std::abs(c.imag())) + "i)";
      if (!mono.empty()) body += "*" + mono;
    }

    if (first) {
      if (negative) {
        // "-t^e" is not a term; spell the coefficient out.
        if (body == mono) body = "1*" + mono;
        out += "-" + body;
      } else {
        out += body;
      }
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

namespace {

using Json = nlohmann::json;

Json parseJsonText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SyntaxError(std::string("invalid JSON: ") + e.what(),
                      e.byte > 0 ? e.byte - 1 : 0);
  }
}

int documentRamification(const Json& doc) {
  if (!doc.contains("ramification")) return 1;
  if (!doc["ramification"].is_number_integer() ||
      doc["ramification"].get<int>() < 1)
    throw ShapeMismatch("\"ramification\" must be a positive integer");
  return doc["ramification"].get<int>();
}

LaurentSeries parseEntry(const Json& cell, int row, int col, int ramification,
                         int precision) {
  if (!cell.is_string())
    throw ShapeMismatch("entry (" + std::to_string(row + 1) + ", " +
                        std::to_string(col + 1) + ") must be a string");
  const std::string text = cell.get<std::string>();
  try {
    return parseSeries(text, ramification, precision);
  } catch (const SyntaxError& e) {
    throw SyntaxError("entry (" + std::to_string(row + 1) + ", " +
                          std::to_string(col + 1) + "): " + e.rawMessage(),
                      e.offset());
  } catch (const InputError& e) {
    throw InputError("entry (" + std::to_string(row + 1) + ", " +
                     std::to_string(col + 1) + "): " + e.what());
  }
}

}  // namespace

SeriesMatrix parseMatrixDocument(const std::string& text, int precision) {
  const Json doc = parseJsonText(text);
  if (!doc.is_object()) throw ShapeMismatch("document must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer() ||
      doc["n"].get<int>() < 1)
    throw ShapeMismatch("\"n\" must be a positive integer");
  const int n = doc["n"].get<int>();
  const int k = documentRamification(doc);
  if (!doc.contains("entries") || !doc["entries"].is_array() ||
      doc["entries"].size() != static_cast<std::size_t>(n))
    throw ShapeMismatch("\"entries\" must be an array of " +
                        std::to_string(n) + " rows");

  SeriesMatrix m(n, k);
  for (int i = 0; i < n; ++i) {
    const Json& row = doc["entries"][static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw ShapeMismatch("row " + std::to_string(i + 1) + " must have " +
                          std::to_string(n) + " entries");
    for (int j = 0; j < n; ++j)
      m.set(i, j,
            parseEntry(row[static_cast<std::size_t>(j)], i, j, k, precision));
  }
  return m;
}

std::vector<LaurentSeries> parseVectorDocument(const std::string& text,
                                               int precision) {
  const Json doc = parseJsonText(text);
  if (!doc.is_object()) throw ShapeMismatch("document must be a JSON object");
  const int k = documentRamification(doc);
  if (!doc.contains("entries") || !doc["entries"].is_array() ||
      doc["entries"].empty())
    throw ShapeMismatch("\"entries\" must be a nonempty array");

  std::vector<LaurentSeries> out;
  out.reserve(doc["entries"].size());
  for (std::size_t i = 0; i < doc["entries"].size(); ++i)
    out.push_back(
        parseEntry(doc["entries"][i], static_cast<int>(i), 0, k, precision));
  return out;
}

}  // namespace tropsvd
