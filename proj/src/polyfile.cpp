#include "edgeguard/polyfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "edgeguard/error.hpp"

namespace edgeguard {

Scalar parse_decimal(const std::string& text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
  std::string digits;
  std::size_t frac = 0;
  bool dot = false;
  bool any = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.' && !dot) {
      dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      any = true;
      if (dot) ++frac;
    } else {
      throw std::invalid_argument("not a number: '" + text + "'");
    }
  }
  if (!any) throw std::invalid_argument("not a number: '" + text + "'");
  mpz_class num(digits, 10);
  mpz_class den = 1;
  for (std::size_t k = 0; k < frac; ++k) den *= 10;
  Scalar v(num, den);
  v.canonicalize();
  return neg ? Scalar(-v) : v;
}

std::string format_decimal(const Scalar& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  mpz_class den = v.get_den();
  std::size_t twos = 0;
  std::size_t fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) throw Error("coordinate " + v.get_str() + " has no finite decimal form");
  const std::size_t places = std::max(twos, fives);
  mpz_class scale = 1;
  for (std::size_t k = 0; k < places; ++k) scale *= 10;
  mpz_class scaled = v.get_num() * scale / v.get_den();
  const bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string s = scaled.get_str();
  if (s.size() <= places) s.insert(0, places - s.size() + 1, '0');
  s.insert(s.size() - places, ".");
  return neg ? "-" + s : s;
}

std::vector<Point> parse_polyfile(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t expected = 0;
  bool have_count = false;
  std::size_t count_line = 0;
  std::vector<Point> pts;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (!have_count) {
      if (tok.size() != 1) throw ParseError(lineno, "expected the vertex count N");
      const std::string& t = tok[0];
      if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(lineno, "vertex count must be a non-negative integer, got '" +
                                     t + "'");
      }
      expected = std::stoul(t);
      have_count = true;
      count_line = lineno;
      continue;
    }
    if (pts.size() == expected) {
      throw ParseError(lineno, "more vertex lines than the declared " +
                                   std::to_string(expected));
    }
    if (tok.size() != 2) {
      throw ParseError(lineno, "expected two coordinates for vertex " +
                                   std::to_string(pts.size()));
    }
    try {
      pts.emplace_back(parse_decimal(tok[0]), parse_decimal(tok[1]));
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, std::string(e.what()) + " (vertex " +
                                   std::to_string(pts.size()) + ")");
    }
  }
  if (!have_count) throw ParseError(lineno, "empty polygon file");
  if (pts.size() != expected) {
    throw ParseError(count_line, "declared " + std::to_string(expected) +
                                     " vertices but found " + std::to_string(pts.size()));
  }
  return pts;
}

std::vector<Point> parse_polyfile_string(const std::string& text) {
  std::istringstream in(text);
  return parse_polyfile(in);
}

Polygon read_polygon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return Polygon::validate(parse_polyfile(in));
}

std::string write_polyfile(const std::vector<Point>& pts) {
  std::string out = std::to_string(pts.size()) + "\n";
  for (const auto& p : pts) {
    out += format_decimal(p.x) + " " + format_decimal(p.y) + "\n";
  }
  return out;
}

std::string write_polyfile(const Polygon& poly) { return write_polyfile(poly.vertices()); }

}  // namespace edgeguard
