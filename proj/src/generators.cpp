#include "edgeguard/generators.hpp"

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "edgeguard/error.hpp"
#include "edgeguard/visibility.hpp"

namespace edgeguard {

const char* to_string(Family f) {
  switch (f) {
    case Family::RandomSimple:
      return "random";
    case Family::Convex:
      return "convex";
    case Family::Comb:
      return "comb";
    case Family::ArrowBundle:
      return "arrow-bundle";
    case Family::Staircase:
      return "staircase";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& name) {
  for (Family f : {Family::RandomSimple, Family::Convex, Family::Comb,
                   Family::ArrowBundle, Family::Staircase}) {
    if (name == to_string(f)) return f;
  }
  return std::nullopt;
}

std::int64_t default_bbox(std::size_t n) {
  return std::max<std::int64_t>(64, 4 * static_cast<std::int64_t>(n));
}

namespace {

constexpr int kRetryBudget = 64;

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  // Uniform-ish integer in [0, m).
  std::int64_t below(std::int64_t m) {
    return static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(m));
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(static_cast<std::int64_t>(i)));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct IPoint {
  std::int64_t x;
  std::int64_t y;
  friend bool operator==(const IPoint&, const IPoint&) = default;
};

std::int64_t icross(const IPoint& o, const IPoint& a, const IPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int isign(std::int64_t v) { return (v > 0) - (v < 0); }

bool segments_cross(const IPoint& a, const IPoint& b, const IPoint& c,
                    const IPoint& d) {
  return isign(icross(a, b, c)) * isign(icross(a, b, d)) < 0 &&
         isign(icross(c, d, a)) * isign(icross(c, d, b)) < 0;
}

std::vector<Point> to_points(const std::vector<IPoint>& pts) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.emplace_back(p.x, p.y);
  return out;
}

// Removes crossings by reversing the tour between the first crossing pair
// found in index order. Each move strictly shortens the tour.
void untangle(std::vector<IPoint>& tour) {
  const std::size_t n = tour.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n && !changed; ++i) {
      for (std::size_t j = i + 2; j < n && !changed; ++j) {
        if (i == 0 && j == n - 1) continue;
        if (segments_cross(tour[i], tour[i + 1], tour[j], tour[(j + 1) % n])) {
          std::reverse(tour.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                       tour.begin() + static_cast<std::ptrdiff_t>(j) + 1);
          changed = true;
        }
      }
    }
  }
}

}  // namespace

Polygon gen_random_simple(std::size_t n, std::uint64_t seed, std::int64_t bbox) {
  if (n < 3) throw GenerationFailed("GenerationFailed: n must be >= 3");
  if (bbox <= 0) bbox = default_bbox(n);
  Draw draw(seed);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    std::vector<IPoint> pts;
    int rejections = 0;
    while (pts.size() < n && rejections < 100000) {
      IPoint p{draw.below(bbox), draw.below(bbox)};
      bool ok = true;
      for (std::size_t i = 0; i < pts.size() && ok; ++i) {
        if (pts[i] == p) ok = false;
        for (std::size_t j = i + 1; j < pts.size() && ok; ++j) {
          if (icross(pts[i], pts[j], p) == 0) ok = false;
        }
      }
      if (ok) {
        pts.push_back(p);
      } else {
        ++rejections;
      }
    }
    if (pts.size() < n) break;
    untangle(pts);
    try {
      return Polygon::validate(to_points(pts));
    } catch (const ValidationError&) {
      continue;
    }
  }
  throw GenerationFailed("GenerationFailed: random simple polygon, seed " +
                         std::to_string(seed));
}

Polygon gen_convex(std::size_t n, std::uint64_t seed, std::int64_t bbox) {
  if (n < 3) throw GenerationFailed("GenerationFailed: n must be >= 3");
  if (bbox <= 0) bbox = default_bbox(n);
  Draw draw(seed);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    // Random edge vectors summing to zero: split sorted coordinates into two
    // monotone chains per axis, pair x and y components at random.
    auto components = [&draw, n, bbox]() {
      std::vector<std::int64_t> c(n);
      for (auto& v : c) v = draw.below(bbox);
      std::sort(c.begin(), c.end());
      std::vector<std::int64_t> out;
      std::int64_t lo = c.front();
      std::int64_t hi = c.front();
      for (std::size_t i = 1; i + 1 < n; ++i) {
        if (draw.below(2)) {
          out.push_back(c[i] - lo);
          lo = c[i];
        } else {
          out.push_back(hi - c[i]);
          hi = c[i];
        }
      }
      out.push_back(c.back() - lo);
      out.push_back(hi - c.back());
      return out;
    };
    std::vector<std::int64_t> xs = components();
    std::vector<std::int64_t> ys = components();
    draw.shuffle(ys);

    std::vector<IPoint> vecs;
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (xs[i] == 0 && ys[i] == 0) ok = false;
      vecs.push_back({xs[i], ys[i]});
    }
    if (!ok) continue;
    auto half = [](const IPoint& v) { return v.y > 0 || (v.y == 0 && v.x > 0) ? 0 : 1; };
    std::sort(vecs.begin(), vecs.end(), [&half](const IPoint& a, const IPoint& b) {
      int ha = half(a);
      int hb = half(b);
      if (ha != hb) return ha < hb;
      return icross({0, 0}, a, b) > 0;
    });
    for (std::size_t i = 0; i < n && ok; ++i) {
      const IPoint& a = vecs[i];
      const IPoint& b = vecs[(i + 1) % n];
      if (icross({0, 0}, a, b) <= 0) ok = false;  // parallel or reflex turn
    }
    if (!ok) continue;

    std::vector<IPoint> pts{{0, 0}};
    for (std::size_t i = 0; i + 1 < n; ++i) {
      pts.push_back({pts.back().x + vecs[i].x, pts.back().y + vecs[i].y});
    }
    std::int64_t minx = pts[0].x;
    std::int64_t miny = pts[0].y;
    for (const auto& p : pts) {
      minx = std::min(minx, p.x);
      miny = std::min(miny, p.y);
    }
    for (auto& p : pts) {
      p.x -= minx;
      p.y -= miny;
    }
    Polygon poly = Polygon::validate(to_points(pts));
    if (!reflex_vertices(poly).empty()) continue;
    return poly;
  }
  throw GenerationFailed("GenerationFailed: convex polygon, seed " +
                         std::to_string(seed));
}

Polygon gen_comb(std::size_t k) {
  if (k < 1) throw GenerationFailed("GenerationFailed: comb needs k >= 1");
  // Prongs of width 1 and height 4 spaced 4 apart on a spine of height 2;
  // the spine runs 3 units past the last prong.
  constexpr std::int64_t kWidth = 1;
  constexpr std::int64_t kPitch = 4;
  constexpr std::int64_t kSpine = 2;
  constexpr std::int64_t kHeight = 4;
  constexpr std::int64_t kShelf = 3;
  const auto kk = static_cast<std::int64_t>(k);
  const std::int64_t last_left = (kk - 1) * kPitch;
  const std::int64_t right = last_left + kWidth + kShelf;
  const std::int64_t top = kSpine + kHeight;

  std::vector<IPoint> pts{{0, 0}, {right, 0}, {right, kSpine}};
  for (std::int64_t i = kk - 1; i >= 0; --i) {
    const std::int64_t x = i * kPitch;
    pts.push_back({x + kWidth, kSpine});
    pts.push_back({x + kWidth, top});
    pts.push_back({x, top});
    if (i > 0) pts.push_back({x, kSpine});
  }
  return Polygon::validate(to_points(pts));
}

Polygon gen_arrow_bundle(std::size_t k) {
  if (k < 1) throw GenerationFailed("GenerationFailed: arrow bundle needs k >= 1");
  constexpr std::int64_t kPitch = 20;      // distance between arrow axes
  constexpr std::int64_t kShaft = 1;       // half width of the shaft top
  constexpr std::int64_t kLength = 100;    // shaft length above the joints
  constexpr std::int64_t kBarbOut = 6;     // barb tip offset from the axis
  constexpr std::int64_t kBarbBack = 4;    // barb tip drop below shaft top
  constexpr std::int64_t kApex = 8;        // apex height above shaft top
  constexpr std::int64_t kDepth = 10;      // base vertex below the joints
  const auto kk = static_cast<std::int64_t>(k);
  const std::int64_t half = kPitch / 2;
  const std::int64_t right = (kk - 1) * kPitch + half;

  std::vector<IPoint> pts{{right / 2 - half / 2, -kDepth}, {right, 0}};
  for (std::int64_t i = kk - 1; i >= 0; --i) {
    const std::int64_t c = i * kPitch;
    pts.push_back({c + kShaft, kLength});
    pts.push_back({c + kBarbOut, kLength - kBarbBack});
    pts.push_back({c, kLength + kApex});
    pts.push_back({c - kBarbOut, kLength - kBarbBack});
    pts.push_back({c - kShaft, kLength});
    pts.push_back({c - half, 0});
  }
  return Polygon::validate(to_points(pts));
}

Polygon gen_staircase(std::size_t n, std::uint64_t seed) {
  if (n < 6 || n % 2 != 0) {
    throw GenerationFailed("GenerationFailed: staircase needs even n >= 6");
  }
  const std::size_t steps = (n - 2) / 2;
  Draw draw(seed);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    std::vector<std::int64_t> run(steps);
    std::vector<std::int64_t> rise(steps);
    for (auto& r : run) r = 1 + draw.below(4);
    for (auto& r : rise) r = 1 + draw.below(4);
    std::int64_t x = 0;
    for (auto r : run) x += r;
    std::vector<IPoint> pts{{0, 0}, {x, 0}};
    std::int64_t y = 0;
    for (std::size_t s = 0; s < steps; ++s) {
      y += rise[s];
      pts.push_back({x, y});
      x -= run[s];
      pts.push_back({x, y});
    }
    Polygon poly = Polygon::validate(to_points(pts));
    VisibilityDigraph dg = build_digraph(poly);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (dg.sees(a, b) && !dg.sees(b, a)) return poly;
      }
    }
  }
  throw GenerationFailed("GenerationFailed: staircase without asymmetric pair, seed " +
                         std::to_string(seed));
}

Polygon generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::RandomSimple:
      return gen_random_simple(spec.size, spec.seed, spec.bbox);
    case Family::Convex:
      return gen_convex(spec.size, spec.seed, spec.bbox);
    case Family::Comb:
      return gen_comb(spec.size);
    case Family::ArrowBundle:
      return gen_arrow_bundle(spec.size);
    case Family::Staircase:
      return gen_staircase(spec.size, spec.seed);
  }
  throw GenerationFailed("GenerationFailed: unknown family");
}

}  // namespace edgeguard
