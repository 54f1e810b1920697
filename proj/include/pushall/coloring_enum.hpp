#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <climits>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "permutation.hpp"

namespace pushall {

using BigCount = boost::multiprecision::cpp_int;

struct NotIndecomposable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct AscentPair {
  std::size_t i = 0;  // 1-based
  std::size_t j = 0;
};

namespace detail {

// Working representation for the shape constructions: 0-based positions,
// '.' for uncolored, and a sticky conflict flag.
struct Canvas {
  explicit Canvas(std::size_t n) : c(n, '.') {}
  std::string c;
  bool conflict = false;

  void paint(std::size_t k, char col) {
    if (c[k] == '.') c[k] = col;
    else if (c[k] != col) conflict = true;
  }
  void merge(const Canvas& o) {
    for (std::size_t k = 0; k < c.size(); ++k)
      if (o.c[k] != '.') paint(k, o.c[k]);
    conflict = conflict || o.conflict;
  }
  bool total() const { return c.find('.') == std::string::npos; }

  PartialBicoloring partial() const {
    PartialBicoloring p(c.size());
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != '.') p.paint(k + 1, static_cast<Color>(c[k]));
    return p;
  }
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// RG staircase from an ascent (i R, j G). Rule (iii) is applied to the
// current pair; the next left point is the leftmost point below the current
// top, the next top is the highest point right of the current left point.
inline std::optional<Canvas> staircase_rg(const std::vector<int>& s, std::size_t i, std::size_t j) {
  const std::size_t n = s.size();
  std::vector<int> pmin(n), smax(n);
  for (std::size_t k = 0; k < n; ++k) pmin[k] = k ? std::min(pmin[k - 1], s[k]) : s[k];
  for (std::size_t k = n; k-- > 0;) smax[k] = k + 1 < n ? std::max(smax[k + 1], s[k]) : s[k];

  // best_r[x]: highest top reached by a step whose left point is x
  std::vector<int> best_r(n, 0), best_g(n, INT_MAX);
  std::size_t ci = i;
  int cv = s[j];
  std::size_t ptr = i;
  for (;;) {
    best_r[ci] = std::max(best_r[ci], cv);
    best_g[ci] = std::min(best_g[ci], cv);
    while (ptr > 0 && pmin[ptr - 1] <= cv) --ptr;
    const std::size_t ni = ptr;
    const int nv = smax[ci];
    if (ni == ci && nv == cv) break;
    ci = ni;
    cv = nv;
  }
  for (std::size_t k = n - 1; k-- > 0;) best_r[k] = std::max(best_r[k], best_r[k + 1]);
  for (std::size_t k = 1; k < n; ++k) best_g[k] = std::min(best_g[k], best_g[k - 1]);

  Canvas out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (s[k] <= best_r[k]) out.paint(k, 'R');
    if (s[k] >= best_g[k]) out.paint(k, 'G');
    if (out.conflict) return std::nullopt;
    if (out.c[k] == '.' && (k < i || s[k] > s[j])) return std::nullopt;
  }
  return out;
}

// Mirror of staircase_rg for an ascent (i G, j R): rule (iv), next right point
// is the rightmost point above the current bottom, next bottom is the lowest
// point left of the current right point.
inline std::optional<Canvas> staircase_gr(const std::vector<int>& s, std::size_t i, std::size_t j) {
  const std::size_t n = s.size();
  std::vector<int> pmin(n), smax(n);
  for (std::size_t k = 0; k < n; ++k) pmin[k] = k ? std::min(pmin[k - 1], s[k]) : s[k];
  for (std::size_t k = n; k-- > 0;) smax[k] = k + 1 < n ? std::max(smax[k + 1], s[k]) : s[k];

  std::vector<int> best_g(n, 0), best_r(n, INT_MAX);
  std::size_t cj = j;
  int cv = s[i];
  std::size_t ptr = j;
  for (;;) {
    best_g[cj] = std::max(best_g[cj], cv);
    best_r[cj] = std::min(best_r[cj], cv);
    while (ptr + 1 < n && smax[ptr + 1] >= cv) ++ptr;
    const std::size_t nj = ptr;
    const int nv = pmin[cj];
    if (nj == cj && nv == cv) break;
    cj = nj;
    cv = nv;
  }
  for (std::size_t k = n - 1; k-- > 0;) best_g[k] = std::max(best_g[k], best_g[k + 1]);
  for (std::size_t k = 1; k < n; ++k) best_r[k] = std::min(best_r[k], best_r[k - 1]);

  Canvas out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (s[k] <= best_g[k]) out.paint(k, 'G');
    if (s[k] >= best_r[k]) out.paint(k, 'R');
    if (out.conflict) return std::nullopt;
    if (out.c[k] == '.' && (k > j || s[k] < s[i])) return std::nullopt;
  }
  return out;
}

inline std::optional<Canvas> shape_gr(const std::vector<int>& s, std::size_t i, std::size_t j) {
  const std::size_t n = s.size();
  auto base = staircase_gr(s, i, j);
  if (!base) return std::nullopt;
  std::size_t a = 0;
  while (s[a] > s[i]) ++a;
  std::size_t b = j;
  for (std::size_t k = j; k < n; ++k)
    if (s[k] > s[b]) b = k;
  const int si = s[i], sb = s[b];

  Canvas& c = *base;
  for (std::size_t k = 0; k < n; ++k) {
    const int v = s[k];
    if (k >= a && k < j && v <= si) c.paint(k, 'G');
    if (k < a && v > si && v < sb) c.paint(k, 'R');
    if (k >= j && v > si && v <= sb) c.paint(k, 'R');
    if (k >= a && k < j && v > sb) c.paint(k, 'G');
  }
  if (c.conflict) return std::nullopt;
  return base;
}

inline std::optional<Canvas> shape_rg(const std::vector<int>& s, std::size_t i, std::size_t j) {
  const std::size_t n = s.size();
  auto base = staircase_rg(s, i, j);
  if (!base) return std::nullopt;
  std::size_t a = n - 1;
  while (s[a] < s[j]) --a;
  std::size_t b = 0;
  for (std::size_t k = 0; k <= i; ++k)
    if (s[k] < s[b]) b = k;
  const int sj = s[j], sb = s[b];

  auto zone1 = [&](std::size_t k) { return k > a && s[k] > sb && s[k] < sj; };
  auto zone2 = [&](std::size_t k) { return k > i && k < a && s[k] < sb; };
  bool has1 = false, has2 = false;
  for (std::size_t k = 0; k < n; ++k) {
    has1 = has1 || zone1(k);
    has2 = has2 || zone2(k);
  }
  const char zone3 = has1 == has2 ? '.' : (has1 ? 'R' : 'G');

  Canvas& c = *base;
  for (std::size_t k = 0; k < n; ++k) {
    const int v = s[k];
    if (k <= i && v >= sb && v < sj) c.paint(k, 'R');
    if (k > i && k <= a && v >= sj) c.paint(k, 'G');
    if (zone1(k)) c.paint(k, 'R');
    if (zone2(k)) c.paint(k, 'G');
    if (zone3 != '.' && k > a && v < sb) c.paint(k, zone3);
  }
  if (c.conflict) return std::nullopt;
  return base;
}

// (i R, j G) and (k G, l R). An empty canvas is returned when the four points
// do not sit in one of the four admissible relative positions.
inline std::optional<Canvas> shape_star(const std::vector<int>& s, std::size_t i, std::size_t j, std::size_t k,
                                        std::size_t l) {
  const std::size_t n = s.size();
  const bool placed = i < std::min(j, k) && std::max(j, k) < l && j != k && s[k] < std::min(s[i], s[l]) &&
                      std::max(s[i], s[l]) < s[j];
  if (!placed) return Canvas(n);

  auto rg = staircase_rg(s, i, j);
  if (!rg) return std::nullopt;
  auto gr = staircase_gr(s, k, l);
  if (!gr) return std::nullopt;
  Canvas c = *rg;
  c.merge(*gr);
  if (c.conflict) return std::nullopt;

  const int vi = s[i], vj = s[j], vk = s[k], vl = s[l];
  auto in = [](std::size_t x, std::size_t lo, std::size_t hi) { return x > lo && x < hi; };
  auto between = [](int v, int lo, int hi) { return v > lo && v < hi; };

  for (std::size_t x = 0; x < n; ++x) {
    const int v = s[x];
    if (x < i && between(v, vk, vj)) c.paint(x, 'R');
    if (in(x, i, l) && v > vj) c.paint(x, 'G');
    if (x > l && between(v, vk, vj)) c.paint(x, 'R');
    if (in(x, i, l) && v < vk) c.paint(x, 'G');
  }

  const bool k_left_of_j = k < j;
  const bool i_below_l = vi < vl;
  if (!k_left_of_j && i_below_l) {
    for (std::size_t x = 0; x < n; ++x)
      if (in(x, j, k) && between(s[x], vk, vj)) c.paint(x, 'R');
  } else if (k_left_of_j && !i_below_l) {
    for (std::size_t x = 0; x < n; ++x)
      if (in(x, i, l) && between(s[x], vl, vi)) c.paint(x, 'G');
  } else if (!k_left_of_j && !i_below_l) {
    bool zone_a = false, zone_b = false, zone_1 = false;
    for (std::size_t x = 0; x < n; ++x) {
      const int v = s[x];
      if (in(x, j, k) && between(v, vk, vl)) c.paint(x, 'R');
      if (in(x, i, j) && between(v, vl, vi)) c.paint(x, 'G');
      if (in(x, j, k) && between(v, vi, vj)) c.paint(x, 'R');
      if (in(x, k, l) && between(v, vl, vi)) c.paint(x, 'G');
      zone_a = zone_a || (x > l && between(v, vi, vj));
      zone_b = zone_b || (in(x, i, j) && v < vk);
      zone_1 = zone_1 || (in(x, j, k) && between(v, vl, vi));
    }
    if (zone_1 && zone_a && zone_b) return std::nullopt;
    if (zone_a || zone_b)
      for (std::size_t x = 0; x < n; ++x)
        if (in(x, j, k) && between(s[x], vl, vi)) c.paint(x, zone_a ? 'R' : 'G');
  }
  c.paint(i, 'R');
  c.paint(j, 'G');
  c.paint(k, 'G');
  c.paint(l, 'R');
  if (c.conflict) return std::nullopt;
  return c;
}

inline void require_ascent(const Permutation& sigma, std::size_t i, std::size_t j) {
  if (i < 1 || j > sigma.size() || i >= j || sigma.at(i) >= sigma.at(j))
    throw std::invalid_argument("(" + std::to_string(i) + "," + std::to_string(j) + ") is not an ascent");
}

inline std::optional<PartialBicoloring> to_partial(const std::optional<Canvas>& c) {
  if (!c) return std::nullopt;
  return c->partial();
}

}  // namespace detail

inline std::optional<PartialBicoloring> propagate_rg(const Permutation& sigma, AscentPair a) {
  detail::require_ascent(sigma, a.i, a.j);
  return detail::to_partial(detail::staircase_rg(sigma.values(), a.i - 1, a.j - 1));
}

inline std::optional<PartialBicoloring> propagate_gr(const Permutation& sigma, AscentPair a) {
  detail::require_ascent(sigma, a.i, a.j);
  return detail::to_partial(detail::staircase_gr(sigma.values(), a.i - 1, a.j - 1));
}

inline std::optional<PartialBicoloring> c_gr(const Permutation& sigma, std::size_t i, std::size_t j) {
  detail::require_ascent(sigma, i, j);
  return detail::to_partial(detail::shape_gr(sigma.values(), i - 1, j - 1));
}

inline std::optional<PartialBicoloring> c_rg(const Permutation& sigma, std::size_t i, std::size_t j) {
  detail::require_ascent(sigma, i, j);
  return detail::to_partial(detail::shape_rg(sigma.values(), i - 1, j - 1));
}

inline std::optional<PartialBicoloring> c_star(const Permutation& sigma, std::size_t i, std::size_t j, std::size_t k,
                                               std::size_t l) {
  detail::require_ascent(sigma, i, j);
  detail::require_ascent(sigma, k, l);
  return detail::to_partial(detail::shape_star(sigma.values(), i - 1, j - 1, k - 1, l - 1));
}

namespace detail {

// Auxiliary point searches over 0-based windows; kNone when the window is empty.
template <class P>
std::size_t first_index(const std::vector<int>& s, std::size_t from, std::size_t to, P pred) {
  for (std::size_t k = from; k < to; ++k)
    if (pred(k)) return k;
  return kNone;
}

template <class P>
std::size_t last_index(const std::vector<int>& s, std::size_t from, std::size_t to, P pred) {
  for (std::size_t k = to; k-- > from;)
    if (pred(k)) return k;
  return kNone;
}

template <class P>
std::size_t argmin_value(const std::vector<int>& s, std::size_t from, std::size_t to, P pred) {
  std::size_t best = kNone;
  for (std::size_t k = from; k < to; ++k)
    if (pred(k) && (best == kNone || s[k] < s[best])) best = k;
  return best;
}

template <class P>
std::size_t argmax_value(const std::vector<int>& s, std::size_t from, std::size_t to, P pred) {
  std::size_t best = kNone;
  for (std::size_t k = from; k < to; ++k)
    if (pred(k) && (best == kNone || s[k] > s[best])) best = k;
  return best;
}

inline bool is_ascent(const std::vector<int>& s, std::size_t i, std::size_t j) {
  return i != kNone && j != kNone && i < j && s[i] < s[j];
}

inline std::optional<Canvas> star_checked(const std::vector<int>& s, std::size_t i, std::size_t j, std::size_t k,
                                          std::size_t l) {
  if (!is_ascent(s, i, j) || !is_ascent(s, k, l)) return std::nullopt;
  return shape_star(s, i, j, k, l);
}

// The nine rooted candidates, 0-based root s0.
inline std::optional<Canvas> rooted(const std::vector<int>& s, std::size_t s0, int m) {
  const std::size_t n = s.size();
  const int vs = s[s0];
  switch (m) {
    case 1: {
      std::size_t t = first_index(s, s0 + 1, n, [&](std::size_t k) { return s[k] > vs; });
      if (t == kNone) return std::nullopt;
      return shape_gr(s, s0, t);
    }
    case 2: {
      std::size_t t = argmax_value(s, 0, s0, [&](std::size_t k) { return s[k] < vs; });
      if (t == kNone) return std::nullopt;
      return shape_gr(s, t, s0);
    }
    case 3: {
      std::size_t t = argmin_value(s, s0 + 1, n, [&](std::size_t k) { return s[k] > vs; });
      if (t == kNone) return std::nullopt;
      return shape_rg(s, s0, t);
    }
    case 4: {
      std::size_t t = last_index(s, 0, s0, [&](std::size_t k) { return s[k] < vs; });
      if (t == kNone) return std::nullopt;
      return shape_rg(s, t, s0);
    }
    case 5: {
      std::size_t u = last_index(s, 0, s0, [&](std::size_t k) { return s[k] > vs; });
      if (u == kNone) return std::nullopt;
      std::size_t t = last_index(s, 0, u, [&](std::size_t k) { return s[k] < vs; });
      if (t == kNone) return std::nullopt;
      std::size_t p = last_index(s, 0, t, [&](std::size_t k) { return s[k] > s[t] && s[k] < vs; });
      if (p == kNone) return std::nullopt;
      std::size_t q = argmin_value(s, t + 1, u + 1, [](std::size_t) { return true; });
      if (q == kNone) return std::nullopt;
      return star_checked(s, p, q, t, s0);
    }
    case 6: {
      std::size_t t = first_index(s, s0 + 1, n, [&](std::size_t k) { return s[k] > vs; });
      if (t == kNone) return std::nullopt;
      std::size_t u = last_index(s, 0, t, [&](std::size_t k) { return s[k] > s[t]; });
      if (u == kNone) return std::nullopt;
      std::size_t p = last_index(s, 0, u, [&](std::size_t k) { return s[k] > vs && s[k] < s[t]; });
      if (p == kNone) return std::nullopt;
      std::size_t q = argmin_value(s, p + 1, u + 1, [&](std::size_t k) { return s[k] > s[t]; });
      if (q == kNone) return std::nullopt;
      return star_checked(s, p, q, s0, t);
    }
    case 7: {
      std::size_t t = argmax_value(s, 0, s0, [&](std::size_t k) { return s[k] < vs; });
      if (t == kNone) return std::nullopt;
      std::size_t u = argmin_value(s, 0, t, [&](std::size_t k) { return s[k] > s[t]; });
      if (u == kNone) return std::nullopt;
      std::size_t p = argmin_value(s, t + 1, s0, [&](std::size_t k) { return s[k] > s[u]; });
      if (p == kNone) return std::nullopt;
      std::size_t q = last_index(s, 0, p, [&](std::size_t k) { return s[k] >= s[u] && s[k] < s[p]; });
      if (q == kNone) return std::nullopt;
      return star_checked(s, q, p, t, s0);
    }
    case 8: {
      std::size_t t = first_index(s, s0 + 1, n, [&](std::size_t k) { return s[k] > vs; });
      if (t == kNone) return std::nullopt;
      std::size_t u = argmax_value(s, t + 1, n, [&](std::size_t k) { return s[k] > s[t]; });
      if (u == kNone) return std::nullopt;
      std::size_t v = last_index(s, 0, u, [&](std::size_t k) { return s[k] > s[u]; });
      if (v == kNone) return std::nullopt;
      std::size_t p = last_index(s, 0, v, [&](std::size_t k) { return s[k] > s[t] && s[k] < s[u]; });
      if (p == kNone) return std::nullopt;
      std::size_t q = argmin_value(s, p + 1, v + 1, [&](std::size_t k) { return s[k] > s[u]; });
      if (q == kNone) return std::nullopt;
      return star_checked(s, p, q, s0, t);
    }
    case 9: {
      std::size_t t = argmax_value(s, 0, s0, [&](std::size_t k) { return s[k] < vs; });
      if (t == kNone) return std::nullopt;
      std::size_t u = first_index(s, 0, t, [&](std::size_t k) { return s[k] < s[t]; });
      if (u == kNone) return std::nullopt;
      std::size_t v = argmin_value(s, 0, u, [&](std::size_t k) { return s[k] > s[u]; });
      if (v == kNone) return std::nullopt;
      std::size_t p = argmin_value(s, u + 1, t, [&](std::size_t k) { return s[k] > s[v]; });
      if (p == kNone) return std::nullopt;
      std::size_t q = last_index(s, 0, p, [&](std::size_t k) { return s[k] >= s[v] && s[k] < s[p]; });
      if (q == kNone) return std::nullopt;
      return star_checked(s, q, p, t, s0);
    }
    default:
      throw std::invalid_argument("rooted coloring index must be in 1..9");
  }
}

inline std::optional<Bicoloring> accept(const Permutation& sigma, const std::optional<Canvas>& c) {
  if (!c || c->conflict || !c->total()) return std::nullopt;
  Bicoloring b = Bicoloring::parse(c->c);
  if (!is_valid_coloring(sigma, b)) return std::nullopt;
  return b;
}

inline void require_indecomposable(const Permutation& sigma) {
  if (is_minus_decomposable(sigma)) throw NotIndecomposable(sigma.str() + " is skew-decomposable");
}

inline std::vector<Bicoloring> canonical(std::vector<Bicoloring> found) {
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

inline void add_monochromatic(const Permutation& sigma, std::vector<Bicoloring>& out) {
  for (Color c : {Color::R, Color::G}) {
    Bicoloring b = Bicoloring::uniform(sigma.size(), c);
    if (is_valid_coloring(sigma, b)) out.push_back(std::move(b));
  }
}

}  // namespace detail

// s is a 1-based root position, m selects one of the nine constructions.
inline std::optional<Bicoloring> c_rooted(const Permutation& sigma, std::size_t s, int m) {
  if (s < 1 || s > sigma.size()) throw std::out_of_range("root position out of range");
  return detail::accept(sigma, detail::rooted(sigma.values(), s - 1, m));
}

// Linear number of candidates, each built in linear time.
inline std::vector<Bicoloring> enumerate_indecomposable(const Permutation& sigma) {
  detail::require_indecomposable(sigma);
  std::vector<Bicoloring> out;
  detail::add_monochromatic(sigma, out);
  for (std::size_t s = 0; s < sigma.size(); ++s)
    for (int m = 1; m <= 9; ++m)
      if (auto b = detail::accept(sigma, detail::rooted(sigma.values(), s, m))) out.push_back(std::move(*b));
  return detail::canonical(std::move(out));
}

// Reference enumeration over every ascent and every pair of ascents.
inline std::vector<Bicoloring> enumerate_indecomposable_naive(const Permutation& sigma) {
  detail::require_indecomposable(sigma);
  const auto& s = sigma.values();
  const std::size_t n = s.size();
  std::vector<std::pair<std::size_t, std::size_t>> ascents;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (s[i] < s[j]) ascents.emplace_back(i, j);

  std::vector<Bicoloring> out;
  detail::add_monochromatic(sigma, out);
  auto keep = [&](const std::optional<detail::Canvas>& c) {
    if (auto b = detail::accept(sigma, c)) out.push_back(std::move(*b));
  };
  for (auto [i, j] : ascents) {
    keep(detail::shape_gr(s, i, j));
    keep(detail::shape_rg(s, i, j));
  }
  for (auto [i, j] : ascents)
    for (auto [k, l] : ascents) keep(detail::shape_star(s, i, j, k, l));
  return detail::canonical(std::move(out));
}

struct ColoringBlock {
  Permutation perm;
  std::vector<Bicoloring> colorings;
};

// Col(sigma) as a product over the blocks of the maximal skew-sum chain.
// Blocks occupy consecutive positions, so a full coloring is the concatenation
// of one coloring per block.
class ColoringSetProduct {
 public:
  ColoringSetProduct() = default;
  explicit ColoringSetProduct(std::vector<ColoringBlock> blocks) : blocks_(std::move(blocks)) {}

  const std::vector<ColoringBlock>& blocks() const { return blocks_; }

  BigCount count() const {
    BigCount c = 1;
    for (const auto& b : blocks_) c *= b.colorings.size();
    return c;
  }

  bool empty() const {
    for (const auto& b : blocks_)
      if (b.colorings.empty()) return true;
    return false;
  }

  // Odometer over the blocks, last block fastest; yields colorings in
  // lexicographic order.
  class Cursor {
   public:
    explicit Cursor(const ColoringSetProduct& p) : p_(&p), idx_(p.blocks_.size(), 0), done_(p.empty()) {}
    bool done() const { return done_; }
    Bicoloring current() const {
      std::vector<Color> out;
      for (std::size_t b = 0; b < idx_.size(); ++b) {
        const auto& part = p_->blocks_[b].colorings[idx_[b]].colors();
        out.insert(out.end(), part.begin(), part.end());
      }
      return Bicoloring(std::move(out));
    }
    void next() {
      for (std::size_t b = idx_.size(); b-- > 0;) {
        if (++idx_[b] < p_->blocks_[b].colorings.size()) return;
        idx_[b] = 0;
      }
      done_ = true;
    }

   private:
    const ColoringSetProduct* p_;
    std::vector<std::size_t> idx_;
    bool done_;
  };

  Cursor cursor() const { return Cursor(*this); }

  template <class F>
  void for_each(F&& f) const {
    for (Cursor c = cursor(); !c.done(); c.next()) f(c.current());
  }

  std::vector<Bicoloring> materialize() const {
    std::vector<Bicoloring> out;
    for_each([&](Bicoloring b) { out.push_back(std::move(b)); });
    return out;
  }

 private:
  std::vector<ColoringBlock> blocks_;
};

inline ColoringSetProduct enumerate_colorings(const Permutation& sigma) {
  std::vector<ColoringBlock> blocks;
  if (sigma.empty()) return ColoringSetProduct(std::move(blocks));
  for (Permutation& p : minus_blocks(sigma)) {
    auto cols = enumerate_indecomposable(p);
    blocks.push_back({std::move(p), std::move(cols)});
  }
  return ColoringSetProduct(std::move(blocks));
}

inline bool is_pushall_sortable(const Permutation& sigma) { return !enumerate_colorings(sigma).empty(); }

inline BigCount count_colorings(const Permutation& sigma) { return enumerate_colorings(sigma).count(); }

// One pushall sorting word, built from the first coloring in canonical order.
inline std::optional<StackWord> find_sorting_word(const Permutation& sigma) {
  const auto product = enumerate_colorings(sigma);
  auto cur = product.cursor();
  if (cur.done()) return std::nullopt;
  return sorting_word(sigma, cur.current());
}

}  // namespace pushall
