#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permutation.hpp"
#include "stack_machine.hpp"

namespace pushall {

// R points are destined for stack H, G points for stack V.
enum class Color : char { R = 'R', G = 'G' };

struct NotTotal : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class Bicoloring {
 public:
  Bicoloring() = default;
  explicit Bicoloring(std::vector<Color> colors) : colors_(std::move(colors)) {}
  static Bicoloring uniform(std::size_t n, Color c) { return Bicoloring(std::vector<Color>(n, c)); }

  // "GGRR"
  static Bicoloring parse(std::string_view text) {
    std::vector<Color> colors;
    for (char ch : text) {
      if (ch == 'R') colors.push_back(Color::R);
      else if (ch == 'G') colors.push_back(Color::G);
      else throw ParseError(std::string("bad color '") + ch + "'");
    }
    return Bicoloring(std::move(colors));
  }

  std::size_t size() const { return colors_.size(); }
  const std::vector<Color>& colors() const { return colors_; }
  Color color(std::size_t pos) const { return colors_.at(pos - 1); }  // 1-based

  std::string str() const {
    std::string s;
    for (Color c : colors_) s += static_cast<char>(c);
    return s;
  }

  friend bool operator==(const Bicoloring&, const Bicoloring&) = default;
  friend bool operator<(const Bicoloring& a, const Bicoloring& b) { return a.str() < b.str(); }

 private:
  std::vector<Color> colors_;
};

inline std::ostream& operator<<(std::ostream& os, const Bicoloring& b) { return os << b.str(); }

class PartialBicoloring {
 public:
  PartialBicoloring() = default;
  explicit PartialBicoloring(std::size_t n) : colors_(n) {}

  std::size_t size() const { return colors_.size(); }
  const std::vector<std::optional<Color>>& colors() const { return colors_; }
  std::optional<Color> color(std::size_t pos) const { return colors_.at(pos - 1); }  // 1-based

  // Returns false when the point already carries the other color.
  bool paint(std::size_t pos, Color c) {
    auto& slot = colors_.at(pos - 1);
    if (slot && *slot != c) return false;
    slot = c;
    return true;
  }

  bool is_total() const {
    for (const auto& c : colors_)
      if (!c) return false;
    return true;
  }

  bool is_blank() const {
    for (const auto& c : colors_)
      if (c) return false;
    return true;
  }

  std::optional<Bicoloring> total() const {
    std::vector<Color> out;
    out.reserve(colors_.size());
    for (const auto& c : colors_) {
      if (!c) return std::nullopt;
      out.push_back(*c);
    }
    return Bicoloring(std::move(out));
  }

  // Uncolored points print as '.'.
  std::string str() const {
    std::string s;
    for (const auto& c : colors_) s += c ? static_cast<char>(*c) : '.';
    return s;
  }

  // Agrees with b wherever a color is set.
  bool compatible_with(const Bicoloring& b) const {
    for (std::size_t i = 0; i < colors_.size(); ++i)
      if (colors_[i] && *colors_[i] != b.colors()[i]) return false;
    return true;
  }

  friend bool operator==(const PartialBicoloring&, const PartialBicoloring&) = default;

 private:
  std::vector<std::optional<Color>> colors_;
};

namespace detail {

inline void require_same_size(const Permutation& sigma, const Bicoloring& b) {
  if (sigma.size() != b.size())
    throw std::invalid_argument("coloring of length " + std::to_string(b.size()) + " for a permutation of size " +
                                std::to_string(sigma.size()));
}

}  // namespace detail

inline StackConfiguration conf_of(const Permutation& sigma, const Bicoloring& b) {
  detail::require_same_size(sigma, b);
  StackConfiguration c;
  const auto inv = sigma.inverse();
  for (std::size_t v = sigma.size(); v >= 1; --v)
    if (b.colors()[inv[v] - 1] == Color::G) c.V.push_back(static_cast<int>(v));
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (b.colors()[i] == Color::R) c.H.push_back(sigma.values()[i]);
  return c;
}

// Colors are reported by value: position v-1 holds the color of value v. For a
// configuration reached from sigma, compose with sigma to get positions.
inline Bicoloring col_of_values(const StackConfiguration& c, std::size_t n) {
  if (!c.is_total(n)) throw NotTotal("configuration " + c.str() + " is not total for n = " + std::to_string(n));
  std::vector<Color> by_value(n, Color::R);
  for (int v : c.V) by_value[v - 1] = Color::G;
  return Bicoloring(std::move(by_value));
}

inline Bicoloring col_of(const Permutation& sigma, const StackConfiguration& c) {
  Bicoloring by_value = col_of_values(c, sigma.size());
  std::vector<Color> out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) out[i] = by_value.colors()[sigma.values()[i] - 1];
  return Bicoloring(std::move(out));
}

struct PushRun {
  std::optional<StackWord> word;
  std::size_t steps = 0;
  std::vector<StackConfiguration> trace;  // filled only when requested
};

// Push phase: drive sigma into the stacks so that G points land in V and R
// points stay in H.
inline PushRun push_run(const Permutation& sigma, const Bicoloring& b, bool record = false) {
  detail::require_same_size(sigma, b);
  const auto& s = sigma.values();
  const std::size_t n = s.size();
  std::vector<Color> by_value(n + 1);
  for (std::size_t k = 0; k < n; ++k) by_value[s[k]] = b.colors()[k];

  PushRun run;
  StackConfiguration c;
  StackWord w;
  auto step = [&](Move m) {
    w.push_back(m);
    ++run.steps;
    if (record) run.trace.push_back(c);
  };
  auto lambda_allowed = [&] { return c.V.empty() || c.H.back() < c.V.back(); };
  auto fail = [&] {
    ++run.steps;
    return run;
  };

  std::size_t i = 0;
  while (i < n) {
    if (c.H.empty() || by_value[c.H.back()] == Color::R) {
      c.H.push_back(s[i++]);
      step(Move::Rho);
    } else if (by_value[s[i]] == Color::R || s[i] < c.H.back()) {
      if (!lambda_allowed()) return fail();
      c.V.push_back(c.H.back());
      c.H.pop_back();
      step(Move::Lambda);
    } else {
      c.H.push_back(s[i++]);
      step(Move::Rho);
    }
  }
  while (!c.H.empty() && by_value[c.H.back()] == Color::G) {
    if (!lambda_allowed()) return fail();
    c.V.push_back(c.H.back());
    c.H.pop_back();
    step(Move::Lambda);
  }
  ++run.steps;  // the final exit test
  run.word = std::move(w);
  return run;
}

inline std::optional<StackWord> push_to_configuration(const Permutation& sigma, const Bicoloring& b) {
  return push_run(sigma, b).word;
}

inline bool is_valid_coloring(const Permutation& sigma, const Bicoloring& b) {
  if (!push_to_configuration(sigma, b)) return false;
  return pop_out(conf_of(sigma, b), sigma.size()).has_value();
}

inline std::optional<StackWord> sorting_word(const Permutation& sigma, const Bicoloring& b) {
  auto prefix = push_to_configuration(sigma, b);
  if (!prefix) return std::nullopt;
  auto suffix = pop_out(conf_of(sigma, b), sigma.size());
  if (!suffix) return std::nullopt;
  prefix->append(*suffix);
  return prefix;
}

enum class ColoredPattern { R132, G213, G1RxG2, GBetweenR12 };

inline const char* to_string(ColoredPattern p) {
  switch (p) {
    case ColoredPattern::R132: return "R-132";
    case ColoredPattern::G213: return "G-213";
    case ColoredPattern::G1RxG2: return "G1-Rx-G2";
    case ColoredPattern::GBetweenR12: return "G-between-R12";
  }
  return "?";
}

struct ColoredPatternWitness {
  ColoredPattern kind;
  std::array<std::size_t, 3> positions;  // 1-based, increasing
  friend bool operator==(const ColoredPatternWitness&, const ColoredPatternWitness&) = default;
};

// Cubic search straight from the definition of a valid coloring.
inline std::optional<ColoredPatternWitness> forbidden_pattern_check(const Permutation& sigma, const Bicoloring& b) {
  detail::require_same_size(sigma, b);
  const auto& s = sigma.values();
  const auto& c = b.colors();
  const std::size_t n = s.size();
  const Color R = Color::R, G = Color::G;

  auto first = [&](ColoredPattern kind, auto&& match) -> std::optional<ColoredPatternWitness> {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          if (match(i, j, k)) return ColoredPatternWitness{kind, {i + 1, j + 1, k + 1}};
    return std::nullopt;
  };

  if (auto w = first(ColoredPattern::R132, [&](auto i, auto j, auto k) {
        return c[i] == R && c[j] == R && c[k] == R && s[i] < s[k] && s[k] < s[j];
      }))
    return w;
  if (auto w = first(ColoredPattern::G213, [&](auto i, auto j, auto k) {
        return c[i] == G && c[j] == G && c[k] == G && s[j] < s[i] && s[i] < s[k];
      }))
    return w;
  if (auto w = first(ColoredPattern::G1RxG2,
                     [&](auto i, auto j, auto k) { return c[i] == G && c[j] == R && c[k] == G && s[i] < s[k]; }))
    return w;
  return first(ColoredPattern::GBetweenR12, [&](auto i, auto j, auto k) {
    if (c[i] == G && c[j] == R && c[k] == R) return s[j] < s[i] && s[i] < s[k];
    if (c[i] == R && c[j] == G && c[k] == R) return s[i] < s[j] && s[j] < s[k];
    if (c[i] == R && c[j] == R && c[k] == G) return s[i] < s[k] && s[k] < s[j];
    return false;
  });
}

}  // namespace pushall
