#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permutation.hpp"

namespace pushall {

// RHO: input -> H, LAMBDA: H -> V, MU: V -> output.
enum class Move : char { Rho = 'r', Lambda = 'l', Mu = 'm' };

struct IllegalMove : std::runtime_error {
  IllegalMove(std::size_t index, const std::string& what)
      : std::runtime_error(what + " at move " + std::to_string(index + 1)), index(index) {}
  std::size_t index;  // 0-based offset into the word
};

class StackWord {
 public:
  StackWord() = default;
  explicit StackWord(std::vector<Move> moves) : moves_(std::move(moves)) {}

  // Accepts r/l/m and the Greek letters ρ λ μ (UTF-8).
  static StackWord parse(std::string_view text) {
    std::vector<Move> moves;
    for (std::size_t i = 0; i < text.size(); ++i) {
      const unsigned char c = static_cast<unsigned char>(text[i]);
      if (c == 'r') moves.push_back(Move::Rho);
      else if (c == 'l') moves.push_back(Move::Lambda);
      else if (c == 'm') moves.push_back(Move::Mu);
      else if (c == 0xCF && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x81) {
        moves.push_back(Move::Rho);
        ++i;
      } else if (c == 0xCE && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0xBB) {
        moves.push_back(Move::Lambda);
        ++i;
      } else if (c == 0xCE && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0xBC) {
        moves.push_back(Move::Mu);
        ++i;
      } else if (std::isspace(c)) {
        continue;
      } else {
        throw ParseError("bad stack word character at offset " + std::to_string(i));
      }
    }
    return StackWord(std::move(moves));
  }

  const std::vector<Move>& moves() const { return moves_; }
  std::size_t size() const { return moves_.size(); }
  bool empty() const { return moves_.empty(); }
  void push_back(Move m) { moves_.push_back(m); }
  void pop_back() { moves_.pop_back(); }
  void append(const StackWord& w) { moves_.insert(moves_.end(), w.moves_.begin(), w.moves_.end()); }

  std::size_t count(Move m) const {
    std::size_t c = 0;
    for (Move x : moves_) c += x == m;
    return c;
  }

  // |w|_r = |w|_l = |w|_m = n and every prefix has |v|_r >= |v|_l >= |v|_m.
  bool is_complete(std::size_t n) const {
    std::size_t r = 0, l = 0, m = 0;
    for (Move x : moves_) {
      if (x == Move::Rho) ++r;
      else if (x == Move::Lambda) ++l;
      else ++m;
      if (!(r >= l && l >= m)) return false;
    }
    return r == n && l == n && m == n;
  }

  std::string str() const {
    std::string s;
    for (Move x : moves_) s += static_cast<char>(x);
    return s;
  }

  friend bool operator==(const StackWord&, const StackWord&) = default;

 private:
  std::vector<Move> moves_;
};

inline std::ostream& operator<<(std::ostream& os, const StackWord& w) { return os << w.str(); }

// Both stacks listed bottom-to-top.
struct StackConfiguration {
  std::vector<int> V;
  std::vector<int> H;

  bool is_total(std::size_t n) const {
    if (V.size() + H.size() != n) return false;
    std::vector<char> seen(n + 1, 0);
    for (const auto* s : {&V, &H})
      for (int x : *s) {
        if (x < 1 || static_cast<std::size_t>(x) > n || seen[x]) return false;
        seen[x] = 1;
      }
    return true;
  }

  // "V:2,1|H:3"
  std::string str() const {
    auto join = [](const std::vector<int>& s) {
      std::string out;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
      }
      return out;
    };
    return "V:" + join(V) + "|H:" + join(H);
  }

  static StackConfiguration parse(std::string_view text) {
    const auto bar = text.find('|');
    if (bar == std::string_view::npos || text.substr(0, 2) != "V:" || text.substr(bar + 1, 2) != "H:")
      throw ParseError("configuration must look like V:a,b|H:c");
    auto split = [](std::string_view s) {
      std::vector<int> out;
      std::size_t i = 0;
      while (i < s.size()) {
        std::size_t j = s.find(',', i);
        if (j == std::string_view::npos) j = s.size();
        std::string tok(s.substr(i, j - i));
        try {
          std::size_t used = 0;
          out.push_back(std::stoi(tok, &used));
          if (used != tok.size()) throw ParseError("bad value '" + tok + "'");
        } catch (const std::logic_error&) {
          throw ParseError("bad value '" + tok + "'");
        }
        i = j + 1;
      }
      return out;
    };
    return {split(text.substr(2, bar - 2)), split(text.substr(bar + 3))};
  }

  friend bool operator==(const StackConfiguration&, const StackConfiguration&) = default;
  friend auto operator<=>(const StackConfiguration&, const StackConfiguration&) = default;
};

struct Run {
  std::vector<int> output;
  std::vector<StackConfiguration> trace;  // initial configuration, then one per move
};

inline Run apply_word(const Permutation& sigma, const StackWord& w) {
  Run run;
  StackConfiguration c;
  std::size_t next = 0;
  const auto& in = sigma.values();
  run.trace.reserve(w.size() + 1);
  run.trace.push_back(c);
  for (std::size_t k = 0; k < w.size(); ++k) {
    switch (w.moves()[k]) {
      case Move::Rho:
        if (next == in.size()) throw IllegalMove(k, "rho with empty input");
        c.H.push_back(in[next++]);
        break;
      case Move::Lambda:
        if (c.H.empty()) throw IllegalMove(k, "lambda with empty H");
        c.V.push_back(c.H.back());
        c.H.pop_back();
        break;
      case Move::Mu:
        if (c.V.empty()) throw IllegalMove(k, "mu with empty V");
        run.output.push_back(c.V.back());
        c.V.pop_back();
        break;
    }
    run.trace.push_back(c);
  }
  return run;
}

inline bool is_valid_word(const Permutation& sigma, const StackWord& w) {
  if (!w.is_complete(sigma.size())) return false;
  try {
    Run run = apply_word(sigma, w);
    return run.output == Permutation::identity(sigma.size()).values();
  } catch (const IllegalMove&) {
    return false;
  }
}

inline bool is_pushall_word(const StackWord& w) {
  bool seen_mu = false;
  for (Move m : w.moves()) {
    if (m == Move::Mu) seen_mu = true;
    else if (m == Move::Rho && seen_mu) return false;
  }
  return true;
}

enum class StackPattern { V12, H132, Split213 };

inline const char* to_string(StackPattern p) {
  switch (p) {
    case StackPattern::V12: return "V12";
    case StackPattern::H132: return "H132";
    case StackPattern::Split213: return "SPLIT213";
  }
  return "?";
}

// a < b < c are the offending values; for V12 only a (below) and b (above) are used.
struct PatternWitness {
  StackPattern kind;
  int a = 0, b = 0, c = 0;
  friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

inline std::optional<PatternWitness> find_unsortable_pattern(const StackConfiguration& c) {
  const auto& V = c.V;
  const auto& H = c.H;
  // V12: first element (from the bottom) having a smaller one below it.
  for (std::size_t q = 1, lp = 0; q < V.size(); ++q) {
    if (V[lp] < V[q]) return PatternWitness{StackPattern::V12, V[lp], V[q], 0};
    if (V[q] < V[lp]) lp = q;
  }
  // H132: positions p < q < r bottom-to-top with H[p] < H[r] < H[q].
  for (std::size_t r = 2; r < H.size(); ++r) {
    int low = H[0];
    for (std::size_t q = 1; q < r; ++q) {
      if (H[q] > H[r] && low < H[r]) return PatternWitness{StackPattern::H132, low, H[r], H[q]};
      low = std::min(low, H[q]);
    }
  }
  // SPLIT213: b in V, a below c in H, a < b < c.
  for (int b : V) {
    int low = 0;
    bool have_low = false;
    for (int x : H) {
      if (x > b && have_low && low < b) return PatternWitness{StackPattern::Split213, low, b, x};
      if (!have_low || x < low) low = x, have_low = true;
    }
  }
  return std::nullopt;
}

// Greedy increasing pop-out. An empty V compares as +infinity.
inline std::optional<StackWord> pop_out(const StackConfiguration& c, std::size_t n) {
  std::vector<int> V = c.V, H = c.H;
  StackWord w;
  int i = 1;
  while (static_cast<std::size_t>(i) <= n) {
    if (!V.empty() && V.back() == i) {
      V.pop_back();
      w.push_back(Move::Mu);
      ++i;
    } else if (!H.empty() && (V.empty() || H.back() < V.back())) {
      V.push_back(H.back());
      H.pop_back();
      w.push_back(Move::Lambda);
    } else {
      return std::nullopt;
    }
  }
  if (!V.empty() || !H.empty()) return std::nullopt;
  return w;
}

}  // namespace pushall
