#pragma once

// Exhaustive deciders used as ground truth for small sizes.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "coloring.hpp"
#include "permutation.hpp"
#include "stack_machine.hpp"

namespace pushall {

struct SearchBudget {
  std::size_t max_n = 12;
  std::size_t max_states = 20'000'000;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void check_size(const Permutation& sigma, const SearchBudget& budget, const char* who) {
  if (sigma.size() > budget.max_n)
    throw BudgetExceeded(std::string(who) + ": size " + std::to_string(sigma.size()) + " exceeds max_n " +
                         std::to_string(budget.max_n));
}

// Key: next input index, then V, a separator, then H. Values fit in a byte.
inline std::string state_key(std::size_t idx, const std::vector<int>& V, const std::vector<int>& H) {
  std::string key;
  key.reserve(V.size() + H.size() + 2);
  key += static_cast<char>(idx);
  for (int x : V) key += static_cast<char>(x);
  key += '\xff';
  for (int x : H) key += static_cast<char>(x);
  return key;
}

class PushallSearch {
 public:
  PushallSearch(const Permutation& sigma, const SearchBudget& budget) : s_(sigma.values()), budget_(budget) {}

  bool run() { return dfs(0); }

 private:
  // Only lambda moves that keep V decreasing are explored: an ascent in V can
  // never disappear before every element has entered the stacks.
  bool dfs(std::size_t idx) {
    if (!seen_.insert(state_key(idx, V_, H_)).second) return false;
    if (seen_.size() > budget_.max_states) throw BudgetExceeded("brute_pushall: state budget exhausted");
    if (idx == s_.size() && !find_unsortable_pattern({V_, H_})) return true;
    if (idx < s_.size()) {
      H_.push_back(s_[idx]);
      const bool ok = dfs(idx + 1);
      H_.pop_back();
      if (ok) return true;
    }
    if (!H_.empty() && (V_.empty() || H_.back() < V_.back())) {
      const int x = H_.back();
      H_.pop_back();
      V_.push_back(x);
      const bool ok = dfs(idx);
      V_.pop_back();
      H_.push_back(x);
      if (ok) return true;
    }
    return false;
  }

  const std::vector<int>& s_;
  SearchBudget budget_;
  std::vector<int> V_, H_;
  std::unordered_set<std::string> seen_;
};

class TwoStackSearch {
 public:
  TwoStackSearch(const Permutation& sigma, const SearchBudget& budget) : s_(sigma.values()), budget_(budget) {}

  bool run() { return dfs(0, 1); }

 private:
  // Emitting the next expected value as soon as it is on top of V is always
  // safe, so that move is taken greedily.
  bool dfs(std::size_t idx, int next) {
    if (static_cast<std::size_t>(next) > s_.size()) return true;
    if (!V_.empty() && V_.back() == next) {
      V_.pop_back();
      const bool ok = dfs(idx, next + 1);
      V_.push_back(next);
      return ok;
    }
    if (!seen_.insert(state_key(idx, V_, H_)).second) return false;
    if (seen_.size() > budget_.max_states) throw BudgetExceeded("brute_two_stack: state budget exhausted");
    if (!H_.empty() && (V_.empty() || H_.back() < V_.back())) {
      const int x = H_.back();
      H_.pop_back();
      V_.push_back(x);
      const bool ok = dfs(idx, next);
      V_.pop_back();
      H_.push_back(x);
      if (ok) return true;
    }
    if (idx < s_.size()) {
      H_.push_back(s_[idx]);
      const bool ok = dfs(idx + 1, next);
      H_.pop_back();
      if (ok) return true;
    }
    return false;
  }

  const std::vector<int>& s_;
  SearchBudget budget_;
  std::vector<int> V_, H_;
  std::unordered_set<std::string> seen_;
};

inline void all_words(const std::vector<int>& s, std::size_t idx, int next, StackConfiguration& c, StackWord& w,
                      std::vector<StackWord>& out) {
  if (static_cast<std::size_t>(next) > s.size()) {
    out.push_back(w);
    return;
  }
  if (idx < s.size()) {
    c.H.push_back(s[idx]);
    w.push_back(Move::Rho);
    all_words(s, idx + 1, next, c, w, out);
    w.pop_back();
    c.H.pop_back();
  }
  if (!c.H.empty()) {
    c.V.push_back(c.H.back());
    c.H.pop_back();
    w.push_back(Move::Lambda);
    all_words(s, idx, next, c, w, out);
    w.pop_back();
    c.H.push_back(c.V.back());
    c.V.pop_back();
  }
  if (!c.V.empty() && c.V.back() == next) {
    c.V.pop_back();
    w.push_back(Move::Mu);
    all_words(s, idx, next + 1, c, w, out);
    w.pop_back();
    c.V.push_back(next);
  }
}

}  // namespace detail

inline bool brute_pushall(const Permutation& sigma, const SearchBudget& budget = {}) {
  detail::check_size(sigma, budget, "brute_pushall");
  return detail::PushallSearch(sigma, budget).run();
}

inline bool brute_two_stack(const Permutation& sigma, const SearchBudget& budget = {9, 20'000'000}) {
  detail::check_size(sigma, budget, "brute_two_stack");
  return detail::TwoStackSearch(sigma, budget).run();
}

// Every valid stack word for sigma, pushall or not. Exponential; meant for n <= 6.
inline std::vector<StackWord> brute_sorting_words(const Permutation& sigma, const SearchBudget& budget = {7, 0}) {
  detail::check_size(sigma, budget, "brute_sorting_words");
  std::vector<StackWord> out;
  StackConfiguration c;
  StackWord w;
  detail::all_words(sigma.values(), 0, 1, c, w, out);
  return out;
}

// Every total configuration reachable with rho and lambda moves only, sorted.
inline std::vector<StackConfiguration> reachable_total_configurations(const Permutation& sigma,
                                                                      const SearchBudget& budget = {8, 20'000'000}) {
  detail::check_size(sigma, budget, "reachable_total_configurations");
  const auto& s = sigma.values();
  std::unordered_set<std::string> seen;
  std::vector<StackConfiguration> out;
  StackConfiguration c;
  auto dfs = [&](auto&& self, std::size_t idx) -> void {
    if (!seen.insert(detail::state_key(idx, c.V, c.H)).second) return;
    if (seen.size() > budget.max_states) throw BudgetExceeded("reachable_total_configurations: state budget exhausted");
    if (idx == s.size()) out.push_back(c);
    if (idx < s.size()) {
      c.H.push_back(s[idx]);
      self(self, idx + 1);
      c.H.pop_back();
    }
    if (!c.H.empty()) {
      c.V.push_back(c.H.back());
      c.H.pop_back();
      self(self, idx);
      c.H.push_back(c.V.back());
      c.V.pop_back();
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// All 2^n colorings that pass is_valid_coloring, in lexicographic order.
inline std::vector<Bicoloring> brute_colorings(const Permutation& sigma, const SearchBudget& budget = {}) {
  detail::check_size(sigma, budget, "brute_colorings");
  const std::size_t n = sigma.size();
  std::vector<Bicoloring> out;
  std::vector<Color> cur(n);
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    // most significant bit is position 1; G (0) sorts before R (1)
    for (std::size_t k = 0; k < n; ++k) cur[k] = (mask >> (n - 1 - k)) & 1 ? Color::R : Color::G;
    Bicoloring b(cur);
    if (is_valid_coloring(sigma, b)) out.push_back(std::move(b));
  }
  return out;
}

namespace detail {

inline std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

// Lexicographic rank among permutations of the same size.
inline std::size_t rank(const Permutation& p) {
  const auto& v = p.values();
  const std::size_t n = v.size();
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += v[j] < v[i];
    r += smaller * factorial(n - 1 - i);
  }
  return r;
}

}  // namespace detail

using Predicate = std::function<bool(const Permutation&)>;

// Minimal non-members up to size max_n, ordered by size then lexicographically.
// Membership of each permutation is evaluated once.
inline std::vector<Permutation> mine_basis(const Predicate& member, std::size_t max_n) {
  std::vector<Permutation> basis;
  std::vector<char> prev{static_cast<char>(member(Permutation{}))};
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<char> cur;
    cur.reserve(detail::factorial(n));
    for_each_permutation(n, [&](const Permutation& sigma) {
      const bool in = member(sigma);
      cur.push_back(in);
      if (in) return;
      for (std::size_t pos = 1; pos <= n; ++pos)
        if (!prev[detail::rank(sigma.erase(pos))]) return;
      basis.push_back(sigma);
    });
    prev.swap(cur);
  }
  return basis;
}

}  // namespace pushall
