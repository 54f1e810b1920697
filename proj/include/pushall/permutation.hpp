#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pushall {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAPermutation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ArityMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// One-line notation. Values are 1..n. Positions in every public signature of
// this library are 1-based; values() exposes the raw sequence as a container.
class Permutation {
 public:
  Permutation() = default;
  Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) { validate(); }

  static Permutation identity(std::size_t n) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
    return Permutation(std::move(v), Trusted{});
  }

  // Relative order of an arbitrary sequence of distinct integers.
  static Permutation normalize(const std::vector<int>& seq) {
    std::vector<std::size_t> order(seq.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
    std::vector<int> v(seq.size());
    for (std::size_t r = 0; r < order.size(); ++r) v[order[r]] = static_cast<int>(r + 1);
    return Permutation(std::move(v), Trusted{});
  }

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const std::vector<int>& values() const { return values_; }

  // 1-based position.
  int at(std::size_t pos) const {
    if (pos == 0 || pos > values_.size()) throw std::out_of_range("position out of range");
    return values_[pos - 1];
  }

  std::vector<std::size_t> inverse() const {
    std::vector<std::size_t> inv(values_.size() + 1, 0);
    for (std::size_t i = 0; i < values_.size(); ++i) inv[values_[i]] = i + 1;
    return inv;
  }

  Permutation reverse() const {
    std::vector<int> v(values_.rbegin(), values_.rend());
    return Permutation(std::move(v), Trusted{});
  }

  Permutation complement() const {
    std::vector<int> v(values_);
    const int n1 = static_cast<int>(v.size()) + 1;
    for (int& x : v) x = n1 - x;
    return Permutation(std::move(v), Trusted{});
  }

  // Remove the point at 1-based position pos and renormalize.
  Permutation erase(std::size_t pos) const {
    const int removed = at(pos);
    std::vector<int> v;
    v.reserve(values_.size() - 1);
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i + 1 == pos) continue;
      v.push_back(values_[i] > removed ? values_[i] - 1 : values_[i]);
    }
    return Permutation(std::move(v), Trusted{});
  }

  // Compact digits when every value fits in one digit, spaces otherwise.
  std::string str() const {
    std::string out;
    const bool compact = values_.size() <= 9;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!compact && i > 0) out += ' ';
      out += std::to_string(values_[i]);
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.values_ <=> b.values_;
  }

 private:
  struct Trusted {};
  Permutation(std::vector<int> values, Trusted) : values_(std::move(values)) {}

  void validate() const {
    std::vector<char> seen(values_.size() + 1, 0);
    for (int x : values_) {
      if (x < 1) throw NotAPermutation("non-positive value " + std::to_string(x));
      if (static_cast<std::size_t>(x) > values_.size())
        throw NotAPermutation("value " + std::to_string(x) + " exceeds length " + std::to_string(values_.size()));
      if (seen[x]) throw NotAPermutation("duplicate value " + std::to_string(x));
      seen[x] = 1;
    }
  }

  std::vector<int> values_;
};

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.str(); }

// Whitespace/comma separated integers, or a compact digit string.
inline Permutation parse(std::string_view text) {
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (!text.empty() && is_sep(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_sep(text.back())) text.remove_suffix(1);

  std::vector<int> values;
  const bool separated = std::any_of(text.begin(), text.end(), is_sep);
  if (!separated && !text.empty() && text.front() != '-' && text.front() != '+') {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(std::string("unexpected character '") + c + "'");
      values.push_back(c - '0');
    }
    return Permutation(std::move(values));
  }

  std::size_t i = 0;
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    std::string_view tok = text.substr(i, j - i);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      throw ParseError("bad integer '" + std::string(text.substr(i, j - i)) + "'");
    values.push_back(v);
    i = j;
  }
  return Permutation(std::move(values));
}

namespace detail {

inline bool embed(const std::vector<int>& text, const std::vector<int>& pat, std::vector<std::size_t>& chosen,
                  std::size_t from) {
  const std::size_t k = chosen.size();
  if (k == pat.size()) return true;
  // Leave room for the remaining pattern letters.
  const std::size_t last = text.size() - (pat.size() - k);
  for (std::size_t p = from; p <= last; ++p) {
    bool ok = true;
    for (std::size_t m = 0; m < k && ok; ++m) ok = (pat[m] < pat[k]) == (text[chosen[m]] < text[p]);
    if (!ok) continue;
    chosen.push_back(p);
    if (embed(text, pat, chosen, p + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

inline bool contains_pattern(const Permutation& sigma, const Permutation& pi) {
  if (pi.size() > sigma.size()) return false;
  if (pi.empty()) return true;
  std::vector<std::size_t> chosen;
  chosen.reserve(pi.size());
  return detail::embed(sigma.values(), pi.values(), chosen, 0);
}

template <class Range>
bool avoids(const Permutation& sigma, const Range& basis) {
  for (const Permutation& p : basis)
    if (contains_pattern(sigma, p)) return false;
  return true;
}

inline bool avoids(const Permutation& sigma, std::initializer_list<Permutation> basis) {
  return avoids<std::initializer_list<Permutation>>(sigma, basis);
}

struct Interval {
  std::size_t start = 0;  // 1-based, inclusive
  std::size_t end = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

inline std::vector<Interval> intervals(const Permutation& sigma) {
  const auto& v = sigma.values();
  const std::size_t n = v.size();
  std::vector<Interval> out;
  for (std::size_t s = 0; s < n; ++s) {
    int lo = v[s], hi = v[s];
    for (std::size_t e = s + 1; e < n; ++e) {
      lo = std::min(lo, v[e]);
      hi = std::max(hi, v[e]);
      if (e - s + 1 == n) break;
      if (static_cast<std::size_t>(hi - lo) == e - s) out.push_back({s + 1, e + 1});
    }
  }
  return out;
}

// Sizes 1 and 2 are not counted as simple.
inline bool is_simple(const Permutation& sigma) { return sigma.size() >= 3 && intervals(sigma).empty(); }

inline Permutation inflate(const Permutation& tau, const std::vector<Permutation>& parts) {
  if (parts.size() != tau.size())
    throw ArityMismatch("inflate: " + std::to_string(parts.size()) + " parts for a skeleton of size " +
                        std::to_string(tau.size()));
  const std::size_t k = tau.size();
  // base[v] = total size of parts whose skeleton value is below v
  std::vector<int> size_by_value(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) size_by_value[tau.values()[i]] = static_cast<int>(parts[i].size());
  std::vector<int> base(k + 2, 0);
  for (std::size_t v = 1; v <= k; ++v) base[v + 1] = base[v] + size_by_value[v];
  std::vector<int> out;
  for (std::size_t i = 0; i < k; ++i)
    for (int x : parts[i].values()) out.push_back(base[tau.values()[i]] + x);
  return Permutation(std::move(out));
}

inline Permutation direct_sum(const std::vector<Permutation>& blocks) {
  return inflate(Permutation::identity(blocks.size()), blocks);
}

inline Permutation skew_sum(const std::vector<Permutation>& blocks) {
  return inflate(Permutation::identity(blocks.size()).reverse(), blocks);
}

enum class DecompositionKind { Leaf, PlusChain, MinusChain };

struct Decomposition {
  DecompositionKind kind = DecompositionKind::Leaf;
  std::vector<Permutation> blocks;
};

namespace detail {

inline std::vector<Permutation> split_at(const Permutation& sigma, const std::vector<std::size_t>& cuts) {
  std::vector<Permutation> blocks;
  std::size_t from = 0;
  for (std::size_t cut : cuts) {
    blocks.push_back(Permutation::normalize({sigma.values().begin() + from, sigma.values().begin() + cut}));
    from = cut;
  }
  return blocks;
}

}  // namespace detail

inline Decomposition decompose(const Permutation& sigma) {
  const auto& v = sigma.values();
  const std::size_t n = v.size();
  std::vector<std::size_t> plus, minus;
  int hi = 0, lo = static_cast<int>(n) + 1;
  for (std::size_t i = 0; i < n; ++i) {
    hi = std::max(hi, v[i]);
    lo = std::min(lo, v[i]);
    if (static_cast<std::size_t>(hi) == i + 1) plus.push_back(i + 1);
    if (static_cast<std::size_t>(lo) == n - i) minus.push_back(i + 1);
  }
  if (plus.size() >= 2) return {DecompositionKind::PlusChain, detail::split_at(sigma, plus)};
  if (minus.size() >= 2) return {DecompositionKind::MinusChain, detail::split_at(sigma, minus)};
  return {DecompositionKind::Leaf, {}};
}

inline bool is_plus_decomposable(const Permutation& sigma) {
  return decompose(sigma).kind == DecompositionKind::PlusChain;
}

inline bool is_minus_decomposable(const Permutation& sigma) {
  return decompose(sigma).kind == DecompositionKind::MinusChain;
}

// Blocks of the maximal skew-sum chain; a single block when there is none.
inline std::vector<Permutation> minus_blocks(const Permutation& sigma) {
  Decomposition d = decompose(sigma);
  if (d.kind == DecompositionKind::MinusChain) return d.blocks;
  return {sigma};
}

// Calls f on every permutation of size n in lexicographic order.
template <class F>
void for_each_permutation(std::size_t n, F&& f) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
  do {
    f(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace pushall
