#pragma once

// Exhaustive cross-checks over S_1..S_max_n. Each check stops at its first
// counterexample.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "characterization.hpp"
#include "coloring.hpp"
#include "coloring_enum.hpp"
#include "oracle.hpp"
#include "permutation.hpp"
#include "stack_machine.hpp"

namespace pushall {

struct UnknownCheck : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CheckResult {
  std::string name;
  std::size_t max_n = 0;
  std::size_t inputs = 0;
  bool pass = true;
  std::string counterexample;
};

namespace sweep_detail {

using Verdict = std::optional<std::string>;

inline std::string show(const std::vector<Bicoloring>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "}";
}

inline std::string show(const std::vector<Permutation>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "}";
}

// Runs f on every permutation of size min_n..max_n.
template <class F>
CheckResult over_perms(const std::string& name, std::size_t max_n, F&& f, std::size_t min_n = 0) {
  CheckResult r{name, max_n, 0, true, {}};
  for (std::size_t n = min_n; n <= max_n; ++n) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
    do {
      const Permutation sigma(v);
      ++r.inputs;
      if (Verdict bad = f(sigma)) {
        r.pass = false;
        r.counterexample = sigma.str() + ": " + *bad;
        return r;
      }
    } while (std::next_permutation(v.begin(), v.end()));
  }
  return r;
}

inline CheckResult compare_sets(const std::string& name, std::size_t max_n, std::vector<Permutation> mined,
                                std::vector<Permutation> expected) {
  std::sort(mined.begin(), mined.end());
  std::sort(expected.begin(), expected.end());
  CheckResult r{name, max_n, mined.size(), mined == expected, {}};
  if (!r.pass) {
    std::vector<Permutation> extra, missing;
    std::set_difference(mined.begin(), mined.end(), expected.begin(), expected.end(), std::back_inserter(extra));
    std::set_difference(expected.begin(), expected.end(), mined.begin(), mined.end(), std::back_inserter(missing));
    r.counterexample = "mined but not listed " + show(extra) + ", listed but not mined " + show(missing);
  }
  return r;
}

inline std::vector<Permutation> up_to(const PatternBasis& b, std::size_t max_n) {
  std::vector<Permutation> out;
  for (const auto& p : b.patterns)
    if (p.size() <= max_n) out.push_back(p);
  return out;
}

inline Permutation one_plus(const Permutation& s) { return direct_sum({Permutation{1}, s}); }
inline Permutation plus_one(const Permutation& s) { return direct_sum({s, Permutation{1}}); }

// All total configurations on 1..n: an ordering of the values split into V then H.
template <class F>
bool for_each_total_configuration(std::size_t n, F&& f) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
  do {
    for (std::size_t k = 0; k <= n; ++k)
      if (!f(StackConfiguration{{v.begin(), v.begin() + k}, {v.begin() + k, v.end()}})) return false;
  } while (std::next_permutation(v.begin(), v.end()));
  return true;
}

// Every lambda/mu word emptying c in increasing order.
inline void pop_words(StackConfiguration& c, int next, int n, StackWord& w, std::vector<StackWord>& out) {
  if (next > n) {
    out.push_back(w);
    return;
  }
  if (!c.H.empty()) {
    c.V.push_back(c.H.back());
    c.H.pop_back();
    w.push_back(Move::Lambda);
    pop_words(c, next, n, w, out);
    w.pop_back();
    c.H.push_back(c.V.back());
    c.V.pop_back();
  }
  if (!c.V.empty() && c.V.back() == next) {
    c.V.pop_back();
    w.push_back(Move::Mu);
    pop_words(c, next + 1, n, w, out);
    w.pop_back();
    c.V.push_back(next);
  }
}

// Bichromatic ascents as 0-based pairs (left, right).
inline std::vector<std::pair<std::size_t, std::size_t>> ascents(const Permutation& sigma, const Bicoloring& b,
                                                                Color left, Color right) {
  const auto& s = sigma.values();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] < s[j] && b.colors()[i] == left && b.colors()[j] == right) out.emplace_back(i, j);
  return out;
}

using Pair = std::pair<std::size_t, std::size_t>;

// RG: rightmost left point, then lowest right point; and the other order.
inline std::pair<Pair, Pair> distinguished_rg(const Permutation& sigma, const std::vector<Pair>& rg) {
  const auto& s = sigma.values();
  Pair a = rg.front(), b = rg.front();
  for (const Pair& p : rg) {
    if (p.first > a.first || (p.first == a.first && s[p.second] < s[a.second])) a = p;
    if (s[p.second] < s[b.second] || (s[p.second] == s[b.second] && p.first > b.first)) b = p;
  }
  return {a, b};
}

// GR: leftmost right point, then highest left point; and the other order.
inline std::pair<Pair, Pair> distinguished_gr(const Permutation& sigma, const std::vector<Pair>& gr) {
  const auto& s = sigma.values();
  Pair a = gr.front(), b = gr.front();
  for (const Pair& p : gr) {
    if (p.second < a.second || (p.second == a.second && s[p.first] > s[a.first])) a = p;
    if (s[p.first] > s[b.first] || (s[p.first] == s[b.first] && p.second < b.second)) b = p;
  }
  return {a, b};
}

inline std::string show(const Pair& p) {
  return "(" + std::to_string(p.first + 1) + "," + std::to_string(p.second + 1) + ")";
}

struct CheckSpec {
  std::string description;
  std::size_t cap;  // largest sensible max_n
  std::function<CheckResult(const std::string&, std::size_t)> run;
};

inline const std::map<std::string, CheckSpec>& registry() {
  static const std::map<std::string, CheckSpec> checks = [] {
    std::map<std::string, CheckSpec> m;

    m["coloring-equivalence"] = {"enumerate_colorings equals the 2^n brute-force set", 10, [](auto& name, auto n) {
      return over_perms(name, n, [](const Permutation& s) -> Verdict {
        auto fast = enumerate_colorings(s).materialize();
        auto slow = brute_colorings(s);
        if (fast != slow) return "fast " + show(fast) + " brute " + show(slow);
        return std::nullopt;
      });
    }};

    m["pushall-equivalence"] = {"is_pushall_sortable equals the configuration search", 10, [](auto& name, auto n) {
      return over_perms(name, n, [](const Permutation& s) -> Verdict {
        const bool fast = is_pushall_sortable(s), slow = brute_pushall(s);
        if (fast != slow) return std::string("fast ") + (fast ? "true" : "false") + " brute " + (slow ? "true" : "false");
        return std::nullopt;
      });
    }};

    m["validity-definitions"] = {"linear validity test equals the four-pattern definition", 8, [](auto& name, auto n) {
      return over_perms(name, n, [](const Permutation& s) -> Verdict {
        const std::size_t k = s.size();
        for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
          std::vector<Color> c(k);
          for (std::size_t i = 0; i < k; ++i) c[i] = (mask >> i) & 1 ? Color::R : Color::G;
          Bicoloring b(c);
          if (is_valid_coloring(s, b) != !forbidden_pattern_check(s, b).has_value()) return "coloring " + b.str();
        }
        return std::nullopt;
      });
    }};

    m["cardinality-bound"] = {"at most 9n+2 colorings per skew-indecomposable permutation", 10, [](auto& name, auto n) {
      return over_perms(
          name, n,
          [](const Permutation& s) -> Verdict {
            if (is_minus_decomposable(s)) return std::nullopt;
            const auto count = enumerate_indecomposable(s).size();
            if (count > 9 * s.size() + 2) return std::to_string(count) + " colorings";
            return std::nullopt;
          },
          1);
    }};

    m["identity-count"] = {"the identity of size n has exactly 2n colorings", 200, [](auto& name, std::size_t n) {
      CheckResult r{name, n, 0, true, {}};
      for (std::size_t k = 1; k <= n; ++k) {
        ++r.inputs;
        const auto id = Permutation::identity(k);
        const BigCount fast = count_colorings(id);
        if (fast != 2 * k) {
          r.pass = false;
          r.counterexample = "size " + std::to_string(k) + ": " + fast.str();
          return r;
        }
        if (k <= 12 && brute_colorings(id).size() != 2 * k) {
          r.pass = false;
          r.counterexample = "size " + std::to_string(k) + ": brute force disagrees";
          return r;
        }
      }
      return r;
    }};

    m["naive-enumeration"] = {"the quintic enumeration equals the quadratic one", 8, [](auto& name, auto n) {
      return over_perms(
          name, n,
          [](const Permutation& s) -> Verdict {
            if (is_minus_decomposable(s)) return std::nullopt;
            auto fast = enumerate_indecomposable(s), naive = enumerate_indecomposable_naive(s);
            if (fast != naive) return "fast " + show(fast) + " naive " + show(naive);
            return std::nullopt;
          },
          1);
    }};

    m["sorting-words"] = {"every enumerated coloring yields a valid 3n-letter pushall word", 8, [](auto& name, auto n) {
      return over_perms(name, n, [](const Permutation& s) -> Verdict {
        Verdict bad;
        enumerate_colorings(s).for_each([&](const Bicoloring& b) {
          if (bad) return;
          auto w = sorting_word(s, b);
          if (!w) bad = "no word for " + b.str();
          else if (w->size() != 3 * s.size() || !is_valid_word(s, *w) || !is_pushall_word(*w))
            bad = "bad word " + w->str() + " for " + b.str();
        });
        return bad;
      });
    }};

    m["popable"] = {"pop-out succeeds iff no unsortable stack pattern", 7, [](auto& name, std::size_t n) {
      CheckResult r{name, n, 0, true, {}};
      for (std::size_t k = 0; k <= n && r.pass; ++k)
        for_each_total_configuration(k, [&](const StackConfiguration& c) {
          ++r.inputs;
          if (pop_out(c, k).has_value() == find_unsortable_pattern(c).has_value()) {
            r.pass = false;
            r.counterexample = c.str();
          }
          return r.pass;
        });
      return r;
    }};

    m["pop-uniqueness"] = {"at most one lambda/mu word empties a configuration in order", 5, [](auto& name, std::size_t n) {
      CheckResult r{name, n, 0, true, {}};
      for (std::size_t k = 0; k <= n && r.pass; ++k)
        for_each_total_configuration(k, [&](const StackConfiguration& c) {
          ++r.inputs;
          StackConfiguration work = c;
          StackWord w;
          std::vector<StackWord> words;
          pop_words(work, 1, static_cast<int>(k), w, words);
          auto greedy = pop_out(c, k);
          const bool ok = words.size() <= 1 && greedy.has_value() == (words.size() == 1) &&
                          (!greedy || *greedy == words.front());
          if (!ok) {
            r.pass = false;
            r.counterexample = c.str() + ": " + std::to_string(words.size()) + " words";
          }
          return r.pass;
        });
      return r;
    }};

    m["trace-hygiene"] = {"configurations along any sorting avoid the unsortable patterns", 6, [](auto& name, auto n) {
      return over_perms(name, n, [](const Permutation& s) -> Verdict {
        for (const auto& w : brute_sorting_words(s))
          for (const auto& c : apply_word(s, w).trace)
            if (auto p = find_unsortable_pattern(c)) return "word " + w.str() + " reaches " + c.str();
        return std::nullopt;
      });
    }};

    m["bijection"] = {"Conf maps valid colorings onto reachable poppable total configurations", 7,
                      [](auto& name, auto n) {
                        return over_perms(name, n, [](const Permutation& s) -> Verdict {
                          std::vector<StackConfiguration> from_colorings, from_search;
                          for (const auto& b : brute_colorings(s)) {
                            auto c = conf_of(s, b);
                            if (col_of(s, c) != b) return "Col(Conf(" + b.str() + ")) differs";
                            from_colorings.push_back(c);
                          }
                          for (auto& c : reachable_total_configurations(s))
                            if (!find_unsortable_pattern(c)) from_search.push_back(c);
                          std::sort(from_colorings.begin(), from_colorings.end());
                          if (from_colorings != from_search)
                            return std::to_string(from_colorings.size()) + " configurations from colorings, " +
                                   std::to_string(from_search.size()) + " from search";
                          return std::nullopt;
                        });
                      }};

    m["two-stack-containment"] = {"pushall sortable implies 2-stack sortable", 8, [](auto& name, auto n) {
      return over_perms(name, n, [](const Permutation& s) -> Verdict {
        if (brute_pushall(s) && !brute_two_stack(s)) return "pushall sortable but not 2-stack sortable";
        return std::nullopt;
      });
    }};

    m["two-stack-minus"] = {"skew sums: 2-stack sortable iff leading blocks pushall and last block 2-stack", 8,
                            [](auto& name, auto n) {
                              return over_perms(name, n, [](const Permutation& s) -> Verdict {
                                auto d = decompose(s);
                                if (d.kind != DecompositionKind::MinusChain) return std::nullopt;
                                bool expect = brute_two_stack(d.blocks.back());
                                for (std::size_t b = 0; b + 1 < d.blocks.size(); ++b)
                                  expect = expect && brute_pushall(d.blocks[b]);
                                if (brute_two_stack(s) != expect) return "block criterion disagrees";
                                return std::nullopt;
                              });
                            }};

    m["pushall-minus"] = {"skew sums: pushall sortable iff every block is", 8, [](auto& name, auto n) {
      return over_perms(name, n, [](const Permutation& s) -> Verdict {
        auto d = decompose(s);
        if (d.kind != DecompositionKind::MinusChain) return std::nullopt;
        bool expect = true;
        for (const auto& b : d.blocks) expect = expect && brute_pushall(b);
        if (brute_pushall(s) != expect) return "block criterion disagrees";
        return std::nullopt;
      });
    }};

    m["minus-product"] = {"colorings of a skew sum are the product of block colorings", 8, [](auto& name, auto n) {
      return over_perms(name, n, [](const Permutation& s) -> Verdict {
        auto d = decompose(s);
        if (d.kind != DecompositionKind::MinusChain) return std::nullopt;
        std::vector<ColoringBlock> blocks;
        for (const auto& b : d.blocks) blocks.push_back({b, brute_colorings(b)});
        if (ColoringSetProduct(blocks).materialize() != brute_colorings(s)) return "product differs";
        return std::nullopt;
      });
    }};

    m["basis-two-stack-sortable"] = {"basis elements of the pushall class are 2-stack sortable", 8,
                                     [](auto& name, std::size_t n) {
                                       CheckResult r{name, n, 0, true, {}};
                                       for (const auto& p : mine_basis([](auto& s) { return brute_pushall(s); }, n)) {
                                         ++r.inputs;
                                         if (!brute_two_stack(p)) {
                                           r.pass = false;
                                           r.counterexample = p.str();
                                           break;
                                         }
                                       }
                                       return r;
                                     }};

    m["minus-basis-correspondence"] = {
        "skew-decomposable 2-stack basis elements are exactly sigma (-) 1 for pushall basis elements", 7,
        [](auto& name, std::size_t n) {
          std::vector<Permutation> expected, mined;
          for (const auto& p : mine_basis([](auto& s) { return brute_pushall(s); }, n))
            expected.push_back(skew_sum({p, Permutation{1}}));
          for (const auto& p : mine_basis([](auto& s) { return brute_two_stack(s); }, n + 1))
            if (is_minus_decomposable(p)) mined.push_back(p);
          return compare_sets(name, n, mined, expected);
        }};

    auto basis_check = [&m](const std::string& key, const PatternBasis& (*basis)(), std::string description,
                            std::size_t cap, std::function<std::vector<Permutation>(std::size_t)> mine) {
      m[key] = {std::move(description), cap, [basis, mine](auto& name, std::size_t n) {
                  return compare_sets(name, n, mine(n), up_to(basis(), n));
                }};
    };
    auto pushall_basis = [](std::size_t n) { return mine_basis([](auto& s) { return brute_pushall(s); }, n); };
    basis_check("basis-B2", basis_b2, "mined basis of {s : 1 (+) s sortable} equals B2", 7, [](std::size_t n) {
      return mine_basis([](auto& s) { return brute_pushall(one_plus(s)); }, n);
    });
    basis_check("basis-B3", basis_b3, "mined basis of {s : s (+) 1 sortable} equals B3", 7, [](std::size_t n) {
      return mine_basis([](auto& s) { return brute_pushall(plus_one(s)); }, n);
    });
    basis_check("basis-Bplus", basis_plus, "direct-sum-decomposable part of the mined basis equals B+", 8,
                [pushall_basis](std::size_t n) {
                  std::vector<Permutation> out;
                  for (auto& p : pushall_basis(n))
                    if (is_plus_decomposable(p)) out.push_back(p);
                  return out;
                });
    basis_check("basis-B", basis_separable, "separable part of the mined basis equals B", 8,
                [pushall_basis](std::size_t n) {
                  std::vector<Permutation> out;
                  for (auto& p : pushall_basis(n))
                    if (is_separable(p)) out.push_back(p);
                  return out;
                });
    basis_check("basis-132-213", basis_132_213, "mined basis of Av(132) u Av(213)", 8, [](std::size_t n) {
      const Permutation a = parse("132"), b = parse("213");
      return mine_basis([&](auto& s) { return !contains_pattern(s, a) || !contains_pattern(s, b); }, n);
    });

    m["contains-132-213"] = {"containing both 132 and 213 equals containing one of the six minimal ones", 8,
                             [](auto& name, auto n) {
                               const Permutation a = parse("132"), b = parse("213");
                               return over_perms(name, n, [&](const Permutation& s) -> Verdict {
                                 const bool both = contains_pattern(s, a) && contains_pattern(s, b);
                                 if (both == avoids(s, basis_132_213().patterns)) return "mismatch";
                                 return std::nullopt;
                               });
                             }};

    m["plus-theorem"] = {"direct-sum-decomposable: sortable iff avoids B+", 8, [](auto& name, auto n) {
      return over_perms(name, n, [](const Permutation& s) -> Verdict {
        auto by_patterns = pushall_by_patterns_plus(s);
        if (by_patterns && *by_patterns != brute_pushall(s)) return "mismatch";
        return std::nullopt;
      });
    }};

    m["separable-theorem"] = {"separable: sortable iff avoids B", 8, [](auto& name, auto n) {
      return over_perms(name, n, [](const Permutation& s) -> Verdict {
        auto by_patterns = pushall_by_patterns_separable(s);
        if (by_patterns && *by_patterns != brute_pushall(s)) return "mismatch";
        return std::nullopt;
      });
    }};

    m["b1-theorem"] = {"direct sums with nontrivial end blocks: sortable iff avoids B1", 8, [](auto& name, auto n) {
      return over_perms(name, n, [](const Permutation& s) -> Verdict {
        auto d = decompose(s);
        if (d.kind != DecompositionKind::PlusChain || d.blocks.front().size() < 2 || d.blocks.back().size() < 2)
          return std::nullopt;
        if (brute_pushall(s) != avoids(s, basis_b1().patterns)) return "mismatch";
        return std::nullopt;
      });
    }};

    m["b2-theorem"] = {"1 (+) s sortable iff s avoids B2", 7, [](auto& name, auto n) {
      return over_perms(name, n, [](const Permutation& s) -> Verdict {
        if (brute_pushall(one_plus(s)) != avoids(s, basis_b2().patterns)) return "mismatch";
        return std::nullopt;
      });
    }};

    m["b3-theorem"] = {"s (+) 1 sortable iff s avoids B3", 7, [](auto& name, auto n) {
      return over_perms(name, n, [](const Permutation& s) -> Verdict {
        if (brute_pushall(plus_one(s)) != avoids(s, basis_b3().patterns)) return "mismatch";
        return std::nullopt;
      });
    }};

    m["plus-one-x-one"] = {"1 (+) s (+) 1 sortable iff s in Av(213) (+) Av(132)", 7, [](auto& name, auto n) {
      const Permutation a = parse("213"), b = parse("132");
      return over_perms(name, n, [&](const Permutation& s) -> Verdict {
        const Permutation wrapped = direct_sum({Permutation{1}, s, Permutation{1}});
        if (brute_pushall(wrapped) != in_plus_of_avoiders(s, a, b)) return "mismatch";
        return std::nullopt;
      });
    }};

    m["sufficient-condition"] = {"the sufficient condition implies sortability", 8, [](auto& name, auto n) {
      return over_perms(name, n, [](const Permutation& s) -> Verdict {
        if (sufficient_pushall_cs(s) && !brute_pushall(s)) return "condition holds but not sortable";
        return std::nullopt;
      });
    }};

    m["monochromatic"] = {"without bichromatic ascents a valid coloring is monochromatic", 8, [](auto& name, auto n) {
      return over_perms(
          name, n,
          [](const Permutation& s) -> Verdict {
            if (is_minus_decomposable(s)) return std::nullopt;
            for (const auto& b : brute_colorings(s)) {
              if (!ascents(s, b, Color::R, Color::G).empty() || !ascents(s, b, Color::G, Color::R).empty()) continue;
              const auto& c = b.colors();
              if (std::count(c.begin(), c.end(), c.front()) != static_cast<long>(c.size())) return b.str();
            }
            return std::nullopt;
          },
          1);
    }};

    m["distinguished-ascent"] = {"both orders of choosing the extremal bichromatic ascent agree", 8,
                                 [](auto& name, auto n) {
                                   return over_perms(name, n, [](const Permutation& s) -> Verdict {
                                     for (const auto& b : brute_colorings(s)) {
                                       auto rg = ascents(s, b, Color::R, Color::G);
                                       if (!rg.empty()) {
                                         auto [x, y] = distinguished_rg(s, rg);
                                         if (x != y) return b.str() + " RG " + show(x) + " vs " + show(y);
                                       }
                                       auto gr = ascents(s, b, Color::G, Color::R);
                                       if (!gr.empty()) {
                                         auto [x, y] = distinguished_gr(s, gr);
                                         if (x != y) return b.str() + " GR " + show(x) + " vs " + show(y);
                                       }
                                     }
                                     return std::nullopt;
                                   });
                                 }};

    m["shapes"] = {"each valid coloring is the shape rooted at its extremal ascents", 8, [](auto& name, auto n) {
      return over_perms(
          name, n,
          [](const Permutation& s) -> Verdict {
            if (is_minus_decomposable(s)) return std::nullopt;
            for (const auto& b : brute_colorings(s)) {
              auto rg = ascents(s, b, Color::R, Color::G);
              auto gr = ascents(s, b, Color::G, Color::R);
              std::optional<PartialBicoloring> shape;
              if (rg.empty() && gr.empty()) continue;
              if (rg.empty()) {
                auto p = distinguished_gr(s, gr).first;
                shape = c_gr(s, p.first + 1, p.second + 1);
              } else if (gr.empty()) {
                auto p = distinguished_rg(s, rg).first;
                shape = c_rg(s, p.first + 1, p.second + 1);
              } else {
                auto p = distinguished_rg(s, rg).first;
                auto q = distinguished_gr(s, gr).first;
                shape = c_star(s, p.first + 1, p.second + 1, q.first + 1, q.second + 1);
              }
              if (!shape || shape->total() != b) return b.str() + " vs shape " + (shape ? shape->str() : "none");
            }
            return std::nullopt;
          },
          1);
    }};

    return m;
  }();
  return checks;
}

}  // namespace sweep_detail

inline std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : sweep_detail::registry()) out.push_back(k);
  return out;
}

inline std::string check_description(const std::string& name) {
  auto it = sweep_detail::registry().find(name);
  if (it == sweep_detail::registry().end()) throw UnknownCheck("unknown check '" + name + "'");
  return it->second.description;
}

inline std::size_t check_cap(const std::string& name) {
  auto it = sweep_detail::registry().find(name);
  if (it == sweep_detail::registry().end()) throw UnknownCheck("unknown check '" + name + "'");
  return it->second.cap;
}

// max_n beyond the check's cap is rejected with BudgetExceeded.
inline CheckResult run_check(const std::string& name, std::size_t max_n) {
  auto it = sweep_detail::registry().find(name);
  if (it == sweep_detail::registry().end()) throw UnknownCheck("unknown check '" + name + "'");
  if (max_n > it->second.cap)
    throw BudgetExceeded("check '" + name + "' supports max_n up to " + std::to_string(it->second.cap));
  return it->second.run(name, max_n);
}

}  // namespace pushall
