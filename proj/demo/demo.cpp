// Walks through the library on a few small permutations.

#include <iostream>

#include "pushall/pushall.hpp"

using namespace pushall;

int main() {
  const Permutation sigma = parse("2431");
  std::cout << sigma << " sortable: " << std::boolalpha << is_pushall_sortable(sigma) << "\n";

  const auto product = enumerate_colorings(sigma);
  std::cout << "valid colorings (" << product.count() << "):";
  product.for_each([](const Bicoloring& b) { std::cout << " " << b; });
  std::cout << "\n";

  const Bicoloring b = Bicoloring::parse("GGRR");
  std::cout << "Conf(" << b << ") = " << conf_of(sigma, b).str() << "\n";
  if (auto w = sorting_word(sigma, b)) {
    std::cout << "word " << *w << "\n";
    for (const auto& c : apply_word(sigma, *w).trace) std::cout << "  " << c.str() << "\n";
  }

  const Permutation bad = parse("132465");
  std::cout << bad << " sortable: " << is_pushall_sortable(bad)
            << ", avoids B+: " << avoids(bad, basis_plus().patterns) << "\n";

  // skew sums multiply the block counts
  const Permutation skew = skew_sum({parse("2431"), parse("12"), parse("1")});
  const auto p = enumerate_colorings(skew);
  std::cout << skew << " has " << p.blocks().size() << " blocks and " << p.count() << " colorings\n";

  std::cout << "identity of size 1000: " << count_colorings(Permutation::identity(1000)) << " colorings\n";
}
