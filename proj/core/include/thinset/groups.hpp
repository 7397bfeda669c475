#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "thinset/group.hpp"

namespace thinset {

// Shipped instances. Enumerations are fixed per instance:
//   Z            spiral 0, 1, -1, 2, -2, ...
//   Z^d          l-infinity shells, lexicographic inside a shell
//   Zmod n       0, 1, ..., n-1
//   Sym n        one-line permutations in lexicographic order
//   Free k       reduced words by length, then a < a^-1 < b < b^-1 < ...
//   DirectSum    finite-support sequences over Zmod c by base-c digit value
//   Q^d          height shells (max of |num|, den per coordinate),
//                scalar order 0, 1, -1, 1/2, -1/2, 2, -2, ...
//   Product(A,B) index pairs by square shells: (i,s) for i<s then (s,j) j<=s
GroupPtr make_integer_lattice(int d);                       // Z^d, d >= 1
GroupPtr make_cyclic(std::uint64_t n);                      // Zmod n, n >= 1
GroupPtr make_symmetric(int n);                             // Sym n, 1 <= n <= 12
GroupPtr make_free(int k);                                  // Free k, 1 <= k <= 26
GroupPtr make_direct_sum(std::uint64_t c, std::optional<int> arity);  // base Zmod c
GroupPtr make_rational_vector(int d);                       // Q^d, d >= 1
GroupPtr make_product(GroupPtr a, GroupPtr b);

// Textual grammar:
//   Z^2 | Zmod 12 | Sym 3 | Free 2 | Q^4
//   DirectSum[Zmod 2; omega] | DirectSum[Zmod 2; 4]
//   Product(Z^1, Zmod 7)
GroupPtr parse_group_spec(std::string_view text);

// Helpers for product elements.
Elem product_pair(const Group& product, const Elem& left, const Elem& right);
const Elem& product_left(const Elem& pair);
const Elem& product_right(const Elem& pair);

}  // namespace thinset
