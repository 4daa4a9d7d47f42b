#pragma once

#include <span>
#include <string>
#include <vector>

#include "weyl/orbit.hpp"
#include "weyl/rootdata.hpp"

namespace weyl {

/// Action on the canonical basis e_1..e_n: images[i - 1] = +j or -j means e_i -> ±e_j.
struct SignedPermutation {
  std::vector<int> images;

  static SignedPermutation identity(int n);
  int size() const noexcept { return static_cast<int>(images.size()); }

  /// Image of a signed basis index.
  int apply(int signed_index) const;

  /// (a * b)(x) = a(b(x)).
  friend SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);

  int negative_count() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

struct SignedCycle {
  int length;
  bool negative;

  friend bool operator==(const SignedCycle&, const SignedCycle&) = default;
};

/// Multiset of signed cycles, kept in canonical order: longer cycles first, negative before
/// positive at equal length. Length-1 positive cycles are listed explicitly.
struct CycleType {
  std::vector<SignedCycle> cycles;

  /// Plain-text notation with `~` for an overbar, e.g. [~2~11].
  std::string to_string() const;

  /// Signed lengths, negative for negative cycles: [~2~11] -> {-2, -1, 1}.
  std::vector<int> signed_lengths() const;

  /// Inverse of to_string.
  static CycleType parse(std::string_view text);

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType& a, const CycleType& b) { return a.signed_lengths() <=> b.signed_lengths(); }
};

/// Signed permutation of s_i (1-based) in the orthonormal realization of D_n: s_i swaps e_i and
/// e_{i+1} for i < n, and s_n sends e_{n-1} -> -e_n, e_n -> -e_{n-1}. With `experimental_type_b`,
/// B_n is also accepted (s_n: e_n -> -e_n).
SignedPermutation generator_action(const RootSystemId& id, int i, bool experimental_type_b = false);

/// Product of the generators of `word`, rightmost acting first.
SignedPermutation word_to_signed_perm(std::span<const int> word, const RootSystemId& id,
                                      bool experimental_type_b = false);
SignedPermutation word_to_signed_perm(std::span<const std::uint8_t> word, const RootSystemId& id,
                                      bool experimental_type_b = false);

CycleType signed_cycle_type(const SignedPermutation& p);

}  // namespace weyl
