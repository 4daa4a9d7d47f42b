#pragma once

// Shared pieces of the serial and OpenMP level builders.

#include <cstdint>
#include <span>
#include <vector>

#include "weyl/orbit.hpp"

namespace weyl {

/// Mutable access to a Level's columns for the builders.
struct LevelBuilder {
  static void resize(Level& l, std::size_t n) {
    const std::size_t r = static_cast<std::size_t>(l.rank_);
    const std::size_t k = static_cast<std::size_t>(l.index_);
    l.weights_.resize(n * r);
    l.words_.resize(n * k);
    l.inv_words_.resize(n * k);
    l.matrices_.resize(n * r * r);
    l.inv_matrices_.resize(n * r * r);
    l.n_inv_.assign(n, -1);
  }
  static std::span<Entry> weight(Level& l, std::size_t i) { return mut(l.weights_, i, l.rank_); }
  static std::span<std::uint8_t> word(Level& l, std::size_t i) { return mut(l.words_, i, l.index_); }
  static std::span<std::uint8_t> inverse_word(Level& l, std::size_t i) { return mut(l.inv_words_, i, l.index_); }
  static std::span<Entry> matrix(Level& l, std::size_t i) { return mut(l.matrices_, i, l.rank_ * l.rank_); }
  static std::span<Entry> inverse_matrix(Level& l, std::size_t i) {
    return mut(l.inv_matrices_, i, l.rank_ * l.rank_);
  }
  static std::int64_t& inverse_ordinal(Level& l, std::size_t i) { return l.n_inv_[i]; }
  static void set_dictionary_entries(Level& l, std::size_t n) { l.dictionary_entries_ = n; }

private:
  template <typename T>
  static std::span<T> mut(std::vector<T>& v, std::size_t i, int stride) {
    return {v.data() + i * static_cast<std::size_t>(stride), static_cast<std::size_t>(stride)};
  }
};

/// out = s_i(w) for 0-based i; out may not alias w.
inline void reflect_weight(std::span<const Entry> w, int i, const IntMatrix& cartan, std::span<Entry> out) {
  const std::int64_t mi = w[i];
  for (int k = 0; k < cartan.size(); ++k) {
    out[k] = checked_narrow(static_cast<std::int64_t>(w[k]) - mi * cartan(i, k));
  }
}

/// dst = R_i * src: only row i changes, to row_i(src) - sum_k c_ik row_k(src).
inline void left_reflect(std::span<const Entry> src, int i, const IntMatrix& cartan, std::span<Entry> dst) {
  const int n = cartan.size();
  std::copy(src.begin(), src.end(), dst.begin());
  for (int col = 0; col < n; ++col) {
    std::int64_t acc = src[i * n + col];
    for (int k = 0; k < n; ++k) {
      const Entry c = cartan(i, k);
      if (c != 0) acc -= static_cast<std::int64_t>(c) * src[k * n + col];
    }
    dst[i * n + col] = checked_narrow(acc);
  }
}

/// dst = src * R_i: entry (r, k) becomes src(r, k) - src(r, i) c_ik.
inline void right_reflect(std::span<const Entry> src, int i, const IntMatrix& cartan, std::span<Entry> dst) {
  const int n = cartan.size();
  for (int r = 0; r < n; ++r) {
    const std::int64_t ri = src[r * n + i];
    for (int k = 0; k < n; ++k) {
      dst[r * n + k] = checked_narrow(src[r * n + k] - ri * cartan(i, k));
    }
  }
}

/// Regular orbits never produce a zero coordinate; a zero means the start weight or the
/// enumeration is broken.
void require_regular(std::span<const Entry> w, int level, std::size_t ordinal);

}  // namespace weyl
