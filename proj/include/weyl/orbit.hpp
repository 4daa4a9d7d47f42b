#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weyl/int_matrix.hpp"
#include "weyl/rootdata.hpp"

namespace weyl {

/// Coordinates in the basis of fundamental weights.
using Weight = std::vector<Entry>;

/// Reduced word as 1-based generator indices, written left to right: {2, 1} is s2.s1,
/// which applies s1 first.
using Word = std::vector<int>;

/// One group element together with everything the inverse-pairing protocol tracks.
struct GroupElement {
  Weight weight;
  Word name;
  Word name_inv;
  IntMatrix matr;
  IntMatrix matr_inv;
  std::int64_t n_in_lvl = 0;
  std::int64_t n_inv_in_lvl = -1;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Elements of one Coxeter length, stored column-wise. Word length equals the level
/// index, so every column has a fixed stride.
class Level {
public:
  Level(int index, int rank, bool paired = true);

  int index() const noexcept { return index_; }
  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return n_inv_.size(); }
  bool empty() const noexcept { return n_inv_.empty(); }

  /// False for orbits of wall weights, where inverse pointers are not computed.
  bool paired() const noexcept { return paired_; }

  std::span<const Entry> weight(std::size_t i) const { return slice(weights_, i, rank_); }
  std::span<const std::uint8_t> word(std::size_t i) const { return slice(words_, i, index_); }
  std::span<const std::uint8_t> inverse_word(std::size_t i) const { return slice(inv_words_, i, index_); }
  std::span<const Entry> matrix(std::size_t i) const { return slice(matrices_, i, rank_ * rank_); }
  std::span<const Entry> inverse_matrix(std::size_t i) const { return slice(inv_matrices_, i, rank_ * rank_); }
  std::int64_t inverse_ordinal(std::size_t i) const { return n_inv_[i]; }

  GroupElement element(std::size_t i) const;

  /// Appends a record; its n_in_lvl must equal size().
  void append(const GroupElement& e);

  /// Entries left in the pairing dictionary when the level was sealed; (size - involutions) / 2.
  std::size_t dictionary_entries() const noexcept { return dictionary_entries_; }

  /// Number of elements that are their own inverse (matrix squares to the identity).
  std::size_t involution_count() const;

  /// Structural equality of everything except dictionary bookkeeping.
  friend bool operator==(const Level& a, const Level& b);

private:
  template <typename T>
  static std::span<const T> slice(const std::vector<T>& v, std::size_t i, int stride) {
    return {v.data() + i * static_cast<std::size_t>(stride), static_cast<std::size_t>(stride)};
  }

  friend struct LevelBuilder;

  int index_;
  int rank_;
  bool paired_;
  std::vector<Entry> weights_;
  std::vector<std::uint8_t> words_;
  std::vector<std::uint8_t> inv_words_;
  std::vector<Entry> matrices_;
  std::vector<Entry> inv_matrices_;
  std::vector<std::int64_t> n_inv_;
  std::size_t dictionary_entries_ = 0;
};

/// s_i(w): coordinate k becomes m_k - m_i c_ik. `i` is 1-based.
Weight apply_reflection(const Weight& w, int i, const RootSystemData& rs);

/// Change of level under s_i: +1, 0 or -1 by the sign of m_i.
int level_delta(const Weight& w, int i);

/// Repetition-free successor test: the image coordinates after position i are all >= 0.
/// Requires source[i] > 0 and image = apply_reflection(source, i).
bool snow_accepts(const Weight& source, int i, const Weight& image);

/// Injective fixed-width serialization of the matrix (4 little-endian bytes per entry, row-major).
std::string matrix_key(std::span<const Entry> m);
inline std::string matrix_key(const IntMatrix& m) { return matrix_key(m.data()); }

/// Hash of the matrix entries, for in-memory lookup tables.
std::uint64_t matrix_hash(std::span<const Entry> m);

/// Which implementation builds a level. Both produce byte-identical results.
enum class Kernel { serial, parallel };

/// The identity element carrying `start`. Throws InvalidArgument if `start` is not dominant.
/// Inverse pairing is enabled only when every coordinate is strictly positive.
Level build_level_zero(const Weight& start);

namespace serial {
/// Reference implementation: one element at a time, general matrix products and the
/// three-case dictionary protocol.
Level build_next_level(const Level& current, const RootSystemData& rs);
}  // namespace serial

namespace parallel {
/// OpenMP implementation: candidate counting, prefix sum, parallel fill with row/column
/// updates, and pairing by sorted matrix hashes.
Level build_next_level(const Level& current, const RootSystemData& rs);
}  // namespace parallel

Level build_next_level(const Level& current, const RootSystemData& rs, Kernel kernel = Kernel::parallel);

struct GenerateOptions {
  std::optional<Weight> start_weight;  // default all-ones
  std::optional<int> levels_up_to;     // stop after this level index
  Kernel kernel = Kernel::parallel;
};

struct GenerationSummary {
  std::string root_system;
  Weight start_weight;
  std::vector<std::uint64_t> level_sizes;
  std::uint64_t total = 0;
  double elapsed_ms = 0;
};

/// Builds levels one after another, handing each sealed level to `sink` before the next is
/// built. Only two levels are alive at any time.
GenerationSummary for_each_level(const RootSystemData& rs, const GenerateOptions& options,
                                 const std::function<void(const Level&)>& sink);

/// The whole group from the all-ones weight: positive_root_count + 1 levels, the last holding w0.
std::vector<Level> generate_group(const RootSystemData& rs, Kernel kernel = Kernel::parallel);

/// The orbit W.mu of a dominant weight, level by level.
std::vector<Level> generate_orbit(const RootSystemData& rs, const Weight& mu, Kernel kernel = Kernel::parallel);

/// Sum of level sizes.
std::uint64_t total_size(std::span<const Level> levels);

}  // namespace weyl
