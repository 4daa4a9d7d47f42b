#include <algorithm>
#include <array>
#include <bit>
#include <exception>
#include <numeric>

#include "kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace weyl::parallel {

namespace {

/// First exception thrown inside a parallel region, rethrown after it.
class ErrorSlot {
public:
  void capture() noexcept {
#pragma omp critical(weyl_error_slot)
    if (!error_) error_ = std::current_exception();
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

private:
  std::exception_ptr error_;
};

/// Bit i set when generator i+1 produces an accepted successor of `w`.
std::uint64_t successor_mask(std::span<const Entry> w, const IntMatrix& cartan) {
  const int n = cartan.size();
  std::array<Entry, kMaxRank> image{};
  std::uint64_t mask = 0;
  for (int i = 0; i < n; ++i) {
    if (w[i] <= 0) continue;
    reflect_weight(w, i, cartan, std::span<Entry>(image.data(), n));
    bool accept = true;
    for (int j = i + 1; j < n; ++j) {
      if (image[j] < 0) {
        accept = false;
        break;
      }
    }
    if (accept) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

void pair_inverses(Level& next) {
  const auto count = static_cast<std::int64_t>(next.size());
  std::vector<std::uint64_t> hashes(next.size());
  ErrorSlot error;

#pragma omp parallel for schedule(static)
  for (std::int64_t e = 0; e < count; ++e) hashes[e] = matrix_hash(next.matrix(e));

  std::vector<std::uint32_t> by_hash(next.size());
  std::iota(by_hash.begin(), by_hash.end(), 0u);
  std::sort(by_hash.begin(), by_hash.end(), [&](std::uint32_t a, std::uint32_t b) {
    return hashes[a] != hashes[b] ? hashes[a] < hashes[b] : a < b;
  });

#pragma omp parallel for schedule(static)
  for (std::int64_t e = 0; e < count; ++e) {
    try {
      auto inv = next.inverse_matrix(e);
      const std::uint64_t h = matrix_hash(inv);
      auto lo = std::lower_bound(by_hash.begin(), by_hash.end(), h,
                                 [&](std::uint32_t idx, std::uint64_t v) { return hashes[idx] < v; });
      std::int64_t found = -1;
      for (auto it = lo; it != by_hash.end() && hashes[*it] == h; ++it) {
        auto cand = next.matrix(*it);
        if (std::equal(cand.begin(), cand.end(), inv.begin())) {
          found = *it;
          break;
        }
      }
      if (found < 0) {
        throw IntegrityError("level " + std::to_string(next.index()) + ": element " + std::to_string(e) +
                             " has no inverse in its level");
      }
      LevelBuilder::inverse_ordinal(next, e) = found;
    } catch (...) {
      error.capture();
    }
  }
  error.rethrow();

  // The sequential protocol inserts one dictionary entry per pair, at its earlier member.
  std::size_t entries = 0;
  for (std::int64_t e = 0; e < count; ++e) {
    const std::int64_t partner = next.inverse_ordinal(e);
    if (next.inverse_ordinal(partner) != e) {
      throw IntegrityError("level " + std::to_string(next.index()) + ": inverse pointers of " +
                           std::to_string(e) + " and " + std::to_string(partner) + " disagree");
    }
    if (e < partner) ++entries;
  }
  LevelBuilder::set_dictionary_entries(next, entries);
}

}  // namespace

Level build_next_level(const Level& current, const RootSystemData& rs) {
  const int n = rs.rank();
  const int k = current.index();
  const auto sources = static_cast<std::int64_t>(current.size());
  const IntMatrix& cartan = rs.cartan;
  ErrorSlot error;

  // 1. which generators each source element feeds into the next level
  std::vector<std::uint64_t> masks(current.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < sources; ++s) {
    try {
      masks[s] = successor_mask(current.weight(s), cartan);
    } catch (...) {
      error.capture();
    }
  }
  error.rethrow();

  // 2. discovery order: sources in stored order, generators ascending
  std::vector<std::size_t> offsets(current.size() + 1, 0);
  for (std::size_t s = 0; s < current.size(); ++s) {
    offsets[s + 1] = offsets[s] + static_cast<std::size_t>(std::popcount(masks[s]));
  }

  Level next(k + 1, n, current.paired());
  LevelBuilder::resize(next, offsets.back());

  // 3. fill every new element in place
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t s = 0; s < sources; ++s) {
    try {
      std::size_t pos = offsets[s];
      auto weight = current.weight(s);
      auto word = current.word(s);
      auto inv_word = current.inverse_word(s);
      for (std::uint64_t mask = masks[s]; mask != 0; mask &= mask - 1) {
        const int i = std::countr_zero(mask);
        auto w = LevelBuilder::weight(next, pos);
        reflect_weight(weight, i, cartan, w);
        if (next.paired()) require_regular(w, k + 1, pos);
        auto name = LevelBuilder::word(next, pos);
        name[0] = static_cast<std::uint8_t>(i + 1);
        std::copy(word.begin(), word.end(), name.begin() + 1);
        auto name_inv = LevelBuilder::inverse_word(next, pos);
        std::copy(inv_word.begin(), inv_word.end(), name_inv.begin());
        name_inv[k] = static_cast<std::uint8_t>(i + 1);
        left_reflect(current.matrix(s), i, cartan, LevelBuilder::matrix(next, pos));
        right_reflect(current.inverse_matrix(s), i, cartan, LevelBuilder::inverse_matrix(next, pos));
        ++pos;
      }
    } catch (...) {
      error.capture();
    }
  }
  error.rethrow();

  if (next.paired()) pair_inverses(next);
  return next;
}

}  // namespace weyl::parallel
