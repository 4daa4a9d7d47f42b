#pragma once

#include <compare>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weyl/orbit.hpp"

namespace weyl {

/// `{prefix}_WeightMatrByLevel_{k}_elems={n}.txt`
std::string level_file_name(std::string_view prefix, int level, std::size_t count);

struct LevelFileInfo {
  std::filesystem::path path;
  int level = 0;
  std::size_t count = 0;
};

/// Parses a level file name; nullopt if it does not follow the pattern for `prefix`.
std::optional<LevelFileInfo> parse_level_file_name(const std::filesystem::path& path, std::string_view prefix);

/// Level files for `prefix` in `dir`, ordered by level index.
std::vector<LevelFileInfo> list_level_files(const std::filesystem::path& dir, std::string_view prefix);

/// Reduced word as `s2.s1`; the identity is a single space.
std::string format_word(std::span<const std::uint8_t> word);

/// Writes the records of `level`: a header `n=.., name=.., w=.., n_inv=..` and one
/// `[a, b, ...]` line per matrix row.
void write_level(const Level& level, std::ostream& out);

/// Writes the level file into `dir` and returns its path. Empty levels are refused.
std::filesystem::path write_level(const Level& level, std::string_view prefix, const std::filesystem::path& dir);

/// Parses a level written by write_level. Inverse words and matrices, which the format does not
/// carry, are rebuilt from the partner pointers (or by exact inversion for unpaired levels).
Level read_level(std::istream& in, std::optional<int> expected_index = std::nullopt);

/// As above; when the file name follows the level pattern its index and count are checked too.
Level read_level(const std::filesystem::path& path);

/// All levels for `prefix` in `dir`; indices must be 0, 1, 2, ... without gaps.
std::vector<Level> read_levels(const std::filesystem::path& dir, std::string_view prefix);

/// `{prefix}_summary.json`
std::filesystem::path summary_path(const std::filesystem::path& dir, std::string_view prefix);
void write_summary(const GenerationSummary& summary, const std::filesystem::path& dir);
GenerationSummary read_summary(const std::filesystem::path& path);

/// Position of an element: level index and ordinal within the level.
struct ElementRef {
  int level = 0;
  std::uint32_t ordinal = 0;

  friend auto operator<=>(const ElementRef&, const ElementRef&) = default;
};

/// Matrix -> (level, ordinal) over a complete set of levels. Holds a view of the levels,
/// which must outlive it.
class GlobalIndex {
public:
  std::optional<ElementRef> find(std::span<const Entry> matrix) const;
  std::size_t size() const noexcept { return refs_.size(); }
  std::span<const Level> levels() const noexcept { return levels_; }
  std::span<const Entry> matrix(ElementRef ref) const { return levels_[ref.level].matrix(ref.ordinal); }

private:
  friend GlobalIndex build_index(std::span<const Level> levels);

  std::span<const Level> levels_;
  std::vector<std::uint64_t> hashes_;  // sorted
  std::vector<ElementRef> refs_;       // parallel to hashes_
};

/// Throws IntegrityError if two stored elements share a matrix.
GlobalIndex build_index(std::span<const Level> levels);

}  // namespace weyl
