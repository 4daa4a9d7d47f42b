#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "weyl/int_matrix.hpp"

namespace weyl {

/// Largest rank accepted anywhere in the library (words store generators in one byte,
/// the parallel kernels keep one bit per generator).
inline constexpr int kMaxRank = 64;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A Cartan-Killing type such as D4 or E7.
struct RootSystemId {
  Family family;
  int rank;

  /// Accepts "D4", "e7", ... and validates the rank constraints of the family.
  static RootSystemId parse(std::string_view text);

  std::string name() const;

  friend bool operator==(const RootSystemId&, const RootSystemId&) = default;
};

/// Throws InvalidArgument if (family, rank) is not a finite crystallographic type.
void validate(const RootSystemId& id);

using Rational = boost::rational<std::int64_t>;

/// Exact square matrix over the rationals.
class RationalMatrix {
public:
  explicit RationalMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {}

  int size() const noexcept { return n_; }
  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * n_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * n_ + c]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
  int n_;
  std::vector<Rational> data_;
};

/// Exact inverse; throws InvalidArgument if `m` is singular.
RationalMatrix inverse(const IntMatrix& m);

/// Bourbaki-numbered Cartan matrix with c(i,j) = <alpha_i, alpha_j> = 2(alpha_i, alpha_j)/(alpha_j, alpha_j).
IntMatrix cartan_matrix(const RootSystemId& id);

/// Checks the Cartan matrix invariants: diagonal 2, off-diagonal in {0,-1,-2,-3},
/// symmetric zero pattern, invertible. Throws InvalidArgument with a diagnostic.
void validate_cartan(const IntMatrix& cartan);

/// Matrix of the simple reflection s_i (1-based) acting on weight coordinates as a row vector:
/// identity except row i, which is (delta_ik - c_ik)_k.
IntMatrix reflection_matrix(const IntMatrix& cartan, int i);
IntMatrix reflection_matrix(const RootSystemId& id, int i);

/// |Phi+| from the closed formulas.
std::int64_t positive_root_count(const RootSystemId& id);

/// Positive roots in simple-root coordinates, found by closing the simple roots under
/// reflections. Throws InvalidArgument when the closure does not terminate (not finite type).
std::vector<std::vector<Entry>> positive_roots(const IntMatrix& cartan);

RationalMatrix inverse_cartan(const RootSystemId& id);

/// The fundamental weight omega_i (1-based) written in the basis of simple roots.
std::vector<Rational> fundamental_weight_in_root_basis(const IntMatrix& cartan, int i);
std::vector<Rational> fundamental_weight_in_root_basis(const RootSystemId& id, int i);

/// |W| from the order formulas; nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> group_order(const RootSystemId& id);

/// Degrees of the basic invariants; their product is |W| and they determine the length generating function.
std::vector<int> degrees(const RootSystemId& id);

/// Everything the enumeration needs for one root system. Immutable after construction.
struct RootSystemData {
  std::string name;
  std::optional<RootSystemId> id;  // empty for a custom Cartan matrix
  IntMatrix cartan;
  std::vector<IntMatrix> reflections;  // reflections[i - 1] is s_i
  std::int64_t positive_root_count = 0;

  int rank() const noexcept { return cartan.size(); }

  static RootSystemData builtin(const RootSystemId& id);
  static RootSystemData builtin(std::string_view name) { return builtin(RootSystemId::parse(name)); }
  static RootSystemData from_cartan(std::string name, IntMatrix cartan);

  /// Plain-text Cartan file: the rank, then `rank` rows of space-separated integers.
  static RootSystemData load_cartan_file(const std::filesystem::path& path);
};

}  // namespace weyl
