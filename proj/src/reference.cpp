#include "weyl/reference.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

#include "weyl/error.hpp"

namespace weyl {

namespace {

// Sizes are palindromic; each table lists levels 0 through the middle one.
ReferenceTable mirrored(std::string name, std::vector<std::uint64_t> half, std::size_t levels) {
  ReferenceTable t;
  t.name = std::move(name);
  t.level_sizes.resize(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    const std::size_t m = std::min(k, levels - 1 - k);
    if (m >= half.size()) throw IntegrityError("reference table for " + t.name + " is too short");
    t.level_sizes[k] = half[m];
  }
  t.total = std::accumulate(t.level_sizes.begin(), t.level_sizes.end(), std::uint64_t{0});
  return t;
}

std::vector<ReferenceTable> make_tables() {
  std::vector<ReferenceTable> v;
  v.push_back(mirrored("D4", {1, 4, 9, 16, 23, 28, 30}, 13));
  v.push_back(mirrored("B7",
                       {1, 7, 27, 77, 181, 371, 686, 1170, 1869, 2827, 4082, 5662, 7581, 9835, 12399, 15225, 18242,
                        21358, 24464, 27440, 30162, 32510, 34376, 35672, 36336},
                       50));
  v.push_back(mirrored("D8",
                       {1,      8,      35,     112,    293,    664,    1350,   2520,   4388,   7208,
                        11263,  16848,  24248,  33712,  45425,  59480,  75853,  94384,  114766, 136544,
                        159125, 181800, 203777, 224224, 242318, 257296, 268504, 275440, 277788},
                       57));
  v.push_back(mirrored("E7",
                       {1,     7,     27,    77,    182,   378,    713,    1247,   2051,   3205,   4795,
                        6909,  9632,  13040, 17194, 22134,  27874,  34398,  41657,  49567,  58009,  66831,
                        75852, 84868, 93659, 101997, 109655, 116417, 122087, 126497, 129514, 131046},
                       64));
  v.push_back(mirrored("B8",
                       {1,      8,      35,     112,    293,    664,    1350,   2520,   4389,   7216,   11298,
                        16960,  24541,  34376,  46775,  62000,  80241,  101592, 126029, 153392, 183373, 215512,
                        249202, 283704, 318171, 351680, 383270, 411984, 436913, 457240, 472281, 481520, 484636},
                       65));
  return v;
}

constexpr std::array<D4ClassRow, 13> kD4Classes{{
    {0, "-", "e", 1, 1, "[1111]"},
    {1, "A1", "s1", 12, 2, "[211]"},
    {2, "A2", "s1s2", 32, 3, "[31]"},
    {3, "2A1", "s1s3", 6, 2, "[22]"},
    {4, "2A1", "s1s4", 6, 2, "[22]"},
    {5, "D2", "s3s4", 6, 2, "[~1~111]"},
    {6, "A3", "s1s2s3", 24, 4, "[4]"},
    {7, "A3", "s1s2s4", 24, 4, "[4]"},
    {8, "3A1", "s1s3s4", 12, 2, "[2~1~1]"},
    {9, "D3", "s3s2s4", 24, 4, "[~2~11]"},
    {10, "D4", "s1s4s2s3", 32, 6, "[~3~1]"},
    {11, "D4(a1)", "s3s2s4s3s2s1", 12, 4, "[~2~2]"},
    {12, "4A1", "s1s2s3s4s2s1s2s3s4s2s3s4", 1, 2, "[~1~1~1~1]"},
}};

constexpr std::string_view kD4Level2 =
    "n=0, name=s2.s1, w=1,-2,3,3, n_inv=3\n"
    "[-1, 1, 0, 0]\n"
    "[-1, 0, 1, 1]\n"
    "[0, 0, 1, 0]\n"
    "[0, 0, 0, 1]\n"
    "n=1, name=s3.s1, w=-1,3,-1,1, n_inv=1\n"
    "[-1, 1, 0, 0]\n"
    "[0, 1, 0, 0]\n"
    "[0, 1, -1, 0]\n"
    "[0, 0, 0, 1]\n"
    "n=2, name=s4.s1, w=-1,3,1,-1, n_inv=2\n"
    "[-1, 1, 0, 0]\n"
    "[0, 1, 0, 0]\n"
    "[0, 0, 1, 0]\n"
    "[0, 1, 0, -1]\n"
    "n=3, name=s1.s2, w=-2,1,2,2, n_inv=0\n"
    "[0, -1, 1, 1]\n"
    "[1, -1, 1, 1]\n"
    "[0, 0, 1, 0]\n"
    "[0, 0, 0, 1]\n"
    "n=4, name=s3.s2, w=2,1,-2,2, n_inv=6\n"
    "[1, 0, 0, 0]\n"
    "[1, -1, 1, 1]\n"
    "[1, -1, 0, 1]\n"
    "[0, 0, 0, 1]\n"
    "n=5, name=s4.s2, w=2,1,2,-2, n_inv=8\n"
    "[1, 0, 0, 0]\n"
    "[1, -1, 1, 1]\n"
    "[0, 0, 1, 0]\n"
    "[1, -1, 1, 0]\n"
    "n=6, name=s2.s3, w=3,-2,1,3, n_inv=4\n"
    "[1, 0, 0, 0]\n"
    "[1, 0, -1, 1]\n"
    "[0, 1, -1, 0]\n"
    "[0, 0, 0, 1]\n"
    "n=7, name=s4.s3, w=1,3,-1,-1, n_inv=7\n"
    "[1, 0, 0, 0]\n"
    "[0, 1, 0, 0]\n"
    "[0, 1, -1, 0]\n"
    "[0, 1, 0, -1]\n"
    "n=8, name=s2.s4, w=3,-2,3,1, n_inv=5\n"
    "[1, 0, 0, 0]\n"
    "[1, 0, 1, -1]\n"
    "[0, 0, 1, 0]\n"
    "[0, 1, 0, -1]\n";

}  // namespace

std::span<const ReferenceTable> reference_tables() {
  static const std::vector<ReferenceTable> tables = make_tables();
  return tables;
}

const ReferenceTable* find_reference(std::string_view name) {
  for (const auto& t : reference_tables()) {
    if (t.name.size() == name.size() &&
        std::equal(name.begin(), name.end(), t.name.begin(),
                   [](char a, char b) { return std::toupper(static_cast<unsigned char>(a)) == b; })) {
      return &t;
    }
  }
  return nullptr;
}

std::vector<std::uint64_t> poincare_coefficients(std::span<const int> degrees) {
  std::vector<std::uint64_t> poly{1};
  for (int d : degrees) {
    if (d < 1) throw InvalidArgument("degree must be positive");
    std::vector<std::uint64_t> next(poly.size() + static_cast<std::size_t>(d - 1), 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      for (int j = 0; j < d; ++j) next[k + static_cast<std::size_t>(j)] += poly[k];
    }
    poly = std::move(next);
  }
  return poly;
}

std::span<const D4ClassRow> d4_class_table() { return kD4Classes; }

std::map<int, std::uint64_t> d4_order_partition() { return {{1, 1}, {2, 43}, {3, 32}, {4, 84}, {6, 32}}; }

std::string_view d4_level2_golden() { return kD4Level2; }

}  // namespace weyl
