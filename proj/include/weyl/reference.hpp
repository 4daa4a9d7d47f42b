#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace weyl {

/// Expected level sizes of a full group enumeration.
struct ReferenceTable {
  std::string name;
  std::vector<std::uint64_t> level_sizes;
  std::uint64_t total = 0;
};

/// Embedded tables: D4, B7, D8, E7, B8.
std::span<const ReferenceTable> reference_tables();
const ReferenceTable* find_reference(std::string_view name);

/// Coefficients of prod_d (1 + q + ... + q^{d-1}): the number of elements of each length.
std::vector<std::uint64_t> poincare_coefficients(std::span<const int> degrees);

/// One row of the D4 conjugacy class table.
struct D4ClassRow {
  int line;
  std::string_view root_subset;   // e.g. "2A1", "D4(a1)"; "-" for the identity
  std::string_view representative;  // as printed, e.g. "s1s2"
  std::uint64_t size;
  int order;
  std::string_view cycle_type;  // `~` marks a negative cycle
};

std::span<const D4ClassRow> d4_class_table();

/// Number of D4 elements of each order.
std::map<int, std::uint64_t> d4_order_partition();

/// Exact text of the D4 level-2 file, generated from the all-ones weight.
std::string_view d4_level2_golden();

}  // namespace weyl
