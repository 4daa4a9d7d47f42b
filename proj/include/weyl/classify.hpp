#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weyl/cycletype.hpp"
#include "weyl/store.hpp"

namespace weyl {

/// Default cap on the number of elements held in memory for class computations.
inline constexpr std::uint64_t kDefaultElementCeiling = 10'000'000;

/// Throws CeilingExceeded when `elements` is above `ceiling`.
void check_ceiling(std::uint64_t elements, std::uint64_t ceiling);

/// Smallest p >= 1 with m^p = I. Throws IntegrityError if none is found up to `bound`.
int element_order(std::span<const Entry> m, int n, std::uint64_t bound);
int element_order(const IntMatrix& m, std::uint64_t bound = 1u << 20);

/// Element order -> number of elements of that order.
using OrderPartition = std::map<int, std::uint64_t>;

OrderPartition order_partition(const GlobalIndex& index, Kernel kernel = Kernel::parallel);

struct ConjugacyClass {
  ElementRef representative;
  std::vector<ElementRef> members;  // sorted
  int element_order = 1;

  std::size_t size() const noexcept { return members.size(); }
};

enum class GeneratorOrder { ascending, descending };

/// Partition of the group into classes by closing each unassigned element under w -> s_i w s_i.
/// Classes come in order of their least member, which is also the representative. Member orders
/// are all checked for groups up to 100000 elements and sampled above that.
std::vector<ConjugacyClass> conjugacy_classes(const GlobalIndex& index, const RootSystemData& rs,
                                              GeneratorOrder generator_order = GeneratorOrder::ascending);

/// Signed cycle type of the representative (type D only). Throws IntegrityError if some member
/// has a different type.
CycleType class_cycle_type(const ConjugacyClass& cls, const GlobalIndex& index, const RootSystemId& id);

/// Row(s) of the D4 class table matching (size, order, cycle type). Two pairs of rows share all three
/// invariants; for those `ambiguous` is set and both rows are listed.
struct ClassLabel {
  std::string text;
  bool ambiguous = false;
  std::vector<int> rows;
};

std::optional<ClassLabel> class_label_d4(const ConjugacyClass& cls, const CycleType& type);

/// A class together with the derived columns of the report.
struct ClassInfo {
  ConjugacyClass cls;
  std::optional<CycleType> cycle_type;
  std::optional<ClassLabel> label;
};

/// Cycle types for family D and labels for D4; other systems get the bare classes.
std::vector<ClassInfo> describe_classes(std::vector<ConjugacyClass> classes, const GlobalIndex& index,
                                        const RootSystemData& rs);

/// One block per class: representative word and position, size, order, cycle type, label, members.
void write_class_report(std::ostream& out, std::span<const ClassInfo> classes, const GlobalIndex& index);

}  // namespace weyl
