#include "weyl/classify.hpp"

#include <algorithm>
#include <deque>
#include <ostream>

#include "kernels.hpp"
#include "weyl/reference.hpp"

namespace weyl {

namespace {

constexpr std::size_t kFullOrderCheck = 100'000;
constexpr std::size_t kSampledChecks = 64;

std::uint64_t order_bound(const GlobalIndex& index) { return std::max<std::uint64_t>(index.size(), 1); }

// Flat position of every element, levels laid end to end.
std::vector<std::size_t> level_offsets(std::span<const Level> levels) {
  std::vector<std::size_t> off(levels.size() + 1, 0);
  for (std::size_t k = 0; k < levels.size(); ++k) off[k + 1] = off[k] + levels[k].size();
  return off;
}

ElementRef ref_at(const std::vector<std::size_t>& off, std::size_t flat) {
  const auto it = std::upper_bound(off.begin(), off.end(), flat);
  const std::size_t level = static_cast<std::size_t>(it - off.begin()) - 1;
  return {static_cast<int>(level), static_cast<std::uint32_t>(flat - off[level])};
}

}  // namespace

void check_ceiling(std::uint64_t elements, std::uint64_t ceiling) {
  if (elements > ceiling) {
    throw CeilingExceeded("the group has " + std::to_string(elements) + " elements, above the ceiling of " +
                          std::to_string(ceiling) + "; raise it with --ceiling if the memory is available");
  }
}

int element_order(std::span<const Entry> m, int n, std::uint64_t bound) {
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  if (m.size() != nn) throw InvalidArgument("matrix size does not match rank");
  std::vector<Entry> power(m.begin(), m.end());
  std::vector<Entry> next(nn);
  for (std::uint64_t p = 1; p <= bound; ++p) {
    if (is_identity(power, n)) return static_cast<int>(p);
    multiply(power, m, n, next);
    power.swap(next);
  }
  throw IntegrityError("matrix has no finite order up to " + std::to_string(bound));
}

int element_order(const IntMatrix& m, std::uint64_t bound) { return element_order(m.data(), m.size(), bound); }

OrderPartition order_partition(const GlobalIndex& index, Kernel kernel) {
  const auto levels = index.levels();
  const auto off = level_offsets(levels);
  const std::size_t total = off.back();
  const std::uint64_t bound = order_bound(index);
  std::vector<int> orders(total);

  auto compute = [&](std::size_t flat) {
    const ElementRef r = ref_at(off, flat);
    orders[flat] = element_order(levels[r.level].matrix(r.ordinal), levels[r.level].rank(), bound);
  };

  if (kernel == Kernel::serial) {
    for (std::size_t f = 0; f < total; ++f) compute(f);
  } else {
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 256)
    for (std::size_t f = 0; f < total; ++f) {
      try {
        compute(f);
      } catch (...) {
#pragma omp critical(weyl_order_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  }

  OrderPartition out;
  for (int o : orders) ++out[o];
  return out;
}

std::vector<ConjugacyClass> conjugacy_classes(const GlobalIndex& index, const RootSystemData& rs,
                                              GeneratorOrder generator_order) {
  const auto levels = index.levels();
  const auto off = level_offsets(levels);
  const std::size_t total = off.back();
  const int n = rs.rank();
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  const std::uint64_t bound = order_bound(index);

  std::vector<int> gens(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) gens[i] = generator_order == GeneratorOrder::ascending ? i : n - 1 - i;

  constexpr std::int32_t kUnassigned = -1;
  std::vector<std::int32_t> class_of(total, kUnassigned);
  std::vector<ConjugacyClass> classes;
  std::vector<Entry> half(nn), conj(nn);
  std::deque<std::size_t> queue;

  for (std::size_t seed = 0; seed < total; ++seed) {
    if (class_of[seed] != kUnassigned) continue;
    const auto id = static_cast<std::int32_t>(classes.size());
    ConjugacyClass cls;
    class_of[seed] = id;
    queue.push_back(seed);
    while (!queue.empty()) {
      const std::size_t flat = queue.front();
      queue.pop_front();
      const ElementRef r = ref_at(off, flat);
      cls.members.push_back(r);
      const auto m = levels[r.level].matrix(r.ordinal);
      for (int i : gens) {
        left_reflect(m, i, rs.cartan, half);
        right_reflect(half, i, rs.cartan, conj);
        const auto found = index.find(conj);
        if (!found) {
          throw IntegrityError("conjugate of element (" + std::to_string(r.level) + ", " +
                               std::to_string(r.ordinal) + ") by s" + std::to_string(i + 1) +
                               " is not in the index");
        }
        const std::size_t g = off[static_cast<std::size_t>(found->level)] + found->ordinal;
        if (class_of[g] == kUnassigned) {
          class_of[g] = id;
          queue.push_back(g);
        } else if (class_of[g] != id) {
          throw IntegrityError("conjugation closure reached an element of an earlier class");
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = cls.members.front();
    cls.element_order = element_order(index.matrix(cls.representative), n, bound);

    const std::size_t step = total <= kFullOrderCheck ? 1 : std::max<std::size_t>(1, cls.size() / kSampledChecks);
    for (std::size_t k = 0; k < cls.size(); k += step) {
      if (element_order(index.matrix(cls.members[k]), n, bound) != cls.element_order) {
        throw IntegrityError("element order is not constant on a conjugacy class");
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

CycleType class_cycle_type(const ConjugacyClass& cls, const GlobalIndex& index, const RootSystemId& id) {
  const auto levels = index.levels();
  auto type_of = [&](ElementRef r) {
    return signed_cycle_type(word_to_signed_perm(levels[r.level].word(r.ordinal), id));
  };
  const CycleType t = type_of(cls.representative);
  for (const ElementRef& r : cls.members) {
    if (type_of(r) != t) {
      throw IntegrityError("signed cycle type differs within the class of (" + std::to_string(cls.representative.level) +
                           ", " + std::to_string(cls.representative.ordinal) + ")");
    }
  }
  return t;
}

std::optional<ClassLabel> class_label_d4(const ConjugacyClass& cls, const CycleType& type) {
  ClassLabel label;
  const std::string ts = type.to_string();
  for (const D4ClassRow& row : d4_class_table()) {
    if (row.size == cls.size() && row.order == cls.element_order && row.cycle_type == ts) {
      label.rows.push_back(row.line);
      if (!label.text.empty()) label.text += " | ";
      label.text += std::string(row.root_subset) + " (row " + std::to_string(row.line) + ")";
    }
  }
  if (label.rows.empty()) return std::nullopt;
  if (label.rows.size() > 1) {
    label.ambiguous = true;
    label.text = "ambiguous {" + label.text + "}";
  } else {
    label.text = std::string(d4_class_table()[static_cast<std::size_t>(label.rows.front())].root_subset);
  }
  return label;
}

std::vector<ClassInfo> describe_classes(std::vector<ConjugacyClass> classes, const GlobalIndex& index,
                                        const RootSystemData& rs) {
  std::vector<ClassInfo> out;
  out.reserve(classes.size());
  const bool type_d = rs.id && rs.id->family == Family::D;
  const bool d4 = type_d && rs.id->rank == 4;
  for (auto& cls : classes) {
    ClassInfo info{std::move(cls), std::nullopt, std::nullopt};
    if (type_d) info.cycle_type = class_cycle_type(info.cls, index, *rs.id);
    if (d4) info.label = class_label_d4(info.cls, *info.cycle_type);
    out.push_back(std::move(info));
  }
  return out;
}

void write_class_report(std::ostream& out, std::span<const ClassInfo> classes, const GlobalIndex& index) {
  const auto levels = index.levels();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const ClassInfo& info = classes[c];
    const ElementRef rep = info.cls.representative;
    std::string word = format_word(levels[rep.level].word(rep.ordinal));
    if (word == " ") word = "e";
    out << "class " << c << ": representative " << word << " at (" << rep.level << ", " << rep.ordinal << ")\n";
    out << "  size " << info.cls.size() << ", order " << info.cls.element_order;
    if (info.cycle_type) out << ", cycle type " << info.cycle_type->to_string();
    if (info.label) out << ", label " << info.label->text;
    out << "\n  members:";
    for (std::size_t k = 0; k < info.cls.members.size(); ++k) {
      if (k % 8 == 0) out << "\n   ";
      out << " (" << info.cls.members[k].level << ", " << info.cls.members[k].ordinal << ")";
    }
    out << "\n";
  }
}

}  // namespace weyl
