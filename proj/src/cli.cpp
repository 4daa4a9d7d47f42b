#include "weyl/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "weyl/classify.hpp"
#include "weyl/error.hpp"
#include "weyl/reference.hpp"
#include "weyl/store.hpp"

namespace weyl::cli {

namespace {

using json = nlohmann::ordered_json;

struct SystemArgs {
  std::string type;
  std::string cartan_file;

  RootSystemData load() const {
    if (!cartan_file.empty()) return RootSystemData::load_cartan_file(cartan_file);
    if (type.empty()) throw InvalidArgument("a root system (e.g. D4) or --cartan-file is required");
    return RootSystemData::builtin(type);
  }
};

// With --cartan-file there is no type argument, so the first positional is the directory.
void shift_positionals(SystemArgs& system, std::string& dir) {
  if (!system.cartan_file.empty() && !system.type.empty() && dir.empty()) dir = std::exchange(system.type, {});
}

void add_system(CLI::App* cmd, SystemArgs& args) {
  cmd->add_option("type", args.type, "Root system, e.g. A3, B7, D4, E7, F4, G2");
  cmd->add_option("--cartan-file", args.cartan_file, "Load the Cartan matrix from a file instead");
}

Kernel parse_kernel(const std::string& s) { return s == "serial" ? Kernel::serial : Kernel::parallel; }

bool all_ones(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](Entry e) { return e == 1; });
}

// Level sizes a full enumeration must produce, when they are known.
std::optional<std::vector<std::uint64_t>> expected_sizes(const RootSystemData& rs) {
  if (const ReferenceTable* t = find_reference(rs.name)) return t->level_sizes;
  if (rs.id) {
    const auto d = degrees(*rs.id);
    return poincare_coefficients(d);
  }
  return std::nullopt;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json summary_json(const GenerationSummary& s) {
  json j;
  j["root_system"] = s.root_system;
  j["start_weight"] = s.start_weight;
  j["levels"] = s.level_sizes;
  j["total"] = s.total;
  j["elapsed_ms"] = s.elapsed_ms;
  return j;
}

// ---- generate ----

struct GenerateArgs {
  SystemArgs system;
  std::string dir;
  std::string out_flag;
  std::vector<int> start_weight;
  std::optional<int> levels_up_to;
  std::string kernel = "parallel";
  bool json = false;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  const RootSystemData rs = a.system.load();
  const std::filesystem::path dir = !a.out_flag.empty() ? a.out_flag : (!a.dir.empty() ? a.dir : "out");
  GenerateOptions options;
  if (!a.start_weight.empty()) options.start_weight = Weight(a.start_weight.begin(), a.start_weight.end());
  options.levels_up_to = a.levels_up_to;
  options.kernel = parse_kernel(a.kernel);

  std::filesystem::create_directories(dir);
  const GenerationSummary summary = for_each_level(rs, options, [&](const Level& level) {
    write_level(level, rs.name, dir);
    if (!a.json) out << "level " << level.index() << ": " << level.size() << " elements\n";
  });
  write_summary(summary, dir);
  if (a.json) {
    out << summary_json(summary).dump(2) << "\n";
  } else {
    out << rs.name << ": " << summary.total << " elements in " << summary.level_sizes.size() << " levels, "
        << summary.elapsed_ms << " ms; written to " << dir.string() << "\n";
  }
  return kExitOk;
}

// ---- verify ----

struct DirArgs {
  SystemArgs system;
  std::string dir;
  std::string out_flag;
  bool json = false;
  std::uint64_t ceiling = kDefaultElementCeiling;
  std::string kernel = "parallel";

  std::filesystem::path path() const { return !out_flag.empty() ? out_flag : dir; }
};

int cmd_verify(const DirArgs& a, std::ostream& out) {
  const RootSystemData rs = a.system.load();
  const std::filesystem::path dir = a.path();
  if (dir.empty()) throw InvalidArgument("verify needs the output directory");
  const GenerationSummary summary = read_summary(summary_path(dir, rs.name));
  std::vector<std::string> diffs;

  // Level files against the summary, one level in memory at a time.
  const auto files = list_level_files(dir, rs.name);
  if (files.size() != summary.level_sizes.size()) {
    diffs.push_back("level count: summary " + std::to_string(summary.level_sizes.size()) + ", files " +
                    std::to_string(files.size()));
  }
  std::uint64_t file_total = 0;
  for (std::size_t k = 0; k < files.size(); ++k) {
    if (files[k].level != static_cast<int>(k)) {
      diffs.push_back("level files are not contiguous at level " + std::to_string(k));
      break;
    }
    const Level level = read_level(files[k].path);
    file_total += level.size();
    if (k < summary.level_sizes.size() && summary.level_sizes[k] != level.size()) {
      diffs.push_back("level " + std::to_string(k) + ": summary " + std::to_string(summary.level_sizes[k]) +
                      ", file " + std::to_string(level.size()));
    }
  }
  std::uint64_t summary_sum = 0;
  for (auto s : summary.level_sizes) summary_sum += s;
  if (summary_sum != summary.total) {
    diffs.push_back("summary total " + std::to_string(summary.total) + " is not the sum of its levels (" +
                    std::to_string(summary_sum) + ")");
  }
  if (file_total != summary.total) {
    diffs.push_back("total: summary " + std::to_string(summary.total) + ", files " + std::to_string(file_total));
  }

  // Against the known level sizes of the full group.
  std::string reference = "none";
  if (all_ones(summary.start_weight)) {
    if (auto expected = expected_sizes(rs)) {
      reference = find_reference(rs.name) ? "embedded table" : "Poincare series";
      const bool complete = summary.level_sizes.size() == expected->size();
      const std::size_t n = std::min(summary.level_sizes.size(), expected->size());
      if (summary.level_sizes.size() > expected->size()) {
        diffs.push_back("summary has " + std::to_string(summary.level_sizes.size()) + " levels, expected " +
                        std::to_string(expected->size()));
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (summary.level_sizes[k] != (*expected)[k]) {
          diffs.push_back("level " + std::to_string(k) + ": expected " + std::to_string((*expected)[k]) + ", found " +
                          std::to_string(summary.level_sizes[k]));
        }
      }
      if (complete) {
        std::uint64_t want = 0;
        for (auto s : *expected) want += s;
        if (summary.total != want) {
          diffs.push_back("total: expected " + std::to_string(want) + ", found " + std::to_string(summary.total));
        }
      } else {
        reference += " (levels 0.." + std::to_string(n == 0 ? 0 : n - 1) + ")";
      }
    }
    if (rs.name == "D4" && files.size() > 2) {
      if (read_file(files[2].path) != d4_level2_golden()) diffs.push_back("level 2 file differs from the golden sample");
    }
  }

  if (a.json) {
    json j;
    j["root_system"] = rs.name;
    j["reference"] = reference;
    j["ok"] = diffs.empty();
    j["mismatches"] = diffs;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& d : diffs) out << "MISMATCH " << d << "\n";
    out << rs.name << ": " << (diffs.empty() ? "verified" : "FAILED") << " (" << summary.total
        << " elements, reference: " << reference << ")\n";
  }
  return diffs.empty() ? kExitOk : kExitMismatch;
}

// ---- classes / orders ----

std::vector<Level> load_group(const DirArgs& a, const RootSystemData& rs) {
  const std::filesystem::path dir = a.path();
  if (dir.empty()) {
    if (rs.id) {
      if (auto order = group_order(*rs.id)) check_ceiling(*order, a.ceiling);
    }
    return generate_group(rs, parse_kernel(a.kernel));
  }
  check_ceiling(read_summary(summary_path(dir, rs.name)).total, a.ceiling);
  return read_levels(dir, rs.name);
}

json partition_json(const OrderPartition& p) {
  json j = json::object();
  for (const auto& [order, count] : p) j[std::to_string(order)] = count;
  return j;
}

std::string partition_text(const OrderPartition& p) {
  std::string s = "{";
  for (const auto& [order, count] : p) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(order) + ":" + std::to_string(count);
  }
  return s + "}";
}

// D4 class list against the class table: sizes, orders and cycle types as multisets, every class labelled.
std::vector<std::string> check_d4_classes(std::span<const ClassInfo> classes) {
  std::vector<std::string> diffs;
  const auto table = d4_class_table();
  if (classes.size() != table.size()) {
    diffs.push_back("expected " + std::to_string(table.size()) + " classes, found " + std::to_string(classes.size()));
  }
  std::vector<std::tuple<std::uint64_t, int, std::string>> want, got;
  for (const auto& row : table) want.emplace_back(row.size, row.order, std::string(row.cycle_type));
  for (const auto& c : classes) {
    got.emplace_back(c.cls.size(), c.cls.element_order, c.cycle_type ? c.cycle_type->to_string() : "");
    if (!c.label) {
      diffs.push_back("class at (" + std::to_string(c.cls.representative.level) + ", " +
                      std::to_string(c.cls.representative.ordinal) + ") matches no table row");
    }
  }
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  if (want != got) diffs.push_back("class invariants (size, order, cycle type) differ from the table");
  return diffs;
}

int cmd_classes(const DirArgs& a, std::ostream& out) {
  const RootSystemData rs = a.system.load();
  const std::vector<Level> levels = load_group(a, rs);
  const GlobalIndex index = build_index(levels);
  const auto classes = describe_classes(conjugacy_classes(index, rs), index, rs);

  OrderPartition partition;
  for (const auto& c : classes) partition[c.cls.element_order] += c.cls.size();

  std::vector<std::string> diffs;
  if (rs.name == "D4") {
    diffs = check_d4_classes(classes);
    if (partition != d4_order_partition()) diffs.push_back("order partition differs from the table");
  }

  if (a.json) {
    json j;
    j["root_system"] = rs.name;
    j["group_order"] = index.size();
    j["class_count"] = classes.size();
    json arr = json::array();
    for (const auto& c : classes) {
      json e;
      const ElementRef rep = c.cls.representative;
      e["representative"] = {{"level", rep.level}, {"ordinal", rep.ordinal}};
      const auto word = levels[rep.level].word(rep.ordinal);
      e["word"] = std::vector<int>(word.begin(), word.end());
      e["size"] = c.cls.size();
      e["order"] = c.cls.element_order;
      if (c.cycle_type) e["cycle_type"] = c.cycle_type->signed_lengths();
      if (c.label) e["label"] = {{"text", c.label->text}, {"ambiguous", c.label->ambiguous}, {"rows", c.label->rows}};
      json members = json::array();
      for (const auto& m : c.cls.members) members.push_back({m.level, m.ordinal});
      e["members"] = members;
      arr.push_back(e);
    }
    j["classes"] = arr;
    j["order_partition"] = partition_json(partition);
    j["mismatches"] = diffs;
    out << j.dump(2) << "\n";
  } else {
    write_class_report(out, classes, index);
    out << rs.name << ": " << classes.size() << " classes, order partition " << partition_text(partition) << "\n";
    for (const auto& d : diffs) out << "MISMATCH " << d << "\n";
  }
  return diffs.empty() ? kExitOk : kExitMismatch;
}

int cmd_orders(const DirArgs& a, std::ostream& out) {
  const RootSystemData rs = a.system.load();
  const std::vector<Level> levels = load_group(a, rs);
  const GlobalIndex index = build_index(levels);
  const OrderPartition partition = order_partition(index, parse_kernel(a.kernel));
  const bool checked = rs.name == "D4";
  const bool ok = !checked || partition == d4_order_partition();
  if (a.json) {
    json j;
    j["root_system"] = rs.name;
    j["order_partition"] = partition_json(partition);
    j["ok"] = ok;
    out << j.dump(2) << "\n";
  } else {
    out << rs.name << ": order partition " << partition_text(partition) << "\n";
    if (!ok) out << "MISMATCH order partition differs from the table " << partition_text(d4_order_partition()) << "\n";
  }
  return ok ? kExitOk : kExitMismatch;
}

// ---- bench ----

struct BenchArgs {
  std::vector<std::string> types;
  std::string kernel = "parallel";
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  json arr = json::array();
  for (const auto& t : a.types) {
    const RootSystemData rs = RootSystemData::builtin(t);
    GenerateOptions options;
    options.kernel = parse_kernel(a.kernel);
    const GenerationSummary s = for_each_level(rs, options, [](const Level&) {});
    json e;
    e["root_system"] = rs.name;
    e["kernel"] = a.kernel;
    e["levels"] = s.level_sizes.size();
    e["total"] = s.total;
    e["elapsed_ms"] = s.elapsed_ms;
    e["elements_per_sec"] = s.elapsed_ms > 0 ? static_cast<double>(s.total) / (s.elapsed_ms / 1000.0) : 0.0;
    arr.push_back(e);
  }
  out << arr.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate finite Weyl groups level by level, with inverse pairing, element orders, "
               "conjugacy classes and signed cycle types."};
  app.name("weylsnow");
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write every level of the group (or of an orbit) and a summary");
  add_system(g, gen.system);
  g->add_option("dir", gen.dir, "Output directory");
  g->add_option("--out", gen.out_flag, "Output directory (same as the positional argument)");
  g->add_option("--start-weight", gen.start_weight, "Dominant start weight a,b,c,...")->delimiter(',');
  g->add_option("--levels-up-to", gen.levels_up_to, "Stop after this level");
  g->add_option("--kernel", gen.kernel, "Level builder")->check(CLI::IsMember({"serial", "parallel"}));
  g->add_flag("--json", gen.json, "Print the summary as JSON");

  DirArgs ver, cls, ord;
  auto dir_command = [&](const char* name, const char* help, DirArgs& args, bool group_cmd) {
    auto* c = app.add_subcommand(name, help);
    add_system(c, args.system);
    c->add_option("dir", args.dir, group_cmd ? "Directory written by generate (omit to generate in memory)"
                                             : "Directory written by generate");
    c->add_option("--out", args.out_flag, "Same as the positional directory");
    c->add_flag("--json", args.json, "JSON output");
    if (group_cmd) {
      c->add_option("--ceiling", args.ceiling, "Refuse groups with more elements than this")->capture_default_str();
      c->add_option("--kernel", args.kernel, "Kernel for in-memory work")->check(CLI::IsMember({"serial", "parallel"}));
    }
    return c;
  };
  auto* v = dir_command("verify", "Check generated files against the summary and the known level sizes", ver, false);
  auto* c = dir_command("classes", "Conjugacy classes with orders, cycle types (type D) and D4 labels", cls, true);
  auto* o = dir_command("orders", "Number of elements of each order", ord, true);

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Time in-memory generation; reports JSON");
  b->add_option("types", bench.types, "Root systems")->required();
  b->add_option("--kernel", bench.kernel, "Level builder")->check(CLI::IsMember({"serial", "parallel"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFailure;
  }

  shift_positionals(gen.system, gen.dir);
  for (DirArgs* d : {&ver, &cls, &ord}) shift_positionals(d->system, d->dir);

  try {
    if (g->parsed()) return cmd_generate(gen, out);
    if (v->parsed()) return cmd_verify(ver, out);
    if (c->parsed()) return cmd_classes(cls, out);
    if (o->parsed()) return cmd_orders(ord, out);
    if (b->parsed()) return cmd_bench(bench, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"weylsnow"};
  for (const auto& s : args) argv.push_back(s.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace weyl::cli
