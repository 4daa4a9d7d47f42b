#include "weyl/store.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace weyl {

namespace {

constexpr std::string_view kLevelTag = "_WeightMatrByLevel_";

std::int64_t parse_int(std::string_view s, std::size_t line, std::string_view what) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(s) + "'", line);
  }
  return v;
}

std::vector<Entry> parse_list(std::string_view s, std::size_t line, std::string_view what) {
  std::vector<Entry> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = s.find(',', start);
    out.push_back(checked_narrow(parse_int(s.substr(start, comma - start), line, what)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Word parse_word(std::string_view s, std::size_t line) {
  Word w;
  if (s.empty() || s == " ") return w;
  std::size_t start = 0;
  for (;;) {
    const std::size_t dot = s.find('.', start);
    std::string_view tok = s.substr(start, dot - start);
    if (tok.size() < 2 || tok.front() != 's') throw ParseError("bad generator '" + std::string(tok) + "'", line);
    w.push_back(static_cast<int>(parse_int(tok.substr(1), line, "generator")));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return w;
}

struct Record {
  std::int64_t n;
  Word name;
  Weight weight;
  std::int64_t n_inv;
  std::vector<Entry> rows;
  std::size_t line;
};

Record parse_header(std::string_view s, std::size_t line) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  const std::size_t name_at = s.find(", name=");
  const std::size_t w_at = s.find(", w=", name_at == std::string_view::npos ? 0 : name_at);
  const std::size_t inv_at = s.find(", n_inv=", w_at == std::string_view::npos ? 0 : w_at);
  if (!s.starts_with("n=") || name_at == std::string_view::npos || w_at == std::string_view::npos ||
      inv_at == std::string_view::npos) {
    throw ParseError("malformed record header '" + std::string(s) + "'", line);
  }
  Record r;
  r.line = line;
  r.n = parse_int(s.substr(2, name_at - 2), line, "ordinal");
  r.name = parse_word(s.substr(name_at + 7, w_at - name_at - 7), line);
  r.weight = parse_list(s.substr(w_at + 4, inv_at - w_at - 4), line, "weight coordinate");
  r.n_inv = parse_int(s.substr(inv_at + 8), line, "inverse ordinal");
  return r;
}

std::vector<Entry> parse_row(std::string_view s, std::size_t line) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw ParseError("malformed matrix row '" + std::string(s) + "'", line);
  }
  return parse_list(s.substr(1, s.size() - 2), line, "matrix entry");
}

IntMatrix exact_inverse(const IntMatrix& m) {
  const RationalMatrix inv = inverse(m);
  IntMatrix out(m.size());
  for (int r = 0; r < m.size(); ++r) {
    for (int c = 0; c < m.size(); ++c) {
      if (inv(r, c).denominator() != 1) throw IntegrityError("matrix is not invertible over the integers");
      out(r, c) = checked_narrow(inv(r, c).numerator());
    }
  }
  return out;
}

}  // namespace

std::string level_file_name(std::string_view prefix, int level, std::size_t count) {
  return std::string(prefix) + std::string(kLevelTag) + std::to_string(level) + "_elems=" + std::to_string(count) +
         ".txt";
}

std::optional<LevelFileInfo> parse_level_file_name(const std::filesystem::path& path, std::string_view prefix) {
  const std::string name = path.filename().string();
  const std::string head = std::string(prefix) + std::string(kLevelTag);
  if (!name.starts_with(head) || !name.ends_with(".txt")) return std::nullopt;
  std::string_view rest(name);
  rest.remove_prefix(head.size());
  rest.remove_suffix(4);
  const std::size_t sep = rest.find("_elems=");
  if (sep == std::string_view::npos) return std::nullopt;
  LevelFileInfo info;
  info.path = path;
  auto level = rest.substr(0, sep);
  auto count = rest.substr(sep + 7);
  auto r1 = std::from_chars(level.data(), level.data() + level.size(), info.level);
  auto r2 = std::from_chars(count.data(), count.data() + count.size(), info.count);
  if (r1.ec != std::errc() || r1.ptr != level.data() + level.size() || r2.ec != std::errc() ||
      r2.ptr != count.data() + count.size()) {
    return std::nullopt;
  }
  return info;
}

std::vector<LevelFileInfo> list_level_files(const std::filesystem::path& dir, std::string_view prefix) {
  std::vector<LevelFileInfo> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (auto info = parse_level_file_name(entry.path(), prefix)) files.push_back(std::move(*info));
  }
  std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) { return a.level < b.level; });
  return files;
}

std::string format_word(std::span<const std::uint8_t> word) {
  if (word.empty()) return " ";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += '.';
    s += 's';
    s += std::to_string(word[i]);
  }
  return s;
}

void write_level(const Level& level, std::ostream& out) {
  const int n = level.rank();
  std::string buf;
  for (std::size_t e = 0; e < level.size(); ++e) {
    buf.clear();
    buf += "n=" + std::to_string(e) + ", name=" + format_word(level.word(e)) + ", w=";
    auto w = level.weight(e);
    for (int k = 0; k < n; ++k) {
      if (k) buf += ',';
      buf += std::to_string(w[k]);
    }
    buf += ", n_inv=" + std::to_string(level.inverse_ordinal(e)) + '\n';
    auto m = level.matrix(e);
    for (int r = 0; r < n; ++r) {
      buf += '[';
      for (int c = 0; c < n; ++c) {
        if (c) buf += ", ";
        buf += std::to_string(m[r * n + c]);
      }
      buf += "]\n";
    }
    out << buf;
  }
  if (!out) throw Error("write failure");
}

std::filesystem::path write_level(const Level& level, std::string_view prefix, const std::filesystem::path& dir) {
  if (level.empty()) throw InvalidArgument("refusing to write empty level " + std::to_string(level.index()));
  std::filesystem::create_directories(dir);
  const auto path = dir / level_file_name(prefix, level.index(), level.size());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_level(level, out);
  out.close();
  if (!out) throw Error("write failure on " + path.string());
  return path;
}

Level read_level(std::istream& in, std::optional<int> expected_index) {
  std::vector<Record> records;
  std::string line;
  std::size_t line_no = 0;
  int rank = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    if (line.front() == '[') {
      if (records.empty()) throw ParseError("matrix row before any record header", line_no);
      Record& r = records.back();
      auto row = parse_row(line, line_no);
      if (static_cast<int>(row.size()) != rank) {
        throw ParseError("matrix row has " + std::to_string(row.size()) + " entries, expected " +
                             std::to_string(rank),
                         line_no);
      }
      if (r.rows.size() == static_cast<std::size_t>(rank) * rank) {
        throw ParseError("too many matrix rows for record n=" + std::to_string(r.n), line_no);
      }
      r.rows.insert(r.rows.end(), row.begin(), row.end());
      continue;
    }
    if (!records.empty() && records.back().rows.size() != static_cast<std::size_t>(rank) * rank) {
      throw ParseError("record n=" + std::to_string(records.back().n) + " has an incomplete matrix", line_no);
    }
    Record r = parse_header(line, line_no);
    if (records.empty()) {
      rank = static_cast<int>(r.weight.size());
      if (rank < 1 || rank > kMaxRank) throw ParseError("bad weight length " + std::to_string(rank), line_no);
    } else if (static_cast<int>(r.weight.size()) != rank) {
      throw ParseError("weight length changes within the level", line_no);
    }
    if (r.n != static_cast<std::int64_t>(records.size())) {
      throw IntegrityError("line " + std::to_string(line_no) + ": record n=" + std::to_string(r.n) +
                           " out of sequence, expected n=" + std::to_string(records.size()));
    }
    records.push_back(std::move(r));
  }
  if (records.empty()) throw ParseError("level file holds no records", line_no);
  if (records.back().rows.size() != static_cast<std::size_t>(rank) * rank) {
    throw ParseError("truncated level: record n=" + std::to_string(records.back().n) + " has an incomplete matrix",
                     line_no);
  }

  const int index = static_cast<int>(records.front().name.size());
  if (expected_index && *expected_index != index) {
    throw IntegrityError("records have word length " + std::to_string(index) + ", expected level " +
                         std::to_string(*expected_index));
  }
  const bool paired = records.front().n_inv >= 0;
  const auto count = static_cast<std::int64_t>(records.size());
  for (const auto& r : records) {
    if (static_cast<int>(r.name.size()) != index) {
      throw ParseError("word length differs within the level", r.line);
    }
    if ((r.n_inv >= 0) != paired || r.n_inv >= count) {
      throw ParseError("bad inverse ordinal " + std::to_string(r.n_inv), r.line);
    }
    if (paired && records[static_cast<std::size_t>(r.n_inv)].n_inv != r.n) {
      throw IntegrityError("line " + std::to_string(r.line) + ": inverse pointers of " + std::to_string(r.n) +
                           " and " + std::to_string(r.n_inv) + " disagree");
    }
  }

  Level level(index, rank, paired);
  GroupElement e;
  for (const auto& r : records) {
    e.weight = r.weight;
    e.name = r.name;
    e.name_inv.assign(r.name.rbegin(), r.name.rend());
    e.matr = IntMatrix(rank, r.rows);
    e.matr_inv = paired ? IntMatrix(rank, records[static_cast<std::size_t>(r.n_inv)].rows) : exact_inverse(e.matr);
    if (!multiply(e.matr, e.matr_inv).is_identity()) {
      throw IntegrityError("line " + std::to_string(r.line) + ": matrix of n=" + std::to_string(r.n) +
                           " is not inverse to that of n=" + std::to_string(r.n_inv));
    }
    e.n_in_lvl = r.n;
    e.n_inv_in_lvl = r.n_inv;
    try {
      level.append(e);
    } catch (const InvalidArgument& err) {
      throw ParseError(err.what(), r.line);
    }
  }
  return level;
}

Level read_level(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::optional<int> expected;
  std::optional<std::size_t> expected_count;
  const std::string name = path.filename().string();
  if (auto at = name.find(kLevelTag); at != std::string::npos) {
    if (auto info = parse_level_file_name(path, name.substr(0, at))) {
      expected = info->level;
      expected_count = info->count;
    }
  }
  Level level = read_level(in, expected);
  if (expected_count && *expected_count != level.size()) {
    throw IntegrityError(path.string() + ": file name announces " + std::to_string(*expected_count) +
                         " elements, found " + std::to_string(level.size()));
  }
  return level;
}

std::vector<Level> read_levels(const std::filesystem::path& dir, std::string_view prefix) {
  std::vector<Level> levels;
  for (const auto& info : list_level_files(dir, prefix)) {
    if (info.level != static_cast<int>(levels.size())) {
      throw IntegrityError("level " + std::to_string(levels.size()) + " file missing in " + dir.string());
    }
    levels.push_back(read_level(info.path));
  }
  if (levels.empty()) throw Error("no level files for " + std::string(prefix) + " in " + dir.string());
  return levels;
}

std::filesystem::path summary_path(const std::filesystem::path& dir, std::string_view prefix) {
  return dir / (std::string(prefix) + "_summary.json");
}

void write_summary(const GenerationSummary& summary, const std::filesystem::path& dir) {
  nlohmann::ordered_json j;
  j["root_system"] = summary.root_system;
  j["start_weight"] = summary.start_weight;
  j["levels"] = summary.level_sizes;
  j["total"] = summary.total;
  j["elapsed_ms"] = summary.elapsed_ms;
  std::filesystem::create_directories(dir);
  const auto path = summary_path(dir, summary.root_system);
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
}

GenerationSummary read_summary(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  GenerationSummary s;
  try {
    const auto j = nlohmann::json::parse(in);
    s.root_system = j.at("root_system").get<std::string>();
    s.level_sizes = j.at("levels").get<std::vector<std::uint64_t>>();
    s.total = j.at("total").get<std::uint64_t>();
    s.elapsed_ms = j.value("elapsed_ms", 0.0);
    if (j.contains("start_weight")) s.start_weight = j["start_weight"].get<Weight>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  }
  return s;
}

std::optional<ElementRef> GlobalIndex::find(std::span<const Entry> matrix) const {
  const std::uint64_t h = matrix_hash(matrix);
  auto lo = std::lower_bound(hashes_.begin(), hashes_.end(), h);
  for (auto it = lo; it != hashes_.end() && *it == h; ++it) {
    const ElementRef ref = refs_[static_cast<std::size_t>(it - hashes_.begin())];
    auto m = this->matrix(ref);
    if (std::equal(m.begin(), m.end(), matrix.begin(), matrix.end())) return ref;
  }
  return std::nullopt;
}

GlobalIndex build_index(std::span<const Level> levels) {
  struct Slot {
    std::uint64_t hash;
    ElementRef ref;
  };
  std::vector<Slot> slots;
  slots.reserve(total_size(levels));
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (levels[k].index() != static_cast<int>(k)) {
      throw IntegrityError("level at position " + std::to_string(k) + " has index " +
                           std::to_string(levels[k].index()));
    }
    for (std::size_t e = 0; e < levels[k].size(); ++e) {
      slots.push_back({matrix_hash(levels[k].matrix(e)), {static_cast<int>(k), static_cast<std::uint32_t>(e)}});
    }
  }
  std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
    return a.hash != b.hash ? a.hash < b.hash : a.ref < b.ref;
  });

  GlobalIndex index;
  index.levels_ = levels;
  index.hashes_.reserve(slots.size());
  index.refs_.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    for (std::size_t j = i; j-- > 0 && slots[j].hash == slots[i].hash;) {
      auto a = index.matrix(slots[i].ref);
      auto b = index.matrix(slots[j].ref);
      if (std::equal(a.begin(), a.end(), b.begin())) {
        throw IntegrityError("duplicate element: level " + std::to_string(slots[j].ref.level) + " #" +
                             std::to_string(slots[j].ref.ordinal) + " and level " +
                             std::to_string(slots[i].ref.level) + " #" + std::to_string(slots[i].ref.ordinal));
      }
    }
    index.hashes_.push_back(slots[i].hash);
    index.refs_.push_back(slots[i].ref);
  }
  return index;
}

}  // namespace weyl
