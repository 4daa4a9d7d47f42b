#include "weyl/orbit.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <string_view>

#include "kernels.hpp"

namespace weyl {

Level::Level(int index, int rank, bool paired) : index_(index), rank_(rank), paired_(paired) {
  if (rank < 1 || rank > kMaxRank) throw InvalidArgument("bad rank " + std::to_string(rank));
  if (index < 0) throw InvalidArgument("negative level index");
}

GroupElement Level::element(std::size_t i) const {
  GroupElement e;
  auto w = weight(i);
  e.weight.assign(w.begin(), w.end());
  auto name = word(i);
  e.name.assign(name.begin(), name.end());
  auto inv = inverse_word(i);
  e.name_inv.assign(inv.begin(), inv.end());
  e.matr = IntMatrix(rank_, matrix(i));
  e.matr_inv = IntMatrix(rank_, inverse_matrix(i));
  e.n_in_lvl = static_cast<std::int64_t>(i);
  e.n_inv_in_lvl = n_inv_[i];
  return e;
}

void Level::append(const GroupElement& e) {
  const std::size_t i = size();
  if (e.n_in_lvl != static_cast<std::int64_t>(i)) {
    throw IntegrityError("record n=" + std::to_string(e.n_in_lvl) + " appended at position " + std::to_string(i));
  }
  if (static_cast<int>(e.weight.size()) != rank_ || e.matr.size() != rank_ || e.matr_inv.size() != rank_) {
    throw InvalidArgument("element rank does not match level rank " + std::to_string(rank_));
  }
  if (static_cast<int>(e.name.size()) != index_ || static_cast<int>(e.name_inv.size()) != index_) {
    throw InvalidArgument("word length does not match level index " + std::to_string(index_));
  }
  auto gen = [&](int g) {
    if (g < 1 || g > rank_) throw InvalidArgument("generator s" + std::to_string(g) + " out of range");
    return static_cast<std::uint8_t>(g);
  };
  weights_.insert(weights_.end(), e.weight.begin(), e.weight.end());
  for (int g : e.name) words_.push_back(gen(g));
  for (int g : e.name_inv) inv_words_.push_back(gen(g));
  matrices_.insert(matrices_.end(), e.matr.data().begin(), e.matr.data().end());
  inv_matrices_.insert(inv_matrices_.end(), e.matr_inv.data().begin(), e.matr_inv.data().end());
  n_inv_.push_back(e.n_inv_in_lvl);
}

std::size_t Level::involution_count() const {
  std::vector<Entry> sq(static_cast<std::size_t>(rank_) * rank_);
  std::size_t count = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    multiply(matrix(i), matrix(i), rank_, sq);
    if (is_identity(sq, rank_)) ++count;
  }
  return count;
}

bool operator==(const Level& a, const Level& b) {
  return a.index_ == b.index_ && a.rank_ == b.rank_ && a.paired_ == b.paired_ && a.weights_ == b.weights_ &&
         a.words_ == b.words_ && a.inv_words_ == b.inv_words_ && a.matrices_ == b.matrices_ &&
         a.inv_matrices_ == b.inv_matrices_ && a.n_inv_ == b.n_inv_;
}

void require_regular(std::span<const Entry> w, int level, std::size_t ordinal) {
  if (std::find(w.begin(), w.end(), 0) != w.end()) {
    throw IntegrityError("zero coordinate in a regular orbit at level " + std::to_string(level) +
                         ", element " + std::to_string(ordinal));
  }
}

Weight apply_reflection(const Weight& w, int i, const RootSystemData& rs) {
  if (static_cast<int>(w.size()) != rs.rank()) throw InvalidArgument("weight length does not match rank");
  if (i < 1 || i > rs.rank()) throw InvalidArgument("generator index " + std::to_string(i) + " out of range");
  Weight out(w.size());
  reflect_weight(w, i - 1, rs.cartan, out);
  return out;
}

int level_delta(const Weight& w, int i) {
  if (i < 1 || i > static_cast<int>(w.size())) {
    throw InvalidArgument("generator index " + std::to_string(i) + " out of range");
  }
  const Entry m = w[i - 1];
  return (m > 0) - (m < 0);
}

bool snow_accepts(const Weight& source, int i, const Weight& image) {
  if (i < 1 || i > static_cast<int>(source.size()) || image.size() != source.size()) {
    throw InvalidArgument("generator index or weight length out of range");
  }
  if (source[i - 1] <= 0) throw InvalidArgument("snow_accepts requires a positive source coordinate");
  return std::all_of(image.begin() + i, image.end(), [](Entry x) { return x >= 0; });
}

std::string matrix_key(std::span<const Entry> m) {
  std::string key(m.size() * 4, '\0');
  for (std::size_t k = 0; k < m.size(); ++k) {
    const auto u = static_cast<std::uint32_t>(m[k]);
    for (int b = 0; b < 4; ++b) key[k * 4 + b] = static_cast<char>((u >> (8 * b)) & 0xFFu);
  }
  return key;
}

std::uint64_t matrix_hash(std::span<const Entry> m) {
  return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(m.data()), m.size_bytes()));
}

Level build_level_zero(const Weight& start) {
  if (start.empty()) throw InvalidArgument("empty start weight");
  if (std::any_of(start.begin(), start.end(), [](Entry x) { return x < 0; })) {
    throw InvalidArgument("start weight is not dominant");
  }
  const bool regular = std::all_of(start.begin(), start.end(), [](Entry x) { return x > 0; });
  const int rank = static_cast<int>(start.size());
  Level level(0, rank, regular);
  GroupElement e;
  e.weight = start;
  e.matr = IntMatrix::identity(rank);
  e.matr_inv = e.matr;
  e.n_in_lvl = 0;
  e.n_inv_in_lvl = regular ? 0 : -1;
  level.append(e);
  return level;
}

Level build_next_level(const Level& current, const RootSystemData& rs, Kernel kernel) {
  if (current.rank() != rs.rank()) throw InvalidArgument("level rank does not match root system");
  return kernel == Kernel::serial ? serial::build_next_level(current, rs) : parallel::build_next_level(current, rs);
}

GenerationSummary for_each_level(const RootSystemData& rs, const GenerateOptions& options,
                                 const std::function<void(const Level&)>& sink) {
  using clock = std::chrono::steady_clock;
  GenerationSummary summary;
  summary.root_system = rs.name;
  summary.start_weight = options.start_weight.value_or(Weight(static_cast<std::size_t>(rs.rank()), 1));
  if (static_cast<int>(summary.start_weight.size()) != rs.rank()) {
    throw InvalidArgument("start weight has " + std::to_string(summary.start_weight.size()) +
                          " coordinates, rank is " + std::to_string(rs.rank()));
  }
  if (options.levels_up_to && *options.levels_up_to < 0) throw InvalidArgument("negative level bound");

  clock::duration busy{};
  auto t0 = clock::now();
  Level current = build_level_zero(summary.start_weight);
  busy += clock::now() - t0;
  const bool full_group = current.paired() && !options.levels_up_to;

  for (;;) {
    summary.level_sizes.push_back(current.size());
    summary.total += current.size();
    sink(current);
    if (options.levels_up_to && current.index() >= *options.levels_up_to) break;
    t0 = clock::now();
    Level next = build_next_level(current, rs, options.kernel);
    busy += clock::now() - t0;
    if (next.empty()) break;
    current = std::move(next);
  }
  summary.elapsed_ms = std::chrono::duration<double, std::milli>(busy).count();

  if (full_group) {
    const auto levels = static_cast<std::int64_t>(summary.level_sizes.size());
    if (levels != rs.positive_root_count + 1) {
      throw IntegrityError(rs.name + ": built " + std::to_string(levels) + " levels, expected " +
                           std::to_string(rs.positive_root_count + 1));
    }
    if (summary.level_sizes.back() != 1) throw IntegrityError(rs.name + ": top level does not hold a single element");
    if (rs.id) {
      if (auto order = group_order(*rs.id); order && *order != summary.total) {
        throw IntegrityError(rs.name + ": enumerated " + std::to_string(summary.total) + " elements, |W| is " +
                             std::to_string(*order));
      }
    }
  }
  return summary;
}

std::vector<Level> generate_group(const RootSystemData& rs, Kernel kernel) {
  std::vector<Level> levels;
  GenerateOptions options;
  options.kernel = kernel;
  for_each_level(rs, options, [&](const Level& l) { levels.push_back(l); });
  return levels;
}

std::vector<Level> generate_orbit(const RootSystemData& rs, const Weight& mu, Kernel kernel) {
  std::vector<Level> levels;
  GenerateOptions options;
  options.start_weight = mu;
  options.kernel = kernel;
  for_each_level(rs, options, [&](const Level& l) { levels.push_back(l); });
  return levels;
}

std::uint64_t total_size(std::span<const Level> levels) {
  std::uint64_t n = 0;
  for (const auto& l : levels) n += l.size();
  return n;
}

}  // namespace weyl
