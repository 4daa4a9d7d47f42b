// Acceptance checks: one PASS/FAIL line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "weyl/classify.hpp"
#include "weyl/reference.hpp"
#include "weyl/store.hpp"

using namespace weyl;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok;
  std::string detail;
};

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

Outcome d4_enumeration() {
  const auto t0 = Clock::now();
  const auto levels = generate_group(RootSystemData::builtin("D4"));
  const double secs = seconds_since(t0);
  std::vector<std::uint64_t> sizes;
  for (const auto& l : levels) sizes.push_back(l.size());
  const bool ok = sizes == oracle::poincare(oracle::degrees('D', 4)) && sizes.size() == 13 && sizes[0] == 1 &&
                  sizes[1] == 4 && sizes[2] == 9 && total_size(levels) == 192 && secs < 1.0;
  return {ok, "sizes " + join(sizes) + ", total " + std::to_string(total_size(levels)) + ", " +
                  std::to_string(secs) + " s"};
}

Outcome golden_file() {
  const auto dir = fixtures::scratch_dir("acceptance_golden");
  const auto levels = generate_group(RootSystemData::builtin("D4"));
  const auto path = write_level(levels[2], "D4", dir);
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  const bool ok = s.str() == d4_level2_golden() && path.filename() == "D4_WeightMatrByLevel_2_elems=9.txt";
  return {ok, path.filename().string() + (ok ? " identical" : " differs")};
}

Outcome conjugacy() {
  const auto& rs = fixtures::system("D4");
  const GlobalIndex index = build_index(fixtures::group("D4"));
  const auto classes = conjugacy_classes(index, rs);
  std::multiset<std::uint64_t> sizes;
  for (const auto& c : classes) sizes.insert(c.size());
  const std::multiset<std::uint64_t> want{1, 1, 6, 6, 6, 12, 12, 12, 24, 24, 24, 32, 32};
  const OrderPartition partition = order_partition(index);
  const OrderPartition want_partition{{1, 1}, {2, 43}, {3, 32}, {4, 84}, {6, 32}};
  std::string p;
  for (const auto& [o, n] : partition) p += (p.empty() ? "" : ",") + std::to_string(o) + ":" + std::to_string(n);
  return {classes.size() == 13 && sizes == want && partition == want_partition,
          std::to_string(classes.size()) + " classes, orders {" + p + "}"};
}

Outcome cycle_types() {
  const auto& rs = fixtures::system("D4");
  const GlobalIndex index = build_index(fixtures::group("D4"));
  const auto info = describe_classes(conjugacy_classes(index, rs), index, rs);
  const std::vector<std::string> want{"[1111]", "[211]",   "[31]",    "[22]",   "[22]",   "[~1~111]",  "[4]",
                                      "[4]",    "[2~1~1]", "[~2~11]", "[~3~1]", "[~2~2]", "[~1~1~1~1]"};
  std::vector<std::string> got;
  std::string line;
  for (const auto& c : info) {
    got.push_back(c.cycle_type ? c.cycle_type->to_string() : "?");
    line += got.back();
  }
  return {got == want, line};
}

Outcome scale() {
  std::string detail;
  bool ok = true;
  auto run = [&](const char* name, double limit, const std::map<std::size_t, std::uint64_t>& spots,
                 std::uint64_t total) {
    const auto t0 = Clock::now();
    const GenerationSummary s = for_each_level(RootSystemData::builtin(name), {}, [](const Level&) {});
    const double secs = seconds_since(t0);
    bool good = s.total == total && secs <= limit;
    for (const auto& [level, size] : spots) good = good && level < s.level_sizes.size() && s.level_sizes[level] == size;
    ok = ok && good;
    detail += std::string(detail.empty() ? "" : "; ") + name + " total " + std::to_string(s.total) + " in " +
              std::to_string(secs) + " s";
  };
  run("B7", 120.0, {{3, 77}, {24, 36336}, {25, 36336}}, 645120);
  run("E7", 600.0, {{31, 131046}, {32, 131046}}, 2903040);
  return {ok, detail};
}

Outcome properties() {
  std::size_t checked = 0;
  bool ok = true;
  const auto& rs = fixtures::system("D4");
  const Weight start{1, 1, 1, 1};
  std::vector<Entry> prod(16);
  for (const Level& l : fixtures::group("D4")) {
    std::size_t involutions = 0;
    for (std::size_t k = 0; k < l.size(); ++k, ++checked) {
      multiply(l.matrix(k), l.inverse_matrix(k), 4, prod);
      ok = ok && is_identity(prod, 4);
      const auto partner = l.inverse_ordinal(k);
      ok = ok && partner >= 0 && l.inverse_ordinal(static_cast<std::size_t>(partner)) == static_cast<std::int64_t>(k);
      if (partner == static_cast<std::int64_t>(k)) ++involutions;
      Weight w = start;
      const auto word = l.word(k);
      for (auto it = word.rbegin(); it != word.rend(); ++it) w = apply_reflection(w, *it, rs);
      ok = ok && std::equal(w.begin(), w.end(), l.weight(k).begin(), l.weight(k).end());
    }
    ok = ok && 2 * l.dictionary_entries() == l.size() - involutions;
  }
  for (const char* name : {"D4", "B3", "A3"}) {
    std::vector<std::size_t> s;
    for (const Level& l : fixtures::group(name)) s.push_back(l.size());
    ok = ok && std::equal(s.begin(), s.end(), s.rbegin());
  }
  return {ok, std::to_string(checked) + " elements checked; palindromes D4, B3, A3"};
}

Outcome wall_orbit() {
  std::vector<std::vector<std::int32_t>> mats;
  for (const Level& l : fixtures::group("D4")) {
    for (std::size_t k = 0; k < l.size(); ++k) mats.emplace_back(l.matrix(k).begin(), l.matrix(k).end());
  }
  const std::size_t brute = oracle::distinct_images({1, 0, 0, 0}, mats);
  const std::uint64_t orbit = total_size(generate_orbit(fixtures::system("D4"), {1, 0, 0, 0}));
  return {orbit == 8 && brute == 8, "orbit " + std::to_string(orbit) + ", brute force " + std::to_string(brute)};
}

Outcome cross_validation() {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> coord(-12, 12);
  std::size_t agree = 0, trials = 0;
  for (const char* name : {"B3", "G2"}) {
    const auto& rs = fixtures::system(name);
    const auto roots = oracle::simple_roots(name[0], rs.rank());
    for (int t = 0; t < 1000; ++t, ++trials) {
      Weight w(static_cast<std::size_t>(rs.rank()));
      std::vector<std::int64_t> m(w.size());
      for (std::size_t k = 0; k < w.size(); ++k) m[k] = w[k] = coord(rng);
      const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(rs.rank()));
      const Weight got = apply_reflection(w, i, rs);
      const auto want = oracle::reflect_coordinates(roots, m, i);
      if (std::equal(got.begin(), got.end(), want.begin(), want.end())) ++agree;
    }
  }
  return {agree == trials, std::to_string(agree) + "/" + std::to_string(trials) + " random weights agree"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"D4 full enumeration", d4_enumeration},
      {"D4 level-2 golden file", golden_file},
      {"D4 conjugacy classes and order partition", conjugacy},
      {"D4 signed cycle types", cycle_types},
      {"B7 and E7 at scale", scale},
      {"D4 property suite", properties},
      {"D4 wall-weight orbit", wall_orbit},
      {"B3/G2 reflection cross-validation", cross_validation},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first << " (" << o.detail
              << ")" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
