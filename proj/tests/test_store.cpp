#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "weyl/error.hpp"
#include "weyl/reference.hpp"
#include "weyl/store.hpp"

using namespace weyl;

namespace {

std::string text(const Level& l) {
  std::ostringstream out;
  write_level(l, out);
  return out.str();
}

Level parse(const std::string& s, std::optional<int> index = std::nullopt) {
  std::istringstream in(s);
  return read_level(in, index);
}

}  // namespace

TEST_SUITE("store") {
  TEST_CASE("D4 level 2 matches the golden sample") {
    const auto& g = fixtures::group("D4");
    CHECK(text(g[2]) == d4_level2_golden());
    CHECK(text(g[0]) == "n=0, name= , w=1,1,1,1, n_inv=0\n[1, 0, 0, 0]\n[0, 1, 0, 0]\n[0, 0, 1, 0]\n[0, 0, 0, 1]\n");
    const std::string l1 = text(g[1]);
    CHECK(l1.find("n=2, name=s3, w=1,2,-1,1, n_inv=2\n") != std::string::npos);
  }

  TEST_CASE("file names") {
    CHECK(level_file_name("D4", 2, 9) == "D4_WeightMatrByLevel_2_elems=9.txt");
    const auto info = parse_level_file_name("x/D4_WeightMatrByLevel_12_elems=1.txt", "D4");
    REQUIRE(info);
    CHECK(info->level == 12);
    CHECK(info->count == 1);
    CHECK_FALSE(parse_level_file_name("D4_WeightMatrByLevel_12_elems=1.txt", "D5"));
    CHECK_FALSE(parse_level_file_name("D4_WeightMatrByLevel_x_elems=1.txt", "D4"));
    CHECK_FALSE(parse_level_file_name("D4_summary.json", "D4"));
  }

  TEST_CASE("format_word") {
    const std::vector<std::uint8_t> w{2, 1};
    CHECK(format_word(w) == "s2.s1");
    CHECK(format_word({}) == " ");
  }

  TEST_CASE("round trip and byte-identical re-emission") {
    for (const char* name : {"D4", "B3", "G2", "F4"}) {
      CAPTURE(name);
      for (const Level& l : fixtures::group(name)) {
        const std::string s = text(l);
        const Level back = parse(s, l.index());
        CHECK(back == l);
        CHECK(text(back) == s);
      }
    }
    // unpaired levels rebuild inverses by exact inversion
    for (const Level& l : generate_orbit(fixtures::system("D4"), {1, 0, 0, 0})) {
      const Level back = parse(text(l));
      CHECK(back == l);
      CHECK_FALSE(back.paired());
    }
  }

  TEST_CASE("the identity accepts an empty name") {
    const Level l = parse("n=0, name=, w=1,1, n_inv=0\n[1, 0]\n[0, 1]\n");
    CHECK(l.size() == 1);
    CHECK(l.index() == 0);
  }

  TEST_CASE("malformed files") {
    const std::string good = text(fixtures::group("D4")[2]);

    // truncated: drop the last matrix row
    const std::string truncated = good.substr(0, good.rfind("[0, 1, 0, -1]"));
    CHECK_THROWS_AS(parse(truncated), ParseError);

    // header out of sequence
    std::string seq = good;
    seq.replace(seq.find("n=1,"), 4, "n=5,");
    CHECK_THROWS_AS(parse(seq), IntegrityError);

    // broken inverse pointer
    std::string ptr = good;
    ptr.replace(ptr.find("n_inv=3"), 7, "n_inv=2");
    CHECK_THROWS_AS(parse(ptr), IntegrityError);

    // garbage in a matrix row, reported with its line number
    std::string row = good;
    row.replace(row.find("[-1, 0, 1, 1]"), 13, "[-1, 0, x, 1]");
    try {
      parse(row);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    CHECK_THROWS_AS(parse("n=0 name=s1 w=1 n_inv=0\n[1]\n"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse(good, 3), IntegrityError);
  }

  TEST_CASE("write and read directories") {
    const auto dir = fixtures::scratch_dir("store");
    const auto& g = fixtures::group("D4");
    for (const Level& l : g) write_level(l, "D4", dir);
    CHECK(list_level_files(dir, "D4").size() == 13);
    const auto back = read_levels(dir, "D4");
    REQUIRE(back.size() == g.size());
    for (std::size_t k = 0; k < g.size(); ++k) CHECK(back[k] == g[k]);

    const auto l2 = read_level(dir / "D4_WeightMatrByLevel_2_elems=9.txt");
    CHECK(l2 == g[2]);
    std::filesystem::rename(dir / "D4_WeightMatrByLevel_2_elems=9.txt", dir / "D4_WeightMatrByLevel_2_elems=8.txt");
    CHECK_THROWS_AS(read_level(dir / "D4_WeightMatrByLevel_2_elems=8.txt"), IntegrityError);
    std::filesystem::remove(dir / "D4_WeightMatrByLevel_2_elems=8.txt");
    CHECK_THROWS_AS(read_levels(dir, "D4"), IntegrityError);

    CHECK_THROWS_AS(write_level(Level(3, 4), "D4", dir), InvalidArgument);
  }

  TEST_CASE("summary round trip") {
    const auto dir = fixtures::scratch_dir("summary");
    GenerationSummary s;
    s.root_system = "D4";
    s.start_weight = {1, 1, 1, 1};
    s.level_sizes = {1, 4, 9};
    s.total = 14;
    s.elapsed_ms = 1.5;
    write_summary(s, dir);
    const auto back = read_summary(summary_path(dir, "D4"));
    CHECK(back.root_system == "D4");
    CHECK(back.start_weight == s.start_weight);
    CHECK(back.level_sizes == s.level_sizes);
    CHECK(back.total == 14);
    CHECK(back.elapsed_ms == doctest::Approx(1.5));

    std::ofstream(dir / "bad_summary.json") << "{\"root_system\": 3";
    CHECK_THROWS_AS(read_summary(dir / "bad_summary.json"), ParseError);
  }

  TEST_CASE("global index") {
    for (const char* name : {"A1", "B3", "D4"}) {
      CAPTURE(name);
      const auto& g = fixtures::group(name);
      const GlobalIndex index = build_index(g);
      CHECK(index.size() == total_size(g));
      for (const Level& l : g) {
        for (std::size_t k = 0; k < l.size(); ++k) {
          const auto ref = index.find(l.matrix(k));
          REQUIRE(ref);
          CHECK(ref->level == l.index());
          CHECK(ref->ordinal == k);
        }
      }
    }
    CHECK(build_index(fixtures::group("A1")).size() == 2);
    CHECK(build_index(fixtures::group("B3")).size() == 48);
    CHECK(build_index(fixtures::group("D4")).size() == 192);
    CHECK_FALSE(build_index(fixtures::group("D4")).find(std::vector<Entry>(16, 7)));

    std::vector<Level> dup = fixtures::group("A1");
    dup.push_back(dup[0]);
    CHECK_THROWS(build_index(dup));
    // a level-1 record that carries the identity matrix
    GroupElement fake;
    fake.weight = {-1};
    fake.name = fake.name_inv = {1};
    fake.matr = fake.matr_inv = IntMatrix::identity(1);
    fake.n_in_lvl = 0;
    fake.n_inv_in_lvl = 0;
    std::vector<Level> same{fixtures::group("A1")[0], Level(1, 1)};
    same[1].append(fake);
    CHECK_THROWS_AS(build_index(same), IntegrityError);
  }
}
