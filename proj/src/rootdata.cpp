#include "weyl/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace weyl {

namespace {

constexpr std::size_t kRootClosureLimit = 100000;

void check_generator(int rank, int i) {
  if (i < 1 || i > rank) {
    throw InvalidArgument("generator index " + std::to_string(i) + " out of range 1.." +
                          std::to_string(rank));
  }
}

void bond(IntMatrix& c, int i, int j, Entry cij = -1, Entry cji = -1) {
  c(i - 1, j - 1) = cij;
  c(j - 1, i - 1) = cji;
}

}  // namespace

RootSystemId RootSystemId::parse(std::string_view text) {
  if (text.size() < 2) throw InvalidArgument("bad root system '" + std::string(text) + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (f < 'A' || f > 'G') throw InvalidArgument("unknown family '" + std::string(1, text[0]) + "'");
  int rank = 0;
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw InvalidArgument("bad rank in root system '" + std::string(text) + "'");
  }
  RootSystemId id{static_cast<Family>(f), rank};
  validate(id);
  return id;
}

std::string RootSystemId::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

void validate(const RootSystemId& id) {
  const int n = id.rank;
  bool ok = false;
  switch (id.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B:
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 3; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok) throw InvalidArgument("no root system of type " + id.name());
  if (n > kMaxRank) throw InvalidArgument("rank " + std::to_string(n) + " exceeds the supported maximum");
}

RationalMatrix inverse(const IntMatrix& m) {
  const int n = m.size();
  RationalMatrix a(n), inv(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a(r, c) = m(r, c);
    inv(r, r) = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a(pivot, col).numerator() == 0) ++pivot;
    if (pivot == n) throw InvalidArgument("matrix is singular");
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Rational p = a(col, col);
    for (int c = 0; c < n; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col).numerator() == 0) continue;
      const Rational f = a(r, col);
      for (int c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

IntMatrix cartan_matrix(const RootSystemId& id) {
  validate(id);
  const int n = id.rank;
  IntMatrix c(n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  switch (id.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(c, i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n - 1; ++i) bond(c, i, i + 1);
      bond(c, n - 1, n, -2, -1);  // alpha_n short
      break;
    case Family::C:
      for (int i = 1; i < n - 1; ++i) bond(c, i, i + 1);
      bond(c, n - 1, n, -1, -2);  // alpha_n long
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) bond(c, i, i + 1);
      bond(c, n - 2, n);
      break;
    case Family::E:
      bond(c, 1, 3);
      bond(c, 2, 4);
      for (int i = 3; i < n; ++i) bond(c, i, i + 1);
      break;
    case Family::F:
      bond(c, 1, 2);
      bond(c, 2, 3, -2, -1);
      bond(c, 3, 4);
      break;
    case Family::G:
      bond(c, 1, 2, -1, -3);  // alpha_1 short
      break;
  }
  return c;
}

void validate_cartan(const IntMatrix& c) {
  const int n = c.size();
  if (n < 1) throw InvalidArgument("Cartan matrix is empty");
  if (n > kMaxRank) throw InvalidArgument("rank " + std::to_string(n) + " exceeds the supported maximum");
  for (int i = 0; i < n; ++i) {
    if (c(i, i) != 2) {
      throw InvalidArgument("Cartan entry (" + std::to_string(i + 1) + "," + std::to_string(i + 1) +
                            ") is " + std::to_string(c(i, i)) + ", expected 2");
    }
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Entry v = c(i, j);
      if (v > 0 || v < -3) {
        throw InvalidArgument("Cartan entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ") is " + std::to_string(v) + ", expected one of 0,-1,-2,-3");
      }
      if ((v == 0) != (c(j, i) == 0)) {
        throw InvalidArgument("Cartan entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ") and (" + std::to_string(j + 1) + "," + std::to_string(i + 1) +
                              ") must be zero together");
      }
    }
  }
  inverse(c);  // throws if singular
}

IntMatrix reflection_matrix(const IntMatrix& cartan, int i) {
  check_generator(cartan.size(), i);
  IntMatrix r = IntMatrix::identity(cartan.size());
  for (int k = 0; k < cartan.size(); ++k) r(i - 1, k) = (k == i - 1 ? 1 : 0) - cartan(i - 1, k);
  return r;
}

IntMatrix reflection_matrix(const RootSystemId& id, int i) { return reflection_matrix(cartan_matrix(id), i); }

std::int64_t positive_root_count(const RootSystemId& id) {
  validate(id);
  const std::int64_t n = id.rank;
  switch (id.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

std::vector<std::vector<Entry>> positive_roots(const IntMatrix& cartan) {
  const int n = cartan.size();
  std::set<std::vector<Entry>> seen;
  std::vector<std::vector<Entry>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<Entry> a(n, 0);
    a[i] = 1;
    seen.insert(a);
    frontier.push_back(std::move(a));
  }
  while (!frontier.empty()) {
    std::vector<std::vector<Entry>> next;
    for (const auto& a : frontier) {
      for (int i = 0; i < n; ++i) {
        // <alpha, alpha_i> = sum_j a_j c_ji
        std::int64_t pairing = 0;
        for (int j = 0; j < n; ++j) pairing += static_cast<std::int64_t>(a[j]) * cartan(j, i);
        if (pairing == 0) continue;
        std::vector<Entry> b = a;
        b[i] = checked_narrow(b[i] - pairing);
        if (seen.insert(b).second) {
          if (seen.size() > kRootClosureLimit) {
            throw InvalidArgument("root closure does not terminate; Cartan matrix is not of finite type");
          }
          next.push_back(std::move(b));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<Entry>> positive;
  for (const auto& a : seen) {
    if (std::all_of(a.begin(), a.end(), [](Entry v) { return v >= 0; })) positive.push_back(a);
  }
  return positive;
}

RationalMatrix inverse_cartan(const RootSystemId& id) { return inverse(cartan_matrix(id)); }

std::vector<Rational> fundamental_weight_in_root_basis(const IntMatrix& cartan, int i) {
  check_generator(cartan.size(), i);
  // omega_i = sum_j x_j alpha_j with sum_j x_j c_jk = delta_ik, i.e. x is row i of C^-1.
  const RationalMatrix inv = inverse(cartan);
  std::vector<Rational> x(cartan.size());
  for (int j = 0; j < cartan.size(); ++j) x[j] = inv(i - 1, j);
  return x;
}

std::vector<Rational> fundamental_weight_in_root_basis(const RootSystemId& id, int i) {
  return fundamental_weight_in_root_basis(cartan_matrix(id), i);
}

std::vector<int> degrees(const RootSystemId& id) {
  validate(id);
  const int n = id.rank;
  std::vector<int> d;
  switch (id.family) {
    case Family::A:
      for (int k = 2; k <= n + 1; ++k) d.push_back(k);
      break;
    case Family::B:
    case Family::C:
      for (int k = 1; k <= n; ++k) d.push_back(2 * k);
      break;
    case Family::D:
      for (int k = 1; k < n; ++k) d.push_back(2 * k);
      d.push_back(n);
      break;
    case Family::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F: d = {2, 6, 8, 12}; break;
    case Family::G: d = {2, 6}; break;
  }
  return d;
}

std::optional<std::uint64_t> group_order(const RootSystemId& id) {
  std::uint64_t order = 1;
  for (int d : degrees(id)) {
    if (__builtin_mul_overflow(order, static_cast<std::uint64_t>(d), &order)) return std::nullopt;
  }
  return order;
}

RootSystemData RootSystemData::builtin(const RootSystemId& id) {
  RootSystemData rs;
  rs.name = id.name();
  rs.id = id;
  rs.cartan = cartan_matrix(id);
  for (int i = 1; i <= id.rank; ++i) rs.reflections.push_back(reflection_matrix(rs.cartan, i));
  rs.positive_root_count = weyl::positive_root_count(id);
  return rs;
}

RootSystemData RootSystemData::from_cartan(std::string name, IntMatrix cartan) {
  validate_cartan(cartan);
  RootSystemData rs;
  rs.name = std::move(name);
  rs.positive_root_count = static_cast<std::int64_t>(positive_roots(cartan).size());
  rs.cartan = std::move(cartan);
  for (int i = 1; i <= rs.rank(); ++i) rs.reflections.push_back(reflection_matrix(rs.cartan, i));
  return rs;
}

RootSystemData RootSystemData::load_cartan_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open Cartan file " + path.string());
  std::vector<std::int64_t> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("expected an integer, got '" + tok + "'", line_no);
      }
      values.push_back(v);
    }
  }
  if (values.empty()) throw ParseError("Cartan file is empty", 0);
  const std::int64_t rank = values.front();
  if (rank < 1 || rank > kMaxRank) throw ParseError("bad rank " + std::to_string(rank), 0);
  if (values.size() != static_cast<std::size_t>(1 + rank * rank)) {
    throw ParseError("expected " + std::to_string(rank * rank) + " Cartan entries, got " +
                         std::to_string(values.size() - 1),
                     0);
  }
  IntMatrix c(static_cast<int>(rank));
  for (std::size_t k = 0; k < static_cast<std::size_t>(rank * rank); ++k) {
    c.data()[k] = checked_narrow(values[k + 1]);
  }
  return from_cartan(path.stem().string(), std::move(c));
}

}  // namespace weyl
