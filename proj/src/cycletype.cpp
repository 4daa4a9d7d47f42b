#include "weyl/cycletype.hpp"

#include <algorithm>
#include <cstdlib>

namespace weyl {

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation p;
  p.images.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.images[i] = i + 1;
  return p;
}

int SignedPermutation::apply(int x) const {
  const int img = images.at(static_cast<std::size_t>(std::abs(x) - 1));
  return x > 0 ? img : -img;
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.size() != b.size()) throw InvalidArgument("signed permutations of different degree");
  SignedPermutation out;
  out.images.reserve(b.images.size());
  for (int x : b.images) out.images.push_back(a.apply(x));
  return out;
}

int SignedPermutation::negative_count() const {
  return static_cast<int>(std::count_if(images.begin(), images.end(), [](int v) { return v < 0; }));
}

std::string CycleType::to_string() const {
  const bool spaced = std::any_of(cycles.begin(), cycles.end(), [](const SignedCycle& c) { return c.length > 9; });
  std::string s = "[";
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (spaced && i) s += ' ';
    if (cycles[i].negative) s += '~';
    s += std::to_string(cycles[i].length);
  }
  return s + "]";
}

std::vector<int> CycleType::signed_lengths() const {
  std::vector<int> out;
  for (const auto& c : cycles) out.push_back(c.negative ? -c.length : c.length);
  return out;
}

CycleType CycleType::parse(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw InvalidArgument("bad cycle type '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  const bool spaced = text.find(' ') != std::string_view::npos;
  CycleType t;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    SignedCycle c{0, false};
    if (text[i] == '~') {
      c.negative = true;
      ++i;
    }
    if (i >= text.size() || text[i] < '0' || text[i] > '9') throw InvalidArgument("bad cycle type");
    if (spaced) {
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') c.length = c.length * 10 + (text[i++] - '0');
    } else {
      c.length = text[i++] - '0';
    }
    t.cycles.push_back(c);
  }
  return t;
}

SignedPermutation generator_action(const RootSystemId& id, int i, bool experimental_type_b) {
  const int n = id.rank;
  const bool type_b = id.family == Family::B && experimental_type_b;
  if (id.family != Family::D && !type_b) {
    throw InvalidArgument("signed cycle types are only available for type D (got " + id.name() + ")");
  }
  if (i < 1 || i > n) throw InvalidArgument("generator index " + std::to_string(i) + " out of range");
  SignedPermutation p = SignedPermutation::identity(n);
  if (i < n) {
    std::swap(p.images[i - 1], p.images[i]);
  } else if (type_b) {
    p.images[n - 1] = -n;
  } else {
    p.images[n - 2] = -n;
    p.images[n - 1] = -(n - 1);
  }
  return p;
}

namespace {

template <typename Gen>
SignedPermutation word_action(std::span<const Gen> word, const RootSystemId& id, bool experimental_type_b) {
  std::vector<SignedPermutation> gens;
  for (int i = 1; i <= id.rank; ++i) gens.push_back(generator_action(id, i, experimental_type_b));
  SignedPermutation p = SignedPermutation::identity(id.rank);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int g = static_cast<int>(*it);
    if (g < 1 || g > id.rank) throw InvalidArgument("generator s" + std::to_string(g) + " out of range");
    p = compose(gens[static_cast<std::size_t>(g - 1)], p);
  }
  return p;
}

}  // namespace

SignedPermutation word_to_signed_perm(std::span<const int> word, const RootSystemId& id, bool experimental_type_b) {
  return word_action(word, id, experimental_type_b);
}

SignedPermutation word_to_signed_perm(std::span<const std::uint8_t> word, const RootSystemId& id,
                                      bool experimental_type_b) {
  return word_action(word, id, experimental_type_b);
}

CycleType signed_cycle_type(const SignedPermutation& p) {
  const int n = p.size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  CycleType t;
  for (int start = 1; start <= n; ++start) {
    if (seen[start - 1]) continue;
    int length = 0;
    int sign = 1;
    int x = start;
    do {
      seen[x - 1] = true;
      const int img = p.images[x - 1];
      if (img < 0) sign = -sign;
      x = std::abs(img);
      ++length;
    } while (x != start);
    t.cycles.push_back({length, sign < 0});
  }
  std::sort(t.cycles.begin(), t.cycles.end(), [](const SignedCycle& a, const SignedCycle& b) {
    return a.length != b.length ? a.length > b.length : a.negative > b.negative;
  });
  return t;
}

}  // namespace weyl
