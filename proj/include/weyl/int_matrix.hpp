#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "weyl/error.hpp"

namespace weyl {

/// Matrix entries and weight coordinates.
using Entry = std::int32_t;

/// Narrow a 64-bit intermediate to an Entry, failing loudly on overflow.
inline Entry checked_narrow(std::int64_t v) {
  if (v < std::numeric_limits<Entry>::min() || v > std::numeric_limits<Entry>::max()) {
    throw OverflowError("integer overflow: " + std::to_string(v) + " does not fit in 32 bits");
  }
  return static_cast<Entry>(v);
}

/// Dense square integer matrix, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}
  IntMatrix(int n, std::span<const Entry> row_major);
  IntMatrix(std::initializer_list<std::initializer_list<Entry>> rows);

  static IntMatrix identity(int n);

  int size() const noexcept { return n_; }

  Entry& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * n_ + c]; }
  Entry operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * n_ + c]; }

  std::span<const Entry> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * n_, static_cast<std::size_t>(n_)};
  }
  std::span<const Entry> data() const noexcept { return data_; }
  std::span<Entry> data() noexcept { return data_; }

  bool is_identity() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  int n_ = 0;
  std::vector<Entry> data_;
};

/// Checked product a*b.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Checked product of two row-major n×n blocks into `out`.
void multiply(std::span<const Entry> a, std::span<const Entry> b, int n, std::span<Entry> out);

/// True if the row-major n×n block is the identity.
bool is_identity(std::span<const Entry> m, int n);

/// Checked p-th power.
IntMatrix power(const IntMatrix& m, int p);

/// `[a, b, c]` rows joined by newlines.
std::string to_string(const IntMatrix& m);

}  // namespace weyl
