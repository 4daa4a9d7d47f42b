#include "weyl/int_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace weyl {

IntMatrix::IntMatrix(int n, std::span<const Entry> row_major) : IntMatrix(n) {
  if (row_major.size() != data_.size()) {
    throw InvalidArgument("matrix data has " + std::to_string(row_major.size()) +
                          " entries, expected " + std::to_string(data_.size()));
  }
  std::copy(row_major.begin(), row_major.end(), data_.begin());
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Entry>> rows)
    : IntMatrix(static_cast<int>(rows.size())) {
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) throw InvalidArgument("matrix is not square");
    int c = 0;
    for (Entry v : row) (*this)(r, c++) = v;
    ++r;
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_identity() const { return weyl::is_identity(data_, n_); }

void multiply(std::span<const Entry> a, std::span<const Entry> b, int n, std::span<Entry> out) {
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      std::int64_t acc = 0;
      for (int k = 0; k < n; ++k) {
        if (__builtin_add_overflow(acc, static_cast<std::int64_t>(a[r * n + k]) * b[k * n + c], &acc)) {
          throw OverflowError("integer overflow in matrix product");
        }
      }
      out[r * n + c] = checked_narrow(acc);
    }
  }
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.size() != b.size()) throw InvalidArgument("matrix dimensions differ");
  IntMatrix out(a.size());
  multiply(a.data(), b.data(), a.size(), out.data());
  return out;
}

bool is_identity(std::span<const Entry> m, int n) {
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (m[r * n + c] != (r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

IntMatrix power(const IntMatrix& m, int p) {
  IntMatrix out = IntMatrix::identity(m.size());
  for (int i = 0; i < p; ++i) out = multiply(out, m);
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  for (int r = 0; r < m.size(); ++r) {
    if (r) os << '\n';
    os << '[';
    for (int c = 0; c < m.size(); ++c) {
      if (c) os << ", ";
      os << m(r, c);
    }
    os << ']';
  }
  return os.str();
}

}  // namespace weyl
