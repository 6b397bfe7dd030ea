#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace srpl {

/// Coefficient field: the rationals (characteristic 0) or F_p.
class Field {
 public:
  static Field rationals() { return Field{0}; }
  static Field prime(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) throw std::invalid_argument("prime must be below 2^31");
    return Field{p};
  }

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  std::string name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

  friend bool operator==(const Field&, const Field&) = default;

  static bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::int64_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

namespace detail {

/// Fraction-free (Bareiss) elimination. Returns nullopt if an intermediate
/// entry leaves the range of T's guarded arithmetic.
template <typename T, typename Wide>
std::optional<std::size_t> bareiss_rank(std::vector<std::vector<T>> m, bool guard) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  T prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        const Wide num = Wide(m[rank][col]) * Wide(m[i][j]) - Wide(m[i][col]) * Wide(m[rank][j]);
        const Wide q = num / Wide(prev);
        if (guard) {
          constexpr std::int64_t lim = std::int64_t{1} << 62;
          if (q > Wide(lim) || q < -Wide(lim)) return std::nullopt;
        }
        m[i][j] = static_cast<T>(q);
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

inline std::size_t rank_mod_p(const IntMatrix& a, std::uint32_t p) {
  std::vector<std::vector<std::uint64_t>> m(a.rows, std::vector<std::uint64_t>(a.cols));
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) {
      std::int64_t v = a.at(i, j) % static_cast<std::int64_t>(p);
      if (v < 0) v += p;
      m[i][j] = static_cast<std::uint64_t>(v);
    }
  auto inverse = [p](std::uint64_t x) {
    std::uint64_t result = 1, base = x, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols && rank < a.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows && m[pivot][col] == 0) ++pivot;
    if (pivot == a.rows) continue;
    std::swap(m[pivot], m[rank]);
    const std::uint64_t inv = inverse(m[rank][col]);
    for (std::size_t j = col; j < a.cols; ++j) m[rank][j] = m[rank][j] * inv % p;
    for (std::size_t i = rank + 1; i < a.rows; ++i) {
      const std::uint64_t factor = m[i][col];
      if (factor == 0) continue;
      for (std::size_t j = col; j < a.cols; ++j)
        m[i][j] = (m[i][j] + (p - factor) * m[rank][j]) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Exact rank over the given field. Over Q this is fraction-free elimination in
/// 64-bit integers with 128-bit intermediates, restarted with arbitrary
/// precision if an entry outgrows 62 bits.
inline std::size_t rank(const IntMatrix& a, const Field& field) {
  if (a.rows == 0 || a.cols == 0) return 0;
  if (!field.is_rational()) return detail::rank_mod_p(a, field.characteristic());
  std::vector<std::vector<std::int64_t>> m(a.rows, std::vector<std::int64_t>(a.cols));
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) m[i][j] = a.at(i, j);
  if (auto r = detail::bareiss_rank<std::int64_t, __int128>(m, true)) return *r;
  using big = boost::multiprecision::cpp_int;
  std::vector<std::vector<big>> b(a.rows, std::vector<big>(a.cols));
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) b[i][j] = a.at(i, j);
  return *detail::bareiss_rank<big, big>(std::move(b), false);
}

}  // namespace srpl
