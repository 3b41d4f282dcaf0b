#include "multinv/integer.hpp"

#include <cstring>
#include <limits>
#include <sstream>

namespace multinv {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<long>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return int_matrix(v);
}

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.front().size());
  IntMatrix m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = rows[i].at(j);
  return m;
}

IntVector int_vector(std::initializer_list<long> entries) { return int_vector(std::vector<long>(entries)); }

IntVector int_vector(const std::vector<long>& entries) {
  IntVector v(static_cast<Index>(entries.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = entries[i];
  return v;
}

bool lex_less(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
  return false;
}

bool lex_less(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return false;
}

std::optional<std::int64_t> to_int64(const Integer& x) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  if (x < lo || x > hi) return std::nullopt;
  return x.convert_to<std::int64_t>();
}

std::string entry_key(const IntMatrix& m) {
  std::string key;
  key.reserve(static_cast<std::size_t>(m.size()) * 8 + 8);
  auto put = [&key](std::int64_t v) {
    char buf[sizeof v];
    std::memcpy(buf, &v, sizeof v);
    key.append(buf, sizeof v);
  };
  put(static_cast<std::int64_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if (auto v = to_int64(m(i, j)); v && *v != std::numeric_limits<std::int64_t>::min()) {
        put(*v);
      } else {
        // Escape: a sentinel followed by the decimal digits.
        put(std::numeric_limits<std::int64_t>::min());
        std::string digits = m(i, j).str();
        put(static_cast<std::int64_t>(digits.size()));
        key += digits;
      }
    }
  return key;
}

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v(i).str();
  }
  return s + ")";
}

std::string to_string(const IntMatrix& m) {
  std::string s = "[";
  for (Index i = 0; i < m.rows(); ++i) {
    if (i) s += ',';
    s += '[';
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) s += ',';
      s += m(i, j).str();
    }
    s += ']';
  }
  return s + "]";
}

}  // namespace multinv
