#include "multinv/catalog.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "multinv/errors.hpp"
#include "multinv/linalg.hpp"

namespace multinv {

namespace {

using Permutation = std::vector<int>;  // 0-based images

IntMatrix permutation_matrix(const Permutation& s) {
  const Index n = static_cast<Index>(s.size());
  IntMatrix p = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) p(s[static_cast<std::size_t>(i)], i) = 1;
  return p;
}

Permutation transposition(int n, int a, int b) {
  Permutation s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 0);
  std::swap(s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)]);
  return s;
}

Permutation long_cycle(int n) {
  Permutation s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (i + 1) % n;
  return s;
}

std::vector<Permutation> sym_generators(int n) {
  if (n < 2) return {};
  if (n == 2) return {transposition(2, 0, 1)};
  return {transposition(n, 0, 1), long_cycle(n)};
}

int sign(const Permutation& s) {
  int inversions = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] > s[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

// Action of s on A_{n-1} in the basis b_k = e_k - e_{k+1}; coordinates are
// partial sums.
IntMatrix root_action(const Permutation& s) {
  const int n = static_cast<int>(s.size());
  IntMatrix m = IntMatrix::Zero(n - 1, n - 1);
  for (int k = 0; k + 1 < n; ++k) {
    const int a = s[static_cast<std::size_t>(k)];
    const int b = s[static_cast<std::size_t>(k + 1)];
    for (int i = 0; i + 1 < n; ++i) m(i, k) = (a <= i ? 1 : 0) - (b <= i ? 1 : 0);
  }
  return m;
}

int parse_parameter(std::string_view text, std::string_view full) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1 || value > 12)
    throw UnknownBuiltin("unknown builtin '" + std::string(full) + "' (parameter must be 1..12)");
  return value;
}

// a + b sqrt5 with rational a, b.
struct QSqrt5 {
  Rational a, b;
  friend QSqrt5 operator+(const QSqrt5& x, const QSqrt5& y) { return {x.a + y.a, x.b + y.b}; }
  friend QSqrt5 operator-(const QSqrt5& x, const QSqrt5& y) { return {x.a - y.a, x.b - y.b}; }
  friend QSqrt5 operator*(const QSqrt5& x, const QSqrt5& y) {
    return {x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator<(const QSqrt5& x, const QSqrt5& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); }
};

using Quaternion = std::array<QSqrt5, 4>;  // 1, i, j, k

Quaternion qmul(const Quaternion& p, const Quaternion& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

// Rational coordinates over {1, sqrt5} x {1, i, j, k}, scaled by 4.
std::array<Integer, 8> scaled_coordinates(const Quaternion& q) {
  std::array<Integer, 8> out;
  for (std::size_t t = 0; t < 4; ++t) {
    const Rational a = q[t].a * 4;
    const Rational b = q[t].b * 4;
    if (denominator(a) != 1 || denominator(b) != 1) throw std::logic_error("icosian coordinate not in Z/4");
    out[2 * t] = numerator(a);
    out[2 * t + 1] = numerator(b);
  }
  return out;
}

const std::vector<std::string> kNames = {"rank3_order2", "rank3_order4", "rank3_order6", "sym3_u3",  "sym4_u4",
                                         "alt3_u3",      "alt4_u4",      "root_a2",      "root_a3",  "diag_sl2",
                                         "diag_sl3",     "diag_sl4",     "signed_root_s5", "icosian"};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < std::min(offset, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Integer parse_entry(const nlohmann::json& v, const std::string& path) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(v.get<std::uint64_t>());
    return Integer(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                          [](char c) { return c >= '0' && c <= '9'; }))
      throw ValidationError(path + ": '" + s + "' is not a decimal integer");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  throw ValidationError(path + ": expected an integer");
}

}  // namespace

GLattice sym_lattice(int n) {
  if (n < 1) throw std::invalid_argument("sym_lattice needs n >= 1");
  GLattice out{n, {}, "sym" + std::to_string(n) + "_u" + std::to_string(n)};
  for (const auto& s : sym_generators(n)) out.generators.push_back(permutation_matrix(s));
  return out;
}

GLattice alt_lattice(int n) {
  if (n < 1) throw std::invalid_argument("alt_lattice needs n >= 1");
  GLattice out{n, {}, "alt" + std::to_string(n) + "_u" + std::to_string(n)};
  for (int k = 2; k < n; ++k) {
    Permutation s(static_cast<std::size_t>(n));
    std::iota(s.begin(), s.end(), 0);
    s[0] = 1;
    s[1] = k;
    s[static_cast<std::size_t>(k)] = 0;
    out.generators.push_back(permutation_matrix(s));
  }
  return out;
}

GLattice root_lattice(int n) {
  if (n < 1) throw std::invalid_argument("root_lattice needs n >= 1");
  GLattice out{n, {}, "root_a" + std::to_string(n)};
  for (const auto& s : sym_generators(n + 1)) out.generators.push_back(root_action(s));
  return out;
}

GLattice diag_sl(int n) {
  if (n < 1) throw std::invalid_argument("diag_sl needs n >= 1");
  GLattice out{n, {}, "diag_sl" + std::to_string(n)};
  for (int i = 0; i + 1 < n; ++i) {
    IntMatrix d = IntMatrix::Identity(n, n);
    d(i, i) = -1;
    d(i + 1, i + 1) = -1;
    out.generators.push_back(std::move(d));
  }
  return out;
}

GLattice signed_root_s5() {
  GLattice out{4, {}, "signed_root_s5"};
  for (const auto& s : sym_generators(5)) out.generators.push_back(IntMatrix(root_action(s) * Integer(sign(s))));
  return out;
}

GLattice icosian() {
  const Rational half(1, 2);
  const QSqrt5 tau{half, half};        // (1 + sqrt5) / 2
  const QSqrt5 tau_bar{half, -half};   // (1 - sqrt5) / 2
  const QSqrt5 zero{0, 0};
  const QSqrt5 h{half, 0};
  const Quaternion q1{tau * h, h, tau_bar * h, zero};  // (a + i + j a*) / 2
  const Quaternion q2{tau * h, zero, h, tau_bar * h};  // (a + j + k a*) / 2

  // Close the group of unit quaternions.
  std::set<Quaternion> seen;
  std::vector<Quaternion> elements;
  const Quaternion unit{QSqrt5{1, 0}, zero, zero, zero};
  seen.insert(unit);
  elements.push_back(unit);
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const auto& q : {q1, q2}) {
      Quaternion p = qmul(elements[i], q);
      if (seen.insert(p).second) elements.push_back(p);
      if (elements.size() > 1000) throw std::logic_error("icosian generators do not close");
    }

  IntMatrix span(static_cast<Index>(elements.size()), 8);
  for (std::size_t r = 0; r < elements.size(); ++r) {
    const auto c = scaled_coordinates(elements[r]);
    for (Index t = 0; t < 8; ++t) span(static_cast<Index>(r), t) = c[static_cast<std::size_t>(t)];
  }
  const IntMatrix basis = row_basis(span);  // 8 x 8, upper triangular rows
  if (basis.rows() != 8) throw std::logic_error("icosian span does not have rank 8");

  auto coordinates = [&](const Quaternion& q) {
    // Solve x * basis = y for integer x.
    const auto y = scaled_coordinates(q);
    IntVector x = IntVector::Zero(8);
    for (Index k = 0; k < 8; ++k) {
      Integer rest = y[static_cast<std::size_t>(k)];
      for (Index j = 0; j < k; ++j) rest -= x(j) * basis(j, k);
      if (rest % basis(k, k) != 0) throw std::logic_error("icosian lattice not closed under multiplication");
      x(k) = rest / basis(k, k);
    }
    return x;
  };
  auto basis_element = [&](Index k) {
    Quaternion q;
    for (std::size_t t = 0; t < 4; ++t)
      q[t] = QSqrt5{Rational(basis(k, static_cast<Index>(2 * t))) / 4,
                    Rational(basis(k, static_cast<Index>(2 * t + 1))) / 4};
    return q;
  };

  GLattice out{8, {}, "icosian"};
  for (const auto& q : {q1, q2}) {
    IntMatrix m(8, 8);
    for (Index k = 0; k < 8; ++k) m.col(k) = coordinates(qmul(q, basis_element(k)));
    out.generators.push_back(std::move(m));
  }
  return out;
}

const std::vector<std::string>& builtin_names() { return kNames; }

GLattice builtin(std::string_view name) {
  auto named = [&](GLattice l) {
    l.name = std::string(name);
    return l;
  };
  if (name == "rank3_order2") return named({3, {int_matrix({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}})}, {}});
  if (name == "rank3_order4") return named({3, {int_matrix({{0, 1, 0}, {-1, 0, 0}, {0, 0, -1}})}, {}});
  if (name == "rank3_order6") return named({3, {int_matrix({{0, 0, -1}, {-1, 0, 0}, {0, -1, 0}})}, {}});
  if (name == "sym3_u3") return named(sym_lattice(3));
  if (name == "sym4_u4") return named(sym_lattice(4));
  if (name == "alt3_u3") return named(alt_lattice(3));
  if (name == "alt4_u4") return named(alt_lattice(4));
  if (name == "root_a2") return named(root_lattice(2));
  if (name == "root_a3") return named(root_lattice(3));
  if (name == "diag_sl2") return named(diag_sl(2));
  if (name == "diag_sl3") return named(diag_sl(3));
  if (name == "diag_sl4") return named(diag_sl(4));
  if (name == "signed_root_s5") return named(signed_root_s5());
  if (name == "icosian") return named(icosian());
  const auto colon = name.find(':');
  if (colon != std::string_view::npos) {
    const std::string_view head = name.substr(0, colon);
    const int n = parse_parameter(name.substr(colon + 1), name);
    if (head == "sym") return named(sym_lattice(n));
    if (head == "alt") return named(alt_lattice(n));
    if (head == "root_a") return named(root_lattice(n));
    if (head == "diag_sl") return named(diag_sl(n));
  }
  throw UnknownBuiltin("unknown builtin '" + std::string(name) + "'");
}

GroupFile parse_group_file(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what());
  }
  if (!doc.is_object()) throw ValidationError("$: expected an object");
  GroupFile out;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ValidationError("$.name: expected a string");
    out.lattice.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("rank")) throw ValidationError("$.rank: missing");
  if (!doc["rank"].is_number_integer() || doc["rank"].get<std::int64_t>() < 0 ||
      doc["rank"].get<std::int64_t>() > 4096)
    throw ValidationError("$.rank: expected a nonnegative integer");
  const Index n = doc["rank"].get<Index>();
  out.lattice.rank = n;
  if (!doc.contains("generators") || !doc["generators"].is_array())
    throw ValidationError("$.generators: expected an array of matrices");
  const auto& gens = doc["generators"];
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string gpath = "$.generators[" + std::to_string(g) + "]";
    if (!gens[g].is_array() || static_cast<Index>(gens[g].size()) != n)
      throw ValidationError(gpath + ": expected " + std::to_string(n) + " rows");
    IntMatrix m(n, n);
    for (Index r = 0; r < n; ++r) {
      const auto& row = gens[g][static_cast<std::size_t>(r)];
      const std::string rpath = gpath + "[" + std::to_string(r) + "]";
      if (!row.is_array() || static_cast<Index>(row.size()) != n)
        throw ValidationError(rpath + ": expected " + std::to_string(n) + " entries");
      for (Index c = 0; c < n; ++c)
        m(r, c) = parse_entry(row[static_cast<std::size_t>(c)], rpath + "[" + std::to_string(c) + "]");
    }
    out.lattice.generators.push_back(std::move(m));
  }
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) throw ValidationError("$.metadata: expected an object");
    for (const auto& [k, v] : doc["metadata"].items()) out.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
  }
  validate(out.lattice);
  return out;
}

std::string write_group_file(const GLattice& lattice, const std::map<std::string, std::string>& metadata) {
  nlohmann::ordered_json doc;
  doc["name"] = lattice.name;
  doc["rank"] = lattice.rank;
  doc["generators"] = nlohmann::ordered_json::array();
  for (const auto& g : lattice.generators) {
    auto rows = nlohmann::ordered_json::array();
    for (Index r = 0; r < g.rows(); ++r) {
      auto row = nlohmann::ordered_json::array();
      for (Index c = 0; c < g.cols(); ++c) {
        if (auto v = to_int64(g(r, c))) row.push_back(*v);
        else row.push_back(to_string(g(r, c)));
      }
      rows.push_back(std::move(row));
    }
    doc["generators"].push_back(std::move(rows));
  }
  doc["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : metadata) doc["metadata"][k] = v;
  return doc.dump(2) + "\n";
}

GLattice load_lattice(const std::string& target) {
  constexpr std::string_view prefix = "builtin:";
  if (target.rfind(prefix, 0) == 0) return builtin(std::string_view(target).substr(prefix.size()));
  std::ifstream in(target, std::ios::binary);
  if (!in) throw ValidationError(target + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_group_file(buffer.str()).lattice;
  } catch (const ParseError& e) {
    throw ParseError(target + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(target + ": " + e.what());
  }
}

}  // namespace multinv
