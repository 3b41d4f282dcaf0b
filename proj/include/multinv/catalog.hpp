#pragma once

// Builtin lattices and the JSON group-definition format.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "multinv/group.hpp"

namespace multinv {

/// S_n permuting the standard basis of U_n = Z^n (s(e_i) = e_{s(i)}).
GLattice sym_lattice(int n);
/// A_n on U_n, generated by the 3-cycles (1 2 k).
GLattice alt_lattice(int n);
/// S_{n+1} on the root lattice A_n = {z in U_{n+1} : sum z_i = 0}, basis e_i - e_{i+1}.
GLattice root_lattice(int n);
/// diag(+-1) matrices of determinant 1 on Z^n.
GLattice diag_sl(int n);
/// S_5 acting on Z^- (x) A_4: s -> sign(s) * s|A_4.
GLattice signed_root_s5();
/// Binary icosahedral group acting by left multiplication on the icosian ring (rank 8).
GLattice icosian();

/// Named builtins: rank3_order2, rank3_order4, rank3_order6, sym3_u3, sym4_u4,
/// alt3_u3, alt4_u4, root_a2, root_a3, diag_sl2, diag_sl3, diag_sl4,
/// signed_root_s5, icosian.  Parametric forms sym:n, alt:n, root_a:n and
/// diag_sl:n are also accepted.  Throws UnknownBuiltin.
GLattice builtin(std::string_view name);
/// The fixed names above, in catalog order.
const std::vector<std::string>& builtin_names();

struct GroupFile {
  GLattice lattice;
  std::map<std::string, std::string> metadata;
};

/// Parses and validates a group definition:
///   {"name": ..., "rank": n, "generators": [[[..],..],..], "metadata": {..}}
/// Matrix entries are JSON integers or decimal strings.  Throws ParseError
/// (with line and column) or ValidationError (with the field path).
GroupFile parse_group_file(std::string_view text);
std::string write_group_file(const GLattice& lattice, const std::map<std::string, std::string>& metadata = {});

/// "builtin:<name>" or a file path.
GLattice load_lattice(const std::string& target);

}  // namespace multinv
