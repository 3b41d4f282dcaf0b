#include "multinv/cli.hpp"

#include <algorithm>
#include <filesystem>

#include <CLI11.hpp>

#include "multinv/catalog.hpp"
#include "multinv/decomposition.hpp"
#include "multinv/errors.hpp"
#include "multinv/report.hpp"

namespace multinv {

namespace {

struct Options {
  std::string format = "json";
  std::size_t cap = kDefaultCap;
  bool seed_free = false;
  std::string target;
  int copies = 0;
  std::string preset;
  int rank = 0;
  std::int64_t bound = 0;
};

void emit(std::ostream& out, const Options& o, const Json& j, const std::string& text) {
  if (o.format == "json") out << j.dump(2) << "\n";
  else out << text;
}

int analyze(const Options& o, std::ostream& out) {
  const auto report = check_necessary_conditions(load_lattice(o.target), o.cap);
  emit(out, o, to_json(report), to_text(report));
  return kExitOk;
}

int copies(const Options& o, std::ostream& out) {
  const auto report = copies_verdict(load_lattice(o.target), o.copies, o.cap);
  emit(out, o, to_json(report), to_text(report));
  return kExitOk;
}

int witness(const Options& o, std::ostream& out) {
  const GLattice lattice = load_lattice(o.target);
  const auto catalog = enumerate_isotropy_groups(close(lattice, o.cap));
  emit(out, o, to_json(catalog, lattice.name), to_text(catalog, lattice.name));
  return kExitOk;
}

int batch(const Options& o, std::ostream& out) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(o.target, ec)) throw ValidationError(o.target + ": not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(o.target))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::size_t obstructed = 0, inconclusive = 0, trivially_cm = 0, errors = 0;
  Json reports = Json::array();
  std::string text;
  for (const auto& f : files) {
    const std::string file = f.filename().string();
    text += "== " + file + " ==\n";
    try {
      const auto r = check_necessary_conditions(load_lattice(f.string()), o.cap);
      switch (r.verdict) {
        case Verdict::kObstructed:
          ++obstructed;
          break;
        case Verdict::kInconclusive:
          ++inconclusive;
          break;
        case Verdict::kTriviallyCM:
          ++trivially_cm;
          break;
      }
      Json j = to_json(r);
      j["file"] = file;
      reports.push_back(std::move(j));
      text += to_text(r);
    } catch (const TheoremViolation&) {
      throw;
    } catch (const Error& e) {
      ++errors;
      reports.push_back({{"file", file}, {"error", e.what()}});
      text += "error: " + std::string(e.what()) + "\n";
    }
  }
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "batch";
  j["reports"] = std::move(reports);
  j["summary"] = {{"obstructed", obstructed},
                  {"inconclusive", inconclusive},
                  {"trivially-cm", trivially_cm},
                  {"errors", errors}};
  text += "summary: obstructed " + std::to_string(obstructed) + ", inconclusive " + std::to_string(inconclusive) +
          ", trivially-cm " + std::to_string(trivially_cm) + ", errors " + std::to_string(errors) + "\n";
  emit(out, o, j, text);
  return kExitOk;
}

int orbit_verify(const Options& o, std::ostream& out) {
  const Index n = o.rank;
  if (n < 1) throw ValidationError("--rank must be positive");
  const std::string name = o.preset + " rank " + std::to_string(n) + " bound " + std::to_string(o.bound);
  auto unit = [n](Index i) {
    Exponent e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return e;
  };
  if (o.preset == "diag_sl" || o.preset == "diag_sl_without_eta") {
    if (n < 2) throw ValidationError("--rank must be at least 2 for " + o.preset);
    const GroupPtr g = close(diag_sl(static_cast<int>(n)), o.cap);
    std::vector<LaurentElement> xi;
    for (Index i = 0; i < n; ++i) xi.push_back(orbit_sum(*g, unit(i)));
    std::vector<LaurentElement> module{LaurentElement::constant(n, 1)};
    if (o.preset == "diag_sl") module.push_back(orbit_sum(*g, Exponent(static_cast<std::size_t>(n), 1)));
    const auto r = verify_free_decomposition(g, xi, module, o.bound);
    emit(out, o, to_json(r, name), to_text(r, name));
    return kExitOk;
  }
  if (o.preset == "laurent") {
    const GroupPtr g = close(GLattice{n, {}, "trivial"}, o.cap);
    std::vector<LaurentElement> gens;
    for (Index i = 0; i < n; ++i) {
      gens.push_back(LaurentElement::monomial(unit(i)));
      Exponent minus(static_cast<std::size_t>(n), 0);
      minus[static_cast<std::size_t>(i)] = -1;
      gens.push_back(LaurentElement::monomial(minus));
    }
    const auto r = verify_free_decomposition(g, gens, {LaurentElement::constant(n, 1)}, o.bound);
    emit(out, o, to_json(r, name), to_text(r, name));
    return kExitOk;
  }
  if (o.preset == "alt") {
    if (n < 2) throw ValidationError("--rank must be at least 2 for alt");
    const GroupPtr g = close(alt_lattice(static_cast<int>(n)), o.cap);
    std::vector<LaurentElement> s;
    for (Index k = 1; k <= n; ++k) s.push_back(elementary_symmetric(n, k));
    const std::vector<LaurentElement> module{LaurentElement::constant(n, 1), alternating_d(n)};
    const auto slices = graded_slices(g, s, module, static_cast<int>(o.bound));
    emit(out, o, to_json(slices, name), to_text(slices, name));
    return kExitOk;
  }
  throw ValidationError("unknown preset '" + o.preset + "' (expected diag_sl, diag_sl_without_eta, alt, laurent)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Necessary-condition screening for Cohen-Macaulay multiplicative invariants", "multinv"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cap", o.cap, "Maximal group order")->check(CLI::PositiveNumber);
  app.add_flag("--seed-free", o.seed_free, "Accepted for compatibility; every output is deterministic");

  auto* analyze_cmd = app.add_subcommand("analyze", "Check the necessary conditions for one lattice");
  analyze_cmd->add_option("target", o.target, "Group file or builtin:<name>")->required();
  auto* batch_cmd = app.add_subcommand("batch", "Analyze every *.json file of a directory");
  batch_cmd->add_option("dir", o.target, "Directory")->required();
  auto* copies_cmd = app.add_subcommand("copies", "Analyze the direct sum of r copies");
  copies_cmd->add_option("target", o.target, "Group file or builtin:<name>")->required();
  copies_cmd->add_option("--r", o.copies, "Number of copies")->required()->check(CLI::Range(1, 64));
  auto* witness_cmd = app.add_subcommand("witness", "List isotropy classes with witness vectors");
  witness_cmd->add_option("target", o.target, "Group file or builtin:<name>")->required();
  auto* orbit_cmd = app.add_subcommand("orbit", "Invariant algebra checks");
  orbit_cmd->require_subcommand(1);
  auto* verify_cmd = orbit_cmd->add_subcommand("verify", "Verify a decomposition preset");
  verify_cmd->add_option("preset", o.preset, "diag_sl | diag_sl_without_eta | alt | laurent")->required();
  verify_cmd->add_option("--rank", o.rank, "Lattice rank")->required()->check(CLI::Range(1, 8));
  verify_cmd->add_option("--bound", o.bound, "Sup-norm bound (maximal degree for alt)")
      ->required()
      ->check(CLI::Range(0, 64));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*analyze_cmd) return analyze(o, out);
    if (*batch_cmd) return batch(o, out);
    if (*copies_cmd) return copies(o, out);
    if (*witness_cmd) return witness(o, out);
    if (*verify_cmd) return orbit_verify(o, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const TheoremViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  err << "error: no command\n";
  return kExitInput;
}

}  // namespace multinv
