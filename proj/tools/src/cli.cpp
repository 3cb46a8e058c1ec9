#include "nilext_cli/cli.hpp"

#include "nilext/catalog.hpp"
#include "nilext/extensions.hpp"
#include "nilext/operators.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace nilext::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string identity;
  CatalogEntry entry;
};

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Catalog names never contain a path separator, so try the catalog first.
Source resolve(const std::string& src) {
  if (src.find('/') == std::string::npos) {
    try {
      return {"catalog:" + src, get_by_spec(src)};
    } catch (const UnknownEntryError&) {
      if (!std::filesystem::exists(src)) throw InputError("unknown catalog entry or file '" + src + "'");
    }
  }
  const std::string text = read_file(src);
  return {"file:fnv1a64:" + fnv1a(text), parse_entry(text)};
}

std::string term_string(const Rat& c, const std::string& label, bool first) {
  std::string s;
  Rat a = abs(c);
  if (c < 0) s = first ? "-" : " - ";
  else if (!first) s = " + ";
  if (a != 1) s += to_display_string(a) + "*";
  return s + label;
}

std::string vector_string(const LieAlgebra& lie, const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) {
      s += term_string(v[i], lie.labels()[i], s.empty());
    }
  return s.empty() ? "0" : s;
}

ordered_json subspace_json(const LieAlgebra& lie, const Subspace& s) {
  ordered_json basis = ordered_json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) basis.push_back(vector_string(lie, s.basis_vector(i)));
  return {{"dim", s.dim()}, {"basis", basis}};
}

ordered_json matrix_json(const Mat& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_fraction_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

ordered_json fingerprint_json(const Fingerprint& f) {
  ordered_json j{{"dim", f.dim},
                 {"lower_central", f.lower_central},
                 {"derived", f.derived},
                 {"center", f.center},
                 {"derived_algebra", f.derived_algebra},
                 {"nilradical", f.nilradical},
                 {"derivations", f.derivations}};
  j["malcev_splitting"] = f.malcev_splitting ? ordered_json(*f.malcev_splitting) : ordered_json(nullptr);
  return j;
}

ordered_json algebra_json(const LieAlgebra& lie) {
  CatalogEntry e{"result", {}, lie, {}};
  return ordered_json::parse(serialize_entry(e));
}

struct Report {
  std::string command;
  std::vector<std::string> inputs;
  ordered_json values = ordered_json::object();
  ordered_json certificates = ordered_json::object();
  std::string text_body;  // extra human-readable detail, text format only

  bool all_certified() const {
    for (const auto& [k, v] : certificates.items())
      if (!v.get<bool>()) return false;
    return true;
  }
};

std::string scalar_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_text(std::ostream& os, const ordered_json& j, const std::string& indent) {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      os << indent << k << ":\n";
      render_text(os, v, indent + "  ");
    } else if (v.is_array() && !v.empty() && v.front().is_string()) {
      os << indent << k << ":\n";
      for (const auto& x : v) os << indent << "  " << x.get<std::string>() << "\n";
    } else {
      os << indent << k << ": " << scalar_text(v) << "\n";
    }
  }
}

std::string render(const Report& r, const std::string& format, double seconds) {
  std::ostringstream os;
  if (format == "json") {
    ordered_json j{{"command", r.command},
                   {"inputs", r.inputs},
                   {"values", r.values},
                   {"certificates", r.certificates},
                   {"ok", r.all_certified()}};
    os << j.dump(2) << "\n";
    return os.str();
  }
  os << "command: " << r.command << "\n";
  for (const auto& in : r.inputs) os << "input: " << in << "\n";
  render_text(os, r.values, "");
  if (!r.text_body.empty()) os << r.text_body;
  if (!r.certificates.empty()) {
    os << "certificates:\n";
    for (const auto& [k, v] : r.certificates.items())
      os << "  " << (v.get<bool>() ? "[ok]   " : "[FAIL] ") << k << "\n";
  }
  os << "ok: " << (r.all_certified() ? "true" : "false") << "\n";
  os << "time: " << std::fixed << std::setprecision(3) << seconds << " s\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// commands

Report cmd_info(const Source& s) {
  const LieAlgebra& l = s.entry.algebra;
  Report r;
  r.values["dim"] = l.dim();
  r.values["basis"] = l.labels();
  r.values["lower_central"] = series_dims(l, SeriesKind::LowerCentral);
  r.values["derived"] = series_dims(l, SeriesKind::Derived);
  r.values["center"] = center(l).dim();
  r.values["derived_algebra"] = derived_algebra(l).dim();
  r.values["nilpotent"] = is_nilpotent(l);
  r.values["solvable"] = is_solvable(l);
  std::string brackets = describe(l);
  for (std::size_t at = brackets.find(", "); at != std::string::npos; at = brackets.find(", ", at))
    brackets.replace(at, 2, "\n  ");
  r.text_body = "brackets:\n  " + brackets + "\n";
  r.certificates["jacobi"] = verify_structure(l).ok();
  return r;
}

Report cmd_der(const Source& s) {
  const LieAlgebra& l = s.entry.algebra;
  const LinearLieAlgebra der = derivations(l);
  Report r;
  r.values["dim"] = der.dim();
  r.values["inner_dim"] = inner_derivations(l).dim();
  if (is_nilpotent(l)) r.values["characteristically_nilpotent"] = is_characteristically_nilpotent(l);
  ordered_json basis = ordered_json::array();
  for (const Mat& d : der.basis()) basis.push_back(matrix_json(d));
  r.values["basis_matrices"] = basis;
  bool leibniz = true;
  for (const Mat& d : der.basis()) leibniz = leibniz && is_derivation(l, d);
  r.certificates["basis_are_derivations"] = leibniz;
  return r;
}

Report cmd_nilradical(const Source& s, Rng& rng) {
  const LieAlgebra& l = s.entry.algebra;
  const Subspace nil = nilradical(l, rng);
  Report r;
  r.values["nilradical"] = subspace_json(l, nil);
  r.certificates["ideal"] = is_ideal(l, nil);
  r.certificates["nilpotent"] = is_nilpotent(subalgebra(l, nil));
  return r;
}

Report cmd_cartan(const Source& s, Rng& rng) {
  const LieAlgebra& l = s.entry.algebra;
  const Subspace h = cartan_subalgebra(l, rng);
  Report r;
  r.values["cartan"] = subspace_json(l, h);
  r.certificates["nilpotent"] = is_nilpotent(subalgebra(l, h));
  r.certificates["self_normalizing"] = normalizer(l, h) == h;
  return r;
}

Report cmd_torus(const Source& s, Rng& rng) {
  const LieAlgebra& l = s.entry.algebra;
  const LinearLieAlgebra t = maximal_torus(derivations(l), rng);
  Report r;
  r.values["torus_dim"] = t.dim();
  ordered_json basis = ordered_json::array();
  bool semisimple = true, derivs = true;
  for (const Mat& m : t.basis()) {
    basis.push_back(matrix_json(m));
    semisimple = semisimple && is_semisimple(m);
    derivs = derivs && is_derivation(l, m);
  }
  r.values["basis_matrices"] = basis;
  r.certificates["abelian"] = is_abelian(t.abstract());
  r.certificates["semisimple"] = semisimple;
  r.certificates["derivations"] = derivs;
  return r;
}

Report extension_report(const Extension& ext, Rng& rng) {
  Report r;
  r.values["dim"] = ext.total.dim();
  r.values["method"] = ext.provenance.method;
  r.values["nilideal_dim"] = ext.nilideal.dim();
  r.values["complement_dim"] = ext.complement.dim();
  r.values["algebra"] = algebra_json(ext.total);
  r.certificates["validated"] = ext.validated;
  r.certificates["nilradical_matches"] = nilradical(ext.total, rng) == ext.nilideal;
  return r;
}

Report cmd_split(const Source& s, Rng& rng) {
  const LieAlgebra& l = s.entry.algebra;
  const SplittingResult sp = malcev_split_solvable(l, rng);
  Report r;
  r.values["dim"] = l.dim();
  r.values["splitting_dim"] = sp.algebra.dim();
  r.values["added_dim"] = sp.added_dim;
  r.values["algebra"] = algebra_json(sp.algebra);
  r.certificates["image_is_ideal"] = is_ideal(sp.algebra, column_space(sp.embedding));
  r.certificates["idempotent"] = malcev_split_solvable(sp.algebra, rng).added_dim == 0;
  return r;
}

Report cmd_fingerprint(const Source& s, Rng& rng) {
  Report r;
  r.values["fingerprint"] = fingerprint_json(fingerprint(s.entry.algebra, rng));
  return r;
}

Report cmd_rank_bound(const Source& s, Rng& rng) {
  const Extension ext = extension_of_nilradical(s.entry.algebra, rng);
  const RankBoundReport rb = verify_rank_bound(ext, rng);
  Report r;
  r.values["toric_rank"] = rb.toric_rank;
  r.values["generators"] = rb.generators;
  r.values["quotient_dim"] = rb.quotient_dim;
  r.values["solvable"] = rb.solvable;
  r.certificates["rank_bound"] = rb.holds;
  if (rb.solvable) r.certificates["quotient_bound"] = rb.snobl_holds;
  return r;
}

Report cmd_togo(const Source& a, const Source& b) {
  const TogoReport t = togo_dim_check(a.entry.algebra, b.entry.algebra);
  Report r;
  r.values["der_sum"] = t.der_sum;
  r.values["der_a"] = t.der_a;
  r.values["der_b"] = t.der_b;
  r.values["hom_a_to_center_b"] = t.hom_a_to_center_b;
  r.values["hom_b_to_center_a"] = t.hom_b_to_center_a;
  r.values["predicted"] = t.predicted();
  r.certificates["decomposition"] = t.holds();
  return r;
}

Report cmd_snobl(Rng& rng) {
  const SnoblCounterexample ce = build_snobl_counterexample(rng);
  Report r;
  r.values["dim_N"] = ce.n.dim();
  r.values["dim_R"] = {ce.r1.total.dim(), ce.r2.total.dim()};
  r.values["dim_M"] = {ce.split1.algebra.dim(), ce.split2.algebra.dim()};
  r.values["dim_Der"] = {ce.der1, ce.der2};
  r.values["fingerprint_R1"] = fingerprint_json(ce.fp1);
  r.values["fingerprint_R2"] = fingerprint_json(ce.fp2);
  r.values["non_isomorphic"] = ce.non_isomorphic();
  r.certificates["dims_equal_9"] = ce.r1.total.dim() == 9 && ce.r2.total.dim() == 9;
  r.certificates["splittings_9_10"] = ce.split1.algebra.dim() == 9 && ce.split2.algebra.dim() == 10;
  r.certificates["der_dims_13_12"] = ce.der1 == 13 && ce.der2 == 12;
  r.certificates["der_dims_differ"] = ce.der1 != ce.der2;
  r.certificates["fingerprints_differ"] = ce.non_isomorphic();
  r.certificates["togo"] = ce.togo.holds();
  return r;
}

std::string quoted(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with solvable extensions of nilpotent Lie algebras", "nilext"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  std::string output;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "Seed for randomized searches");
  app.add_option("--output", output, "Write the report to a file");

  std::string src, src_b, by_file;
  bool standard = false;
  auto* info = app.add_subcommand("info", "Basic invariants and brackets");
  auto* der = app.add_subcommand("der", "Derivation algebra");
  auto* nil = app.add_subcommand("nilradical", "Largest nilpotent ideal");
  auto* cartan = app.add_subcommand("cartan", "Cartan subalgebra");
  auto* torus = app.add_subcommand("torus", "Maximal torus of Der");
  auto* split = app.add_subcommand("split", "Malcev splitting of a solvable algebra");
  auto* fp = app.add_subcommand("fingerprint", "Isomorphism invariants");
  for (auto* sub : {info, der, nil, cartan, torus, split, fp})
    sub->add_option("src", src, "Catalog name (name or name:param) or catalog file")->required();

  auto* extend = app.add_subcommand("extend", "Solvable extension of a nilpotent algebra");
  extend->add_flag("--standard", standard, "Adjoin a maximal torus of Der");
  extend->add_option("--by", by_file, "Matrix file with derivations to adjoin");
  extend->add_option("src", src, "Nilpotent algebra")->required();

  auto* verify = app.add_subcommand("verify", "Check a theorem on an input");
  verify->require_subcommand(1);
  auto* rank = verify->add_subcommand("rank-bound", "Toric rank versus number of generators");
  rank->add_option("src", src, "Algebra")->required();
  auto* togo = verify->add_subcommand("togo", "Derivations of a direct sum");
  togo->add_option("srcA", src, "First summand")->required();
  togo->add_option("srcB", src_b, "Second summand")->required();

  auto* demo = app.add_subcommand("demo", "Worked examples");
  demo->require_subcommand(1);
  auto* snobl = demo->add_subcommand("snobl", "Two non-isomorphic maximal extensions of k + favre7");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  Rng rng(seed);
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.command = quoted(args);
  try {
    if (extend->parsed() && standard == !by_file.empty()) {
      err << "error: extend needs exactly one of --standard and --by <file>\n\n" << extend->help();
      return kInputError;
    }
    if (demo->parsed()) {
      (void)snobl;
      r = cmd_snobl(rng);
    } else if (togo->parsed()) {
      Source a = resolve(src), b = resolve(src_b);
      r = cmd_togo(a, b);
      r.inputs = {a.identity, b.identity};
    } else {
      Source s = resolve(src);
      if (info->parsed()) r = cmd_info(s);
      else if (der->parsed()) r = cmd_der(s);
      else if (nil->parsed()) r = cmd_nilradical(s, rng);
      else if (cartan->parsed()) r = cmd_cartan(s, rng);
      else if (torus->parsed()) r = cmd_torus(s, rng);
      else if (split->parsed()) r = cmd_split(s, rng);
      else if (fp->parsed()) r = cmd_fingerprint(s, rng);
      else if (rank->parsed()) r = cmd_rank_bound(s, rng);
      else if (standard) r = extension_report(standard_solvable_extension(s.entry.algebra, rng), rng);
      else {
        std::vector<Mat> gens;
        try {
          gens = load_matrices(by_file);
        } catch (const CatalogParseError& e) {
          throw InputError(by_file + ": " + e.what());
        }
        r = extension_report(extend_by_derivations(s.entry.algebra, gens, rng), rng);
      }
      r.inputs = {s.identity};
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const CatalogParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    // precondition failures on valid input (e.g. a non-derivation in --by)
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  r.command = quoted(args);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string text = render(r, format, seconds);
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output);
    if (!f) {
      err << "error: cannot write " << output << "\n";
      return kInputError;
    }
    f << text;
  }
  return r.all_certified() ? kOk : kCertificateFailed;
}

}  // namespace nilext::cli
