#pragma once

#include "nilext/extensions.hpp"

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nilext {

/// Literature or hand-derived invariants attached to a catalog entry. Every
/// present field is a hard gate when the entry is loaded.
struct ExpectedInvariants {
  std::optional<std::size_t> dim_der;
  std::optional<std::size_t> dim_center;
  std::optional<std::size_t> dim_derived_algebra;
  std::optional<std::size_t> dim_nilradical;
  std::optional<std::size_t> torus_dim;
  std::optional<std::vector<std::size_t>> lower_central;
  std::optional<std::vector<std::size_t>> derived;
  std::optional<bool> characteristically_nilpotent;

  bool empty() const;
  friend bool operator==(const ExpectedInvariants&, const ExpectedInvariants&) = default;
};

struct CatalogEntry {
  std::string name;
  std::vector<long> params;
  LieAlgebra algebra;
  ExpectedInvariants expected;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

class UnknownEntryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed catalog file; `line` is 0 when the problem is structural
/// rather than positional.
class CatalogParseError : public std::runtime_error {
 public:
  CatalogParseError(std::size_t line, std::string field, const std::string& what);
  std::size_t line;
  std::string field;
};

class JacobiError : public PreconditionError {
 public:
  explicit JacobiError(JacobiViolation triple);
  JacobiViolation triple;
};

class InvariantMismatchError : public PreconditionError {
 public:
  InvariantMismatchError(std::string field, std::string expected, std::string computed);
  std::string field, expected, computed;
};

/// Names: abelian(n), heisenberg(2k+1), filiform(n), favre7, r2, sl2,
/// sl2_natural (sl2 ⋉ Q^2), so2_torus_extension, diagonal_torus_extension.
/// Throws UnknownEntryError or std::invalid_argument for bad parameters.
CatalogEntry get(const std::string& name, std::optional<long> param = std::nullopt);

/// "name" or "name:param".
CatalogEntry get_by_spec(const std::string& spec);

std::vector<std::string> catalog_names();

/// Throws JacobiError / InvariantMismatchError.
void validate_entry(const CatalogEntry& entry);

CatalogEntry load(const std::filesystem::path& path);
CatalogEntry parse_entry(const std::string& text);
void store(const CatalogEntry& entry, const std::filesystem::path& path);
std::string serialize_entry(const CatalogEntry& entry);

/// Directory holding the bundled catalog files. NILEXT_DATA_DIR overrides.
std::filesystem::path data_directory();

/// Matrix list file: {"matrices": [[["p/q", ...], ...], ...]}, each matrix
/// given by rows. All matrices must be square of the same size.
std::vector<Mat> parse_matrices(const std::string& text);
std::vector<Mat> load_matrices(const std::filesystem::path& path);
std::string serialize_matrices(std::span<const Mat> mats);

/// The 8-dimensional nilpotent algebra k ⊕ favre7 with its two solvable
/// extensions and the certificates separating them.
struct SnoblCounterexample {
  LieAlgebra n;
  Mat torus_generator;     // X: identity on k, zero on favre7
  Mat central_derivation;  // d: X1 -> X7 on favre7
  Extension r1;            // span{X} ⋉ N
  Extension r2;            // span{X + d} ⋉ N
  SplittingResult split1, split2;
  std::size_t der1 = 0, der2 = 0;
  Fingerprint fp1, fp2;
  TogoReport togo;
  bool non_isomorphic() const { return fp1 != fp2; }
};

SnoblCounterexample build_snobl_counterexample(Rng& rng);
SnoblCounterexample build_snobl_counterexample();

}  // namespace nilext
