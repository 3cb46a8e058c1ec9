#include "nilext/catalog.hpp"

#include "nilext/operators.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace nilext {

using nlohmann::json;

bool ExpectedInvariants::empty() const { return *this == ExpectedInvariants{}; }

CatalogParseError::CatalogParseError(std::size_t line, std::string field, const std::string& what)
    : std::runtime_error((line ? "line " + std::to_string(line) + ": " : std::string{}) +
                         (field.empty() ? std::string{} : field + ": ") + what),
      line(line),
      field(std::move(field)) {}

JacobiError::JacobiError(JacobiViolation t)
    : PreconditionError("Jacobi identity fails on basis triple (" + std::to_string(t.i + 1) + ", " +
                        std::to_string(t.j + 1) + ", " + std::to_string(t.k + 1) + ")"),
      triple(t) {}

InvariantMismatchError::InvariantMismatchError(std::string field, std::string expected,
                                               std::string computed)
    : PreconditionError(field + ": expected " + expected + ", computed " + computed),
      field(std::move(field)),
      expected(std::move(expected)),
      computed(std::move(computed)) {}

namespace {

std::string list_string(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

template <class T>
void gate(const std::optional<T>& expected, const std::string& field, const T& computed) {
  if (!expected || *expected == computed) return;
  if constexpr (std::is_same_v<T, std::vector<std::size_t>>)
    throw InvariantMismatchError(field, list_string(*expected), list_string(computed));
  else if constexpr (std::is_same_v<T, bool>)
    throw InvariantMismatchError(field, *expected ? "true" : "false", computed ? "true" : "false");
  else
    throw InvariantMismatchError(field, std::to_string(*expected), std::to_string(computed));
}

void bracket(LieAlgebra& l, std::size_t i, std::size_t j, std::size_t k, long c = 1) {
  l.set_bracket(i, j, {{k, Rat(c)}});
}

long require_param(const std::string& name, std::optional<long> p) {
  if (!p) throw std::invalid_argument(name + " needs a parameter, e.g. " + name + ":3");
  return *p;
}

void forbid_param(const std::string& name, std::optional<long> p) {
  if (p) throw std::invalid_argument(name + " takes no parameter");
}

CatalogEntry from_semidirect(const std::string& name, const std::vector<Mat>& mats,
                             const LieAlgebra& module, std::vector<std::string> labels) {
  Extension e = semidirect_sum(LinearLieAlgebra::from_spanning(module.dim(), mats), module);
  CatalogEntry entry{name, {}, e.total, {}};
  entry.algebra.set_labels(std::move(labels));
  entry.expected.dim_nilradical = module.dim();
  return entry;
}

CatalogEntry abelian(long n) {
  if (n < 1) throw std::invalid_argument("abelian(n) needs n >= 1");
  const auto d = static_cast<std::size_t>(n);
  CatalogEntry e{"abelian", {n}, LieAlgebra(d), {}};
  e.expected.dim_der = d * d;
  e.expected.dim_center = d;
  e.expected.lower_central = std::vector<std::size_t>{d, 0};
  e.expected.torus_dim = d;
  return e;
}

CatalogEntry heisenberg(long n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("heisenberg(n) needs odd n >= 3");
  const auto k = static_cast<std::size_t>(n - 1) / 2;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= k; ++i) labels.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= k; ++i) labels.push_back("y" + std::to_string(i));
  labels.push_back("z");
  LieAlgebra l(2 * k + 1, labels);
  for (std::size_t i = 0; i < k; ++i) bracket(l, i, k + i, 2 * k);
  CatalogEntry e{"heisenberg", {n}, l, {}};
  e.expected.dim_center = 1;
  e.expected.lower_central = std::vector<std::size_t>{2 * k + 1, 1, 0};
  e.expected.torus_dim = k + 1;
  if (k == 1) e.expected.dim_der = 6;
  return e;
}

CatalogEntry filiform(long n) {
  if (n < 3) throw std::invalid_argument("filiform(n) needs n >= 3");
  const auto d = static_cast<std::size_t>(n);
  LieAlgebra l(d);
  for (std::size_t i = 1; i + 1 < d; ++i) bracket(l, 0, i, i + 1);
  CatalogEntry e{"filiform", {n}, l, {}};
  std::vector<std::size_t> lc{d};
  for (std::size_t k = d - 2; k > 0; --k) lc.push_back(k);
  lc.push_back(0);
  e.expected.lower_central = lc;
  e.expected.dim_center = 1;
  e.expected.torus_dim = 2;
  return e;
}

CatalogEntry r2() {
  LieAlgebra l(2, {"x", "y"});
  bracket(l, 0, 1, 1);
  CatalogEntry e{"r2", {}, l, {}};
  e.expected.dim_der = 2;
  e.expected.dim_center = 0;
  e.expected.dim_nilradical = 1;
  return e;
}

CatalogEntry sl2() {
  LieAlgebra l(3, {"h", "e", "f"});
  bracket(l, 0, 1, 1, 2);
  bracket(l, 0, 2, 2, -2);
  bracket(l, 1, 2, 0);
  CatalogEntry e{"sl2", {}, l, {}};
  e.expected.dim_der = 3;
  e.expected.dim_center = 0;
  e.expected.derived = std::vector<std::size_t>{3};
  return e;
}

// The counterexample relies on this shape of the presentation.
void favre_gate(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  if (!is_nilpotent(l)) throw InvariantMismatchError("favre7.nilpotent", "true", "false");
  const LinearLieAlgebra der = derivations(l);
  for (const Mat& d : der.basis())
    if (!is_nilpotent(d)) throw InvariantMismatchError("favre7.nilpotent_derivations", "true", "false");
  if (!is_nilpotent(der.abstract())) throw InvariantMismatchError("favre7.characteristically_nilpotent", "true", "false");
  if (center(l) != Subspace(n, std::vector<Vec>{unit_vec(n, n - 1)}))
    throw InvariantMismatchError("favre7.center", "span of the last basis vector", std::to_string(center(l).dim()) + "-dimensional");
  if (derived_algebra(l).contains(unit_vec(n, 0)))
    throw InvariantMismatchError("favre7.first_generator", "outside [N,N]", "inside [N,N]");
}

CatalogEntry favre7() {
  CatalogEntry e = load(data_directory() / "favre7.json");
  e.name = "favre7";
  favre_gate(e.algebra);
  return e;
}

}  // namespace

CatalogEntry get(const std::string& name, std::optional<long> param) {
  CatalogEntry e;
  if (name == "abelian") {
    e = abelian(require_param(name, param));
  } else if (name == "k") {
    forbid_param(name, param);
    e = abelian(1);
  } else if (name == "heisenberg") {
    e = heisenberg(require_param(name, param));
  } else if (name == "filiform") {
    e = filiform(require_param(name, param));
  } else if (name == "favre7") {
    forbid_param(name, param);
    return favre7();  // validated by load
  } else if (name == "r2") {
    forbid_param(name, param);
    e = r2();
  } else if (name == "sl2") {
    forbid_param(name, param);
    e = sl2();
  } else if (name == "sl2_natural") {
    forbid_param(name, param);
    e = from_semidirect(name,
                        {Mat{{1, 0}, {0, -1}}, Mat{{0, 1}, {0, 0}}, Mat{{0, 0}, {1, 0}}},
                        LieAlgebra(2), {"h", "e", "f", "v1", "v2"});
  } else if (name == "so2_torus_extension") {
    forbid_param(name, param);
    e = from_semidirect(name, {Mat{{0, 1}, {-1, 0}}, Mat::identity(2)}, LieAlgebra(2),
                        {"c", "j", "v1", "v2"});
  } else if (name == "diagonal_torus_extension") {
    forbid_param(name, param);
    e = from_semidirect(name, {Mat{{1, 0}, {0, 0}}, Mat{{0, 0}, {0, 1}}}, LieAlgebra(2),
                        {"t1", "t2", "v1", "v2"});
  } else {
    throw UnknownEntryError("unknown catalog entry '" + name + "'");
  }
  validate_entry(e);
  return e;
}

CatalogEntry get_by_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) return get(spec);
  const std::string arg = spec.substr(colon + 1);
  std::size_t used = 0;
  long p = 0;
  try {
    p = std::stol(arg, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != arg.size()) throw std::invalid_argument("bad parameter in '" + spec + "'");
  return get(spec.substr(0, colon), p);
}

std::vector<std::string> catalog_names() {
  return {"abelian:<n>", "k", "heisenberg:<2k+1>", "filiform:<n>", "favre7", "r2", "sl2",
          "sl2_natural", "so2_torus_extension", "diagonal_torus_extension"};
}

void validate_entry(const CatalogEntry& entry) {
  const LieAlgebra& l = entry.algebra;
  if (auto rep = verify_structure(l); !rep.ok()) throw JacobiError(rep.violations.front());
  const ExpectedInvariants& x = entry.expected;
  Rng rng(kDefaultSeed);
  std::optional<LinearLieAlgebra> der;
  auto derivs = [&]() -> const LinearLieAlgebra& {
    if (!der) der = derivations(l);
    return *der;
  };
  if (x.lower_central) gate(x.lower_central, "lower_central", series_dims(l, SeriesKind::LowerCentral));
  if (x.derived) gate(x.derived, "derived", series_dims(l, SeriesKind::Derived));
  if (x.dim_center) gate(x.dim_center, "dim_center", center(l).dim());
  if (x.dim_derived_algebra) gate(x.dim_derived_algebra, "dim_derived_algebra", derived_algebra(l).dim());
  if (x.dim_nilradical) gate(x.dim_nilradical, "dim_nilradical", nilradical(l, rng).dim());
  if (x.dim_der) gate(x.dim_der, "dim_der", derivs().dim());
  if (x.characteristically_nilpotent) {
    if (!is_nilpotent(l)) throw InvariantMismatchError("characteristically_nilpotent", "nilpotent input", "non-nilpotent");
    gate(x.characteristically_nilpotent, "characteristically_nilpotent", is_nilpotent(derivs().abstract()));
  }
  if (x.torus_dim) gate(x.torus_dim, "torus_dim", maximal_torus(derivs(), rng).dim());
}

// ---------------------------------------------------------------------------
// serialization

namespace {

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::size_t as_count(const json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw CatalogParseError(0, field, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Rat as_rat(const json& j, const std::string& field) {
  if (!j.is_string()) throw CatalogParseError(0, field, "expected a rational string \"p/q\"");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw CatalogParseError(0, field, e.what());
  }
}

std::vector<std::size_t> as_count_list(const json& j, const std::string& field) {
  if (!j.is_array()) throw CatalogParseError(0, field, "expected an array");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_count(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

json expected_to_json(const ExpectedInvariants& x) {
  json j = json::object();
  if (x.dim_der) j["dim_der"] = *x.dim_der;
  if (x.dim_center) j["dim_center"] = *x.dim_center;
  if (x.dim_derived_algebra) j["dim_derived_algebra"] = *x.dim_derived_algebra;
  if (x.dim_nilradical) j["dim_nilradical"] = *x.dim_nilradical;
  if (x.torus_dim) j["torus_dim"] = *x.torus_dim;
  if (x.lower_central) j["lower_central"] = *x.lower_central;
  if (x.derived) j["derived"] = *x.derived;
  if (x.characteristically_nilpotent) j["characteristically_nilpotent"] = *x.characteristically_nilpotent;
  return j;
}

ExpectedInvariants expected_from_json(const json& j) {
  ExpectedInvariants x;
  if (!j.is_object()) throw CatalogParseError(0, "expected", "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string f = "expected." + it.key();
    const json& v = it.value();
    if (it.key() == "dim_der") x.dim_der = as_count(v, f);
    else if (it.key() == "dim_center") x.dim_center = as_count(v, f);
    else if (it.key() == "dim_derived_algebra") x.dim_derived_algebra = as_count(v, f);
    else if (it.key() == "dim_nilradical") x.dim_nilradical = as_count(v, f);
    else if (it.key() == "torus_dim") x.torus_dim = as_count(v, f);
    else if (it.key() == "lower_central") x.lower_central = as_count_list(v, f);
    else if (it.key() == "derived") x.derived = as_count_list(v, f);
    else if (it.key() == "characteristically_nilpotent") {
      if (!v.is_boolean()) throw CatalogParseError(0, f, "expected a boolean");
      x.characteristically_nilpotent = v.get<bool>();
    } else {
      throw CatalogParseError(0, f, "unknown invariant");
    }
  }
  return x;
}

}  // namespace

std::string serialize_entry(const CatalogEntry& entry) {
  const LieAlgebra& l = entry.algebra;
  json j;
  j["name"] = entry.name;
  if (!entry.params.empty()) j["params"] = entry.params;
  j["dim"] = l.dim();
  j["basis"] = l.labels();
  json brackets = json::array();
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t k = i + 1; k < l.dim(); ++k) {
      const auto& terms = l.stored_bracket(i, k);
      if (terms.empty()) continue;
      json tj = json::array();
      for (const auto& t : terms) tj.push_back(json::array({t.index + 1, to_fraction_string(t.coeff)}));
      brackets.push_back(json::array({i + 1, k + 1, tj}));
    }
  j["brackets"] = brackets;
  j["expected"] = expected_to_json(entry.expected);
  return j.dump(2) + "\n";
}

CatalogEntry parse_entry(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CatalogParseError(line_of(text, e.byte), "", "malformed JSON");
  }
  if (!j.is_object()) throw CatalogParseError(0, "", "top level must be an object");
  for (const char* key : {"name", "dim", "basis", "brackets"})
    if (!j.contains(key)) throw CatalogParseError(0, key, "missing field");
  if (!j["name"].is_string()) throw CatalogParseError(0, "name", "expected a string");

  CatalogEntry entry;
  entry.name = j["name"].get<std::string>();
  if (j.contains("params")) {
    if (!j["params"].is_array()) throw CatalogParseError(0, "params", "expected an array");
    for (const auto& p : j["params"]) {
      if (!p.is_number_integer()) throw CatalogParseError(0, "params", "expected integers");
      entry.params.push_back(p.get<long>());
    }
  }
  const std::size_t dim = as_count(j["dim"], "dim");
  const json& basis = j["basis"];
  if (!basis.is_array() || basis.size() != dim)
    throw CatalogParseError(0, "basis", "expected " + std::to_string(dim) + " labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!basis[i].is_string()) throw CatalogParseError(0, "basis[" + std::to_string(i) + "]", "expected a string");
    labels.push_back(basis[i].get<std::string>());
  }
  LieAlgebra l(dim, labels);

  const json& br = j["brackets"];
  if (!br.is_array()) throw CatalogParseError(0, "brackets", "expected an array");
  for (std::size_t b = 0; b < br.size(); ++b) {
    const std::string f = "brackets[" + std::to_string(b) + "]";
    const json& e = br[b];
    if (!e.is_array() || e.size() != 3 || !e[2].is_array())
      throw CatalogParseError(0, f, "expected [i, j, [[k, \"p/q\"], ...]]");
    const std::size_t i = as_count(e[0], f + "[0]"), k = as_count(e[1], f + "[1]");
    if (i < 1 || k > dim || i >= k) throw CatalogParseError(0, f, "need 1 <= i < j <= dim");
    if (!l.stored_bracket(i - 1, k - 1).empty()) throw CatalogParseError(0, f, "duplicate bracket");
    std::vector<Term> terms;
    for (std::size_t t = 0; t < e[2].size(); ++t) {
      const std::string ft = f + "[2][" + std::to_string(t) + "]";
      const json& term = e[2][t];
      if (!term.is_array() || term.size() != 2) throw CatalogParseError(0, ft, "expected [k, \"p/q\"]");
      const std::size_t idx = as_count(term[0], ft + "[0]");
      if (idx < 1 || idx > dim) throw CatalogParseError(0, ft + "[0]", "index out of range");
      terms.push_back({idx - 1, as_rat(term[1], ft + "[1]")});
    }
    l.set_bracket(i - 1, k - 1, std::move(terms));
  }
  entry.algebra = std::move(l);
  if (j.contains("expected")) entry.expected = expected_from_json(j["expected"]);
  validate_entry(entry);
  return entry;
}

CatalogEntry load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogParseError(0, "", "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_entry(ss.str());
}

void store(const CatalogEntry& entry, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_entry(entry);
}

std::vector<Mat> parse_matrices(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CatalogParseError(line_of(text, e.byte), "", "malformed JSON");
  }
  if (!j.is_object() || !j.contains("matrices") || !j["matrices"].is_array())
    throw CatalogParseError(0, "matrices", "expected an array of matrices");
  std::vector<Mat> out;
  std::size_t size = 0;
  for (std::size_t m = 0; m < j["matrices"].size(); ++m) {
    const std::string f = "matrices[" + std::to_string(m) + "]";
    const json& rows = j["matrices"][m];
    if (!rows.is_array() || rows.empty()) throw CatalogParseError(0, f, "expected a non-empty array of rows");
    if (m == 0) size = rows.size();
    if (rows.size() != size) throw CatalogParseError(0, f, "matrix sizes differ");
    Mat a(size, size);
    for (std::size_t r = 0; r < size; ++r) {
      const std::string fr = f + "[" + std::to_string(r) + "]";
      if (!rows[r].is_array() || rows[r].size() != size) throw CatalogParseError(0, fr, "row length must be " + std::to_string(size));
      for (std::size_t c = 0; c < size; ++c) a(r, c) = as_rat(rows[r][c], fr + "[" + std::to_string(c) + "]");
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<Mat> load_matrices(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogParseError(0, "", "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_matrices(ss.str());
}

std::string serialize_matrices(std::span<const Mat> mats) {
  json arr = json::array();
  for (const Mat& a : mats) {
    json rows = json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(to_fraction_string(a(r, c)));
      rows.push_back(row);
    }
    arr.push_back(rows);
  }
  return json{{"matrices", arr}}.dump(2) + "\n";
}

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("NILEXT_DATA_DIR"); env && *env) return env;
  std::filesystem::path src = NILEXT_SOURCE_DATA_DIR;
  if (std::filesystem::exists(src / "favre7.json")) return src;
  return NILEXT_INSTALLED_DATA_DIR;
}

// ---------------------------------------------------------------------------

SnoblCounterexample build_snobl_counterexample(Rng& rng) {
  SnoblCounterexample ce;
  const LieAlgebra favre = get("favre7").algebra;
  LieAlgebra k(1, {"z"});
  ce.n = direct_sum(k, favre);
  const std::size_t dim = ce.n.dim();

  ce.torus_generator = Mat(dim, dim);
  ce.torus_generator(0, 0) = 1;
  ce.central_derivation = Mat(dim, dim);
  ce.central_derivation(dim - 1, 1) = 1;  // X1 -> X7

  const std::vector<Mat> g1{ce.torus_generator};
  const std::vector<Mat> g2{ce.torus_generator + ce.central_derivation};
  ce.r1 = extend_by_derivations(ce.n, g1, rng);
  ce.r2 = extend_by_derivations(ce.n, g2, rng);
  ce.split1 = malcev_split_solvable(ce.r1.total, rng);
  ce.split2 = malcev_split_solvable(ce.r2.total, rng);
  ce.der1 = derivations(ce.r1.total).dim();
  ce.der2 = derivations(ce.r2.total).dim();
  ce.fp1 = fingerprint(ce.r1.total, rng);
  ce.fp2 = fingerprint(ce.r2.total, rng);
  ce.togo = togo_dim_check(k, favre);
  return ce;
}

SnoblCounterexample build_snobl_counterexample() {
  Rng rng(kDefaultSeed);
  return build_snobl_counterexample(rng);
}

}  // namespace nilext
