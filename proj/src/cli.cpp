/*
 * Copyright 2026 The nilpac Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "nilpac/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "nilpac/analysis.hpp"
#include "nilpac/automorphisms.hpp"
#include "nilpac/catalog.hpp"
#include "nilpac/group.hpp"
#include "nilpac/io.hpp"
#include "nilpac/pac.hpp"

namespace nilpac {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::uint64_t seed = 0;
  int trials = 100;
  long bound = 10;
  std::string format = "text";
  std::string output;
  bool json() const { return format == "json"; }
};

std::string basis_name(int idx, int q) {
  return idx < q ? "X" + std::to_string(idx + 1) : "Z" + std::to_string(idx - q + 1);
}

/// "2*X1 - X3 + (t + 1)*Z2"
template <class F>
std::string element_text(const Vec<F>& v, int q) {
  std::string s;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (detail::zero(v(k))) continue;
    std::string c = FieldTraits<F>::format(v(k));
    bool neg = false;
    if (c.find(' ') != std::string::npos) {
      c = "(" + c + ")";
    } else if (c[0] == '-') {
      neg = true;
      c.erase(0, 1);
    }
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    if (c != "1") s += c + "*";
    s += basis_name(static_cast<int>(k), q);
  }
  return s.empty() ? "0" : s;
}

template <class F>
Json matrix_json(const Mat<F>& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(FieldTraits<F>::format(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
std::string matrix_text(const Mat<F>& m, const std::string& indent) {
  std::string s;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    s += indent + "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + FieldTraits<F>::format(m(i, j));
    s += "]\n";
  }
  return s;
}

template <class F>
std::string bracket_list(const TwoStepAlgebra<F>& a) {
  std::string s;
  for (int i = 0; i < a.q(); ++i)
    for (int j = i + 1; j < a.q(); ++j) {
      Vec<F> e = Vec<F>::Zero(a.dim());
      e.tail(a.p()) = a.bracket_basis(i, j);
      if (is_zero(e)) continue;
      if (!s.empty()) s += ", ";
      s += "[" + basis_name(i, a.q()) + ", " + basis_name(j, a.q()) + "] = " + element_text(e, a.q());
    }
  return s.empty() ? "none (abelian)" : s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AnyAlgebra load_any(const std::string& input) {
  constexpr std::string_view prefix = "catalog:";
  if (input.rfind(prefix, 0) == 0) return build_catalog(input.substr(prefix.size()));
  return read_algebra_json(read_file(input));
}

QAlgebra load(const std::string& input) {
  auto any = load_any(input);
  if (auto* q = std::get_if<QAlgebra>(&any)) return std::move(*q);
  throw ParseError("'" + input + "': this command needs an algebra over Q");
}

Json header(const std::string& command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---- commands -------------------------------------------------------------

std::string cmd_catalog(const Options& o, const std::string& name) {
  if (!name.empty()) return write_algebra_json(build_catalog(name));
  if (o.json()) {
    Json j = header("catalog");
    Json entries = Json::array();
    for (const auto& n : catalog_names()) {
      const QAlgebra a = build_catalog(n);
      entries.push_back(Json{{"name", n}, {"display", display_name(n)}, {"dim", a.dim()}, {"q", a.q()}, {"p", a.p()}});
    }
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
  }
  std::ostringstream s;
  for (const auto& n : catalog_names()) {
    const QAlgebra a = build_catalog(n);
    s << n << std::string(n.size() < 14 ? 14 - n.size() : 1, ' ') << display_name(n)
      << std::string(display_name(n).size() < 21 ? 21 - display_name(n).size() : 1, ' ') << "dim " << a.dim()
      << "\n";
  }
  return s.str();
}

std::string cmd_info(const Options& o, const std::string& input) {
  const QAlgebra a = load(input);
  const auto r = analyze(a, o.seed);
  const auto comm = commutator_ideal(a);
  const auto js = j_map(a);
  using NK = Nonsingularity<Rational>::Kind;
  const auto& ns = r.nonsingular;
  if (o.json()) {
    Json j = header("info");
    j["input"] = input;
    j["seed"] = o.seed;
    j["algebra"] = Json{{"label", a.label()}, {"field", "Q"}, {"q", a.q()}, {"p", a.p()}, {"dim", a.dim()}};
    j["commutator"] = Json{{"dim", r.p_prime}, {"equals_z", comm.equals_declared}};
    j["center"] = Json{{"dim", r.center_dim}, {"equals_commutator", r.commutator_equals_center}};
    j["abelian_factor"] = r.abelian_dim;
    j["core"] = Json{{"q", r.q_prime}, {"p", r.p_prime}};
    j["h_type"] = r.h_type;
    Json n;
    n["value"] = ns.kind == NK::Nonsingular ? Json(true) : ns.kind == NK::Singular ? Json(false) : Json(nullptr);
    if (ns.kind == NK::Nonsingular) n["certificate"] = ns.certificate;
    if (ns.kind == NK::Singular) {
      n["witness_x"] = element_text(ns.witness_x, a.q());
      n["witness_z"] = element_text(ns.witness_z, a.q());
    }
    n["samples"] = ns.samples;
    j["nonsingular"] = std::move(n);
    Json jm = Json::array();
    for (const auto& m : js) jm.push_back(matrix_json(m));
    j["j_matrices"] = std::move(jm);
    return j.dump(2) + "\n";
  }
  std::ostringstream s;
  s << "algebra: " << (a.label().empty() ? "(unlabeled)" : a.label()) << " over Q\n";
  s << "dim: " << a.dim() << " (q = " << a.q() << ", p = " << a.p() << ")\n";
  s << "brackets: " << bracket_list(a) << "\n";
  s << "commutator ideal: dim " << r.p_prime << ", equals Z: " << yes_no(comm.equals_declared) << "\n";
  s << "center: dim " << r.center_dim << ", equals commutator: " << yes_no(r.commutator_equals_center) << "\n";
  s << "abelian factor: " << r.abelian_dim << " (core type (p, q) = (" << r.p_prime << ", " << r.q_prime << "))\n";
  s << "H-type: " << (r.h_type ? "true" : "false") << "\n";
  if (ns.kind == NK::Nonsingular)
    s << "nonsingular: true (" << ns.certificate << ")\n";
  else if (ns.kind == NK::Singular)
    s << "nonsingular: false (witness " << element_text(ns.witness_x, a.q()) << ")\n"
      << "  j(Z) kills the witness for Z = " << element_text(ns.witness_z, a.q()) << "\n";
  else
    s << "nonsingular: unknown (no witness among " << ns.samples << " candidates)\n";
  s << "j-matrices:\n";
  for (std::size_t k = 0; k < js.size(); ++k) s << "  j(Z" << k + 1 << "):\n" << matrix_text(js[k], "    ");
  return s.str();
}

std::string cmd_classify(const Options& o, const std::string& input) {
  const QAlgebra a = load(input);
  const auto c = classify_dim_le6(a);
  const auto fp = fingerprint(a);
  std::string kind = c.kind == Classification::Kind::Named ? "named"
                     : c.kind == Classification::Kind::Abelian ? "abelian"
                                                                : "unknown";
  if (o.json()) {
    Json j = header("classify");
    j["input"] = input;
    j["kind"] = kind;
    j["name"] = c.name;
    j["display"] = c.name.empty() ? "" : display_name(c.name);
    j["fingerprint"] = fp.str();
    return j.dump(2) + "\n";
  }
  std::ostringstream s;
  if (c.kind == Classification::Kind::Named)
    s << "classification: " << c.name << " (" << display_name(c.name) << ")\n";
  else if (c.kind == Classification::Kind::Abelian)
    s << "classification: abelian R^" << a.dim() << "\n";
  else
    s << "classification: unknown\n";
  s << "fingerprint: " << fp.str() << "\n";
  return s.str();
}

Json condition_json(const SufficientCondition& sc) {
  Json j;
  j["kind"] = kind_text(sc.kind);
  j["reason"] = sc.reason;
  j["commutator_is_center"] = sc.commutator_is_center;
  j["max_rank"] = sc.max_rank;
  j["trials"] = sc.trials;
  if (sc.kind == SufficientCondition::Kind::Holds) {
    Json cols = Json::array();
    for (Eigen::Index c = 0; c < sc.basis.cols(); ++c) cols.push_back(element_text(QVec(sc.basis.col(c)), sc.basis.rows()));
    j["witness_basis"] = std::move(cols);
  }
  return j;
}

std::string cmd_pac_check(const Options& o, const std::string& input) {
  const QAlgebra a = load(input);
  const auto v = pac_verdict(a, o.seed, o.trials);
  const std::string confidence = v.probabilistic ? "probabilistic(" + std::to_string(v.trials) + ")" : "exact";
  if (o.json()) {
    Json j = header("pac-check");
    j["input"] = input;
    j["seed"] = o.seed;
    j["trials"] = o.trials;
    j["verdict"] = Json{{"status", status_text(v.status)}, {"reason", v.reason}, {"name", v.name}, {"confidence", confidence}};
    j["sufficient_condition"] = condition_json(v.condition);
    j["checks"] = v.checks;
    return j.dump(2) + "\n";
  }
  std::ostringstream s;
  s << "status: " << status_text(v.status) << "\n";
  if (!v.reason.empty()) s << "reason: " << v.reason << (v.name.empty() ? "" : " (" + v.name + ")") << "\n";
  s << "confidence: " << confidence << "\n";
  s << "checks:\n";
  for (const auto& c : v.checks) s << "  - " << c << "\n";
  if (v.condition.kind == SufficientCondition::Kind::Holds) {
    s << "witness basis:";
    for (Eigen::Index c = 0; c < v.condition.basis.cols(); ++c)
      s << (c ? ", " : " ") << "Y" << c + 1 << " = " << element_text(QVec(v.condition.basis.col(c)), a.q());
    s << "\n";
  }
  s << "seed: " << o.seed << "\n";
  return s.str();
}

std::string cmd_decompose(const Options& o, const std::string& input, const std::string& map_path) {
  const QAlgebra a = load(input);
  const QMat f = read_matrix_json(read_file(map_path));
  if (f.rows() != a.dim() || f.cols() != a.dim())
    throw ParseError("map must be " + std::to_string(a.dim()) + " x " + std::to_string(a.dim()));
  const auto d = semidirect_decompose(a, f);
  if (o.json()) {
    Json j = header("decompose");
    j["input"] = input;
    j["map"] = matrix_json(f);
    j["h_k"] = Json{{"mu", matrix_json(d.mu)}, {"fbar", matrix_json(d.fbar)}};
    j["k_h"] = Json{{"fbar", matrix_json(d.fbar_k)}, {"mu", matrix_json(d.mu_k)}};
    j["unique"] = d.unique;
    return j.dump(2) + "\n";
  }
  std::ostringstream s;
  s << "f = mu o fbar (central factor first)\n  mu:\n" << matrix_text(d.mu, "    ") << "  fbar:\n"
    << matrix_text(d.fbar, "    ");
  s << "f = fbar o mu' (central factor last)\n  mu':\n" << matrix_text(d.mu_k, "    ");
  s << "V-preserving factor unique: " << yes_no(d.unique) << "\n";
  return s.str();
}

std::string cmd_scan(const Options& o, int p, int q, int samples, int threads) {
  const auto r = scan(p, q, samples, o.seed, o.bound, threads);
  auto frac = [&](int c) { return Rational(mpz_class(c), mpz_class(r.samples)).str(); };
  const double diag = static_cast<double>(r.in_o_and_surjective) / r.samples;
  if (o.json()) {
    Json j = header("scan");
    j["p"] = r.p;
    j["q"] = r.q;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["bound"] = r.bound;
    Json counts;
    counts["surjective"] = r.surjective;
    counts["in_o"] = r.in_o ? Json(*r.in_o) : Json(nullptr);
    counts["in_o_and_surjective"] = r.in_o_and_surjective;
    counts["holds"] = r.holds;
    counts["fails_proven"] = r.fails_proven;
    counts["fails_probabilistic"] = r.fails_probabilistic;
    counts["violations"] = r.violations;
    counts["in_o_not_holds"] = r.in_o_not_holds;
    j["counts"] = std::move(counts);
    Json fr;
    fr["surjective"] = frac(r.surjective);
    fr["in_o"] = r.in_o ? Json(frac(*r.in_o)) : Json(nullptr);
    fr["in_o_and_surjective"] = frac(r.in_o_and_surjective);
    fr["holds"] = frac(r.holds);
    j["fractions"] = std::move(fr);
    j["diagnostic_float"] = Json{{"in_o_and_surjective", diag}};
    return j.dump(2) + "\n";
  }
  std::ostringstream s;
  s << "scan (p, q) = (" << p << ", " << q << "), samples " << samples << ", seed " << o.seed << ", bound "
    << o.bound << "\n";
  s << "surjective: " << r.surjective << "/" << samples << "\n";
  if (r.in_o)
    s << "in O: " << *r.in_o << "/" << samples << "\n";
  else
    s << "in O: not applicable (p < q - 1)\n";
  s << "in O and surjective: " << r.in_o_and_surjective << "/" << samples << "\n";
  s << "sufficient condition holds: " << r.holds << "/" << samples << "\n";
  s << "fails proven: " << r.fails_proven << ", fails probabilistic: " << r.fails_probabilistic << "\n";
  s << "violations: " << r.violations << " (in O but criterion fails: " << r.in_o_not_holds << ")\n";
  s << "diagnostic float (approximate): in O and surjective " << diag << "\n";
  return s.str();
}

std::string cmd_group(const Options& o, const std::string& input, const std::vector<std::string>& elems) {
  const QAlgebra a = load(input);
  std::vector<GroupElement<Rational>> gs;
  for (const auto& e : elems) gs.push_back({parse_group_element(e, a.q(), a.p())});
  GroupElement<Rational> prod = group_identity(a);
  for (const auto& g : gs) prod = gmul(a, prod, g);
  std::optional<QVec> comm;
  if (gs.size() == 2) comm = gcommutator(a, gs[0], gs[1]).log;
  const std::string pt = format_group_element(prod.log, a.q());
  if (o.json()) {
    Json j = header("group");
    j["input"] = input;
    j["elements"] = elems;
    j["product"] = pt;
    if (comm) j["commutator"] = format_group_element(*comm, a.q());
    return j.dump(2) + "\n";
  }
  std::ostringstream s;
  for (std::size_t k = 0; k < gs.size(); ++k) s << "g" << k + 1 << " = " << format_group_element(gs[k].log, a.q()) << "\n";
  s << "product: " << pt << "\n";
  if (comm) s << "commutator: " << format_group_element(*comm, a.q()) << "\n";
  return s.str();
}

std::string cmd_witness_n6(const Options& o) {
  const auto w = n6_witness();
  const auto& a = w.algebra;
  const int q = a.q();
  const bool brackets_ok = preserves_brackets(a, w.f, o.trials, o.seed);
  bool additive_ok = true;
  Rng rng(o.seed);
  for (int t = 0; t < o.trials && additive_ok; ++t) {
    const auto x = random_vector<RatFun>(rng, a.dim(), 5), y = random_vector<RatFun>(rng, a.dim(), 5);
    additive_ok = w.f.apply(Vec<RatFun>(x + y)) == Vec<RatFun>(w.f.apply(x) + w.f.apply(y));
  }
  const bool inverse_ok = w.f * w.f_inverse == AdditiveMap::identity(a.dim());
  const bool residual_central = center(a).contains(w.residual);
  const auto entries = w.f.entry_text();
  const std::string residual = element_text(w.residual, q);
  if (!brackets_ok || !additive_ok || !inverse_ok) throw InvariantViolation("N6 witness failed a check");
  if (o.json()) {
    Json j = header("witness-n6");
    j["seed"] = o.seed;
    j["field"] = "Q(t)";
    Json basis = Json::array();
    for (int k = 0; k < a.dim(); ++k) basis.push_back(basis_name(k, q));
    j["basis"] = std::move(basis);
    j["brackets"] = bracket_list(a);
    j["map"] = entries;
    j["checks"] = Json{{"pairs", o.trials},
                       {"bracket_preservation", brackets_ok},
                       {"additivity", additive_ok},
                       {"inverse", inverse_ok}};
    j["residual"] = residual;
    j["residual_central"] = residual_central;
    return j.dump(2) + "\n";
  }
  std::ostringstream s;
  s << "N6 over Q(t), basis X1, X2, X3, X4, Z1, Z2\n";
  s << "brackets: " << bracket_list(a) << "\n";
  s << "map f (D = d/dt), entry (i, j) acts on coordinate j of the input:\n";
  for (int i = 0; i < a.dim(); ++i) {
    s << "  " << basis_name(i, q) << ": [";
    for (int k = 0; k < a.dim(); ++k) s << (k ? ", " : "") << entries[i][k];
    s << "]\n";
  }
  s << "bracket preservation: " << (brackets_ok ? "passed" : "FAILED") << " on " << o.trials << " seeded pairs\n";
  s << "additivity: " << (additive_ok ? "passed" : "FAILED") << " on " << o.trials << " seeded pairs\n";
  s << "inverse: f o (2 id - f) = id " << (inverse_ok ? "verified" : "FAILED") << "\n";
  s << "residual central: " << yes_no(residual_central) << "\n";
  s << "non-linearity residual: " << residual << "\n";
  return s.str();
}

void emit_error(const Options& o, std::ostream& err, const std::string& code, const std::string& msg) {
  if (o.json()) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["error"] = Json{{"code", code}, {"message", msg}};
    err << j.dump(2) << "\n";
  } else {
    err << "nilpac: error [" << code << "]: " << msg << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on 2-step nilpotent Lie algebras and their automorphisms"};
  app.name(args.empty() ? "nilpac" : args[0]);
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "Seed for every randomized step")->capture_default_str();
  app.add_option("--trials", o.trials, "Random trials (witness-n6 pairs, rank substitutions)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--bound", o.bound, "Coefficient bound for scan")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "Output format")->capture_default_str()->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", o.output, "Write the report to this file");

  std::string input, name, map_path;
  std::vector<std::string> elems;
  int p = 0, q = 0, samples = 1000, threads = 1;

  auto* catalog = app.add_subcommand("catalog", "List catalog entries, or emit one as a structure-constant file");
  catalog->add_option("name", name, "Entry to emit");
  auto* info = app.add_subcommand("info", "Structural report");
  info->add_option("input", input, "catalog:<name> or a structure-constant file")->required();
  auto* classify = app.add_subcommand("classify", "Name an algebra of dimension at most 6");
  classify->add_option("input", input)->required();
  auto* pac = app.add_subcommand("pac-check", "Partial automatic continuity verdict");
  pac->add_option("input", input)->required();
  auto* decompose = app.add_subcommand("decompose", "Split an automorphism into central and V-preserving factors");
  decompose->add_option("input", input)->required();
  decompose->add_option("map", map_path, "Matrix file of the automorphism")->required();
  auto* scan_cmd = app.add_subcommand("scan", "Sample random bracket tensors of type (p, q)");
  scan_cmd->add_option("--p", p, "Dimension of Z")->required();
  scan_cmd->add_option("--q", q, "Dimension of V")->required();
  scan_cmd->add_option("--samples", samples)->capture_default_str();
  scan_cmd->add_option("--threads", threads)->capture_default_str()->check(CLI::PositiveNumber);
  auto* group = app.add_subcommand("group", "Multiply group elements given as \"v1,...;z1,...\"");
  group->add_option("input", input)->required();
  group->add_option("elements", elems)->required();
  auto* witness = app.add_subcommand("witness-n6", "Additive, non-linear automorphism of N6 over Q(t)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    std::string report;
    if (catalog->parsed()) report = cmd_catalog(o, name);
    else if (info->parsed()) report = cmd_info(o, input);
    else if (classify->parsed()) report = cmd_classify(o, input);
    else if (pac->parsed()) report = cmd_pac_check(o, input);
    else if (decompose->parsed()) report = cmd_decompose(o, input, map_path);
    else if (scan_cmd->parsed()) report = cmd_scan(o, p, q, samples, threads);
    else if (group->parsed()) report = cmd_group(o, input, elems);
    else if (witness->parsed()) report = cmd_witness_n6(o);

    if (o.output.empty()) {
      out << report;
    } else {
      std::ofstream f(o.output, std::ios::binary);
      f << report;
      if (!f) throw ParseError("cannot write '" + o.output + "'");
    }
    return kOk;
  } catch (const ParseError& e) {
    emit_error(o, err, "parse-error", e.what());
    return kInvalidInput;
  } catch (const DomainError& e) {
    emit_error(o, err, "domain-error", e.what());
    return kInvalidInput;
  } catch (const InvariantViolation& e) {
    emit_error(o, err, "invariant-violation", e.what());
    return kInvariant;
  } catch (const std::exception& e) {
    emit_error(o, err, "internal-error", e.what());
    return kInvariant;
  }
}

}  // namespace nilpac
