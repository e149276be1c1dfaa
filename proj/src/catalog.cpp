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


#include "nilpac/catalog.hpp"

#include <cctype>
#include <map>

namespace nilpac {

namespace {

Rational r(int v) { return Rational(v); }

void set(QAlgebra& a, int i, int j, int k, int sign = 1) {
  Vec<Rational> z = Vec<Rational>::Zero(a.p());
  z(k) = r(sign);
  a.set_bracket(i, j, z);
}

QMat block2(int a, int b, int c, int d) {
  QMat m(2, 2);
  m << r(a), r(b), r(c), r(d);
  return m;
}

int parse_index(const std::string& s, std::size_t prefix) {
  if (s.size() <= prefix) return -1;
  for (std::size_t i = prefix; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return -1;
  if (s.size() - prefix > 3) return -1;
  return std::stoi(s.substr(prefix));
}

QAlgebra build_simple(const std::string& name) {
  if (name == "oct") return oct();
  if (name == "N5") return n5();
  if (name == "N6") return n6();
  if (name == "N6prime") return n6prime();
  if (name == "heis3C") return heis3c();
  if (name.rfind("heis", 0) == 0) {
    const int n = parse_index(name, 4);
    if (n >= 1) return heis(n);
  }
  if (name.rfind("quat", 0) == 0) {
    const int n = parse_index(name, 4);
    if (n >= 1) return quat(n);
  }
  if (name.rfind("R", 0) == 0) {
    const int k = parse_index(name, 1);
    if (k >= 0) return QAlgebra::abelian(k);
  }
  throw DomainError("unknown catalog name '" + name + "'");
}

}  // namespace

QAlgebra heis(int n) {
  if (n < 1) throw DomainError("heis(n) needs n >= 1");
  auto a = QAlgebra::zero(2 * n, 1, "heis" + std::to_string(n));
  for (int i = 0; i < n; ++i) set(a, 2 * i, 2 * i + 1, 0);
  return a;
}

QAlgebra quat(int n) {
  if (n < 1) throw DomainError("quat(n) needs n >= 1");
  auto a = QAlgebra::zero(4 * n, 3, "quat" + std::to_string(n));
  for (int b = 0; b < n; ++b) {
    const int x = 4 * b, y = x + 1, v = x + 2, w = x + 3;
    set(a, x, y, 0);
    set(a, x, v, 1);
    set(a, x, w, 2);
    set(a, y, v, 2);
    set(a, y, w, 1, -1);
    set(a, v, w, 0);
  }
  return a;
}

std::vector<QMat> oct_j_matrices() {
  const QMat j1 = block2(0, -1, 1, 0), j2 = block2(1, 0, 0, -1), j3 = block2(0, 1, 1, 0);
  const QMat i2 = block2(1, 0, 0, 1), o = QMat::Zero(2, 2);
  auto assemble = [](std::initializer_list<std::initializer_list<QMat>> rows) {
    QMat m(8, 8);
    int bi = 0;
    for (const auto& row : rows) {
      int bj = 0;
      for (const auto& blk : row) m.block(2 * bi, 2 * bj++, 2, 2) = blk;
      ++bi;
    }
    return m;
  };
  return {
      assemble({{j1, o, o, o}, {o, j1, o, o}, {o, o, j1, o}, {o, o, o, -j1}}),
      assemble({{o, -j2, o, o}, {j2, o, o, o}, {o, o, o, -i2}, {o, o, i2, o}}),
      assemble({{o, -j3, o, o}, {j3, o, o, o}, {o, o, o, j1}, {o, o, j1, o}}),
      assemble({{o, o, -j2, o}, {o, o, o, i2}, {j2, o, o, o}, {o, -i2, o, o}}),
      assemble({{o, o, -j3, o}, {o, o, o, -j1}, {j3, o, o, o}, {o, -j1, o, o}}),
      assemble({{o, o, o, -i2}, {o, o, -j2, o}, {o, j2, o, o}, {i2, o, o, o}}),
      assemble({{o, o, o, j1}, {o, o, -j3, o}, {o, j3, o, o}, {j1, o, o, o}}),
  };
}

QAlgebra oct() {
  std::vector<QMat> c;
  for (const auto& j : oct_j_matrices()) c.push_back(j.transpose());
  return QAlgebra(8, 7, std::move(c), "oct");
}

QAlgebra n5() {
  auto a = QAlgebra::zero(3, 2, "N5");
  set(a, 0, 1, 0);
  set(a, 0, 2, 1);
  return a;
}

QAlgebra n6() {
  auto a = QAlgebra::zero(4, 2, "N6");
  set(a, 0, 1, 0);
  set(a, 0, 2, 1);
  set(a, 1, 3, 1);
  return a;
}

QAlgebra n6prime() {
  auto a = QAlgebra::zero(3, 3, "N6prime");
  set(a, 0, 1, 2);
  set(a, 1, 2, 0);
  set(a, 2, 0, 1);
  return a;
}

QAlgebra heis3c() {
  // [X, Y] = Z, [X, iY] = iZ, [iX, Y] = iZ, [iX, iY] = -Z
  auto a = QAlgebra::zero(4, 2, "heis3C");
  set(a, 0, 2, 0);
  set(a, 0, 3, 1);
  set(a, 1, 2, 1);
  set(a, 1, 3, 0, -1);
  return a;
}

QAlgebra build_catalog(const std::string& name) {
  if (name.empty()) throw DomainError("empty catalog name");
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto plus = name.find('+', start);
    parts.push_back(name.substr(start, plus == std::string::npos ? std::string::npos : plus - start));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  QAlgebra a = build_simple(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) a = direct_sum(a, build_simple(parts[i]));
  return a.with_label(name);
}

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> names = {
      "heis1", "heis1+R1", "heis1+R2",    "heis2",  "N5", "heis1+R3",
      "heis2+R1", "N5+R1", "heis1+heis1", "heis3C", "N6", "N6prime"};
  return names;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    auto v = table_names();
    for (const char* extra : {"heis3", "quat1", "quat2", "oct"}) v.emplace_back(extra);
    return v;
  }();
  return names;
}

std::string display_name(const std::string& name) {
  static const std::map<std::string, std::string> simple = {
      {"N5", "N5"}, {"N6", "N6"}, {"N6prime", "N6'"}, {"heis3C", "heis3(C)"}, {"oct", "oct15(R)"}};
  std::string out;
  std::size_t start = 0;
  while (start <= name.size()) {
    const auto plus = name.find('+', start);
    const std::string part = name.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    if (!out.empty()) out += " + ";
    if (auto it = simple.find(part); it != simple.end()) {
      out += it->second;
    } else if (part.rfind("heis", 0) == 0 && parse_index(part, 4) >= 1) {
      out += "heis" + std::to_string(2 * parse_index(part, 4) + 1) + "(R)";
    } else if (part.rfind("quat", 0) == 0 && parse_index(part, 4) >= 1) {
      out += "quat" + std::to_string(4 * parse_index(part, 4) + 3) + "(R)";
    } else if (part.rfind("R", 0) == 0 && parse_index(part, 1) >= 0) {
      const int k = parse_index(part, 1);
      out += k == 1 ? "R" : "R^" + std::to_string(k);
    } else {
      out += part;
    }
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return out;
}

QAlgebra base_normalized(const std::string& name) {
  if (name != "heis1" && name != "quat1" && name != "oct")
    throw DomainError("base_normalized: '" + name + "' is not heis1, quat1 or oct");
  const QAlgebra a = build_catalog(name);
  for (int i = 1; i < a.q(); ++i) {
    const Vec<Rational> z = a.bracket_basis(0, i);
    if (!(z == unit_vector<Rational>(a.p(), i - 1)))
      throw InvariantViolation("base_normalized: [X1, X" + std::to_string(i + 1) + "] is not Z" + std::to_string(i));
  }
  return a;
}

QMultiPoly pfaffian_pencil(const QAlgebra& a) {
  if (a.q() % 2 != 0) throw DomainError("pfaffian_pencil: q must be even");
  if (!commutator_ideal(a).equals_declared) throw DomainError("pfaffian_pencil: commutator ideal must equal Z");
  return pfaffian(j_pencil(a));
}

std::string Fingerprint::str() const {
  std::string s = "(" + std::to_string(dim) + ", " + std::to_string(k) + ", (" + std::to_string(p_core) + "," +
                  std::to_string(q_core) + "), ";
  s += disc == 'n' ? std::string("n/a") : std::string(1, disc);
  return s + ")";
}

Fingerprint fingerprint(const QAlgebra& a) {
  const auto split = abelian_factor_split(a);
  Fingerprint fp;
  fp.dim = a.dim();
  fp.k = split.k;
  fp.p_core = split.core.p();
  fp.q_core = split.core.q();
  if (fp.p_core == 2 && fp.q_core == 4) {
    const QMultiPoly pf = pfaffian_pencil(split.core);
    const Rational qa = pf.coeff({2}), qb = pf.coeff({1, 1}), qc = pf.coeff({0, 2});
    const int s = (qb * qb - Rational(4) * qa * qc).sign();
    fp.disc = s > 0 ? '+' : (s < 0 ? '-' : '0');
  }
  return fp;
}

Classification classify_dim_le6(const QAlgebra& a) {
  if (a.dim() > 6) throw DomainError("classify_dim_le6: dimension " + std::to_string(a.dim()) + " exceeds 6");
  const Fingerprint fp = fingerprint(a);
  Classification c;
  if (fp.p_core == 0) {
    c.kind = Classification::Kind::Abelian;
    return c;
  }
  for (const auto& name : table_names()) {
    if (fingerprint(build_catalog(name)) == fp) {
      c.kind = Classification::Kind::Named;
      c.name = name;
      return c;
    }
  }
  return c;
}

}  // namespace nilpac
