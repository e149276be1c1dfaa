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


#include "nilpac/io.hpp"

#include <json.hpp>

namespace nilpac {

using Json = nlohmann::ordered_json;

template <class F>
std::string write_algebra_json(const TwoStepAlgebra<F>& a) {
  Json doc;
  doc["field"] = FieldTraits<F>::name();
  doc["q"] = a.q();
  doc["p"] = a.p();
  Json brackets = Json::array();
  for (int i = 0; i < a.q(); ++i)
    for (int j = i + 1; j < a.q(); ++j) {
      const Vec<F> z = a.bracket_basis(i, j);
      if (is_zero(z)) continue;
      Json zs = Json::array();
      for (int k = 0; k < a.p(); ++k) zs.push_back(FieldTraits<F>::format(z(k)));
      brackets.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"z", std::move(zs)}});
    }
  doc["brackets"] = std::move(brackets);
  if (!a.label().empty()) doc["label"] = a.label();
  return doc.dump(2) + "\n";
}

template std::string write_algebra_json(const QAlgebra&);
template std::string write_algebra_json(const TwoStepAlgebra<RatFun>&);

namespace {

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const Json& field(const Json& obj, const char* name, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + " must be an object");
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(where + ": missing field '" + name + "'");
  return *it;
}

int int_field(const Json& obj, const char* name, const std::string& where) {
  const Json& v = field(obj, name, where);
  if (!v.is_number_integer()) throw ParseError(where + ": field '" + name + "' must be an integer");
  return v.get<int>();
}

template <class F>
F scalar(const Json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + " must be a scalar string");
  try {
    return FieldTraits<F>::parse(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

template <class F>
TwoStepAlgebra<F> read_brackets(const Json& doc) {
  const int q = int_field(doc, "q", "algebra"), p = int_field(doc, "p", "algebra");
  if (q < 0 || p < 0) throw ParseError("algebra: q and p must be non-negative");
  std::string label;
  if (auto it = doc.find("label"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("algebra: field 'label' must be a string");
    label = it->get<std::string>();
  }
  const Json& list = field(doc, "brackets", "algebra");
  if (!list.is_array()) throw ParseError("algebra: field 'brackets' must be an array");
  auto a = TwoStepAlgebra<F>::zero(q, p, label);
  std::vector<std::vector<bool>> seen(q, std::vector<bool>(q, false));
  for (std::size_t n = 0; n < list.size(); ++n) {
    const std::string where = "brackets[" + std::to_string(n) + "]";
    const int i = int_field(list[n], "i", where), j = int_field(list[n], "j", where);
    const std::string pair = "pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
    if (i >= j) throw ParseError(where + ": " + pair + " needs i < j");
    if (i < 1 || j > q) throw ParseError(where + ": " + pair + " outside 1.." + std::to_string(q));
    if (seen[i - 1][j - 1]) throw ParseError(where + ": " + pair + " listed twice");
    seen[i - 1][j - 1] = true;
    const Json& zs = field(list[n], "z", where);
    if (!zs.is_array() || static_cast<int>(zs.size()) != p)
      throw ParseError(where + ": " + pair + " needs a 'z' array of length " + std::to_string(p));
    Vec<F> z(p);
    for (int k = 0; k < p; ++k) z(k) = scalar<F>(zs[k], where + ".z[" + std::to_string(k) + "]");
    a.set_bracket(i - 1, j - 1, z);
  }
  return a;
}

}  // namespace

AnyAlgebra read_algebra_json(std::string_view text) {
  const Json doc = parse_document(text);
  const Json& f = field(doc, "field", "algebra");
  if (!f.is_string()) throw ParseError("algebra: field 'field' must be a string");
  const auto name = f.get<std::string>();
  if (name == FieldTraits<Rational>::name()) return read_brackets<Rational>(doc);
  if (name == FieldTraits<RatFun>::name()) return read_brackets<RatFun>(doc);
  throw ParseError("algebra: unknown field '" + name + "' (expected \"Q\" or \"Q(t)\")");
}

QAlgebra read_q_algebra_json(std::string_view text) {
  auto any = read_algebra_json(text);
  if (auto* q = std::get_if<QAlgebra>(&any)) return std::move(*q);
  throw ParseError("algebra: this command needs field \"Q\"");
}

std::string write_matrix_json(const QMat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  Json doc;
  doc["field"] = "Q";
  doc["matrix"] = std::move(rows);
  return doc.dump(2) + "\n";
}

QMat read_matrix_json(std::string_view text) {
  const Json doc = parse_document(text);
  const Json& f = field(doc, "field", "map");
  if (f != "Q") throw ParseError("map: field 'field' must be \"Q\"");
  const Json& rows = field(doc, "matrix", "map");
  if (!rows.is_array() || rows.empty()) throw ParseError("map: field 'matrix' must be a non-empty array");
  const auto n = rows.size();
  QMat m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(rows[0].is_array() ? rows[0].size() : 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<Eigen::Index>(rows[i].size()) != m.cols())
      throw ParseError("map: row " + std::to_string(i + 1) + " has the wrong length");
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(i, j) = scalar<Rational>(rows[i][j], "map[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]");
  }
  return m;
}

std::string format_group_element(const QVec& x, int q) {
  std::string s;
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    if (k > 0) s += k == q ? ";" : ",";
    s += x(k).str();
  }
  if (q == x.size()) s += ";";
  return s;
}

QVec parse_group_element(std::string_view text, int q, int p) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos)
    throw ParseError("group element '" + std::string(text) + "' needs exactly one ';' between V and Z parts");
  auto split = [&](std::string_view part, int expected, const char* which) {
    std::vector<Rational> out;
    if (expected == 0) {
      if (!part.empty()) throw ParseError(std::string(which) + " part of '" + std::string(text) + "' must be empty");
      return out;
    }
    std::size_t start = 0;
    while (true) {
      const auto comma = part.find(',', start);
      out.push_back(Rational::parse(part.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (static_cast<int>(out.size()) != expected)
      throw ParseError(std::string(which) + " part of '" + std::string(text) + "' has " + std::to_string(out.size()) +
                       " entries, expected " + std::to_string(expected));
    return out;
  };
  const auto v = split(text.substr(0, semi), q, "V");
  const auto z = split(text.substr(semi + 1), p, "Z");
  QVec x(q + p);
  for (int k = 0; k < q; ++k) x(k) = v[k];
  for (int k = 0; k < p; ++k) x(q + k) = z[k];
  return x;
}

}  // namespace nilpac
