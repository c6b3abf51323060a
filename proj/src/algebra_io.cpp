#include "nilgeo/algebra_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace nilgeo {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw AlgebraError(path + ": " + what);
}

std::size_t get_dim(const json& doc, const std::string& key) {
  std::string path = "$." + key;
  if (!doc.contains(key)) fail(path, "missing");
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    fail(path, "must be a non-negative integer");
  return static_cast<std::size_t>(v.get<long long>());
}

Rational get_rational(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      fail(path, e.what());
    }
  }
  fail(path, "must be an integer or a rational string \"p/q\"");
}

QVec get_rational_vec(const json& v, std::size_t len, const std::string& path) {
  if (!v.is_array() || v.size() != len)
    fail(path, "must be an array of " + std::to_string(len) + " rationals");
  QVec out(len);
  for (std::size_t i = 0; i < len; ++i)
    out[i] = get_rational(v[i], path + "[" + std::to_string(i) + "]");
  return out;
}

std::vector<QMatrix> parse_j(const json& jnode, std::size_t n, std::size_t m) {
  if (!jnode.is_array() || jnode.size() != m)
    fail("$.j", "must be an array of " + std::to_string(m) + " matrices");
  std::vector<QMatrix> maps;
  for (std::size_t k = 0; k < m; ++k) {
    const json& mat = jnode[k];
    std::string mpath = "$.j[" + std::to_string(k) + "]";
    if (!mat.is_array() || mat.size() != n)
      fail(mpath, "must be an array of " + std::to_string(n) + " rows");
    QMatrix M(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      const json& row = mat[r];
      std::string rpath = mpath + "[" + std::to_string(r) + "]";
      if (!row.is_array() || row.size() != n)
        fail(rpath, "must be an array of " + std::to_string(n) + " entries");
      for (std::size_t c = 0; c < n; ++c)
        M.at(r, c) = get_rational(row[c], rpath + "[" + std::to_string(c) + "]");
    }
    maps.push_back(std::move(M));
  }
  return maps;
}

std::vector<std::vector<QVec>> parse_brackets(const json& bnode, std::size_t n,
                                              std::size_t m) {
  if (!bnode.is_array()) fail("$.brackets", "must be an array");
  std::vector<std::vector<QVec>> table(n, std::vector<QVec>(n, QVec(m, Rational(0))));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t idx = 0; idx < bnode.size(); ++idx) {
    std::string epath = "$.brackets[" + std::to_string(idx) + "]";
    const json& e = bnode[idx];
    if (!e.is_object()) fail(epath, "must be an object {a, b, z}");
    for (const char* key : {"a", "b", "z"})
      if (!e.contains(key)) fail(epath + "." + key, "missing");
    if (!e.at("a").is_number_integer()) fail(epath + ".a", "must be an integer");
    if (!e.at("b").is_number_integer()) fail(epath + ".b", "must be an integer");
    long long a = e.at("a").get<long long>();
    long long b = e.at("b").get<long long>();
    if (a < 0 || static_cast<std::size_t>(a) >= n)
      fail(epath + ".a", "index out of range [0," + std::to_string(n) + ")");
    if (b < 0 || static_cast<std::size_t>(b) >= n)
      fail(epath + ".b", "index out of range [0," + std::to_string(n) + ")");
    QVec z = get_rational_vec(e.at("z"), m, epath + ".z");
    auto ai = static_cast<std::size_t>(a);
    auto bi = static_cast<std::size_t>(b);
    if (ai == bi) {
      for (const auto& x : z)
        if (x != 0) fail(epath, "diagonal bracket [v_a, v_a] must be zero");
      continue;
    }
    QVec neg(m);
    for (std::size_t k = 0; k < m; ++k) neg[k] = -z[k];
    bool have_ab = seen.count({ai, bi}) > 0;
    bool have_ba = seen.count({bi, ai}) > 0;
    if ((have_ab && table[ai][bi] != z) || (have_ba && table[bi][ai] != neg))
      fail(epath, "inconsistent antisymmetry for pair (" + std::to_string(ai) + "," +
                      std::to_string(bi) + ")");
    table[ai][bi] = z;
    table[bi][ai] = neg;
    seen.insert({ai, bi});
  }
  return table;
}

}  // namespace

AlgebraFile load_algebra_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw AlgebraError(std::string("$: not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("$", "top level must be an object");
  std::size_t n = get_dim(doc, "dim_v");
  std::size_t m = get_dim(doc, "dim_z");
  bool has_j = doc.contains("j");
  bool has_b = doc.contains("brackets");
  if (has_j == has_b) fail("$", "exactly one of \"j\" and \"brackets\" must be present");

  AlgebraFile out;
  if (has_j)
    out.algebra = MetricTwoStepAlgebra::from_j_maps(n, m, parse_j(doc.at("j"), n, m));
  else
    out.algebra = MetricTwoStepAlgebra::from_structure_constants(
        n, m, parse_brackets(doc.at("brackets"), n, m));

  if (doc.contains("lattice")) {
    const json& lat = doc.at("lattice");
    if (!lat.is_object()) fail("$.lattice", "must be an object");
    if (lat.contains("M_scale"))
      out.lattice_M_scale = get_rational_vec(lat.at("M_scale"), n, "$.lattice.M_scale");
    if (lat.contains("L_scale"))
      out.lattice_L_scale = get_rational_vec(lat.at("L_scale"), m, "$.lattice.L_scale");
  }
  return out;
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_algebra_json(buf.str());
}

std::string algebra_to_json(const MetricTwoStepAlgebra& A) {
  json doc;
  doc["dim_v"] = A.dim_v();
  doc["dim_z"] = A.dim_z();
  json maps = json::array();
  for (const QMatrix& J : A.j_maps()) {
    json mat = json::array();
    for (std::size_t r = 0; r < J.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < J.cols(); ++c) row.push_back(to_string(J.at(r, c)));
      mat.push_back(row);
    }
    maps.push_back(mat);
  }
  doc["j"] = maps;
  return doc.dump(2);
}

}  // namespace nilgeo
