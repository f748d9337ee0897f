// JSON input and output for the command line driver: monad and net files,
// Plucker vectors, and the canonical report envelope. Canonical form means
// sorted object keys, prime-field entries as least nonnegative residues,
// rational entries as decimal strings, and Plucker coordinates normalized so
// the first nonzero coordinate is one.
#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "ilab/field.hpp"
#include "ilab/matrix.hpp"
#include "ilab/monad.hpp"
#include "ilab/net.hpp"

namespace ilab {

using nlohmann::json;

inline json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail(errc::io, "cannot parse " + path + ": " + e.what());
  }
  return j;
}

inline std::int64_t json_int(const json& j, const std::string& what) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      std::size_t pos = 0;
      std::int64_t v = std::stoll(s, &pos);
      if (pos == s.size() && !s.empty()) return v;
    } catch (const std::exception&) {
    }
  }
  fail(errc::validation, what + ": expected an integer");
}

// A report envelope written by this tool carries the payload under "result";
// loaders accept either the bare object or a full report.
inline const json& unwrap_result(const json& j) {
  if (j.is_object() && j.contains("schema") && j.contains("result")) return j.at("result");
  return j;
}

inline json vec_json(const Vec<PrimeField>& v) {
  json a = json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

inline json mat_json(const Mat<PrimeField>& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) rows.push_back(vec_json(m.row(r)));
  return rows;
}

inline json mat_json(const Mat<RationalField>& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).get_str());
    rows.push_back(row);
  }
  return rows;
}

inline Mat<PrimeField> mat_from_json(const PrimeField& k, const json& j, int rows, int cols,
                                     const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    fail(errc::validation, what + ": expected " + std::to_string(rows) + " rows");
  Mat<PrimeField> m(k, rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      fail(errc::validation, what + ": row " + std::to_string(r) + " needs " +
                                 std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c) m.at(r, c) = k.from_int(json_int(row[c], what));
  }
  return m;
}

inline mpq_class json_rational(const json& j, const std::string& what) {
  if (j.is_number_integer()) return mpq_class(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), j.get<std::string>().c_str(), 10) == 0 &&
        sgn(q.get_den()) != 0) {
      q.canonicalize();
      return q;
    }
  }
  fail(errc::validation, what + ": expected an integer or a decimal fraction string");
}

inline Mat<RationalField> mat_from_json(const RationalField& k, const json& j, int rows, int cols,
                                        const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    fail(errc::validation, what + ": expected " + std::to_string(rows) + " rows");
  Mat<RationalField> m(k, rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      fail(errc::validation, what + ": row " + std::to_string(r) + " needs " +
                                 std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c) m.at(r, c) = json_rational(row[c], what);
  }
  return m;
}

inline json monad_json(const InstantonMonad& m) {
  json a = json::array(), b = json::array();
  for (int i = 0; i < 4; ++i) {
    a.push_back(mat_json(m.A[i]));
    b.push_back(mat_json(m.B[i]));
  }
  return json{{"A", a}, {"B", b}, {"field", json{{"p", m.k.p}}}, {"n", m.n}};
}

inline json monad_json(const RationalMonad& m) {
  json a = json::array(), b = json::array();
  for (int i = 0; i < 4; ++i) {
    a.push_back(mat_json(m.A[i]));
    b.push_back(mat_json(m.B[i]));
  }
  return json{{"A", a}, {"B", b}, {"field", "Q"}, {"n", m.n}};
}

// One of the two members is set, depending on the file's field tag.
struct LoadedMonad {
  std::optional<InstantonMonad> fp;
  std::optional<RationalMonad> rat;
};

inline LoadedMonad load_monad(const std::string& path) {
  json j = unwrap_result(load_json_file(path));
  if (!j.is_object() || !j.contains("n") || !j.contains("field") || !j.contains("A") ||
      !j.contains("B"))
    fail(errc::validation, path + ": monad file needs keys n, field, A, B");
  int n = static_cast<int>(json_int(j["n"], path + ": n"));
  if (n < 1) fail(errc::validation, path + ": n must be positive");
  const json& a = j["A"];
  const json& b = j["B"];
  if (!a.is_array() || a.size() != 4 || !b.is_array() || b.size() != 4)
    fail(errc::validation, path + ": A and B must each hold four coefficient matrices");
  const json& f = j["field"];
  LoadedMonad out;
  if (f.is_string() && f.get<std::string>() == "Q") {
    RationalMonad m;
    m.k = RationalField{};
    m.n = n;
    for (int i = 0; i < 4; ++i) {
      m.A[i] = mat_from_json(m.k, a[i], 2 * n + 2, n, path + ": A[" + std::to_string(i) + "]");
      m.B[i] = mat_from_json(m.k, b[i], n, 2 * n + 2, path + ": B[" + std::to_string(i) + "]");
    }
    out.rat = std::move(m);
  } else if (f.is_object() && f.contains("p")) {
    InstantonMonad m;
    m.k = PrimeField(json_int(f["p"], path + ": field.p"));
    m.n = n;
    for (int i = 0; i < 4; ++i) {
      m.A[i] = mat_from_json(m.k, a[i], 2 * n + 2, n, path + ": A[" + std::to_string(i) + "]");
      m.B[i] = mat_from_json(m.k, b[i], n, 2 * n + 2, path + ": B[" + std::to_string(i) + "]");
    }
    out.fp = std::move(m);
  } else {
    fail(errc::validation, path + R"(: field must be {"p": prime} or "Q")");
  }
  return out;
}

// Fully validated monad over F_p; for rational input p picks the reduction
// prime, for prime-field input p must match the stored modulus when given.
inline InstantonMonad monad_over(const LoadedMonad& lm, std::optional<std::int64_t> p) {
  if (lm.fp) {
    if (p && *p != lm.fp->k.p)
      fail(errc::validation,
           "monad is over " + lm.fp->k.name() + " but --p asks for F_" + std::to_string(*p));
    return validate_monad(*lm.fp, lm.fp->k.p);
  }
  if (!p) fail(errc::validation, "rational monad input needs --p to pick the working prime");
  return validate_monad(reduce_monad(*lm.rat, *p), *p);
}

inline json net_json(const NetOfQuadrics& net) {
  json m = json::array();
  for (int t = 0; t < 3; ++t) m.push_back(mat_json(net.m[t]));
  return json{{"M", m}, {"n", net.n}};
}

inline NetOfQuadrics load_net(const std::string& path, const PrimeField& k) {
  json j = unwrap_result(load_json_file(path));
  if (!j.is_object() || !j.contains("n") || !j.contains("M"))
    fail(errc::validation, path + ": net file needs keys n and M");
  int n = static_cast<int>(json_int(j["n"], path + ": n"));
  if (n < 1) fail(errc::validation, path + ": n must be positive");
  const json& mm = j["M"];
  if (!mm.is_array() || mm.size() != 3)
    fail(errc::validation, path + ": M must hold three symmetric matrices");
  std::array<Mat<PrimeField>, 3> mats;
  for (int t = 0; t < 3; ++t)
    mats[t] = mat_from_json(k, mm[t], n, n, path + ": M[" + std::to_string(t) + "]");
  return net_from_matrices(k, n, mats);
}

inline json plucker_json(const PluckerLine& l) { return vec_json(l.p); }

// Report envelope: command echo, semantic config echo, result payload and a
// schema tag. Execution knobs (--jobs, --out) stay out of the config echo so
// equal inputs produce byte-identical reports; timing goes to stderr.
inline void emit_report(const std::string& command, const json& config, const json& result,
                        const std::string& out_path) {
  json rep{{"command", command}, {"config", config}, {"result", result}, {"schema", 1}};
  std::string text = rep.dump(2);
  text.push_back('\n');
  if (out_path.empty()) {
    std::cout << text << std::flush;
    if (!std::cout) fail(errc::io, "cannot write the report to stdout");
  } else {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) fail(errc::io, "cannot open " + out_path + " for writing");
    out << text << std::flush;
    if (!out) fail(errc::io, "cannot write " + out_path);
  }
}

}  // namespace ilab
