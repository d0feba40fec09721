// SPDX-License-Identifier: Apache-2.0
#include "cdlab/json_io.hpp"

#include <limits>
#include <string>

#include "cdlab/error.hpp"

namespace cdlab {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(ErrorKind::InvalidInput, "expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) fail(ErrorKind::InvalidInput, std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(ErrorKind::InvalidInput, std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

PrimeModulus modulus_of(const Json& j) {
  const auto p = integer(field(j, "p"), "p");
  if (p < 2) fail(ErrorKind::InvalidInput, "p must be a prime");
  return PrimeModulus(static_cast<std::uint64_t>(p));
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorKind::InvalidInput, std::string(what) + " must be an array");
  return j;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

FpMatrix matrix_from_json(const Json& j) {
  const auto modulus = modulus_of(j);
  const auto rows = integer(field(j, "rows"), "rows");
  const auto cols = integer(field(j, "cols"), "cols");
  const auto& entries = array(field(j, "entries"), "entries");
  if (rows < 0 || cols < 0 || entries.size() != static_cast<std::size_t>(rows))
    fail(ErrorKind::InvalidInput, "entries do not match rows");
  FpMatrix m(modulus, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto& row = array(entries[r], "matrix row");
    if (row.size() != m.cols()) fail(ErrorKind::InvalidInput, "row " + std::to_string(r) + " does not match cols");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto v = integer(row[c], "matrix entry");
      if (v < 0 || static_cast<std::uint64_t>(v) >= modulus.value())
        fail(ErrorKind::InvalidInput, "matrix entry out of [0, p)");
      m.set(r, c, static_cast<std::uint32_t>(v));
    }
  }
  return m;
}

Json to_json(const FpMatrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    entries.push_back(std::move(row));
  }
  return Json{{"p", m.modulus().value()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

SetSystem set_system_from_json(const Json& j) {
  const auto modulus = modulus_of(j);
  std::vector<std::vector<std::int64_t>> sets;
  for (const auto& s : array(field(j, "sets"), "sets")) {
    auto& out = sets.emplace_back();
    for (const auto& v : array(s, "set")) out.push_back(integer(v, "set element"));
  }
  if (sets.empty()) fail(ErrorKind::InvalidInput, "sets must be nonempty");
  return SetSystem(modulus, sets);
}

Json to_json(const SetSystem& a) {
  return Json{{"p", a.modulus().value()}, {"sets", a.sets()}};
}

SparsePoly poly_from_json(const Json& j) {
  const auto modulus = modulus_of(j);
  const auto vars = integer(field(j, "vars"), "vars");
  if (vars < 0) fail(ErrorKind::InvalidInput, "vars must be nonnegative");
  SparsePoly f(modulus, static_cast<std::size_t>(vars));
  for (const auto& t : array(field(j, "terms"), "terms")) {
    const auto& exp = array(field(t, "exp"), "exp");
    if (exp.size() != f.vars()) fail(ErrorKind::InvalidInput, "exponent length does not match vars");
    std::vector<std::uint32_t> e;
    for (const auto& v : exp) {
      const auto x = integer(v, "exponent");
      if (x < 0 || x > std::numeric_limits<std::uint32_t>::max())
        fail(ErrorKind::InvalidInput, "exponent out of range");
      e.push_back(static_cast<std::uint32_t>(x));
    }
    f.add_term(Monomial(std::move(e)), integer(field(t, "coef"), "coef"));
  }
  return f;
}

Json to_json(const SparsePoly& f) {
  Json terms = Json::array();
  for (const auto& [mon, c] : f.terms()) terms.push_back(Json{{"exp", mon.exponents()}, {"coef", c}});
  return Json{{"p", f.modulus().value()}, {"vars", f.vars()}, {"terms", std::move(terms)}};
}

Json to_json(IndexSet s) { return Json(s.one_based()); }

IndexSet index_set_from_json(const Json& j) {
  std::vector<std::size_t> one_based;
  for (const auto& v : array(j, "index set")) {
    const auto i = integer(v, "index");
    if (i < 1 || i > static_cast<std::int64_t>(IndexSet::kMaxIndices))
      fail(ErrorKind::InvalidInput, "index out of range");
    one_based.push_back(static_cast<std::size_t>(i));
  }
  return IndexSet::from_one_based(one_based);
}

Json to_json(const std::vector<IndexSet>& family) {
  Json out = Json::array();
  for (auto s : family) out.push_back(to_json(s));
  return out;
}

Json to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return Json(v.convert_to<std::uint64_t>());
  if (v < 0 && v >= std::numeric_limits<std::int64_t>::min()) return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

Json to_json(const BoundCertificate& c) {
  return Json{{"lambda", to_json(c.lambda)}, {"S", to_json(c.s)},     {"Sprime", to_json(c.sprime)},
              {"kmax", c.kmax},              {"kmin", c.kmin},        {"precondition_ok", c.precondition_ok}};
}

Json to_json(const ImageResult& r) {
  Json out{{"size", r.size}};
  if (r.points) out["points"] = *r.points;
  return out;
}

Json to_json(const ExtremalResult& r) {
  return Json{{"mu", r.mu}, {"method", to_string(r.method)}, {"probe", r.probe}, {"witness", to_json(r.witness)}};
}

Json summary_json(const Section4Report& r) {
  return Json{{"c", r.c},
              {"k", r.k},
              {"p", r.p},
              {"trials", r.trials},
              {"seed", r.seed},
              {"interval_image", r.interval_image},
              {"interval_cap", r.interval_cap},
              {"interval_within_cap", r.interval_image <= r.interval_cap},
              {"min_image", r.min_image},
              {"min_probe", r.min_probe},
              {"min_seed", r.min_seed},
              {"min_witness", to_json(r.min_witness)},
              {"supker", to_json(r.supker)},
              {"supker_all_large", r.supker_all_large},
              {"small_p_warning", r.small_p_warning}};
}

}  // namespace cdlab
