// SPDX-License-Identifier: Apache-2.0
#include "cdlab/nullstellensatz.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <sstream>

#include "cdlab/error.hpp"
#include "cdlab/linalg.hpp"
#include "cdlab/random.hpp"

namespace cdlab {

namespace {

std::string show(const Monomial& mon) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < mon.vars(); ++i) os << (i ? "," : "") << mon[i];
  os << ')';
  return os.str();
}

// C(n, 0..n) mod p from exact integers.
std::vector<std::uint32_t> binomial_row(std::uint32_t n, PrimeModulus modulus) {
  using boost::multiprecision::cpp_int;
  std::vector<cpp_int> row{1};
  for (std::uint32_t i = 1; i <= n; ++i) {
    std::vector<cpp_int> next(i + 1, 0);
    next[0] = next[i] = 1;
    for (std::uint32_t j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  std::vector<std::uint32_t> out;
  for (const auto& c : row) out.push_back(static_cast<std::uint32_t>(c % modulus.value()));
  return out;
}

void check_shape(const std::vector<std::uint32_t>& k, std::uint32_t khat) {
  if (k.empty()) fail(ErrorKind::InvalidInput, "need m >= 1");
  if (khat < 1 || std::any_of(k.begin(), k.end(), [](auto v) { return v < 1; }))
    fail(ErrorKind::InvalidInput, "k_i and khat must be at least 1");
}

}  // namespace

SparsePoly vanishing_poly(PrimeModulus modulus, std::span<const std::uint32_t> roots) {
  if (roots.empty()) fail(ErrorKind::EmptySet, "vanishing polynomial of the empty set");
  auto out = SparsePoly::constant(modulus, 1, 1);
  const auto t = SparsePoly::variable(modulus, 1, 0);
  for (auto a : roots) out = out * (t - SparsePoly::constant(modulus, 1, a));
  return out;
}

IdealSpec::IdealSpec(std::vector<SparsePoly> generators)
    : modulus_(generators.empty() ? PrimeModulus(2) : generators.front().modulus()),
      generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (!(g.modulus() == modulus_)) fail(ErrorKind::ModulusMismatch, "ideal generators over different fields");
    if (g.vars() != 1) fail(ErrorKind::InvalidInput, "ideal generators must be univariate");
    const auto d = g.degree();
    if (d < 1) fail(ErrorKind::InvalidInput, "ideal generators must have degree >= 1");
    const auto deg = static_cast<std::uint32_t>(d);
    if (g.coefficient(Monomial{deg}) != 1) fail(ErrorKind::InvalidInput, "ideal generators must be monic");
    std::vector<std::uint32_t> tail(deg, 0);
    for (const auto& [mon, c] : g.terms())
      if (mon[0] < deg) tail[mon[0]] = modulus_.neg(c);
    degrees_.push_back(deg);
    tails_.push_back(std::move(tail));
  }
}

IdealSpec IdealSpec::from_root_sets(PrimeModulus modulus, const std::vector<std::vector<std::uint32_t>>& roots) {
  std::vector<SparsePoly> gens;
  for (const auto& r : roots) gens.push_back(vanishing_poly(modulus, r));
  IdealSpec out(std::move(gens));
  out.modulus_ = modulus;
  return out;
}

IdealSpec IdealSpec::from_degrees(PrimeModulus modulus, const std::vector<std::uint32_t>& degrees) {
  std::vector<SparsePoly> gens;
  for (auto d : degrees) gens.push_back(SparsePoly::term(modulus, Monomial{d}, 1));
  IdealSpec out(std::move(gens));
  out.modulus_ = modulus;
  return out;
}

bool IdealSpec::is_legal(const Monomial& mon) const noexcept {
  if (mon.vars() != degrees_.size()) return false;
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    if (mon[i] >= degrees_[i]) return false;
  return true;
}

SparsePoly canonical_reduce(const SparsePoly& h, const IdealSpec& ideal, std::span<const std::size_t> order) {
  if (h.vars() != ideal.vars()) fail(ErrorKind::InvalidInput, "polynomial and ideal have different variable counts");
  if (!(h.modulus() == ideal.modulus())) fail(ErrorKind::ModulusMismatch, "polynomial and ideal over different fields");
  std::vector<std::size_t> vars(order.begin(), order.end());
  if (vars.empty()) {
    vars.resize(h.vars());
    std::iota(vars.begin(), vars.end(), std::size_t{0});
  }
  const auto& f = h.modulus();
  SparsePoly out = h;
  for (auto var : vars) {
    const auto k = ideal.degrees().at(var);
    const auto& tail = ideal.tail(var);
    while (true) {
      // Highest power of this variable first.
      const Monomial* target = nullptr;
      for (const auto& [mon, c] : out.terms())
        if (mon[var] >= k && (!target || mon[var] > (*target)[var])) target = &mon;
      if (!target) break;
      const Monomial mon = *target;
      const auto c = out.coefficient(mon);
      out.add_term(mon, f.neg(c));
      for (std::uint32_t j = 0; j < k; ++j) {
        if (tail[j] == 0) continue;
        Monomial next = mon;
        next[var] = mon[var] - k + j;
        out.add_term(next, f.mul(c, tail[j]));
      }
    }
  }
  return out;
}

NssOutcome nss_check(const SparsePoly& h, const SetSystem& grid) {
  if (grid.size() != h.vars()) fail(ErrorKind::InvalidInput, "grid dimension does not match variable count");
  NssOutcome out;
  out.vanishes = true;
  const std::size_t n = grid.size();
  std::vector<std::size_t> idx(n, 0);
  std::vector<std::uint32_t> point(n);
  while (out.vanishes) {
    for (std::size_t i = 0; i < n; ++i) point[i] = grid[i][idx[i]];
    if (h.evaluate(point) != 0) out.vanishes = false;
    std::size_t i = 0;
    while (i < n && ++idx[i] == grid[i].size()) idx[i++] = 0;
    if (i == n) break;
  }
  out.reduced_is_zero = canonical_reduce(h, IdealSpec::from_grid(grid)).is_zero();
  return out;
}

NssSuiteReport nss_suite(PrimeModulus modulus, std::size_t n, std::uint64_t instances, std::uint32_t max_grid,
                         std::uint64_t seed) {
  if (n < 1 || max_grid < 1) fail(ErrorKind::InvalidInput, "need n >= 1 and max_grid >= 1");
  const auto p = modulus.value();
  NssSuiteReport report{p, n, instances, 0, 0};
  auto random_poly = [&](Rng& rng, std::uint32_t max_exp, std::uint32_t terms) {
    SparsePoly f(modulus, n);
    for (std::uint32_t t = 0; t < terms; ++t) {
      std::vector<std::uint32_t> e(n);
      for (auto& x : e) x = static_cast<std::uint32_t>(uniform_below(rng, max_exp + 1));
      f.add_term(Monomial(std::move(e)), static_cast<std::int64_t>(uniform_below(rng, p)));
    }
    return f;
  };
  for (std::uint64_t t = 0; t < instances; ++t) {
    Rng rng(derive_seed(seed, t));
    std::vector<std::vector<std::uint32_t>> sets;
    for (std::size_t i = 0; i < n; ++i) {
      const auto size = 1 + static_cast<std::uint32_t>(uniform_below(rng, std::min(max_grid, p)));
      sets.push_back(random_subset(rng, p, size));
    }
    const SetSystem grid(modulus, sets);
    SparsePoly h(modulus, n);
    if (uniform_below(rng, 2) == 0) {
      const auto ideal = IdealSpec::from_grid(grid);
      for (std::size_t i = 0; i < n; ++i) {
        SparsePoly lifted(modulus, n);
        for (const auto& [mon, c] : ideal.generator(i).terms()) {
          auto e = Monomial::one(n);
          e[i] = mon[0];
          lifted.add_term(e, c);
        }
        h += random_poly(rng, 2, 3) * lifted;
      }
    } else {
      h = random_poly(rng, 4, 1 + static_cast<std::uint32_t>(uniform_below(rng, 6)));
    }
    const auto outcome = nss_check(h, grid);
    report.vanishing += outcome.vanishes;
    report.disagreements += outcome.vanishes != outcome.reduced_is_zero;
  }
  return report;
}

bool in_gamma(const Monomial& mon, const std::vector<std::uint32_t>& k, std::uint32_t khat) noexcept {
  const std::size_t m = k.size();
  if (mon.vars() != m + 1) return false;
  bool saturated = false;
  for (std::size_t i = 0; i < m; ++i) {
    if (mon[i] + 1 > k[i]) return false;
    saturated = saturated || mon[i] + 1 == k[i];
  }
  const auto e = mon[m];
  return e + 1 <= khat && (e == 0 || saturated);
}

std::vector<Monomial> gamma_set(const std::vector<std::uint32_t>& k, std::uint32_t khat) {
  check_shape(k, khat);
  const std::size_t m = k.size();
  std::vector<Monomial> out;
  auto mon = Monomial::one(m + 1);
  while (true) {
    if (in_gamma(mon, k, khat)) out.push_back(mon);
    std::size_t i = 0;
    while (i <= m) {
      const auto bound = i < m ? k[i] : khat;
      if (++mon[i] < bound) break;
      mon[i++] = 0;
    }
    if (i > m) break;
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a.exponents() < b.exponents();
  });
  return out;
}

Monomial phi(const Monomial& mon, const std::vector<std::uint32_t>& k, std::uint32_t khat) {
  if (!in_gamma(mon, k, khat)) fail(ErrorKind::NotInDomain, show(mon) + " is not in Gamma");
  const std::size_t m = k.size();
  std::vector<std::uint32_t> x(mon.exponents().begin(), mon.exponents().begin() + static_cast<std::ptrdiff_t>(m));
  if (const auto e = mon[m]; e > 0) {
    std::size_t j = 0;
    while (x[j] + 1 != k[j]) ++j;
    x[j] += e;
  }
  return Monomial(std::move(x));
}

Monomial phi_inverse(const Monomial& mon, const std::vector<std::uint32_t>& k, std::uint32_t khat) {
  const std::size_t m = k.size();
  if (mon.vars() != m) fail(ErrorKind::NotInDomain, show(mon) + " has the wrong variable count for Delta");
  std::vector<std::uint32_t> y(m + 1, 0);
  std::uint64_t excess = 0;
  for (std::size_t i = 0; i < m; ++i) {
    y[i] = std::min(mon[i], k[i] - 1);
    excess += mon[i] - y[i];
  }
  if (excess >= khat) fail(ErrorKind::NotInDomain, show(mon) + " is not in Delta");
  y[m] = static_cast<std::uint32_t>(excess);
  Monomial pre(std::move(y));
  if (!in_gamma(pre, k, khat) || !(phi(pre, k, khat) == mon))
    fail(ErrorKind::NotInDomain, show(mon) + " is not in Delta");
  return pre;
}

std::vector<Monomial> delta_set(const std::vector<std::uint32_t>& k, std::uint32_t khat) {
  std::vector<Monomial> out;
  for (const auto& g : gamma_set(k, khat)) out.push_back(phi(g, k, khat));
  return out;
}

std::vector<DeltaEntry> delta_ordering(const std::vector<Monomial>& delta, const std::vector<std::uint32_t>& k,
                                       std::uint32_t khat) {
  check_shape(k, khat);
  const std::size_t m = k.size();
  std::vector<DeltaEntry> out;
  for (const auto& d : delta) out.push_back({d, phi_inverse(d, k, khat)});
  std::sort(out.begin(), out.end(), [m](const DeltaEntry& a, const DeltaEntry& b) {
    if (a.delta.degree() != b.delta.degree()) return a.delta.degree() < b.delta.degree();
    if (a.witness[m] != b.witness[m]) return a.witness[m] > b.witness[m];
    return a.delta.exponents() < b.delta.exponents();
  });
  return out;
}

SparsePoly shifted_expansion(const Monomial& delta, PrimeModulus modulus) {
  const std::size_t m = delta.vars();
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::size_t i = 0; i < m; ++i) rows.push_back(binomial_row(delta[i], modulus));
  SparsePoly out(modulus, m + 1);
  // Y_i^{j_i} Z^{f_i - j_i} with coefficient prod C(f_i, j_i).
  std::vector<std::uint32_t> j(m, 0);
  while (true) {
    std::uint32_t c = 1;
    std::vector<std::uint32_t> e(m + 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
      c = modulus.mul(c, rows[i][j[i]]);
      e[i] = j[i];
      e[m] += delta[i] - j[i];
    }
    out.add_term(Monomial(std::move(e)), c);
    std::size_t i = 0;
    while (i < m && ++j[i] > delta[i]) j[i++] = 0;
    if (i == m) break;
  }
  return out;
}

SparsePoly shifted_composition(const SparsePoly& f) {
  SparsePoly out(f.modulus(), f.vars() + 1);
  for (const auto& [mon, c] : f.terms()) out += shifted_expansion(mon, f.modulus()) * c;
  return out;
}

std::size_t OrderingReport::count(char property) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(), [&](const auto& v) { return v.property == property; }));
}

OrderingReport verify_ordering(const std::vector<DeltaEntry>& ordering, const IdealSpec& ideal) {
  OrderingReport report;
  report.entries = ordering.size();
  const auto& f = ideal.modulus();
  std::vector<SparsePoly> expansions;
  for (std::size_t t = 0; t < ordering.size(); ++t) {
    const auto& [delta, mon] = ordering[t];
    auto add = [&](char property, std::string detail) {
      report.violations.push_back({t, property, show(delta) + ": " + std::move(detail)});
    };
    if (t > 0 && ordering[t - 1].delta.degree() > delta.degree()) add('o', "degree decreases along the ordering");
    expansions.push_back(shifted_expansion(delta, f));
    if (!expansions.back().appears(mon)) add('a', "witness " + show(mon) + " has zero coefficient");
    if (mon.degree() != delta.degree()) add('b', "witness degree differs");
    if (!ideal.is_legal(mon)) add('c', "witness " + show(mon) + " is not legal");
    for (std::size_t s = 0; s < t; ++s)
      if (expansions[s].appears(mon)) {
        add('d', "witness appears in earlier entry " + show(ordering[s].delta));
        break;
      }
  }
  return report;
}

SparsePoly interpolate_in_delta(const std::vector<Monomial>& delta,
                                const std::vector<std::vector<std::uint32_t>>& points, PrimeModulus modulus) {
  if (delta.empty()) fail(ErrorKind::NoSolution, "empty monomial set");
  const std::size_t m = delta.front().vars();
  FpMatrix eval(modulus, points.size(), delta.size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    if (points[r].size() != m) fail(ErrorKind::InvalidInput, "point dimension does not match monomials");
    for (std::size_t c = 0; c < delta.size(); ++c)
      eval.set(r, c, SparsePoly::term(modulus, delta[c], 1).evaluate(points[r]));
  }
  const auto basis = kernel_basis(eval);
  if (basis.empty())
    fail(ErrorKind::NoSolution, "evaluation matrix has full column rank; no nonzero interpolant on Delta");
  SparsePoly f(modulus, m);
  for (std::size_t c = 0; c < delta.size(); ++c) f.add_term(delta[c], basis.front().coords[c]);
  return f;
}

ContradictionCheck check_contradiction(const SparsePoly& f, const std::vector<DeltaEntry>& ordering,
                                       const IdealSpec& ideal) {
  ContradictionCheck out;
  const auto reduced = canonical_reduce(shifted_composition(f), ideal);
  out.reduced_nonzero = !reduced.is_zero();
  for (auto it = ordering.rbegin(); it != ordering.rend(); ++it) {
    if (f.coefficient(it->delta) != 0) {
      out.top = it->delta;
      out.top_witness = it->witness;
      out.witness_coefficient = reduced.coefficient(it->witness);
      break;
    }
  }
  return out;
}

}  // namespace cdlab
