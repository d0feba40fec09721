// SPDX-License-Identifier: Apache-2.0
#include "cdlab/dilates.hpp"

#include <algorithm>
#include <limits>

#include "cdlab/error.hpp"
#include "cdlab/parallel.hpp"
#include "cdlab/random.hpp"
#include "cdlab/supports.hpp"

namespace cdlab {

namespace {

std::uint32_t residue(std::int64_t x, PrimeModulus modulus) {
  const auto p = static_cast<std::int64_t>(modulus.value());
  return static_cast<std::uint32_t>(((x % p) + p) % p);
}

std::vector<std::uint32_t> dilate(const std::vector<std::uint32_t>& x, std::uint32_t l, PrimeModulus modulus) {
  std::vector<std::uint32_t> out;
  out.reserve(x.size());
  for (auto a : x) out.push_back(modulus.mul(a, l));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint32_t> sumset(const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y,
                                  PrimeModulus modulus) {
  std::vector<char> seen(modulus.value(), 0);
  for (auto a : x)
    for (auto b : y) seen[modulus.add(a, b)] = 1;
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < modulus.value(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

void require_nonempty(const std::vector<std::uint32_t>& x) {
  if (x.empty()) fail(ErrorKind::EmptySet, "sets must be nonempty");
}

}  // namespace

DilateSpec::DilateSpec(std::vector<std::int64_t> coefficients, PrimeModulus modulus) : modulus_(modulus) {
  if (coefficients.empty()) fail(ErrorKind::InvalidInput, "at least one dilate coefficient is required");
  for (auto c : coefficients) {
    const auto r = residue(c, modulus);
    if (r == 0) fail(ErrorKind::InvalidInput, "dilate coefficient " + std::to_string(c) + " vanishes mod p");
    coefficients_.push_back(r);
  }
}

std::vector<std::uint32_t> residue_set(const std::vector<std::int64_t>& x, PrimeModulus modulus) {
  std::vector<std::uint32_t> out;
  for (auto v : x) out.push_back(residue(v, modulus));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t dilate_sumset(const DilateSpec& spec, const std::vector<std::uint32_t>& x) {
  require_nonempty(x);
  const auto& f = spec.modulus();
  for (auto v : x)
    if (v >= f.value()) fail(ErrorKind::InvalidInput, "set element out of range");
  auto acc = dilate(x, spec.coefficients().front(), f);
  for (std::size_t i = 1; i < spec.coefficients().size(); ++i) acc = sumset(acc, dilate(x, spec.coefficients()[i], f), f);
  return acc.size();
}

std::uint64_t sumset_size(const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y,
                          PrimeModulus modulus) {
  require_nonempty(x);
  require_nonempty(y);
  return sumset(x, y, modulus).size();
}

RuzsaOutcome ruzsa_triangle(const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y,
                            const std::vector<std::uint32_t>& z, PrimeModulus modulus) {
  const auto ys = dilate(y, 1, modulus);
  RuzsaOutcome out;
  out.lhs = sumset_size(x, z, modulus);
  out.rhs_num = sumset_size(x, ys, modulus) * sumset_size(ys, z, modulus);
  out.rhs_den = ys.size();
  out.holds = out.lhs * out.rhs_den <= out.rhs_num;
  return out;
}

RuzsaOutcome ruzsa_check(const std::vector<std::uint32_t>& a3, const std::vector<std::uint32_t>& a4, std::int64_t c,
                         PrimeModulus modulus) {
  require_nonempty(a3);
  require_nonempty(a4);
  const auto cr = residue(c, modulus);
  if (cr == 0) fail(ErrorKind::InvalidInput, "c must be nonzero mod p");
  // X = A4, Y = c A3, Z = c^2 A4.
  return ruzsa_triangle(dilate(a4, 1, modulus), dilate(a3, cr, modulus), dilate(a4, modulus.mul(cr, cr), modulus),
                        modulus);
}

FpMatrix dilate_matrix(std::int64_t c, PrimeModulus modulus) {
  return FpMatrix(modulus, std::vector<std::vector<std::int64_t>>{{1, 0, c, 1}, {0, 1, 1, c}});
}

Section4Report section4_experiment(std::int64_t c, std::uint32_t k, PrimeModulus modulus, std::uint32_t trials,
                                   const Section4Options& options) {
  const auto p = modulus.value();
  if (k < 1 || k > p) fail(ErrorKind::InvalidInput, "k must lie in [1, p]");
  const auto l = dilate_matrix(c, modulus);
  std::vector<std::vector<std::uint32_t>> interval(4);
  for (std::uint32_t i = 1; i <= k; ++i)
    for (auto& s : interval) s.push_back(i % p);
  SetSystem interval_sets(modulus, interval);

  Section4Report report{.c = c,
                        .k = k,
                        .p = p,
                        .trials = trials,
                        .seed = options.seed,
                        .interval_image = image_size(l, interval_sets).size,
                        .interval_cap = 16ULL * k * k,
                        .min_image = 0,
                        .min_witness = interval_sets,
                        .min_probe = "intervals",
                        .min_seed = options.seed,
                        .supker = {},
                        .supker_all_large = false,
                        .small_p_warning = false,
                        .rows = {}};
  report.min_image = report.interval_image;
  const auto big_c = static_cast<long double>(c);
  report.small_p_warning = static_cast<long double>(p) < 20.0L * k * big_c * big_c;
  report.rows.push_back({c, k, p, "intervals", options.seed, report.interval_image});

  for (const auto& w : support_kernel(l)) report.supker.push_back(w.support);
  report.supker_all_large = report.supker.size() == 5 && std::all_of(report.supker.begin(), report.supker.end(),
                                                                      [](IndexSet s) { return s.size() >= 3; });

  // Random trials: per-trial seeds, results merged in trial order.
  std::vector<std::uint64_t> sizes(trials);
  std::vector<std::vector<std::vector<std::uint32_t>>> families(trials);
  parallel_chunks(trials, options.parallelism, [&](std::size_t, std::size_t begin, std::size_t end) {
    ImageCounter counter(l);
    for (std::size_t t = begin; t < end; ++t) {
      Rng rng(derive_seed(options.seed, t));
      std::vector<std::vector<std::uint32_t>> sets;
      for (int i = 0; i < 4; ++i) sets.push_back(random_subset(rng, p, k));
      sizes[t] = counter.count(sets);
      families[t] = std::move(sets);
    }
  });
  for (std::uint32_t t = 0; t < trials; ++t) {
    const auto seed = derive_seed(options.seed, t);
    report.rows.push_back({c, k, p, "random", seed, sizes[t]});
    if (sizes[t] < report.min_image) {
      report.min_image = sizes[t];
      report.min_witness = SetSystem(modulus, families[t]);
      report.min_probe = "random";
      report.min_seed = seed;
    }
  }

  if (options.heuristics) {
    HeuristicOptions h;
    h.restarts = options.restarts;
    h.steps = options.steps;
    h.seed = derive_seed(options.seed, std::numeric_limits<std::uint32_t>::max());
    h.parallelism = options.parallelism;
    const auto found = mu_heuristic(l, SizeVector(std::vector<std::uint32_t>(4, k), modulus), h);
    report.rows.push_back({c, k, p, "heuristic:" + found.probe, h.seed, found.mu});
    if (found.mu < report.min_image) {
      report.min_image = found.mu;
      report.min_witness = found.witness;
      report.min_probe = "heuristic:" + found.probe;
      report.min_seed = h.seed;
    }
  }
  return report;
}

}  // namespace cdlab
