// SPDX-License-Identifier: Apache-2.0
#include "cdlab/supports.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <string>

#include "cdlab/error.hpp"
#include "cdlab/parallel.hpp"
#include "cdlab/random.hpp"

namespace cdlab {

namespace {

__extension__ typedef __int128 Int128;

std::size_t rank_of(const FpMatrix& l, IndexSet cols) {
  if (cols.empty()) return 0;
  return rank(l.select_columns(cols));
}

std::vector<std::uint8_t> subset_ranks(const FpMatrix& l, unsigned parallelism) {
  const std::size_t count = std::size_t{1} << l.cols();
  std::vector<std::uint8_t> ranks(count, 0);
  parallel_chunks(count, parallelism, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t)
      ranks[t] = static_cast<std::uint8_t>(rank_of(l, IndexSet(static_cast<std::uint32_t>(t))));
  });
  return ranks;
}

// Subset Moebius inversion of g[T] = p^{nullity(T)}: afterwards g[S] counts
// kernel vectors with support exactly S.
template <class Int>
std::vector<bool> exact_support_flags(const std::vector<std::uint8_t>& ranks, std::size_t n,
                                      std::uint32_t p) {
  const std::size_t count = std::size_t{1} << n;
  std::vector<Int> powers(n + 1, Int(1));
  for (std::size_t i = 1; i <= n; ++i) powers[i] = powers[i - 1] * Int(p);
  std::vector<Int> g(count);
  for (std::size_t t = 0; t < count; ++t)
    g[t] = powers[static_cast<std::size_t>(std::popcount(static_cast<std::uint32_t>(t))) - ranks[t]];
  for (std::size_t bit = 0; bit < n; ++bit)
    for (std::size_t s = 0; s < count; ++s)
      if (s & (std::size_t{1} << bit)) g[s] -= g[s ^ (std::size_t{1} << bit)];
  std::vector<bool> flags(count);
  for (std::size_t s = 0; s < count; ++s) flags[s] = g[s] != Int(0);
  return flags;
}

// Finds a kernel vector of L with support exactly `s`, given that one exists.
KernelVector witness_for(const FpMatrix& l, IndexSet s) {
  const auto& f = l.modulus();
  const auto idx = s.elements();
  const auto local = kernel_basis(l.select_columns(s));
  const std::size_t d = local.size();
  std::vector<std::uint32_t> coeff(d, 0);

  auto combine = [&]() -> std::vector<std::uint32_t> {
    std::vector<std::uint32_t> v(l.cols(), 0);
    for (std::size_t j = 0; j < d; ++j) {
      if (coeff[j] == 0) continue;
      for (std::size_t i = 0; i < idx.size(); ++i)
        v[idx[i]] = f.add(v[idx[i]], f.mul(coeff[j], local[j].coords[i]));
    }
    return v;
  };
  auto full = [&](const std::vector<std::uint32_t>& v) {
    return std::all_of(idx.begin(), idx.end(), [&](auto i) { return v[i] != 0; });
  };

  Rng rng(mix_seed(s.bits()));
  for (int attempt = 0; attempt < 256; ++attempt) {
    for (auto& c : coeff) c = static_cast<std::uint32_t>(uniform_below(rng, f.value()));
    if (auto v = combine(); full(v)) return make_kernel_vector(std::move(v));
  }
  // Exhaustive odometer; terminates because a witness is known to exist.
  std::fill(coeff.begin(), coeff.end(), 0);
  while (true) {
    std::size_t j = 0;
    while (j < d && ++coeff[j] == f.value()) coeff[j++] = 0;
    if (j == d) break;
    if (auto v = combine(); full(v)) return make_kernel_vector(std::move(v));
  }
  fail(ErrorKind::BadSupport, s.to_string() + " has no full-support kernel vector");
}

std::vector<SupportWitness> by_subset_count(const FpMatrix& l, const SupportOptions& options) {
  const std::size_t n = l.cols();
  const auto ranks = subset_ranks(l, options.parallelism);
  const std::size_t nullity = n - ranks.back();
  // Partial sums stay below 2^n p^nullity in magnitude.
  const double bits = static_cast<double>(nullity) * std::log2(static_cast<double>(l.modulus().value())) +
                      static_cast<double>(n) + 2.0;
  const auto flags = bits < 126.0
                         ? exact_support_flags<Int128>(ranks, n, l.modulus().value())
                         : exact_support_flags<boost::multiprecision::cpp_int>(ranks, n, l.modulus().value());
  std::vector<SupportWitness> out;
  for (std::size_t s = 1; s < flags.size(); ++s) {
    if (!flags[s]) continue;
    IndexSet set(static_cast<std::uint32_t>(s));
    out.push_back({set, witness_for(l, set)});
  }
  return out;
}

std::vector<SupportWitness> by_enumeration(const FpMatrix& l, const SupportOptions& options) {
  const auto basis = kernel_basis(l);
  const auto& f = l.modulus();
  const std::size_t d = basis.size();
  const double total = std::pow(static_cast<double>(f.value()), static_cast<double>(d));
  if (total > static_cast<double>(options.max_kernel_vectors))
    fail(ErrorKind::TooLarge, "kernel has " + std::to_string(f.value()) + "^" + std::to_string(d) +
                                  " vectors, over the enumeration budget");
  std::vector<std::uint32_t> coeff(d, 0);
  std::vector<SupportWitness> out;
  std::vector<bool> seen(std::size_t{1} << l.cols(), false);
  while (true) {
    std::size_t j = 0;
    while (j < d && ++coeff[j] == f.value()) coeff[j++] = 0;
    if (j == d) break;
    std::vector<std::uint32_t> v(l.cols(), 0);
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t i = 0; i < l.cols(); ++i) v[i] = f.add(v[i], f.mul(coeff[b], basis[b].coords[i]));
    auto kv = make_kernel_vector(std::move(v));
    if (!seen[kv.support.bits()]) {
      seen[kv.support.bits()] = true;
      out.push_back({kv.support, std::move(kv)});
    }
  }
  return out;
}

void check_rank_m(const FpMatrix& l) {
  if (rank(l) != l.rows())
    fail(ErrorKind::RankDeficient, "rank is " + std::to_string(rank(l)) + " but the map has " +
                                       std::to_string(l.rows()) + " rows");
}

}  // namespace

std::vector<SupportWitness> support_kernel(const FpMatrix& l, const SupportOptions& options) {
  if (l.cols() > options.max_columns || l.cols() > IndexSet::kMaxIndices)
    fail(ErrorKind::TooLarge, std::to_string(l.cols()) + " columns exceeds the subset budget of " +
                                  std::to_string(options.max_columns));
  auto out = options.method == SupportMethod::SubsetCount ? by_subset_count(l, options)
                                                          : by_enumeration(l, options);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.support < b.support; });
  return out;
}

std::vector<SupportWitness> minimal_supports(const FpMatrix& l, const SupportOptions& options) {
  auto all = support_kernel(l, options);
  if (all.empty()) fail(ErrorKind::TrivialKernel, "ker(L) = {0}");
  std::vector<SupportWitness> out;
  // Sorted by size, so every potential proper subset is already in `out`.
  for (auto& w : all) {
    bool minimal = std::none_of(out.begin(), out.end(),
                                [&](const auto& m) { return m.support.subset_of(w.support); });
    if (minimal) out.push_back(std::move(w));
  }
  return out;
}

bool is_circuit(const FpMatrix& l, IndexSet s) {
  if (s.empty() || s.bits() >> l.cols() != 0) return false;
  if (rank_of(l, s) != s.size() - 1) return false;
  for (auto i : s.elements())
    if (rank_of(l, s.without(i)) != s.size() - 1) return false;
  return true;
}

bool unique_support_within(const FpMatrix& l, IndexSet s, IndexSet t) {
  return s.subset_of(t) && is_circuit(l, s) && rank_of(l, t) == t.size() - 1;
}

IndexSet choose_complement(const FpMatrix& l, IndexSet s) {
  check_rank_m(l);
  if (!is_circuit(l, s)) fail(ErrorKind::BadSupport, s.to_string() + " is not a minimal support");
  IndexSet t = s;
  for (std::size_t j = 0; j < l.cols(); ++j) {
    if (t.contains(j)) continue;
    if (rank_of(l, t.with(j)) == t.size()) t = t.with(j);
  }
  return t.minus(s);
}

std::vector<IndexSet> all_complements(const FpMatrix& l, IndexSet s) {
  check_rank_m(l);
  if (!is_circuit(l, s)) fail(ErrorKind::BadSupport, s.to_string() + " is not a minimal support");
  const std::size_t target = l.rows() + 1 - s.size();
  const auto rest = IndexSet::full(l.cols()).minus(s).elements();
  std::vector<IndexSet> out;
  if (target > rest.size()) return out;
  // Lexicographic walk over target-subsets of `rest`.
  std::vector<std::size_t> pick(target);
  for (std::size_t i = 0; i < target; ++i) pick[i] = i;
  while (true) {
    IndexSet sp;
    for (auto i : pick) sp = sp.with(rest[i]);
    if (rank_of(l, s | sp) == l.rows()) out.push_back(sp);
    std::size_t i = target;
    while (i > 0 && pick[i - 1] == rest.size() - target + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < target; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

SupportProfile support_profile(const FpMatrix& l, const SupportOptions& options) {
  SupportProfile out;
  out.supker = support_kernel(l, options);
  if (out.supker.empty()) fail(ErrorKind::TrivialKernel, "ker(L) = {0}");
  for (const auto& w : minimal_supports(l, options)) out.minimal_supports.push_back(w.support);
  out.chosen_s = out.minimal_supports.front();
  out.chosen_sprime = choose_complement(l, out.chosen_s);
  return out;
}

}  // namespace cdlab
