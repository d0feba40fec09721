// SPDX-License-Identifier: Apache-2.0
#include "cdlab/image.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <string>
#include <unordered_set>

#include "cdlab/error.hpp"
#include "cdlab/parallel.hpp"
#include "cdlab/random.hpp"

namespace cdlab {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t product_size(std::span<const std::vector<std::uint32_t>> sets) {
  std::uint64_t total = 1;
  for (const auto& s : sets) total = saturating_mul(total, s.size());
  return total;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  __extension__ unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

// ---------------------------------------------------------------------------
// SetSystem

namespace {
std::vector<std::vector<std::uint32_t>> to_residues(PrimeModulus modulus,
                                                    const std::vector<std::vector<std::int64_t>>& sets) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& s : sets) {
    std::vector<std::uint32_t> v;
    for (auto x : s) {
      if (x < 0 || x >= static_cast<std::int64_t>(modulus.value()))
        fail(ErrorKind::InvalidInput, "set element " + std::to_string(x) + " outside [0, p)");
      v.push_back(static_cast<std::uint32_t>(x));
    }
    out.push_back(std::move(v));
  }
  return out;
}
}  // namespace

SetSystem::SetSystem(PrimeModulus modulus, const std::vector<std::vector<std::int64_t>>& sets)
    : SetSystem(modulus, to_residues(modulus, sets)) {}

SetSystem::SetSystem(PrimeModulus modulus, std::vector<std::vector<std::uint32_t>> sets)
    : modulus_(modulus), sets_(std::move(sets)) {
  for (auto& s : sets_) {
    if (s.empty()) fail(ErrorKind::EmptySet, "sets in a set system must be nonempty");
    for (auto x : s)
      if (x >= modulus.value()) fail(ErrorKind::InvalidInput, "set element outside [0, p)");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
}

SetSystem SetSystem::intervals(PrimeModulus modulus, const std::vector<std::uint32_t>& k, std::int64_t start) {
  std::vector<std::vector<std::uint32_t>> sets;
  for (auto ki : k) {
    if (ki < 1 || ki > modulus.value()) fail(ErrorKind::InvalidInput, "interval length outside [1, p]");
    std::vector<std::uint32_t> s;
    for (std::uint32_t j = 0; j < ki; ++j) s.push_back(modulus.reduce(start + j));
    sets.push_back(std::move(s));
  }
  return SetSystem(modulus, std::move(sets));
}

std::vector<std::uint32_t> SetSystem::sizes() const {
  std::vector<std::uint32_t> out;
  for (const auto& s : sets_) out.push_back(static_cast<std::uint32_t>(s.size()));
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration engine

struct ImageCounter::Impl {
  enum class Mode { Dense, Hashed, Tuples };

  FpMatrix l;
  ImageOptions options;
  std::size_t m;
  std::uint32_t p;
  Mode mode;
  std::vector<std::uint64_t> place;  // p^r

  std::vector<std::uint64_t> bits;
  std::vector<std::uint32_t> touched;
  std::unordered_set<std::uint64_t> hashed;
  std::set<std::vector<std::uint32_t>> tuples;
  std::uint64_t distinct = 0;

  // Per-column step deltas, flattened: steps[offset[i] + t] holds
  // col_i * (A_i[t] - A_i[t-1]) (t = 0 wraps from the last element).
  std::vector<std::uint32_t> steps;
  std::vector<std::size_t> offset;
  std::vector<std::uint32_t> acc;
  std::vector<std::uint32_t> idx;

  Impl(const FpMatrix& map, const ImageOptions& opts)
      : l(map), options(opts), m(map.rows()), p(map.modulus().value()) {
    std::uint64_t space = 1;
    bool fits = true;
    for (std::size_t r = 0; r < m; ++r) {
      place.push_back(space);
      if (space > kSaturated / p / 2) {
        fits = false;
        break;
      }
      space *= p;
    }
    if (!fits) {
      mode = Mode::Tuples;
    } else if (space <= options.dense_limit) {
      mode = Mode::Dense;
      bits.assign((space + 63) / 64, 0);
    } else {
      mode = Mode::Hashed;
    }
    acc.resize(m);
  }

  std::uint64_t encode() const {
    std::uint64_t code = 0;
    for (std::size_t r = 0; r < m; ++r) code += acc[r] * place[r];
    return code;
  }

  bool mark() {
    switch (mode) {
      case Mode::Dense: {
        const auto code = encode();
        auto& word = bits[code >> 6];
        const auto bit = std::uint64_t{1} << (code & 63);
        if (word & bit) return false;
        if (word == 0) touched.push_back(static_cast<std::uint32_t>(code >> 6));
        word |= bit;
        return true;
      }
      case Mode::Hashed:
        return hashed.insert(encode()).second;
      case Mode::Tuples:
        return tuples.insert(acc).second;
    }
    return false;
  }

  void clear() {
    for (auto w : touched) bits[w] = 0;
    touched.clear();
    hashed.clear();
    tuples.clear();
    distinct = 0;
  }

  void prepare(std::span<const std::vector<std::uint32_t>> sets) {
    const auto& f = l.modulus();
    const std::size_t n = sets.size();
    offset.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + sets[i].size() * m;
    steps.resize(offset[n]);
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& s = sets[i];
      const std::size_t k = s.size();
      for (std::size_t t = 0; t < k; ++t) {
        const auto diff = f.sub(s[t], s[t == 0 ? k - 1 : t - 1]);
        for (std::size_t r = 0; r < m; ++r) steps[offset[i] + t * m + r] = f.mul(l(r, i), diff);
      }
      for (std::size_t r = 0; r < m; ++r) acc[r] = f.add(acc[r], f.mul(l(r, i), s[0]));
    }
    idx.assign(n, 0);
  }

  // Marks every image point; stops once `stop_at` distinct points are seen.
  void run(std::span<const std::vector<std::uint32_t>> sets, std::uint64_t stop_at) {
    const std::size_t n = sets.size();
    prepare(sets);
    while (true) {
      if (mark() && ++distinct >= stop_at) return;
      std::size_t i = 0;
      for (; i < n; ++i) {
        const std::size_t k = sets[i].size();
        if (++idx[i] == k) idx[i] = 0;
        const std::uint32_t* d = &steps[offset[i] + idx[i] * m];
        for (std::size_t r = 0; r < m; ++r) {
          const auto s = acc[r] + d[r];
          acc[r] = s >= p ? s - p : s;
        }
        if (idx[i] != 0) break;
      }
      if (i == n) return;
    }
  }

  void merge_from(Impl& other) {
    switch (mode) {
      case Mode::Dense:
        for (auto w : other.touched) {
          if (bits[w] == 0) touched.push_back(w);
          bits[w] |= other.bits[w];
        }
        distinct = 0;
        for (auto w : touched) distinct += static_cast<std::uint64_t>(std::popcount(bits[w]));
        break;
      case Mode::Hashed:
        hashed.merge(other.hashed);
        distinct = hashed.size();
        break;
      case Mode::Tuples:
        tuples.merge(other.tuples);
        distinct = tuples.size();
        break;
    }
  }

  std::vector<std::vector<std::uint32_t>> points() const {
    std::vector<std::vector<std::uint32_t>> out;
    auto decode = [&](std::uint64_t code) {
      std::vector<std::uint32_t> t(m);
      for (std::size_t r = 0; r < m; ++r) {
        t[r] = static_cast<std::uint32_t>(code % p);
        code /= p;
      }
      return t;
    };
    switch (mode) {
      case Mode::Dense:
        for (auto w : touched)
          for (auto b = bits[w]; b != 0; b &= b - 1)
            out.push_back(decode(std::uint64_t{w} * 64 + static_cast<std::uint64_t>(std::countr_zero(b))));
        break;
      case Mode::Hashed:
        for (auto c : hashed) out.push_back(decode(c));
        break;
      case Mode::Tuples:
        out.assign(tuples.begin(), tuples.end());
        break;
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

ImageCounter::ImageCounter(const FpMatrix& l, const ImageOptions& options)
    : impl_(std::make_unique<Impl>(l, options)) {}
ImageCounter::~ImageCounter() = default;
ImageCounter::ImageCounter(ImageCounter&&) noexcept = default;
ImageCounter& ImageCounter::operator=(ImageCounter&&) noexcept = default;

std::uint64_t ImageCounter::count(std::span<const std::vector<std::uint32_t>> sets, std::uint64_t stop_at) {
  if (sets.size() != impl_->l.cols()) fail(ErrorKind::InvalidInput, "one set per column is required");
  if (product_size(sets) > impl_->options.max_points)
    fail(ErrorKind::BudgetExceeded, "product set exceeds the enumeration cap of " +
                                        std::to_string(impl_->options.max_points) + " points");
  impl_->clear();
  impl_->run(sets, stop_at);
  const auto result = impl_->distinct;
  impl_->clear();
  return result;
}

ImageResult image_size(const FpMatrix& l, const SetSystem& a, bool keep_points, const ImageOptions& options) {
  if (a.size() != l.cols())
    fail(ErrorKind::InvalidInput, "set system has " + std::to_string(a.size()) + " sets for " +
                                      std::to_string(l.cols()) + " columns");
  if (!(a.modulus() == l.modulus())) fail(ErrorKind::ModulusMismatch, "set system and map disagree on p");
  const auto& sets = a.sets();
  const auto total = product_size(sets);
  if (total > options.max_points)
    fail(ErrorKind::BudgetExceeded, "product set has " +
                                        (total == kSaturated ? std::string("> 2^64") : std::to_string(total)) +
                                        " points, over the cap of " + std::to_string(options.max_points));

  ImageResult out;
  if (l.cols() == 0) {
    out.size = 1;
    if (keep_points) out.points = std::vector<std::vector<std::uint32_t>>{std::vector<std::uint32_t>(l.rows(), 0)};
    return out;
  }

  // Split on the last set (the slowest odometer digit) and union the marks.
  const auto& last = sets.back();
  const unsigned workers = total < (1U << 16) ? 1U : options.parallelism;
  const std::size_t chunks = chunk_count(last.size(), workers);
  std::vector<std::unique_ptr<ImageCounter::Impl>> parts(chunks);
  parallel_chunks(last.size(), workers, [&](std::size_t w, std::size_t begin, std::size_t end) {
    auto part = std::make_unique<ImageCounter::Impl>(l, options);
    std::vector<std::vector<std::uint32_t>> view(sets.begin(), sets.end());
    view.back().assign(last.begin() + static_cast<std::ptrdiff_t>(begin),
                       last.begin() + static_cast<std::ptrdiff_t>(end));
    part->run(view, kSaturated);
    parts[w] = std::move(part);
  });
  for (std::size_t w = 1; w < parts.size(); ++w) parts[0]->merge_from(*parts[w]);
  out.size = parts[0]->distinct;
  if (keep_points) out.points = parts[0]->points();
  return out;
}

std::uint64_t gencd_image_size(PrimeModulus modulus, const std::vector<std::vector<std::uint32_t>>& u,
                               const std::vector<std::uint32_t>& v) {
  const std::size_t m = u.size();
  FpMatrix l(modulus, m, m + 1);
  for (std::size_t r = 0; r < m; ++r) {
    l.set(r, r, 1);
    l.set(r, m, 1);
  }
  auto sets = u;
  sets.push_back(v);
  return image_size(l, SetSystem(modulus, std::move(sets))).size;
}

std::uint64_t integer_image_size(const std::vector<std::vector<std::int64_t>>& l,
                                 const std::vector<std::vector<std::int64_t>>& sets, std::uint64_t max_points) {
  const std::size_t m = l.size();
  const std::size_t n = sets.size();
  for (const auto& row : l)
    if (row.size() != n) fail(ErrorKind::InvalidInput, "integer matrix width does not match set count");
  std::uint64_t total = 1;
  for (const auto& s : sets) {
    if (s.empty()) fail(ErrorKind::EmptySet, "sets must be nonempty");
    total = saturating_mul(total, s.size());
  }
  if (total > max_points) fail(ErrorKind::BudgetExceeded, "integer product set over the enumeration cap");
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<std::int64_t> y(m, 0);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t i = 0; i < n; ++i) y[r] += l[r][i] * sets[i][idx[i]];
    seen.insert(std::move(y));
    std::size_t i = 0;
    while (i < n && ++idx[i] == sets[i].size()) idx[i++] = 0;
    if (i == n) break;
  }
  return seen.size();
}

// ---------------------------------------------------------------------------
// Exhaustive search

namespace {

// Index of the first set with at least two elements; its smallest nonzero
// element is normalized to 1 by the common scaling.
std::optional<std::size_t> scaling_anchor(const std::vector<std::uint32_t>& k) {
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] >= 2) return i;
  return std::nullopt;
}

// Sorted sets {fixed...} u C(r, [from, p)), in lexicographic order.
std::vector<std::vector<std::uint32_t>> normalized_sets(std::uint32_t k, std::uint32_t p, bool anchor) {
  std::vector<std::uint32_t> head = anchor ? std::vector<std::uint32_t>{0, 1} : std::vector<std::uint32_t>{0};
  if (k == 1) return {{0}};
  const std::uint32_t from = static_cast<std::uint32_t>(head.size());
  const std::uint32_t r = k - from;
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> pick(r);
  for (std::uint32_t i = 0; i < r; ++i) pick[i] = from + i;
  const std::uint32_t span = p - from;
  while (true) {
    auto s = head;
    s.insert(s.end(), pick.begin(), pick.end());
    out.push_back(std::move(s));
    std::uint32_t i = r;
    while (i > 0 && pick[i - 1] == from + span - r + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::uint32_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// True iff `sets` is lexicographically minimal among its images under
// per-set translations that keep 0 in each set combined with a common
// scaling that keeps 1 in the anchor set.
class CanonicityCheck {
 public:
  CanonicityCheck(PrimeModulus f, std::size_t anchor) : f_(f), anchor_(anchor), inverse_(f.value(), 0) {
    for (std::uint32_t x = 1; x < f.value(); ++x) inverse_[x] = f.inv(x);
  }

  bool operator()(const std::vector<std::vector<std::uint32_t>>& sets) {
    const auto& a = sets[anchor_];
    for (auto ta : a) {
      for (auto sa : a) {
        if (sa == ta) continue;
        const auto scale = inverse_[f_.sub(sa, ta)];
        for (std::size_t j = 0; j < sets.size(); ++j) {
          if (sets[j].size() == 1) continue;
          best_image(sets[j], scale, j == anchor_ ? std::optional<std::uint32_t>(ta) : std::nullopt);
          const auto cmp = best_ <=> sets[j];
          if (cmp < 0) return false;
          if (cmp > 0) break;
        }
      }
    }
    return true;
  }

 private:
  // Lexicographically smallest scale * (A - t) over t in A (or the fixed t).
  void best_image(const std::vector<std::uint32_t>& s, std::uint32_t scale, std::optional<std::uint32_t> fixed) {
    bool have = false;
    for (auto t : s) {
      if (fixed && t != *fixed) continue;
      work_.clear();
      for (auto x : s) work_.push_back(f_.mul(scale, f_.sub(x, t)));
      std::sort(work_.begin(), work_.end());
      if (!have || work_ < best_) {
        best_.swap(work_);
        have = true;
      }
    }
  }

  PrimeModulus f_;
  std::size_t anchor_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> work_;
  std::vector<std::uint32_t> best_;
};

struct SearchHit {
  std::uint64_t mu = kSaturated;
  std::uint64_t ordinal = kSaturated;
};

bool better(const SearchHit& a, const SearchHit& b) {
  return a.mu < b.mu || (a.mu == b.mu && a.ordinal < b.ordinal);
}

}  // namespace

std::uint64_t normalized_space_size(const std::vector<std::uint32_t>& k, std::uint32_t p) {
  const auto anchor = scaling_anchor(k);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] <= 1) continue;
    const bool is_anchor = anchor && *anchor == i;
    total = saturating_mul(total, is_anchor ? binomial_saturating(p - 2, k[i] - 2)
                                            : binomial_saturating(p - 1, k[i] - 1));
  }
  return total;
}

ExtremalResult mu_exact(const FpMatrix& l, const SizeVector& k, const ExactSearchOptions& options) {
  if (k.size() != l.cols()) fail(ErrorKind::InvalidInput, "size vector length does not match column count");
  if (!(k.modulus() == l.modulus())) fail(ErrorKind::ModulusMismatch, "size vector and map disagree on p");
  const auto p = l.modulus().value();
  const auto& kv = k.values();
  const auto space = normalized_space_size(kv, p);
  if (space > options.max_candidates)
    fail(ErrorKind::BudgetExceeded, "reduced search space has " +
                                        (space == kSaturated ? std::string("> 2^64") : std::to_string(space)) +
                                        " families, over the cap of " + std::to_string(options.max_candidates));
  const auto anchor = scaling_anchor(kv);
  const std::size_t n = kv.size();

  std::vector<std::vector<std::vector<std::uint32_t>>> lists(n);
  for (std::size_t i = 0; i < n; ++i) lists[i] = normalized_sets(kv[i], p, anchor && *anchor == i);

  auto family_at = [&](std::uint64_t ordinal) {
    std::vector<std::vector<std::uint32_t>> sets(n);
    for (std::size_t i = 0; i < n; ++i) {
      sets[i] = lists[i][ordinal % lists[i].size()];
      ordinal /= lists[i].size();
    }
    return sets;
  };

  if (!anchor) {
    auto sets = family_at(0);
    return {1, SetSystem(l.modulus(), std::move(sets)), SearchMethod::Exhaustive, "exhaustive"};
  }

  const std::size_t chunks = chunk_count(space, options.parallelism);
  std::vector<SearchHit> hits(chunks);
  parallel_chunks(space, options.parallelism, [&](std::size_t w, std::size_t begin, std::size_t end) {
    ImageCounter counter(l, options.image);
    CanonicityCheck canonical(l.modulus(), *anchor);
    SearchHit best;
    std::vector<std::size_t> digit(n);
    std::uint64_t rest = begin;
    for (std::size_t i = 0; i < n; ++i) {
      digit[i] = rest % lists[i].size();
      rest /= lists[i].size();
    }
    auto sets = family_at(begin);
    for (std::uint64_t ordinal = begin; ordinal < end; ++ordinal) {
      if (canonical(sets)) {
        const auto c = counter.count(sets, best.mu);
        if (c < best.mu) best = {c, ordinal};
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (++digit[i] == lists[i].size()) digit[i] = 0;
        sets[i] = lists[i][digit[i]];
        if (digit[i] != 0) break;
      }
    }
    hits[w] = best;
  });
  SearchHit best;
  for (const auto& h : hits)
    if (better(h, best)) best = h;
  return {best.mu, SetSystem(l.modulus(), family_at(best.ordinal)), SearchMethod::Exhaustive, "exhaustive"};
}

ExtremalResult mu_symmetric_exact(const FpMatrix& l, std::uint32_t k, const ExactSearchOptions& options) {
  const auto p = l.modulus().value();
  if (k < 1 || k > p) fail(ErrorKind::InvalidInput, "set size outside [1, p]");
  const auto n = l.cols();
  auto replicate = [&](const std::vector<std::uint32_t>& a) {
    return std::vector<std::vector<std::uint32_t>>(n, a);
  };
  if (k == 1) return {1, SetSystem(l.modulus(), replicate({0})), SearchMethod::Exhaustive, "symmetric"};
  const auto space = binomial_saturating(p - 2, k - 2);
  if (space > options.max_candidates)
    fail(ErrorKind::BudgetExceeded, "symmetric search space has " + std::to_string(space) + " sets");
  const auto candidates = normalized_sets(k, p, true);
  const std::size_t chunks = chunk_count(candidates.size(), options.parallelism);
  std::vector<SearchHit> hits(chunks);
  parallel_chunks(candidates.size(), options.parallelism, [&](std::size_t w, std::size_t begin, std::size_t end) {
    ImageCounter counter(l, options.image);
    SearchHit best;
    for (std::size_t i = begin; i < end; ++i) {
      const auto c = counter.count(replicate(candidates[i]), best.mu);
      if (c < best.mu) best = {c, i};
    }
    hits[w] = best;
  });
  SearchHit best;
  for (const auto& h : hits)
    if (better(h, best)) best = h;
  return {best.mu, SetSystem(l.modulus(), replicate(candidates[best.ordinal])), SearchMethod::Exhaustive,
          "symmetric"};
}

// ---------------------------------------------------------------------------
// Heuristic probes

ExtremalResult mu_heuristic(const FpMatrix& l, const SizeVector& k, const HeuristicOptions& options) {
  if (k.size() != l.cols()) fail(ErrorKind::InvalidInput, "size vector length does not match column count");
  if (!(k.modulus() == l.modulus())) fail(ErrorKind::ModulusMismatch, "size vector and map disagree on p");
  const auto& f = l.modulus();
  const auto p = f.value();
  const auto& kv = k.values();
  const std::size_t n = kv.size();

  ImageCounter counter(l, options.image);
  std::uint64_t best = kSaturated;
  std::vector<std::vector<std::uint32_t>> best_sets;
  std::string best_probe = "none";
  auto consider = [&](const std::vector<std::vector<std::uint32_t>>& sets, const char* label) {
    const auto c = counter.count(sets, best);
    if (c < best) {
      best = c;
      best_sets = sets;
      best_probe = label;
    }
  };
  auto progression = [&](const std::vector<std::uint32_t>& d) {
    std::vector<std::vector<std::uint32_t>> sets(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < kv[i]; ++j) sets[i].push_back(f.mul(j, d[i]));
    return sets;
  };
  auto has = [&](Probe probe) {
    return std::find(options.probes.begin(), options.probes.end(), probe) != options.probes.end();
  };

  if (has(Probe::Intervals) || options.probes.empty()) consider(progression(std::vector<std::uint32_t>(n, 1)), "intervals");

  if (has(Probe::ArithmeticProgressions) && n > 0 && p > 2) {
    // A common difference is a common scaling of the intervals, so d_1 = 1.
    std::uint64_t combos = 1;
    for (std::size_t i = 1; i < n; ++i) combos = saturating_mul(combos, p - 1);
    std::vector<std::uint32_t> d(n, 1);
    if (combos <= options.max_progressions) {
      while (true) {
        consider(progression(d), "progressions");
        std::size_t i = 1;
        while (i < n && ++d[i] == p) d[i++] = 1;
        if (i >= n) break;
      }
    } else {
      Rng rng(derive_seed(options.seed, 0x5eed));
      for (std::uint64_t t = 0; t < options.max_progressions; ++t) {
        for (std::size_t i = 1; i < n; ++i) d[i] = 1 + static_cast<std::uint32_t>(uniform_below(rng, p - 1));
        consider(progression(d), "progressions");
      }
    }
  }

  if (has(Probe::LocalSearch) && options.restarts > 0) {
    std::vector<std::size_t> movable;
    for (std::size_t i = 0; i < n; ++i)
      if (kv[i] < p) movable.push_back(i);
    const auto seed_sets = best_sets;
    const std::size_t chunks = chunk_count(options.restarts, options.parallelism);
    std::vector<std::pair<std::uint64_t, std::vector<std::vector<std::uint32_t>>>> found(chunks);
    parallel_chunks(options.restarts, options.parallelism, [&](std::size_t w, std::size_t begin, std::size_t end) {
      ImageCounter local(l, options.image);
      std::uint64_t chunk_best = kSaturated;
      std::vector<std::vector<std::uint32_t>> chunk_sets;
      for (std::size_t r = begin; r < end; ++r) {
        Rng rng(derive_seed(options.seed, r));
        std::vector<std::vector<std::uint32_t>> cur;
        if (r == 0 && !seed_sets.empty()) {
          cur = seed_sets;
        } else {
          for (std::size_t i = 0; i < n; ++i) cur.push_back(random_subset(rng, p, kv[i]));
        }
        auto value = local.count(cur);
        for (std::uint32_t step = 0; step < options.steps && !movable.empty(); ++step) {
          const auto i = movable[uniform_below(rng, movable.size())];
          auto trial = cur;
          auto& s = trial[i];
          std::uint32_t incoming;
          do {
            incoming = static_cast<std::uint32_t>(uniform_below(rng, p));
          } while (std::binary_search(s.begin(), s.end(), incoming));
          s.erase(s.begin() + static_cast<std::ptrdiff_t>(uniform_below(rng, s.size())));
          s.insert(std::upper_bound(s.begin(), s.end(), incoming), incoming);
          const auto c = local.count(trial, value);
          if (c < value) {
            value = c;
            cur = std::move(trial);
          }
        }
        if (value < chunk_best) {
          chunk_best = value;
          chunk_sets = std::move(cur);
        }
      }
      found[w] = {chunk_best, std::move(chunk_sets)};
    });
    for (auto& [value, sets] : found) {
      if (value < best) {
        best = value;
        best_sets = std::move(sets);
        best_probe = "local_search";
      }
    }
  }

  if (best_sets.empty()) fail(ErrorKind::InvalidInput, "no probe produced a candidate");
  return {best, SetSystem(l.modulus(), std::move(best_sets)), SearchMethod::Heuristic, best_probe};
}

std::string to_string(SearchMethod method) {
  return method == SearchMethod::Exhaustive ? "exhaustive" : "heuristic";
}

std::string to_string(Probe probe) {
  switch (probe) {
    case Probe::Intervals: return "intervals";
    case Probe::ArithmeticProgressions: return "progressions";
    case Probe::LocalSearch: return "local_search";
  }
  return "unknown";
}

}  // namespace cdlab

namespace cdlab {

FpMatrix canonical_corank_one(std::size_t n, std::size_t s, PrimeModulus modulus) {
  if (n < 2 || s < 1 || s > n) fail(ErrorKind::InvalidInput, "need n >= 2 and 1 <= s <= n");
  FpMatrix l(modulus, n - 1, n);
  for (std::size_t r = 0; r + 1 < n; ++r) {
    if (r + 1 < s) l.set(r, 0, 1);
    l.set(r, r + 1, 1);
  }
  return l;
}

std::vector<TightnessRow> tightness_rows(std::size_t n, std::uint32_t k, PrimeModulus modulus,
                                         const ImageOptions& options) {
  const auto p = modulus.value();
  const SizeVector sizes(std::vector<std::uint32_t>(n, k), modulus);
  const auto sets = SetSystem::intervals(modulus, sizes.values());
  std::vector<TightnessRow> rows;
  for (std::size_t s = 2; s <= n; ++s) {
    const auto l = canonical_corank_one(n, s, modulus);
    TightnessRow row;
    row.n = n;
    row.k = k;
    row.p = p;
    row.s = s;
    row.tight_regime = p + 1 >= 2ULL * k;
    row.image = image_size(l, sets, false, options).size;
    row.lambda = lambda_bound(l, sizes).lambda;
    row.pass = row.tight_regime ? BigInt(row.image) == row.lambda : BigInt(row.image) < row.lambda;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cdlab
