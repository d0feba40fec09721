// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <cdlab/bounds.hpp>
#include <cdlab/dilates.hpp>
#include <cdlab/error.hpp>
#include <cdlab/image.hpp>
#include <cdlab/json_io.hpp>
#include <cdlab/linalg.hpp>
#include <cdlab/nullstellensatz.hpp>
#include <cdlab/random.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

namespace cdlab::cli {

namespace {

// A failed invariant: output is still written, exit code 1.
struct Verification {
  std::vector<std::string> violations;
  void require(bool ok, std::string what) {
    if (!ok) violations.push_back(std::move(what));
  }
};

struct Context {
  const RunConfig& config;
  Json input;
  ImageOptions image;
  ExactSearchOptions exact;
  SupportOptions supports;
  Verification verification;
};

std::string read_file(const std::string& path) {
  if (path.empty()) fail(ErrorKind::InvalidInput, "--input is required for this command");
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text)) fail(ErrorKind::InvalidInput, "cannot write " + path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<std::uint32_t> u32_list(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorKind::InvalidInput, std::string(what) + " must be an array");
  std::vector<std::uint32_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > 0xffffffffLL)
      fail(ErrorKind::InvalidInput, std::string(what) + " entries must be nonnegative integers");
    out.push_back(v.get<std::uint32_t>());
  }
  return out;
}

std::vector<std::int64_t> i64_list(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorKind::InvalidInput, std::string(what) + " must be an array");
  std::vector<std::int64_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(ErrorKind::InvalidInput, std::string(what) + " entries must be integers");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::InvalidInput, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T value_or(const Json& j, const char* key, T fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    fail(ErrorKind::InvalidInput, std::string("field \"") + key + "\" has the wrong type");
  }
}

std::string join(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
  return s;
}

std::string join(IndexSet s) {
  std::string out;
  for (auto i : s.one_based()) out += (out.empty() ? "" : ";") + std::to_string(i);
  return out;
}

SetSystem sets_for(const Json& j, PrimeModulus modulus) {
  if (j.is_object()) {
    auto a = set_system_from_json(j);
    if (!(a.modulus() == modulus)) fail(ErrorKind::ModulusMismatch, "sets and matrix use different p");
    return a;
  }
  std::vector<std::vector<std::int64_t>> sets;
  if (!j.is_array()) fail(ErrorKind::InvalidInput, "sets must be an array or a SetSystem object");
  for (const auto& s : j) sets.push_back(i64_list(s, "set"));
  return SetSystem(modulus, sets);
}

// Optional regression value: {"expect": n} compares against the headline result.
void check_expected(Context& ctx, const Json& actual, const std::string& what) {
  if (!ctx.input.contains("expect")) return;
  const auto& want = ctx.input.at("expect");
  ctx.verification.require(want == actual, what + " is " + actual.dump() + ", expected " + want.dump());
}

Json certificate_json(const FpMatrix& l, const SizeVector& k, const Json& in, const Context& ctx) {
  BoundOptions bo{ctx.supports};
  const auto r = rank(l);
  if (r < l.rows()) fail(ErrorKind::RankDeficient, "rank(L) = " + std::to_string(r) + " < m");
  if (l.rows() == l.cols())
    return Json{{"injective_image_size", to_json(injective_image_size(k.values()))}};
  if (value_or(in, "all", false)) {
    Json all = Json::array();
    for (const auto& c : lambda_certificates(l, k, bo)) all.push_back(to_json(c));
    return Json{{"certificates", std::move(all)}};
  }
  std::optional<std::pair<IndexSet, IndexSet>> choice;
  if (in.contains("S")) {
    choice.emplace(index_set_from_json(in.at("S")),
                   in.contains("Sprime") ? index_set_from_json(in.at("Sprime")) : IndexSet{});
  }
  return to_json(lambda_bound(l, k, choice, bo));
}

Json cmd_bound(Context& ctx) {
  const auto l = matrix_from_json(member(ctx.input, "matrix"));
  const SizeVector k(u32_list(member(ctx.input, "k"), "k"), l.modulus());
  if (k.size() != l.cols()) fail(ErrorKind::InvalidInput, "k has the wrong length");
  auto out = certificate_json(l, k, ctx.input, ctx);
  if (out.contains("lambda")) check_expected(ctx, out["lambda"], "lambda");
  out["seed"] = ctx.config.seed;
  return out;
}

Json cmd_image(Context& ctx) {
  const auto l = matrix_from_json(member(ctx.input, "matrix"));
  const auto a = sets_for(member(ctx.input, "sets"), l.modulus());
  if (a.size() != l.cols()) fail(ErrorKind::InvalidInput, "need one set per column");
  auto out = to_json(image_size(l, a, value_or(ctx.input, "keep_points", false), ctx.image));
  check_expected(ctx, out["size"], "image size");
  out["seed"] = ctx.config.seed;
  return out;
}

ExtremalResult solve_mu(const FpMatrix& l, const SizeVector& k, const std::string& method, std::uint64_t seed,
                        const Json& in, const Context& ctx) {
  const bool exact = method == "exact" ||
                     (method == "auto" && normalized_space_size(k.values(), l.modulus().value()) <=
                                              ctx.exact.max_candidates);
  if (exact) return mu_exact(l, k, ctx.exact);
  if (method != "heuristic" && method != "auto")
    fail(ErrorKind::InvalidInput, "method must be exact, heuristic or auto");
  HeuristicOptions h;
  h.seed = seed;
  h.parallelism = ctx.config.parallelism;
  h.image = ctx.image;
  h.restarts = value_or<std::uint32_t>(in, "restarts", h.restarts);
  h.steps = value_or<std::uint32_t>(in, "steps", h.steps);
  return mu_heuristic(l, k, h);
}

Json cmd_mu(Context& ctx) {
  const auto l = matrix_from_json(member(ctx.input, "matrix"));
  const SizeVector k(u32_list(member(ctx.input, "k"), "k"), l.modulus());
  if (k.size() != l.cols()) fail(ErrorKind::InvalidInput, "k has the wrong length");
  auto out = to_json(solve_mu(l, k, value_or<std::string>(ctx.input, "method", "auto"), ctx.config.seed,
                              ctx.input, ctx));
  check_expected(ctx, out["mu"], "mu");
  out["seed"] = ctx.config.seed;
  return out;
}

std::string cmd_tightness(Context& ctx) {
  const auto ns = u32_list(member(ctx.input, "n"), "n");
  const auto ks = u32_list(member(ctx.input, "k"), "k");
  const auto ps = u32_list(member(ctx.input, "p"), "p");
  std::string csv = "n,k,p,s,regime,image_size,lambda,pass,seed\n";
  for (auto n : ns)
    for (auto k : ks)
      for (auto p : ps) {
        const PrimeModulus modulus(p);
        if (k < 1 || k > p) continue;
        for (const auto& row : tightness_rows(n, k, modulus, ctx.image)) {
          csv += std::to_string(row.n) + "," + std::to_string(row.k) + "," + std::to_string(row.p) + "," +
                 std::to_string(row.s) + "," + (row.tight_regime ? "tight" : "strict") + "," +
                 std::to_string(row.image) + "," + row.lambda.str() + "," + (row.pass ? "true" : "false") + "," +
                 std::to_string(ctx.config.seed) + "\n";
          ctx.verification.require(row.pass, "tightness n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                                 " p=" + std::to_string(p) + " s=" + std::to_string(row.s) +
                                                 ": image " + std::to_string(row.image) + " vs lambda " +
                                                 row.lambda.str());
        }
      }
  return csv;
}

std::uint32_t prime_at_least(std::uint32_t x) {
  for (std::uint32_t q = std::max(2U, x);; ++q)
    if (is_prime(q)) return q;
}

// Gamma count, phi round trips and the ordering properties.
Json gamma_suite(const Json& in, Verification& verification) {
  const auto m_max = value_or<std::uint32_t>(in, "m_max", 3);
  const auto k_max = value_or<std::uint32_t>(in, "k_max", 4);
  const auto order_m_max = value_or<std::uint32_t>(in, "order_m_max", 2);
  const auto order_k_max = value_or<std::uint32_t>(in, "order_k_max", 3);
  std::uint64_t gamma_cases = 0, gamma_failures = 0, order_cases = 0, order_failures = 0;
  for (std::uint32_t m = 1; m <= m_max; ++m) {
    std::vector<std::uint32_t> k(m, 1);
    while (true) {
      for (std::uint32_t khat = 1; khat <= k_max; ++khat) {
        ++gamma_cases;
        std::uint64_t prod = 1, prod1 = 1;
        for (auto v : k) {
          prod *= v;
          prod1 *= v - 1;
        }
        const auto gamma = gamma_set(k, khat);
        bool ok = gamma.size() == khat * prod - (khat - 1) * prod1;
        for (const auto& g : gamma) {
          const auto d = phi(g, k, khat);
          ok = ok && d.degree() == g.degree() && phi_inverse(d, k, khat) == g;
        }
        gamma_failures += !ok;
        verification.require(ok, "gamma/phi check failed for k=" + join(k) + " khat=" + std::to_string(khat));
        const auto kmax = *std::max_element(k.begin(), k.end());
        if (m <= order_m_max && kmax <= order_k_max && khat <= order_k_max) {
          ++order_cases;
          const PrimeModulus p(prime_at_least(khat + kmax - 1));
          auto degrees = k;
          degrees.push_back(khat);
          const auto report =
              verify_ordering(delta_ordering(delta_set(k, khat), k, khat), IdealSpec::from_degrees(p, degrees));
          order_failures += !report.ok();
          verification.require(report.ok(), "ordering check failed for k=" + join(k) +
                                                " khat=" + std::to_string(khat));
        }
      }
      std::size_t i = 0;
      while (i < m && ++k[i] > k_max) k[i++] = 1;
      if (i == m) break;
    }
  }
  return Json{{"gamma_cases", gamma_cases},
              {"gamma_failures", gamma_failures},
              {"ordering_cases", order_cases},
              {"ordering_failures", order_failures}};
}

Json cmd_nss(Context& ctx) {
  const auto& in = ctx.input;
  if (in.contains("poly")) {
    const auto h = poly_from_json(in.at("poly"));
    const auto grid = set_system_from_json(member(in, "grid"));
    const auto outcome = nss_check(h, grid);
    ctx.verification.require(outcome.vanishes == outcome.reduced_is_zero,
                             "vanishing and zero reduction disagree");
    return Json{{"vanishes", outcome.vanishes},
                {"reduced_is_zero", outcome.reduced_is_zero},
                {"reduced", to_json(canonical_reduce(h, IdealSpec::from_grid(grid)))},
                {"seed", ctx.config.seed}};
  }
  const auto ps = in.contains("p") ? u32_list(in.at("p"), "p") : std::vector<std::uint32_t>{2, 3, 5, 7};
  const auto ns = in.contains("n") ? u32_list(in.at("n"), "n") : std::vector<std::uint32_t>{1, 2, 3};
  const auto instances = value_or<std::uint64_t>(in, "instances", 500);
  const auto max_grid = value_or<std::uint32_t>(in, "max_grid", 3);
  Json equivalence = Json::array();
  std::uint64_t task = 0;
  for (auto p : ps)
    for (auto n : ns) {
      const auto r = nss_suite(PrimeModulus(p), n, instances, max_grid, derive_seed(ctx.config.seed, task++));
      ctx.verification.require(r.disagreements == 0, "Nullstellensatz disagreement at p=" + std::to_string(p) +
                                                         " n=" + std::to_string(n));
      equivalence.push_back(Json{{"p", r.p},
                                 {"n", r.n},
                                 {"instances", r.instances},
                                 {"vanishing", r.vanishing},
                                 {"disagreements", r.disagreements}});
    }
  Json out{{"seed", ctx.config.seed}, {"equivalence", std::move(equivalence)}};
  if (value_or(in, "gamma", true)) out["gamma"] = gamma_suite(in, ctx.verification);
  out["ok"] = ctx.verification.violations.empty();
  return out;
}

std::string cmd_dilates(Context& ctx, std::ostream& out) {
  const auto& in = ctx.input;
  const auto cs = i64_list(member(in, "c"), "c");
  const auto ks = u32_list(member(in, "k"), "k");
  const PrimeModulus modulus(value_or<std::uint32_t>(in, "p", 101));
  Section4Options options;
  options.parallelism = ctx.config.parallelism;
  options.heuristics = value_or(in, "heuristics", true);
  options.restarts = value_or<std::uint32_t>(in, "restarts", options.restarts);
  options.steps = value_or<std::uint32_t>(in, "steps", options.steps);
  const auto trials = value_or<std::uint32_t>(in, "trials", 200);
  std::string csv = "c,k,p,probe_type,seed,image_size\n";
  Json summaries = Json::array();
  std::uint64_t task = 0;
  for (auto c : cs)
    for (auto k : ks) {
      options.seed = derive_seed(ctx.config.seed, task++);
      const auto report = section4_experiment(c, k, modulus, trials, options);
      for (const auto& row : report.rows)
        csv += std::to_string(row.c) + "," + std::to_string(row.k) + "," + std::to_string(row.p) + "," + row.probe +
               "," + std::to_string(row.seed) + "," + std::to_string(row.image_size) + "\n";
      if (c == 2)
        ctx.verification.require(report.interval_image <= report.interval_cap,
                                 "c=2 interval image exceeds 16k^2 at k=" + std::to_string(k));
      summaries.push_back(summary_json(report));
    }
  const Json summary{{"seed", ctx.config.seed}, {"experiments", std::move(summaries)}};
  if (!ctx.config.output_path.empty())
    write_text(ctx.config.output_path + ".summary.json", dump(summary), out);
  return csv;
}

std::string cmd_sweep(Context& ctx) {
  const auto& in = ctx.input;
  struct Instance {
    std::string id;
    FpMatrix matrix;
    std::vector<std::uint32_t> k;
  };
  std::vector<Instance> instances;
  if (in.contains("instances")) {
    if (!in.at("instances").is_array()) fail(ErrorKind::InvalidInput, "instances must be an array");
    for (const auto& item : in.at("instances")) {
      const auto id = item.contains("id") && item.at("id").is_string() ? item.at("id").get<std::string>()
                                                                       : std::to_string(instances.size());
      instances.push_back({id, matrix_from_json(member(item, "matrix")), u32_list(member(item, "k"), "k")});
    }
  }
  if (in.contains("grid")) {
    const auto& g = in.at("grid");
    const auto ps = u32_list(member(g, "p"), "p");
    std::size_t mi = 0;
    for (const auto& entries : member(g, "matrices")) {
      std::vector<std::vector<std::int64_t>> rows;
      for (const auto& r : entries) rows.push_back(i64_list(r, "matrix row"));
      std::size_t ki = 0;
      for (const auto& kj : member(g, "k")) {
        const auto k = u32_list(kj, "k");
        for (auto p : ps)
          instances.push_back({"m" + std::to_string(mi) + "-k" + std::to_string(ki) + "-p" + std::to_string(p),
                               FpMatrix(PrimeModulus(p), rows), k});
        ++ki;
      }
      ++mi;
    }
  }
  const auto method = value_or<std::string>(in, "method", "auto");
  std::string csv = "id,p,n,m,S,Sprime,k,lambda,precondition_ok,image_size,method,gap,seed\n";
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    const auto& l = inst.matrix;
    const SizeVector k(inst.k, l.modulus());
    if (k.size() != l.cols()) fail(ErrorKind::InvalidInput, "instance " + inst.id + ": k has the wrong length");
    if (rank(l) < l.rows()) fail(ErrorKind::RankDeficient, "instance " + inst.id + " is rank deficient");
    BoundCertificate cert;
    if (l.rows() == l.cols()) {
      cert.lambda = injective_image_size(k.values());
      cert.precondition_ok = true;
    } else {
      cert = lambda_bound(l, k, std::nullopt, BoundOptions{ctx.supports});
    }
    const auto seed = derive_seed(ctx.config.seed, i);
    const auto mu = solve_mu(l, k, method, seed, in, ctx);
    const BigInt gap = BigInt(mu.mu) - cert.lambda;
    if (cert.precondition_ok)
      ctx.verification.require(gap >= 0, "instance " + inst.id + ": image below lambda");
    csv += inst.id + "," + std::to_string(l.modulus().value()) + "," + std::to_string(l.cols()) + "," +
           std::to_string(l.rows()) + "," + join(cert.s) + "," + join(cert.sprime) + "," + join(inst.k) + "," +
           cert.lambda.str() + "," + (cert.precondition_ok ? "true" : "false") + "," + std::to_string(mu.mu) + "," +
           to_string(mu.method) + "," + gap.str() + "," + std::to_string(seed) + "\n";
  }
  return csv;
}

int exit_code(ErrorKind kind) {
  return kind == ErrorKind::BudgetExceeded ? kBudgetExceeded : kInputError;
}

void report_error(std::ostream& err, std::string_view kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

bool apply_environment(RunConfig& config, std::string* error) {
  const char* raw = std::getenv("CDLAB_BUDGET");
  if (!raw) return true;
  try {
    std::size_t used = 0;
    const std::string text(raw);
    const auto v = std::stoull(text, &used);
    if (used != text.size() || text.front() == '-') throw std::invalid_argument(text);
    config.budget = v;
    return true;
  } catch (const std::exception&) {
    if (error)
      *error = Json{{"error", "InvalidInput"}, {"message", std::string("CDLAB_BUDGET is not an integer: ") + raw}}
                   .dump();
    return false;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Context ctx{config, {}, {}, {}, {}, {}};
    ctx.image.parallelism = config.parallelism;
    ctx.exact.parallelism = config.parallelism;
    ctx.supports.parallelism = config.parallelism;
    if (config.budget > 0) {
      ctx.image.max_points = config.budget;
      ctx.exact.max_candidates = config.budget;
      ctx.supports.max_kernel_vectors = config.budget;
    }
    ctx.exact.image = ctx.image;
    ctx.input = parse_json(read_file(config.input_path));

    std::string text;
    const auto& c = config.command;
    if (c == "bound") text = dump(cmd_bound(ctx));
    else if (c == "image") text = dump(cmd_image(ctx));
    else if (c == "mu") text = dump(cmd_mu(ctx));
    else if (c == "tightness") text = cmd_tightness(ctx);
    else if (c == "nss") text = dump(cmd_nss(ctx));
    else if (c == "dilates") text = cmd_dilates(ctx, out);
    else if (c == "sweep") text = cmd_sweep(ctx);
    else fail(ErrorKind::InvalidInput, "unknown command \"" + c + "\"");
    write_text(config.output_path, text, out);

    if (!ctx.verification.violations.empty()) {
      err << Json{{"error", "VerificationFailed"},
                  {"message", ctx.verification.violations.front()},
                  {"violations", ctx.verification.violations}}
                 .dump()
          << '\n';
      return kVerificationFailed;
    }
    return kOk;
  } catch (const Error& e) {
    report_error(err, to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const Json::exception& e) {
    report_error(err, "InvalidInput", e.what());
    return kInputError;
  } catch (const std::exception& e) {
    report_error(err, "InvalidInput", e.what());
    return kInputError;
  }
}

}  // namespace cdlab::cli
