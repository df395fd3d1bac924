#include "pcv/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "pcv/gamma.hpp"
#include "pcv/identities.hpp"
#include "pcv/padic.hpp"
#include "pcv/series.hpp"

namespace pcv {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ull;
  return h;
}

std::uint64_t task_seed(std::uint64_t base, const std::string& family, int n,
                        unsigned long p) {
  return splitmix64(base ^ fnv1a(family) ^ (static_cast<std::uint64_t>(n) << 32) ^ p);
}

Rational random_rational(std::mt19937_64& rng, long num_bound,
                         unsigned long den_bound) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound);
  std::uniform_int_distribution<unsigned long> den(1, den_bound);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

// p-integral random rational.
Rational random_p_integral(std::mt19937_64& rng, unsigned long p) {
  for (;;) {
    Rational r = random_rational(rng, 100000, 10000);
    if (!mpz_divisible_ui_p(r.get_den().get_mpz_t(), p)) return r;
  }
}

struct RowBuilder {
  std::vector<CaseResult> rows;

  void congruence(const std::string& check, int n, unsigned long p,
                  const CongruencePair& cp) {
    CaseResult r;
    r.check = check;
    r.n = n;
    r.p = p;
    r.k = cp.modulus_exponent;
    r.lhs = cp.lhs.residue(cp.modulus_exponent).get_str();
    r.rhs = cp.rhs.residue(cp.modulus_exponent).get_str();
    r.pass = cp.pass;
    rows.push_back(std::move(r));
  }

  void residues(const std::string& check, int n, unsigned long p, int k,
                const Integer& lhs, const Integer& rhs) {
    CaseResult r;
    r.check = check;
    r.n = n;
    r.p = p;
    r.k = k;
    r.lhs = lhs.get_str();
    r.rhs = rhs.get_str();
    r.pass = lhs == rhs;
    rows.push_back(std::move(r));
  }

  // Property-style row: points checked vs points passed, k = 0.
  void counts(const std::string& check, int n, unsigned long p, long checked,
              long ok) {
    CaseResult r;
    r.check = check;
    r.n = n;
    r.p = p;
    r.k = 0;
    r.lhs = std::to_string(checked);
    r.rhs = std::to_string(ok);
    r.pass = checked == ok;
    rows.push_back(std::move(r));
  }
};

int override_or(const SweepConfig& cfg, const std::string& check, int fallback) {
  auto it = cfg.precision_overrides.find(check);
  return it == cfg.precision_overrides.end() ? fallback : it->second;
}

// ---- per-(n, p) families ----------------------------------------------

std::vector<CaseResult> run_case_family(const std::string& family,
                                        const SweepConfig& cfg, int n,
                                        unsigned long p, std::mt19937_64& rng) {
  RowBuilder b;
  if (family == "theorem1") {
    b.congruence(family, n, p, theorem1_check(n, p, cfg.perturb_theorem1));
  } else if (family == "theorem2") {
    b.congruence(family, n, p, theorem2_check(n, p));
  } else if (family == "prop21") {
    b.congruence(family, n, p, prop21_check(n, p));
  } else if (family == "gamma_ratio") {
    b.counts(family, n, p, 1, gamma_ratio_expansion_check(n, p) ? 1 : 0);
  } else if (family == "lemma22") {
    const std::pair<const char*, Rational> xs[] = {
        {"1/n", Rational(1, n)},
        {"2/n", Rational(2, n)},
        {"1/(n+1)", Rational(1, n + 1)}};
    for (const auto& [label, x] : xs) {
      Rational xc = x;
      xc.canonicalize();
      if (mpz_divisible_ui_p(xc.get_den().get_mpz_t(), p)) continue;
      Lemma22Result r = lemma22_check(xc, p);
      b.counts(std::string("lemma22_con1:") + label, n, p, 1, r.con1 ? 1 : 0);
      b.counts(std::string("lemma22_con2:") + label, n, p, 1, r.con2 ? 1 : 0);
    }
  } else if (family == "lemma24") {
    Lemma24Result r = lemma24_check(n, p);
    b.counts("lemma24:harcon1", n, p, 1, r.harcon1 ? 1 : 0);
    b.counts("lemma24:harcon2", n, p, 1, r.harcon2 ? 1 : 0);
    b.counts("lemma24:con3", n, p, 1, r.con3 ? 1 : 0);
  } else if (family == "vanishing") {
    b.counts(family, n, p, 1, vanishing_sum_check(n, p) ? 1 : 0);
  } else if (family == "weighted_km") {
    auto [first, second] = weighted_km_sum_check(n, p);
    b.counts("weighted_km:main", n, p, 1, first ? 1 : 0);
    b.counts("weighted_km:differenced", n, p, 1, second ? 1 : 0);
  } else if (family == "psi") {
    long ok = 0;
    const long points = 10;
    for (long i = 0; i < points;) {
      Rational x = random_rational(rng, 20, 9);
      Rational y = random_rational(rng, 20, 9);
      try {
        if (psi_closed_form_check(n, p, x, y)) ++ok;
        ++i;
      } catch (const std::domain_error&) {
        // pole in the series or the closed form: redraw
      }
    }
    b.counts(family, n, p, points, ok);
  } else if (family == "phi") {
    b.counts(family, n, p, 1, phi_terminating_check(n, p) ? 1 : 0);
  } else {
    throw std::logic_error("unknown case family: " + family);
  }
  return std::move(b.rows);
}

// ---- per-prime families -----------------------------------------------

std::vector<CaseResult> run_prime_family(const std::string& family,
                                         const SweepConfig& cfg,
                                         unsigned long p,
                                         std::mt19937_64& rng) {
  RowBuilder b;
  if (family == "lemma23") {
    int k = override_or(cfg, family, 1);
    GammaContext ctx(p, k, std::max(std::max(k, 2) + k, 3 * k));
    PadicNum a = g1(Rational(0), ctx, k);
    PadicNum bb = g2(Rational(0), ctx, k);
    b.residues(family, 0, p, k, (a * a).residue(k), bb.residue(k));
  } else if (family == "wolstenholme") {
    Rational h = harmonic_sum(p - 1, 1, Rational(0));
    Rational h2 = harmonic_sum(p - 1, 2, Rational(0));
    b.residues("wolstenholme:h1", 0, p, 2, least_residue(h, p, 2), Integer(0));
    b.residues("wolstenholme:h2", 0, p, 1, least_residue(h2, p, 1), Integer(0));
  } else if (family == "reflection") {
    int k = override_or(cfg, family, 2);
    const long points = 200;
    long ok = 0;
    for (long i = 0; i < points; ++i) {
      if (reflection_check(random_p_integral(rng, p), p, k)) ++ok;
    }
    b.counts(family, 0, p, points, ok);
  } else {
    throw std::logic_error("unknown prime family: " + family);
  }
  return std::move(b.rows);
}

// ---- global families ----------------------------------------------------

// All m-vectors of the given length with sum <= bound.
void enumerate_m_vectors(unsigned long len, unsigned long bound,
                         std::vector<unsigned long>& cur,
                         std::vector<std::vector<unsigned long>>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  unsigned long used = 0;
  for (auto v : cur) used += v;
  for (unsigned long v = 0; v + used <= bound; ++v) {
    cur.push_back(v);
    enumerate_m_vectors(len, bound, cur, out);
    cur.pop_back();
  }
}

std::vector<CaseResult> run_global_family(const std::string& family,
                                          std::mt19937_64& rng) {
  RowBuilder b;
  if (family == "km") {
    // pool of 20 admissible rationals; b_i excluded from integers in [-6, 0]
    std::vector<Rational> pool;
    while (pool.size() < 20) {
      Rational r = random_rational(rng, 30, 7);
      if (r.get_den() == 1 && r <= 0 && r >= -6) continue;
      pool.push_back(r);
    }
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    long checked = 0, ok = 0;
    for (unsigned long len = 1; len <= 4; ++len) {
      std::vector<std::vector<unsigned long>> ms;
      std::vector<unsigned long> cur;
      enumerate_m_vectors(len, 6, cur, ms);
      for (const auto& m : ms) {
        KMInstance inst;
        inst.m = m;
        for (unsigned long i = 0; i < len; ++i) inst.b.push_back(pool[pick(rng)]);
        ++checked;
        if (km_identity_check(inst)) ++ok;
      }
    }
    b.counts(family, 0, 0, checked, ok);
  } else if (family == "lemma25") {
    const std::pair<const char*, DerivIdentity> variants[] = {
        {"akd1", DerivIdentity::akd1},   {"akd2", DerivIdentity::akd2},
        {"bkd1", DerivIdentity::bkd1},   {"bkd2", DerivIdentity::bkd2},
        {"abkd1", DerivIdentity::abkd1}, {"abkd2", DerivIdentity::abkd2}};
    for (const auto& [label, which] : variants) {
      long checked = 0, ok = 0;
      for (unsigned long k = 1; k <= 8; ++k) {
        for (int i = 0; i < 20; ++i) {
          for (;;) {
            Rational alpha = random_rational(rng, 12, 6);
            Rational beta = random_rational(rng, 12, 6);
            Rational x0 = random_rational(rng, 12, 6);
            try {
              bool r = derivative_identity_check(which, alpha, beta, x0, k);
              ++checked;
              if (r) ++ok;
              break;
            } catch (const std::domain_error&) {
              // pole at the sampled point; redraw
            }
          }
        }
      }
      b.counts(std::string("lemma25:") + label, 0, 0, checked, ok);
    }
  } else {
    throw std::logic_error("unknown global family: " + family);
  }
  return std::move(b.rows);
}

const std::vector<std::string> kCaseFamilies = {
    "theorem1", "theorem2",    "prop21", "gamma_ratio", "lemma22",
    "lemma24",  "vanishing", "weighted_km", "psi",     "phi"};
const std::vector<std::string> kPrimeFamilies = {"lemma23", "wolstenholme",
                                                 "reflection"};
const std::vector<std::string> kGlobalFamilies = {"km", "lemma25"};

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> all = [] {
    std::vector<std::string> v = kCaseFamilies;
    v.insert(v.end(), kPrimeFamilies.begin(), kPrimeFamilies.end());
    v.insert(v.end(), kGlobalFamilies.begin(), kGlobalFamilies.end());
    return v;
  }();
  return all;
}

void validate_config(const SweepConfig& cfg) {
  if (cfg.n_min < 3 || cfg.n_min > cfg.n_max)
    throw std::invalid_argument("need 3 <= n_min <= n_max");
  if (cfg.p_max < 7) throw std::invalid_argument("need p_max >= 7");
  if (cfg.checks.empty()) throw std::invalid_argument("checks must be nonempty");
  if (cfg.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text")
    throw std::invalid_argument("format must be json, csv or text");
  for (const auto& c : cfg.checks)
    if (!contains(known_checks(), c))
      throw std::invalid_argument("unknown check: " + c);
}

std::vector<std::pair<int, unsigned long>> enumerate_cases(
    const SweepConfig& cfg) {
  std::vector<std::pair<int, unsigned long>> out;
  auto primes = sieve_primes(cfg.p_max);
  for (int n = cfg.n_min; n <= cfg.n_max; ++n)
    for (auto p : primes)
      if (p > 3 && p % static_cast<unsigned long>(n) == 1)
        out.emplace_back(n, p);
  return out;
}

SuiteReport run_suite(const SweepConfig& cfg) {
  validate_config(cfg);

  using Task = std::function<std::vector<CaseResult>()>;
  std::vector<Task> tasks;

  auto wrap = [&cfg](const std::string& family, int n, unsigned long p,
                     std::function<std::vector<CaseResult>(std::mt19937_64&)> f)
      -> Task {
    std::uint64_t seed = task_seed(cfg.seed, family, n, p);
    return [family, n, p, seed, f = std::move(f), timing = cfg.timing]() {
      auto t0 = std::chrono::steady_clock::now();
      std::vector<CaseResult> rows;
      std::mt19937_64 rng(seed);
      try {
        rows = f(rng);
      } catch (const std::exception& e) {
        CaseResult r;
        r.check = family;
        r.n = n;
        r.p = p;
        r.error = true;
        r.pass = false;
        r.message = e.what();
        rows.push_back(std::move(r));
      }
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      for (auto& r : rows) r.elapsed_ms = timing ? static_cast<long>(ms) : 0;
      return rows;
    };
  };

  auto cases = enumerate_cases(cfg);
  auto primes = sieve_primes(cfg.p_max);

  for (const auto& family : cfg.checks) {
    if (contains(kCaseFamilies, family)) {
      for (const auto& [n, p] : cases) {
        if (family == "lemma22" && p > cfg.derivative_prime_cap) continue;
        int nn = n;
        unsigned long pp = p;
        tasks.push_back(wrap(family, nn, pp, [family, nn, pp, &cfg](std::mt19937_64& rng) {
          return run_case_family(family, cfg, nn, pp, rng);
        }));
      }
    } else if (contains(kPrimeFamilies, family)) {
      for (auto p : primes) {
        if (p < 5) continue;
        tasks.push_back(wrap(family, 0, p, [family, p, &cfg](std::mt19937_64& rng) {
          return run_prime_family(family, cfg, p, rng);
        }));
      }
    } else {
      tasks.push_back(wrap(family, 0, 0, [family](std::mt19937_64& rng) {
        return run_global_family(family, rng);
      }));
    }
  }

  std::vector<std::vector<CaseResult>> slots(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      slots[i] = tasks[i]();
    }
  };
  int jobs = std::min<int>(cfg.jobs, static_cast<int>(tasks.size()) + 1);
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SuiteReport report;
  report.config = cfg;
  for (auto& s : slots)
    for (auto& r : s) report.results.push_back(std::move(r));
  std::stable_sort(report.results.begin(), report.results.end(),
                   [](const CaseResult& a, const CaseResult& b) {
                     return std::tie(a.check, a.n, a.p) <
                            std::tie(b.check, b.n, b.p);
                   });
  report.total = static_cast<long>(report.results.size());
  for (const auto& r : report.results)
    (r.pass && !r.error) ? ++report.passed : ++report.failed;
  return report;
}

namespace {

nlohmann::ordered_json result_json(const CaseResult& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["n"] = r.n;
  j["p"] = r.p;
  j["k"] = r.k;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["pass"] = r.pass;
  if (r.error) j["error"] = r.message;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace

void render_report(const SuiteReport& report, const std::string& format,
                   std::ostream& out) {
  if (format == "json") {
    for (const auto& r : report.results) out << result_json(r).dump() << "\n";
    nlohmann::ordered_json summary;
    summary["total"] = report.total;
    summary["passed"] = report.passed;
    summary["failed"] = report.failed;
    summary["version"] = report.version;
    out << summary.dump() << "\n";
  } else if (format == "csv") {
    out << "check,n,p,k,lhs,rhs,pass,elapsed_ms\n";
    for (const auto& r : report.results)
      out << r.check << "," << r.n << "," << r.p << "," << r.k << "," << r.lhs
          << "," << r.rhs << "," << (r.pass ? "true" : "false") << ","
          << r.elapsed_ms << "\n";
  } else if (format == "text") {
    out << std::left << std::setw(28) << "check" << std::setw(5) << "n"
        << std::setw(6) << "p" << std::setw(4) << "k" << std::setw(8) << "pass"
        << "lhs / rhs\n";
    for (const auto& r : report.results) {
      out << std::left << std::setw(28) << r.check << std::setw(5) << r.n
          << std::setw(6) << r.p << std::setw(4) << r.k << std::setw(8)
          << (r.error ? "ERROR" : (r.pass ? "ok" : "FAIL")) << r.lhs << " / "
          << r.rhs;
      if (r.error) out << "  (" << r.message << ")";
      out << "\n";
    }
    out << "passed " << report.passed << "/" << report.total << "\n";
  } else {
    throw std::invalid_argument("format must be json, csv or text");
  }
}

int suite_exit_code(const SuiteReport& report) {
  return report.failed > 0 ? 1 : 0;
}

}  // namespace pcv
