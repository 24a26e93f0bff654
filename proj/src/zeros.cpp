#include "dini/zeros.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "cylinder.hpp"
#include "dini/errors.hpp"
#include "dini/series.hpp"
#include "double_double.hpp"
#include "roots.hpp"

namespace dini {

namespace {

constexpr double kScanStep = 0.25;
// Consecutive positive zeros of J_nu are more than 2 apart for every nu > -1,
// so scanning may start this far past the previous zero.
constexpr double kScanOffset = 1.0;
constexpr double kFirstBracketLo = 1e-9;
constexpr int kMaxScanSteps = 100000;

const EvalDomain& series_domain() {
  static const EvalDomain dom{};
  return dom;
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Normalized series inside the series domain, unnormalized J beyond it. Only
// signs and the local ratio f/f' matter to the root finder, so the change of
// scale at x_max is harmless.
detail::ValueAndSlope bessel_fdf(const Order& nu, double x) {
  const double v = nu.value();
  if (x <= series_domain().x_max) {
    const double j = norm_bessel_J(nu, x).value;
    const double j1 = norm_bessel_J(nu.shifted(1.0), x).value;
    return {j, -x / (2.0 * (v + 1.0)) * j1};
  }
  const detail::BesselPair p = detail::bessel_pair_large(v, x);
  return {p.j_nu, v / x * p.j_nu - p.j_nu1};
}

double bessel_value(const Order& nu, double x) {
  if (x <= series_domain().x_max) return norm_bessel_J(nu, x).value;
  return detail::bessel_pair_large(nu.value(), x).j_nu;
}

detail::ValueAndSlope dini_fdf(const Order& nu, double x) {
  const double v = nu.value();
  if (x <= series_domain().x_max) {
    return {dini_D(nu, x).value, dini_prime_decomposed(nu, x).value};
  }
  const detail::BesselPair p = detail::bessel_pair_large(v, x);
  return {p.j_nu - x * p.j_nu1, (v / x - x) * p.j_nu + (v - 1.0) * p.j_nu1};
}

double dini_value(const Order& nu, double x) {
  if (x <= series_domain().x_max) return dini_D(nu, x).value;
  const detail::BesselPair p = detail::bessel_pair_large(nu.value(), x);
  return p.j_nu - x * p.j_nu1;
}

struct Entry {
  std::vector<double> zeros;
  std::vector<BracketingInterval> brackets;
};

struct Cache {
  std::shared_mutex map_mutex;
  std::mutex build_mutex;
  std::unordered_map<std::uint64_t, std::shared_ptr<const Entry>> tables;
};

Cache& bessel_cache() {
  static Cache c;
  return c;
}

Cache& dini_cache() {
  static Cache c;
  return c;
}

std::shared_ptr<const Entry> lookup(Cache& cache, std::uint64_t key, int count) {
  std::shared_lock lock(cache.map_mutex);
  auto it = cache.tables.find(key);
  if (it != cache.tables.end() && static_cast<int>(it->second->zeros.size()) >= count) {
    return it->second;
  }
  return nullptr;
}

template <class Extend>
std::shared_ptr<const Entry> cached(Cache& cache, const Order& nu, int count, Extend&& extend) {
  const auto key = std::bit_cast<std::uint64_t>(nu.value());
  if (auto hit = lookup(cache, key, count)) return hit;

  std::lock_guard build(cache.build_mutex);
  if (auto hit = lookup(cache, key, count)) return hit;
  auto next = std::make_shared<Entry>();
  {
    std::shared_lock lock(cache.map_mutex);
    auto it = cache.tables.find(key);
    if (it != cache.tables.end()) *next = *it->second;
  }
  extend(*next, count);
  std::shared_ptr<const Entry> frozen = std::move(next);
  std::unique_lock lock(cache.map_mutex);
  cache.tables[key] = frozen;
  return frozen;
}

void extend_bessel(const Order& nu, Entry& e, int count) {
  const double v = nu.value();
  while (static_cast<int>(e.zeros.size()) < count) {
    const int n = static_cast<int>(e.zeros.size()) + 1;
    double a = (n == 1) ? 0.0 : e.zeros.back() + kScanOffset;
    double fa = bessel_value(nu, a);
    const int expected = (n % 2 == 1) ? 1 : -1;  // sign of J on (j_{n-1}, j_n)
    if (sign_of(fa) != expected) {
      throw ConsistencyError("bessel zero " + std::to_string(n) + " of order " +
                             format_double(v) + ": unexpected sign at scan start " +
                             format_double(a));
    }
    double b = a;
    double fb = fa;
    int steps = 0;
    while (sign_of(fb) == expected) {
      a = b;
      fa = fb;
      b = a + kScanStep;
      fb = bessel_value(nu, b);
      if (++steps > kMaxScanSteps) {
        throw ConvergenceError("no sign change found for bessel zero " + std::to_string(n), n);
      }
    }
    if (fb == 0.0) {
      e.zeros.push_back(b);
      e.brackets.push_back({a, b, sign_of(fa), 0});
      continue;
    }
    // McMahon's leading terms as the Newton starting point
    const double beta = (n + 0.5 * v - 0.25) * std::numbers::pi;
    const double guess = beta - (4.0 * v * v - 1.0) / (8.0 * beta);
    const double root = detail::polish_root([&](double x) { return bessel_fdf(nu, x); }, a, b,
                                            sign_of(fa), guess, kZeroRelTol, n);
    e.zeros.push_back(root);
    e.brackets.push_back({a, b, sign_of(fa), sign_of(fb)});
  }
}

void extend_dini(const Order& nu, Entry& e, int count, const Entry& bessel) {
  while (static_cast<int>(e.zeros.size()) < count) {
    const int n = static_cast<int>(e.zeros.size()) + 1;
    const double lo = (n == 1) ? kFirstBracketLo : bessel.zeros[n - 2];
    const double hi = bessel.zeros[n - 1];
    const double flo = dini_value(nu, lo);
    const double fhi = dini_value(nu, hi);
    if (sign_of(flo) == 0 || sign_of(flo) == sign_of(fhi)) {
      throw ConsistencyError("missing sign change of the Dini function of order " +
                             format_double(nu.value()) + " on the interlacing bracket (" +
                             format_double(lo) + ", " + format_double(hi) + ") for zero " +
                             std::to_string(n));
    }
    double root = hi;
    if (fhi != 0.0) {
      root = detail::polish_root([&](double x) { return dini_fdf(nu, x); }, lo, hi,
                                 sign_of(flo), 0.5 * (lo + hi), kZeroRelTol, n);
    }
    e.zeros.push_back(root);
    e.brackets.push_back({lo, hi, sign_of(flo), sign_of(fhi)});
  }
}

void require_count(int count) {
  if (count < 1 || count > kMaxZeroCount) {
    throw DomainError("zero count " + std::to_string(count) + " outside [1, " +
                      std::to_string(kMaxZeroCount) + "]");
  }
}

ZeroTable make_table(const Order& nu, ZeroKind kind, const Entry& e, int count) {
  ZeroTable t;
  t.nu = nu;
  t.kind = kind;
  t.zeros.assign(e.zeros.begin(), e.zeros.begin() + count);
  t.bracket_log.assign(e.brackets.begin(), e.brackets.begin() + count);
  t.rayleigh_residual = std::numeric_limits<double>::quiet_NaN();
  return t;
}

}  // namespace

ZeroTable bessel_zero_table(const Order& nu, int count) {
  require_count(count);
  auto entry = cached(bessel_cache(), nu, count,
                      [&](Entry& e, int c) { extend_bessel(nu, e, c); });
  return make_table(nu, ZeroKind::bessel, *entry, count);
}

ZeroTable dini_zero_table(const Order& nu, int count) {
  require_count(count);
  auto entry = cached(dini_cache(), nu, count, [&](Entry& e, int c) {
    const auto bessel = cached(bessel_cache(), nu, c,
                               [&](Entry& b, int cb) { extend_bessel(nu, b, cb); });
    extend_dini(nu, e, c, *bessel);
  });
  ZeroTable t = make_table(nu, ZeroKind::dini, *entry, count);
  t.rayleigh_residual = rayleigh_residual(t);
  return t;
}

double rayleigh_residual(const ZeroTable& table) {
  if (table.kind != ZeroKind::dini) {
    throw DomainError("rayleigh_residual requires a Dini zero table");
  }
  // smallest terms first
  detail::DD sum;
  for (auto it = table.zeros.rbegin(); it != table.zeros.rend(); ++it) {
    const detail::DD sq = detail::two_prod(*it, *it);
    sum += detail::DD(1.0) / sq;
  }
  const detail::DD total = detail::DD(3.0) / (detail::two_sum(table.nu.value(), 1.0) * 4.0);
  return (total - sum).to_double();
}

double tail_inverse_square_sum(const Order& nu, const ZeroTable& table, double /*x*/) {
  if (!(table.nu == nu)) throw DomainError("zero table order does not match nu");
  return rayleigh_residual(table);
}

void clear_zero_cache() {
  for (Cache* c : {&bessel_cache(), &dini_cache()}) {
    std::lock_guard build(c->build_mutex);
    std::unique_lock lock(c->map_mutex);
    c->tables.clear();
  }
}

}  // namespace dini
