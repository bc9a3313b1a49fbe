#include "deltafn/poly.hpp"

#include <map>
#include <mutex>

namespace deltafn {

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int poly_degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[static_cast<std::size_t>(i)]) return i;
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  poly_trim(c);
  return c;
}

Poly poly_sub(const Poly& a, const Poly& b, int p) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = ((c[i] - b[i]) % p + p) % p;
  poly_trim(c);
  return c;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b, int p) {
  const int db = poly_degree(b);
  if (db < 0) throw AlgebraError("poly_divmod: division by zero polynomial");
  Poly r = a;
  poly_trim(r);
  const int lead_inv = inv_mod(b[static_cast<std::size_t>(db)], p);
  Poly q;
  if (poly_degree(r) >= db) q.assign(static_cast<std::size_t>(poly_degree(r) - db + 1), 0);
  for (int d = poly_degree(r); d >= db; d = poly_degree(r)) {
    const int c = r[static_cast<std::size_t>(d)] * lead_inv % p;
    q[static_cast<std::size_t>(d - db)] = c;
    for (int i = 0; i <= db; ++i) {
      auto& x = r[static_cast<std::size_t>(d - db + i)];
      x = ((x - c * b[static_cast<std::size_t>(i)]) % p + p) % p;
    }
    poly_trim(r);
  }
  poly_trim(q);
  return {q, r};
}

Poly poly_monic_gcd(Poly a, Poly b, int p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    auto r = poly_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const int inv = inv_mod(a.back(), p);
  for (auto& x : a) x = x * inv % p;
  return a;
}

namespace {

std::vector<Poly> compute_irreducibles(int k, int p, const std::map<std::pair<int, int>, std::vector<Poly>>& lower) {
  std::vector<Poly> out;
  std::size_t count = 1;
  for (int i = 0; i < k; ++i) count *= static_cast<std::size_t>(p);
  for (std::size_t code = 0; code < count; ++code) {
    Poly f(static_cast<std::size_t>(k) + 1, 0);
    f[static_cast<std::size_t>(k)] = 1;
    std::size_t c = code;
    for (int i = 0; i < k; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::size_t>(p));
      c /= static_cast<std::size_t>(p);
    }
    bool irreducible = true;
    for (int d = 1; d <= k / 2 && irreducible; ++d)
      for (const auto& g : lower.at({d, p}))
        if (poly_divmod(f, g, p).second.empty()) {
          irreducible = false;
          break;
        }
    if (irreducible) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

const std::vector<Poly>& irreducibles(int k, int p) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Poly>> cache;
  if (k < 1) throw DimensionError("irreducibles: degree must be positive");
  std::lock_guard lock(mu);
  for (int d = 1; d <= k; ++d)
    if (!cache.count({d, p})) cache[{d, p}] = compute_irreducibles(d, p, cache);
  return cache.at({k, p});
}

Factorization factor_small(Poly f, int p, int max_degree) {
  poly_trim(f);
  Factorization out;
  for (int k = 1; k <= max_degree && poly_degree(f) >= k; ++k) {
    for (const auto& g : irreducibles(k, p)) {
      int mult = 0;
      for (;;) {
        auto [q, r] = poly_divmod(f, g, p);
        if (!r.empty()) break;
        f = std::move(q);
        ++mult;
      }
      if (mult) out.factors.emplace_back(g, mult);
    }
  }
  out.rest = std::move(f);
  return out;
}

Matrix poly_eval(const Poly& f, const Matrix& m) {
  const int p = m.p();
  Matrix acc(p, m.rows(), m.cols());
  const Matrix I = Matrix::identity(p, m.rows());
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    acc = acc * m;
    const int c = f[static_cast<std::size_t>(i)] % p;
    if (c) acc = acc + I.scaled(c);
  }
  return acc;
}

}  // namespace deltafn
