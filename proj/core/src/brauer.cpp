#include "deltafn/brauer.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace deltafn {

namespace {

std::vector<long long> poly_divide_exact_z(std::vector<long long> a, const std::vector<long long>& b) {
  // b monic
  const std::size_t db = b.size() - 1;
  std::vector<long long> q(a.size() >= b.size() ? a.size() - db : 1, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const long long c = a[i];
    if (!c) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

// Reduce a raw coefficient vector (exponents already < anything) modulo a
// monic integer polynomial; result has length deg(phi).
std::vector<long long> reduce_mod(std::vector<long long> a, const std::vector<long long>& phi) {
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = a.size(); i-- > d;) {
    const long long c = a[i];
    if (!c) continue;
    for (std::size_t j = 0; j <= d; ++j) a[i - d + j] -= c * phi[j];
  }
  a.resize(d, 0);
  return a;
}

std::vector<long long> fold(const std::vector<long long>& raw, int m) {
  std::vector<long long> out(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 0; i < raw.size(); ++i) out[i % static_cast<std::size_t>(m)] += raw[i];
  return out;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int m) {
  static std::mutex mu;
  static std::map<int, std::vector<long long>> cache;
  if (m < 1) throw DimensionError("cyclotomic_polynomial: order must be positive");
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  std::vector<long long> f(static_cast<std::size_t>(m) + 1, 0);
  f[0] = -1;
  f[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) f = poly_divide_exact_z(f, cyclotomic_polynomial(d));
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  std::lock_guard lock(mu);
  cache[m] = f;
  return f;
}

CyclotomicInt::CyclotomicInt(int order, long long value) : order_(order) {
  coeffs_.assign(cyclotomic_polynomial(order).size() - 1, 0);
  coeffs_[0] = value;
}

CyclotomicInt CyclotomicInt::root_of_unity(int order, long long e) {
  CyclotomicInt z(order);
  std::vector<long long> raw(static_cast<std::size_t>(order), 0);
  raw[static_cast<std::size_t>(((e % order) + order) % order)] = 1;
  z.coeffs_ = raw;
  z.reduce();
  return z;
}

void CyclotomicInt::reduce() { coeffs_ = reduce_mod(fold(coeffs_, order_), cyclotomic_polynomial(order_)); }

CyclotomicInt CyclotomicInt::lift(int new_order) const {
  if (new_order % order_) throw DimensionError("CyclotomicInt::lift: order does not divide");
  const int step = new_order / order_;
  CyclotomicInt z(new_order);
  std::vector<long long> raw(static_cast<std::size_t>(new_order), 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) raw[j * static_cast<std::size_t>(step)] += coeffs_[j];
  z.coeffs_ = raw;
  z.reduce();
  return z;
}

bool CyclotomicInt::is_integer() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j]) return false;
  return true;
}

long long CyclotomicInt::integer_value() const {
  if (!is_integer()) throw AlgebraError("CyclotomicInt: value is not a rational integer");
  return coeffs_[0];
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
  const int L = std::lcm(order_, o.order_);
  CyclotomicInt a = lift(L), b = o.lift(L);
  for (std::size_t j = 0; j < a.coeffs_.size(); ++j) a.coeffs_[j] += b.coeffs_[j];
  return a;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
  const int L = std::lcm(order_, o.order_);
  CyclotomicInt a = lift(L), b = o.lift(L);
  for (std::size_t j = 0; j < a.coeffs_.size(); ++j) a.coeffs_[j] -= b.coeffs_[j];
  return a;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
  const int L = std::lcm(order_, o.order_);
  CyclotomicInt a = lift(L), b = o.lift(L);
  std::vector<long long> raw(a.coeffs_.size() + b.coeffs_.size(), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
  a.coeffs_ = raw;
  a.reduce();
  return a;
}

CyclotomicInt CyclotomicInt::divide_exact(long long d) const {
  if (d == 0) throw AlgebraError("CyclotomicInt: division by zero");
  CyclotomicInt z = *this;
  for (auto& c : z.coeffs_) {
    if (c % d) throw AlgebraError("CyclotomicInt: inexact division");
    c /= d;
  }
  return z;
}

bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
  const int L = std::lcm(a.order_, b.order_);
  return a.lift(L).coeffs_ == b.lift(L).coeffs_;
}

std::string CyclotomicInt::to_string() const {
  if (is_integer()) return std::to_string(coeffs_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const long long c = coeffs_[j];
    if (!c) continue;
    if (!first) os << (c > 0 ? "+" : "-");
    else if (c < 0) os << "-";
    const long long a = c < 0 ? -c : c;
    if (j == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "z" << order_;
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

const Poly& conway_polynomial(int p, int k) {
  static const std::map<std::pair<int, int>, Poly> table = {
      {{2, 1}, {1, 1}},
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{3, 1}, {1, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
  };
  auto it = table.find({p, k});
  if (it == table.end()) throw DimensionError("conway_polynomial: only p in {2,3}, k <= 6");
  return it->second;
}

FiniteField::FiniteField(int p, int k) : p_(p), k_(k) {
  const Poly& f = conway_polynomial(p, k);
  q_ = 1;
  for (int i = 0; i < k; ++i) q_ *= p;
  exp_.assign(static_cast<std::size_t>(q_ - 1), 0);
  log_.assign(static_cast<std::size_t>(q_), -1);
  std::vector<int> cur(static_cast<std::size_t>(k), 0);
  cur[0] = 1;
  auto encode = [&](const std::vector<int>& v) {
    int code = 0;
    for (int i = k - 1; i >= 0; --i) code = code * p + v[static_cast<std::size_t>(i)];
    return code;
  };
  for (int e = 0; e < q_ - 1; ++e) {
    const int code = encode(cur);
    exp_[static_cast<std::size_t>(e)] = code;
    if (log_[static_cast<std::size_t>(code)] < 0) log_[static_cast<std::size_t>(code)] = e;
    // multiply by x modulo the monic f
    const int top = cur[static_cast<std::size_t>(k - 1)];
    for (int i = k - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    cur[0] = 0;
    for (int i = 0; i < k; ++i)
      cur[static_cast<std::size_t>(i)] = ((cur[static_cast<std::size_t>(i)] - top * f[static_cast<std::size_t>(i)]) % p + p) % p;
  }
}

bool FiniteField::generator_is_primitive() const {
  for (int c = 1; c < q_; ++c)
    if (log_[static_cast<std::size_t>(c)] < 0) return false;
  return true;
}

int FiniteField::log(int x) const {
  if (x <= 0 || x >= q_ || log_[static_cast<std::size_t>(x)] < 0) throw AlgebraError("FiniteField::log: zero or invalid");
  return log_[static_cast<std::size_t>(x)];
}

int FiniteField::add(int a, int b) const {
  int out = 0, scale = 1;
  for (int i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

int FiniteField::mul(int a, int b) const {
  if (!a || !b) return 0;
  return exp(log(a) + log(b));
}

int FiniteField::eval(const Poly& f, int x) const {
  int acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = add(mul(acc, x), from_prime_field(f[i]));
  return acc;
}

namespace {

const FiniteField& field(int p, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, FiniteField> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({p, k});
  if (it == cache.end()) it = cache.emplace(std::make_pair(p, k), FiniteField(p, k)).first;
  return it->second;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

CyclotomicInt brauer_value(const Rep& a, ElemId s) {
  const int p = a.p();
  const int o = a.base()->element_order(s);
  if (o % p == 0) throw AlgebraError("brauer_value: element is not p-regular");
  CyclotomicInt total(o);
  if (a.dim() == 0) return total;
  auto fac = factor_small(charpoly(a.act(s)), p, 6);
  if (poly_degree(fac.rest) > 0) throw AlgebraError("brauer_value: eigenvalues outside F_{p^k}, k <= 6");
  for (const auto& [g, mult] : fac.factors) {
    const int k = poly_degree(g);
    const FiniteField& F = field(p, k);
    const int q1 = F.size() - 1;
    int e0 = -1;
    for (int e = 0; e < q1; ++e)
      if (F.eval(g, F.exp(e)) == 0) {
        e0 = e;
        break;
      }
    if (e0 < 0) throw AlgebraError("brauer_value: factor without a root");
    long long e = e0;
    for (int j = 0; j < k; ++j) {
      if ((e * o) % q1) throw AlgebraError("brauer_value: eigenvalue order does not divide the element order");
      total += CyclotomicInt::root_of_unity(o, e * o / q1) * CyclotomicInt(1, mult);
      e = e * p % q1;
    }
  }
  return total;
}

BrauerTable brauer_classes(const MonoidTable& G) {
  BrauerTable t;
  t.classes = p_regular_classes(G);
  t.class_of.assign(G.size(), -1);
  for (std::size_t c = 0; c < t.classes.size(); ++c)
    for (ElemId x : t.classes[c].members) t.class_of[static_cast<std::size_t>(x)] = static_cast<int>(c);
  return t;
}

std::vector<CyclotomicInt> brauer_character(const Rep& a, const BrauerTable& t) {
  std::vector<CyclotomicInt> out;
  for (const auto& c : t.classes) out.push_back(brauer_value(a, c.representative));
  return out;
}

KeyReport verify_key_fact1(const Rep& st_n, const Rep& st_lower, const ParabolicChain& ch) {
  KeyReport r;
  const int p = ch.G->p();
  for (const auto& c : p_regular_classes(*ch.lower)) {
    const ElemId in_g = ch.GLm->to_root(c.representative);
    ClassCheck row;
    row.representative = in_g;
    row.element_order = c.element_order;
    row.fixed_dim = static_cast<int>(fixed_space_dim(ch.G->element(in_g)));
    CyclotomicInt lhs = brauer_value(st_n, in_g);
    CyclotomicInt rhs = brauer_value(st_lower, c.representative) * CyclotomicInt(1, ipow(p, row.fixed_dim - 1));
    row.lhs = lhs.to_string();
    row.rhs = rhs.to_string();
    row.ok = lhs == rhs;
    r.ok = r.ok && row.ok;
    r.rows.push_back(row);
  }
  return r;
}

KeyReport verify_key_fact2(const Rep& j_dual, const MonoidTable& G) {
  KeyReport r;
  for (const auto& c : p_regular_classes(G)) {
    ClassCheck row;
    row.representative = c.representative;
    row.element_order = c.element_order;
    row.fixed_dim = static_cast<int>(fixed_space_dim(G.element(c.representative)));
    CyclotomicInt lhs = brauer_value(j_dual, c.representative);
    CyclotomicInt rhs(1, ipow(G.p(), row.fixed_dim) - 1);
    row.lhs = lhs.to_string();
    row.rhs = rhs.to_string();
    row.ok = lhs == rhs;
    r.ok = r.ok && row.ok;
    r.rows.push_back(row);
  }
  return r;
}

KeyReport verify_key_fact3(const ParabolicChain& ch) {
  KeyReport r;
  const int p = ch.G->p();
  for (const auto& c : p_regular_classes(*ch.G)) {
    ClassCheck row;
    row.representative = c.representative;
    row.element_order = c.element_order;
    row.fixed_dim = static_cast<int>(fixed_space_dim(ch.G->element(c.representative)));
    const auto count = count_conjugators_into_subgroup(*ch.G, *ch.GLm, c.representative);
    const long long i = row.fixed_dim;
    const long long expected =
        i == 0 ? 0 : static_cast<long long>(ch.GLm->size()) * (ipow(p, static_cast<int>(i)) - 1) * ipow(p, static_cast<int>(i - 1));
    row.lhs = std::to_string(count);
    row.rhs = std::to_string(expected);
    row.ok = static_cast<long long>(count) == expected;
    r.ok = r.ok && row.ok;
    r.rows.push_back(row);
  }
  return r;
}

KeyReport verify_key_characters(const Rep& st_n, const Rep& st_lower, const Rep& j_dual, const ParabolicChain& ch) {
  KeyReport r;
  const auto lower_table = brauer_classes(*ch.lower);
  const auto lower_chi = brauer_character(st_lower, lower_table);
  const long long H = static_cast<long long>(ch.GLm->size());
  const long long G = static_cast<long long>(ch.G->size());
  for (const auto& c : p_regular_classes(*ch.G)) {
    ClassCheck row;
    row.representative = c.representative;
    row.element_order = c.element_order;
    row.fixed_dim = static_cast<int>(fixed_space_dim(ch.G->element(c.representative)));
    // sum over g with g s g^-1 in H = |C_G(s)| * sum over cl(s) n H
    CyclotomicInt class_sum(c.element_order);
    for (ElemId x : c.members) {
      const ElemId h = ch.GLm->from_root(ch.G->to_root(x));
      if (h < 0) continue;
      class_sum += lower_chi[static_cast<std::size_t>(lower_table.class_of[static_cast<std::size_t>(h)])];
    }
    const long long centralizer = G / static_cast<long long>(c.members.size());
    CyclotomicInt lhs = (class_sum * CyclotomicInt(1, centralizer)).divide_exact(H);
    CyclotomicInt rhs = brauer_value(j_dual, c.representative) * brauer_value(st_n, c.representative);
    row.lhs = lhs.to_string();
    row.rhs = rhs.to_string();
    row.ok = lhs == rhs;
    r.ok = r.ok && row.ok;
    r.rows.push_back(row);
  }
  return r;
}

}  // namespace deltafn
