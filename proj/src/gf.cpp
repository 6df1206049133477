#include "stargraph/gf.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace stargraph {

bool is_prime(std::uint32_t x) {
  if (x < 2) return false;
  for (std::uint32_t d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

namespace {

// Built-in reduction polynomials, coefficient of x^i at index i.
const std::map<std::uint32_t, std::pair<std::uint32_t, std::vector<std::uint32_t>>>&
poly_table() {
  static const std::map<std::uint32_t, std::pair<std::uint32_t, std::vector<std::uint32_t>>>
      table = {
          {4, {2, {1, 1, 1}}},              // x^2+x+1
          {8, {2, {1, 1, 0, 1}}},           // x^3+x+1
          {9, {3, {1, 0, 1}}},              // x^2+1
          {16, {2, {1, 1, 0, 0, 1}}},       // x^4+x+1
          {25, {5, {2, 0, 1}}},             // x^2+2
          {27, {3, {1, 2, 0, 1}}},          // x^3+2x+1
          {32, {2, {1, 0, 1, 0, 0, 1}}},    // x^5+x^2+1
          {49, {7, {1, 0, 1}}},             // x^2+1
          {64, {2, {1, 1, 0, 0, 0, 0, 1}}},  // x^6+x+1
          {81, {3, {2, 1, 0, 0, 1}}},       // x^4+x+2
          {121, {11, {1, 0, 1}}},           // x^2+1
          {125, {5, {1, 1, 0, 1}}},         // x^3+x+1
          {128, {2, {1, 1, 0, 0, 0, 0, 0, 1}}},  // x^7+x+1
      };
  return table;
}

using Poly = std::vector<std::uint32_t>;  // coeff of x^i at index i, may have zero lead

int poly_degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// Remainder of f mod g over GF(p); g monic.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  int dg = poly_degree(g);
  for (int df = poly_degree(f); df >= dg; df = poly_degree(f)) {
    std::uint32_t lead = f[df];
    for (int i = 0; i <= dg; ++i) {
      std::uint64_t sub = static_cast<std::uint64_t>(lead) * g[i] % p;
      f[df - dg + i] = static_cast<std::uint32_t>((f[df - dg + i] + p - sub) % p);
    }
  }
  return f;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>(
          (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  }
  return out;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t x) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= x; ++d) {
    if (x % d) continue;
    out.push_back(d);
    while (x % d == 0) x /= d;
  }
  if (x > 1) out.push_back(x);
  return out;
}

}  // namespace

const Field& Field::get(std::uint32_t q) {
  static std::map<std::uint32_t, Field> cache;
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  if (is_prime(q) && q <= 257) {
    auto [pos, ok] = cache.emplace(q, Field(q, 1, {0, 1}));
    return pos->second;
  }
  auto entry = poly_table().find(q);
  if (entry == poly_table().end())
    throw UsageError("Field::get: unsupported order " + std::to_string(q));
  std::uint32_t p = entry->second.first;
  std::uint32_t n = 0;
  for (std::uint32_t t = q; t > 1; t /= p) ++n;
  auto [pos, ok] = cache.emplace(q, Field(p, n, entry->second.second));
  return pos->second;
}

Field::Field(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> reduction_poly)
    : p_(p), n_(n), poly_(std::move(reduction_poly)) {
  if (!is_prime(p_)) throw UsageError("Field: characteristic must be prime");
  if (n_ == 0) throw UsageError("Field: degree must be positive");
  q_ = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (q_ > 100000 / p_ + 1) throw UsageError("Field: order too large");
    q_ *= p_;
  }
  if (poly_.size() != n_ + 1 || poly_[n_] != 1)
    throw UsageError("Field: reduction polynomial must be monic of degree n");
  for (auto c : poly_)
    if (c >= p_) throw UsageError("Field: polynomial coefficient out of range");
  if (n_ > 1) check_irreducible();
}

void Field::check_irreducible() const {
  // Trial division by every monic polynomial of degree 1..n/2.
  for (std::uint32_t d = 1; d <= n_ / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p_;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p_);
        c /= p_;
      }
      if (poly_degree(poly_mod(poly_, g, p_)) < 0)
        throw UsageError("Field: reduction polynomial is reducible");
    }
  }
}

std::vector<std::uint32_t> Field::to_coeffs(std::uint32_t a) const {
  std::vector<std::uint32_t> c(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

std::uint32_t Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
  if (c.size() != n_) throw UsageError("Field: coefficient vector size mismatch");
  std::uint32_t a = 0;
  for (std::uint32_t i = n_; i-- > 0;) {
    if (c[i] >= p_) throw UsageError("Field: coefficient out of range");
    a = a * p_ + c[i];
  }
  return a;
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  auto ca = to_coeffs(a), cb = to_coeffs(b);
  for (std::uint32_t i = 0; i < n_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
  return from_coeffs(ca);
}

std::uint32_t Field::neg(std::uint32_t a) const {
  auto c = to_coeffs(a);
  for (auto& x : c) x = (p_ - x) % p_;
  return from_coeffs(c);
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  Poly prod = poly_mul(to_coeffs(a), to_coeffs(b), p_);
  Poly rem = poly_mod(std::move(prod), poly_, p_);
  rem.resize(n_, 0);
  std::uint32_t out = 0;
  for (std::uint32_t i = n_; i-- > 0;) out = out * p_ + rem[i];
  return out;
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw UsageError("Field: division by zero");
  return pow(a, q_ - 2);
}

std::uint64_t Field::multiplicative_order(std::uint32_t a) const {
  if (a == 0) throw UsageError("Field: zero has no multiplicative order");
  std::uint64_t ord = q_ - 1;
  for (std::uint32_t f : prime_factors(q_ - 1))
    while (ord % f == 0 && pow(a, ord / f) == 1) ord /= f;
  return ord;
}

std::uint32_t Field::primitive_element() const {
  if (primitive_) return primitive_;
  if (q_ == 2) return primitive_ = 1;
  for (std::uint32_t a = 1; a < q_; ++a) {
    if (multiplicative_order(a) == q_ - 1) {
      primitive_ = a;
      return a;
    }
  }
  throw Error("Field: no primitive element found");  // unreachable
}

std::vector<std::uint32_t> Field::quadratic_residues() const {
  if (q_ % 2 == 0) throw UsageError("EvenOrder: quadratic residues need odd q");
  std::vector<char> seen(q_, 0);
  for (std::uint32_t x = 1; x < q_; ++x) seen[mul(x, x)] = 1;
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < q_; ++x)
    if (seen[x]) out.push_back(x);
  return out;
}

std::string Field::to_string() const {
  std::ostringstream os;
  if (n_ == 1) {
    os << "GF(" << p_ << ")";
    return os.str();
  }
  os << "GF(" << p_ << "^" << n_ << ")/<";
  bool first = true;
  for (std::uint32_t i = n_ + 1; i-- > 0;) {
    if (poly_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || poly_[i] != 1) os << poly_[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  os << ">";
  return os.str();
}

}  // namespace stargraph
