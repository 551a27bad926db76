#include "rslab/poly.hpp"

#include <algorithm>
#include <string>

#include "rslab/errors.hpp"

namespace rslab {

namespace {

void trim(std::vector<std::int8_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

}  // namespace

SignedPoly::SignedPoly(std::vector<std::int8_t> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_) {
    if (c < -1 || c > 1) throw DomainError("SignedPoly: coefficient outside {-1,0,1}");
  }
  trim(coeffs_);
}

SignedPoly::SignedPoly(std::initializer_list<int> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (int c : coeffs) {
    if (c < -1 || c > 1) throw DomainError("SignedPoly: coefficient outside {-1,0,1}");
    coeffs_.push_back(static_cast<std::int8_t>(c));
  }
  trim(coeffs_);
}

bool SignedPoly::is_littlewood() const noexcept {
  return !coeffs_.empty() &&
         std::none_of(coeffs_.begin(), coeffs_.end(), [](std::int8_t c) { return c == 0; });
}

std::size_t SignedPoly::origin_multiplicity() const noexcept {
  std::size_t m = 0;
  while (m < coeffs_.size() && coeffs_[m] == 0) ++m;
  return m;
}

std::int64_t SignedPoly::energy() const noexcept {
  std::int64_t s = 0;
  for (auto c : coeffs_) s += c * c;
  return s;
}

RudinShapiroPair rudin_shapiro(int k, int max_generation) {
  if (k < 0) throw DomainError("rudin_shapiro: negative generation");
  if (k > max_generation) {
    throw CapacityError("rudin_shapiro: generation " + std::to_string(k) +
                        " exceeds limit " + std::to_string(max_generation));
  }
  std::vector<std::int8_t> p{1}, q{1};
  for (int g = 0; g < k; ++g) {
    const std::size_t half = p.size();
    std::vector<std::int8_t> np(2 * half), nq(2 * half);
    for (std::size_t j = 0; j < half; ++j) {
      np[j] = nq[j] = p[j];
      np[half + j] = q[j];
      nq[half + j] = static_cast<std::int8_t>(-q[j]);
    }
    p = std::move(np);
    q = std::move(nq);
  }
  RudinShapiroPair out;
  out.k = k;
  out.n = p.size();
  out.p = SignedPoly(std::move(p));
  out.q = SignedPoly(std::move(q));
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                              31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is a proven witness set for n < 3.3e24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                          37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int legendre_symbol(std::int64_t j, std::uint64_t p) {
  if (p < 3 || p % 2 == 0) throw DomainError("legendre_symbol: modulus must be an odd prime");
  const auto sp = static_cast<std::int64_t>(p);
  const auto r = static_cast<std::uint64_t>(((j % sp) + sp) % sp);
  if (r == 0) return 0;
  const std::uint64_t e = pow_mod(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

FeketePoly fekete(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw DomainError("fekete: " + std::to_string(p) + " is not an odd prime");
  }
  std::vector<std::int8_t> c(p);
  for (std::uint64_t j = 0; j < p; ++j) {
    c[j] = static_cast<std::int8_t>(legendre_symbol(static_cast<std::int64_t>(j), p));
  }
  FeketePoly out;
  out.p = p;
  out.poly = SignedPoly(std::move(c));
  out.reciprocity = (p % 4 == 1) ? Reciprocity::self : Reciprocity::anti_self;
  return out;
}

SignedPoly conjugate_reciprocal(const SignedPoly& f) {
  std::vector<std::int8_t> c(f.coeffs().begin(), f.coeffs().end());
  std::reverse(c.begin(), c.end());
  return SignedPoly(std::move(c));
}

}  // namespace rslab
