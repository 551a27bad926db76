#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace rslab {

inline constexpr int kDefaultMaxGeneration = 22;

// Polynomial with coefficients in {-1, 0, +1}; index j holds the coefficient
// of z^j. Trailing zeros are trimmed on construction, so degree() is the index
// of the last nonzero entry (-1 for the zero polynomial).
class SignedPoly {
 public:
  SignedPoly() = default;
  explicit SignedPoly(std::vector<std::int8_t> coeffs);
  SignedPoly(std::initializer_list<int> coeffs);

  std::span<const std::int8_t> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::int8_t operator[](std::size_t j) const noexcept { return coeffs_[j]; }
  std::int8_t leading() const noexcept { return coeffs_.back(); }

  // Littlewood: every coefficient is +1 or -1.
  bool is_littlewood() const noexcept;
  // Number of low-order zero coefficients, i.e. the multiplicity of z = 0.
  std::size_t origin_multiplicity() const noexcept;
  // Sum of squared coefficients (= M_2(f)^2).
  std::int64_t energy() const noexcept;

  friend bool operator==(const SignedPoly&, const SignedPoly&) = default;

 private:
  std::vector<std::int8_t> coeffs_;
};

struct RudinShapiroPair {
  int k = 0;
  std::size_t n = 1;  // 2^k coefficients each
  SignedPoly p;
  SignedPoly q;
};

// P_0 = Q_0 = 1, P_{k+1} = P_k + z^{2^k} Q_k, Q_{k+1} = P_k - z^{2^k} Q_k.
// Throws CapacityError when k > max_generation.
RudinShapiroPair rudin_shapiro(int k, int max_generation = kDefaultMaxGeneration);

enum class Reciprocity { self, anti_self };

struct FeketePoly {
  std::uint64_t p = 3;
  SignedPoly poly;  // length p, poly[j] = (j|p)
  // z^p f(1/z) = (+/-1) f(z), the sign being (-1|p).
  Reciprocity reciprocity = Reciprocity::anti_self;
};

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Euler criterion. Throws DomainError for p < 3 or p even.
int legendre_symbol(std::int64_t j, std::uint64_t p);

// Throws DomainError unless p is an odd prime.
FeketePoly fekete(std::uint64_t p);

// z^{deg f} f(1/z) for real coefficients, i.e. coefficient reversal.
SignedPoly conjugate_reciprocal(const SignedPoly& f);

}  // namespace rslab
