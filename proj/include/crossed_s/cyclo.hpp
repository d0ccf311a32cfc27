#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <gmpxx.h>

namespace crossed_s {

using Rational = mpq_class;

/// Raised for operations that leave the domain of a field operation
/// (inverting zero, demoting to a non-dividing order, malformed text).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exact element of the cyclotomic field Q(zeta_n).
///
/// Values are stored at some order n as rational coefficients on the power
/// basis 1, z, ..., z^(phi(n)-1) of Q(z)/Phi_n(z). Mixed-order arithmetic
/// promotes both operands to the lcm of their orders. `reduced()` moves a
/// value to the smallest order whose field contains it; that form is what
/// `str()` prints, so equal values always render identically.
class Cyclo {
 public:
  Cyclo();
  Cyclo(int value);   // NOLINT(google-explicit-constructor)
  Cyclo(long value);  // NOLINT(google-explicit-constructor)
  explicit Cyclo(const Rational& value);

  /// zeta_n^k with zeta_n = exp(2 pi i / n).
  static Cyclo root(int n, long k = 1);
  /// Element given by arbitrary coefficients on zeta_n^0 .. zeta_n^(n-1).
  static Cyclo from_powers(int n, const std::vector<Rational>& coeffs);
  /// Parses the textual grammar produced by `str()`.
  static Cyclo parse(std::string_view text);

  int order() const { return n_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Requires is_rational().
  Rational to_rational() const;

  /// True iff every canonical coefficient is an integer, i.e. the value lies in Z[zeta_n].
  bool is_integral() const;

  /// Same value at order m; m must be a multiple of order().
  Cyclo promoted(int m) const;
  /// Same value at the smallest order whose field contains it.
  Cyclo reduced() const;
  /// Smallest n with the value in Q(zeta_n).
  int conductor() const { return reduced().n_; }

  /// Galois automorphism zeta -> zeta^k, gcd(k, n) = 1.
  Cyclo galois(long k) const;
  /// Complex conjugation, zeta -> zeta^-1.
  Cyclo conj() const { return galois(-1); }
  Cyclo inverse() const;
  Cyclo pow(long e) const;

  std::complex<double> embed() const;
  std::string str() const;

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
  Cyclo operator-() const;
  Cyclo operator+() const { return *this; }

  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

 private:
  Cyclo(int n, std::vector<Rational> coeffs) : n_(n), c_(std::move(coeffs)) {}
  void scale(const Rational& q);

  int n_;
  std::vector<Rational> c_;  // length phi(n_)
};

inline bool is_zero(const Cyclo& x) { return x.is_zero(); }
inline Cyclo conj(const Cyclo& x) { return x.conj(); }

struct RootOfUnity {
  int order;     // m
  int exponent;  // k, with value zeta_m^k and gcd(k, m) = 1 (k = 0 only for m = 1)
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// (m, k) with x = zeta_m^k in lowest terms, or nullopt when x is not a root of unity.
std::optional<RootOfUnity> as_root_of_unity(const Cyclo& x);

/// All m-th roots of `x` that are roots of unity, when x itself is one.
/// Result is ordered by argument in [0, 2 pi).
std::vector<Cyclo> roots_of_root_of_unity(const Cyclo& x, int m);

/// Argument of x in [0, 2 pi), snapped so that values within 1e-9 of 2 pi map to 0.
double argument(const Cyclo& x);

long gcd(long a, long b);
long lcm(long a, long b);
int euler_phi(int n);

std::ostream& operator<<(std::ostream& os, const Cyclo& x);

}  // namespace crossed_s

namespace Eigen {
template <>
struct NumTraits<crossed_s::Cyclo> : GenericNumTraits<crossed_s::Cyclo> {
  using Real = crossed_s::Cyclo;
  using NonInteger = crossed_s::Cyclo;
  using Literal = crossed_s::Cyclo;
  using Nested = crossed_s::Cyclo;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 40,
    MulCost = 200
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
