#pragma once

// Scalar fields used throughout the library.
//
// Two backends are provided:
//   Rational  arbitrary-precision rationals (GMP), always canonical p/q.
//   ModP      integers modulo a prime chosen at runtime per thread.
//
// All algorithms are templates over a type satisfying the Field concept and
// reach field-specific behavior only through scalar_traits<F>.

#include <gmpxx.h>

#include <charconv>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quiverrep {

using Rational = mpq_class;

/// Element of the prime field F_p. The modulus is a per-thread setting
/// installed with ModP::Scope, so elements stay a single machine word.
class ModP {
 public:
  ModP() = default;
  ModP(long long v) : value_(reduce(v)) {}  // NOLINT(google-explicit-constructor)

  static std::uint64_t modulus() { return modulus_; }

  /// Installs a modulus for the current thread for the lifetime of the scope.
  class Scope {
   public:
    explicit Scope(std::uint64_t p) : previous_(modulus_) {
      if (p < 2 || p >= (std::uint64_t{1} << 62) || !is_prime(p)) {
        throw std::invalid_argument("ModP modulus must be a prime below 2^62, got " +
                                    std::to_string(p));
      }
      modulus_ = p;
    }
    ~Scope() { modulus_ = previous_; }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    std::uint64_t previous_;
  };

  std::uint64_t value() const { return value_; }

  friend ModP operator+(ModP a, ModP b) {
    std::uint64_t s = a.value_ + b.value_;
    if (s >= modulus_) s -= modulus_;
    return raw(s);
  }
  friend ModP operator-(ModP a, ModP b) {
    return raw(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + modulus_ - b.value_);
  }
  friend ModP operator*(ModP a, ModP b) {
    return raw(static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.value_) * b.value_ %
                                          modulus_));
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  ModP operator-() const { return raw(value_ == 0 ? 0 : modulus_ - value_); }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  ModP& operator/=(ModP o) { return *this = *this / o; }
  friend bool operator==(ModP a, ModP b) { return a.value_ == b.value_; }

  ModP inverse() const {
    if (value_ == 0) throw std::domain_error("ModP: division by zero");
    // Fermat: a^(p-2)
    ModP base = *this;
    ModP acc = raw(1);
    for (std::uint64_t e = modulus_ - 2; e != 0; e >>= 1) {
      if (e & 1) acc *= base;
      base *= base;
    }
    return acc;
  }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }

 private:
  static ModP raw(std::uint64_t v) {
    ModP r;
    r.value_ = v;
    return r;
  }
  static std::uint64_t reduce(long long v) {
    auto m = static_cast<long long>(modulus_);
    long long r = v % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
  }

  std::uint64_t value_ = 0;
  static inline thread_local std::uint64_t modulus_ = 2147483647;  // 2^31 - 1
};

template <typename F>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr const char* name = "q";

  static Rational from_int(long long v) { return Rational(static_cast<long>(v)); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static bool is_one(const Rational& x) { return x == 1; }

  /// Parses "p", "-p" or "p/q" with q nonzero; result is canonical.
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    auto valid_int = [](std::string_view t) {
      if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
      if (t.empty()) return false;
      for (char c : t) {
        if (c < '0' || c > '9') return false;
      }
      return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num.front() == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || (!den.empty() && den.front() == '-')) {
      throw std::invalid_argument("not a rational literal: '" + s + "'");
    }
    if (den.front() == '+') den.erase(0, 1);
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
  }

  static std::string to_string(const Rational& x) { return x.get_str(); }
};

template <>
struct scalar_traits<ModP> {
  static constexpr const char* name = "fp";

  static ModP from_int(long long v) { return ModP(v); }
  static bool is_zero(const ModP& x) { return x.value() == 0; }
  static bool is_one(const ModP& x) { return x.value() == 1; }

  /// Parses a rational literal and maps it into F_p.
  static ModP parse(std::string_view text) {
    Rational q = scalar_traits<Rational>::parse(text);
    mpz_class p(std::to_string(ModP::modulus()), 10);
    mpz_class num = q.get_num() % p;
    mpz_class den = q.get_den() % p;
    if (num < 0) num += p;
    if (den == 0) {
      throw std::invalid_argument("denominator of '" + std::string(text) +
                                  "' vanishes modulo " + std::to_string(ModP::modulus()));
    }
    auto to_modp = [](const mpz_class& z) {
      return ModP(static_cast<long long>(std::stoull(z.get_str())));
    };
    return to_modp(num) / to_modp(den);
  }

  static std::string to_string(const ModP& x) { return std::to_string(x.value()); }
};

template <typename F>
concept Field = std::regular<F> && requires(F a, F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { scalar_traits<F>::from_int(1LL) } -> std::same_as<F>;
  { scalar_traits<F>::is_zero(a) } -> std::same_as<bool>;
  { scalar_traits<F>::to_string(a) } -> std::same_as<std::string>;
};

template <Field F>
inline bool is_zero(const F& x) {
  return scalar_traits<F>::is_zero(x);
}

template <Field F>
inline F from_int(long long v) {
  return scalar_traits<F>::from_int(v);
}

}  // namespace quiverrep
