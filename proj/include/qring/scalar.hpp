#pragma once

// Exact coefficient rings: the integers, the rationals and Z/m.
// Every scalar is an mpq_class kept in the canonical form of its ring.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "error.hpp"

namespace qring {

using Scalar = mpq_class;

inline bool is_prime(std::int64_t m) {
  if (m < 2) return false;
  for (std::int64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

class CoeffRing {
 public:
  enum class Kind { Integers, IntegersMod, Rationals };

  static CoeffRing integers() { return CoeffRing(Kind::Integers, 0, false); }
  static CoeffRing rationals() { return CoeffRing(Kind::Rationals, 0, false); }

  /// Z/m. Composite moduli are rejected unless force_composite is set, in
  /// which case the ring reports itself as a non-domain.
  static CoeffRing integers_mod(std::int64_t m, bool force_composite = false) {
    if (m < 2) fail(Errc::InvalidParams, "modulus must be at least 2");
    if (m > (std::int64_t{1} << 31)) fail(Errc::InvalidParams, "modulus too large");
    if (!is_prime(m) && !force_composite)
      fail(Errc::CompositeModulus, "Z/" + std::to_string(m) + " is not an integral domain");
    return CoeffRing(Kind::IntegersMod, m, !is_prime(m));
  }

  /// Accepts "Z", "Q", "Zmod:m" (JSON form) and "z", "q", "zp:P" (CLI form).
  static CoeffRing parse(std::string_view text, bool force_composite = false) {
    std::string s(text);
    if (s == "Z" || s == "z") return integers();
    if (s == "Q" || s == "q") return rationals();
    for (std::string_view prefix : {"Zmod:", "zp:", "zmod:"}) {
      if (s.rfind(prefix, 0) == 0) {
        std::int64_t m = 0;
        try {
          m = std::stoll(s.substr(prefix.size()));
        } catch (const std::exception&) {
          fail(Errc::ParseError, "bad modulus in ring '" + s + "'");
        }
        return integers_mod(m, force_composite);
      }
    }
    fail(Errc::ParseError, "unknown ring '" + s + "'");
  }

  Kind kind() const noexcept { return kind_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  bool is_domain() const noexcept { return !non_domain_; }
  /// 0 for Z and Q.
  std::int64_t characteristic() const noexcept { return kind_ == Kind::IntegersMod ? modulus_ : 0; }

  std::string name() const {
    switch (kind_) {
      case Kind::Integers: return "Z";
      case Kind::Rationals: return "Q";
      case Kind::IntegersMod: return "Zmod:" + std::to_string(modulus_);
    }
    return "?";
  }

  bool operator==(const CoeffRing& o) const noexcept {
    return kind_ == o.kind_ && modulus_ == o.modulus_;
  }

  /// Brings a rational into the canonical representative of this ring.
  Scalar normalize(Scalar q) const {
    q.canonicalize();
    switch (kind_) {
      case Kind::Rationals:
        return q;
      case Kind::Integers:
        if (q.get_den() != 1) fail(Errc::InvalidParams, "non-integer coefficient " + q.get_str() + " over Z");
        return q;
      case Kind::IntegersMod: {
        mpz_class m(static_cast<long>(modulus_));
        mpz_class num = q.get_num();
        if (q.get_den() != 1) {
          mpz_class inv;
          mpz_class den = q.get_den();
          if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
            fail(Errc::InvalidParams, "denominator not invertible mod " + std::to_string(modulus_));
          num *= inv;
        }
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), m.get_mpz_t());
        return Scalar(r);
      }
    }
    return q;
  }

  Scalar from_int(long v) const { return normalize(Scalar(v)); }
  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return from_int(1); }

  Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
  Scalar neg(const Scalar& a) const { return normalize(-a); }

  /// Exact quotient a / b, or nullopt-like failure signalled by the bool.
  bool divide(const Scalar& a, const Scalar& b, Scalar& out) const {
    if (b == 0) return false;
    switch (kind_) {
      case Kind::Rationals:
        out = a / b;
        return true;
      case Kind::Integers: {
        mpz_class q, r;
        mpz_class an = a.get_num(), bn = b.get_num();
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), an.get_mpz_t(), bn.get_mpz_t());
        if (r != 0) return false;
        out = Scalar(q);
        return true;
      }
      case Kind::IntegersMod: {
        mpz_class m(static_cast<long>(modulus_)), inv, bn = b.get_num();
        if (mpz_invert(inv.get_mpz_t(), bn.get_mpz_t(), m.get_mpz_t()) == 0) return false;
        out = normalize(Scalar(a.get_num() * inv));
        return true;
      }
    }
    return false;
  }

  /// Decimal string ("-3", "1/2").
  static std::string format(const Scalar& s) { return s.get_str(); }

  Scalar parse_scalar(std::string_view text) const {
    Scalar q;
    try {
      q = Scalar(std::string(text));
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad scalar '" + std::string(text) + "'");
    }
    return normalize(q);
  }

 private:
  CoeffRing(Kind k, std::int64_t m, bool non_domain) : kind_(k), modulus_(m), non_domain_(non_domain) {}

  Kind kind_;
  std::int64_t modulus_;
  bool non_domain_;
};

}  // namespace qring
