#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "preop/errors.hpp"

namespace preop {

/// Arbitrary-precision signed integer; every coefficient in the library is
/// one of these.  No floating point anywhere.
using Int = boost::multiprecision::cpp_int;

/// Desuspended degree of an arity-n element: n - 1.  May be -1 (arity 0).
constexpr int ddeg(int degree) { return degree - 1; }

/// The coefficient ring K: the integers, or the integers modulo a prime p.
/// Mod-p values are kept reduced to the canonical range [0, p).
///
/// Note p = 2 erases all signs, so sign bugs are invisible there; identity
/// suites run over the integers first and use mod-p only as a stress ring.
class Ring {
 public:
  enum class Kind { integers, integers_mod_p };

  Ring() : kind_(Kind::integers), p_(0) {}

  static Ring integers() { return Ring(); }

  static Ring mod_p(const Int& p) {
    if (!is_prime(p)) throw ConfigError("modulus " + p.str() + " is not a prime >= 2");
    Ring r;
    r.kind_ = Kind::integers_mod_p;
    r.p_ = p;
    return r;
  }

  Kind kind() const { return kind_; }
  const Int& modulus() const { return p_; }

  /// Canonical representative of v: v itself over the integers, the
  /// residue in [0, p) mod p.
  Int canon(Int v) const {
    if (kind_ == Kind::integers) return v;
    Int r = v % p_;
    if (r < 0) r += p_;
    return r;
  }

  Int zero() const { return Int(0); }
  Int one() const { return Int(1); }
  Int minus_one() const { return canon(Int(-1)); }
  Int from_int(long long v) const { return canon(Int(v)); }

  Int add(const Int& a, const Int& b) const { return canon(a + b); }
  Int sub(const Int& a, const Int& b) const { return canon(a - b); }
  Int mul(const Int& a, const Int& b) const { return canon(a * b); }
  Int neg(const Int& a) const { return canon(-a); }

  bool is_zero(const Int& a) const { return canon(a) == 0; }
  bool equal(const Int& a, const Int& b) const { return canon(a) == canon(b); }

  /// (-1)^{a*b} as a ring scalar.  a and b may be negative: desuspended
  /// degrees reach -1 and only the parity of the product matters.
  Int koszul_sign(long long a, long long b) const {
    const bool odd = (a % 2 != 0) && (b % 2 != 0);
    return odd ? minus_one() : one();
  }

  /// (-1)^e for a single (possibly negative) exponent.
  Int parity_sign(long long e) const { return koszul_sign(e, 1); }

  bool operator==(const Ring& other) const {
    return kind_ == other.kind_ && p_ == other.p_;
  }

  /// "z" for the integers, "zmod:P" for the integers mod P.
  std::string name() const {
    return kind_ == Kind::integers ? "z" : "zmod:" + p_.str();
  }

  /// Inverse of name(); accepts the same spellings as the CLI --ring flag.
  static Ring parse(const std::string& text) {
    if (text == "z" || text == "Z") return integers();
    const std::string prefix = "zmod:";
    if (text.rfind(prefix, 0) == 0) {
      Int p;
      try {
        p = Int(text.substr(prefix.size()));
      } catch (const std::exception&) {
        throw ConfigError("bad modulus in ring spec '" + text + "'");
      }
      return mod_p(p);
    }
    throw ConfigError("unknown ring spec '" + text + "' (expected z or zmod:P)");
  }

 private:
  static bool is_prime(const Int& p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  Kind kind_;
  Int p_;
};

}  // namespace preop
