#pragma once
#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace algrest {

// Exact scalars. mpq_class keeps the invariants we rely on everywhere:
// fractions reduced to lowest terms, denominator positive, no rounding.
using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad command-line or lookup input, as opposed to a failed computation.
struct UsageError : Error {
  explicit UsageError(const std::string& what) : Error(what) {}
};

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Rat parse_rational(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw Error("bad rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

// Exact n-th root when it exists.
inline std::optional<Int> nth_root_exact(const Int& a, unsigned long n) {
  if (n == 0) throw Error("0th root");
  if (a < 0 && n % 2 == 0) return std::nullopt;
  Int r;
  int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), n);
  if (!exact) return std::nullopt;
  return r;
}

inline Rat pow_rat(const Rat& base, long e) {
  Rat r = 1;
  Rat b = e >= 0 ? base : Rat(1) / base;
  for (long k = e >= 0 ? e : -e; k > 0; --k) r *= b;
  return r;
}

// Integers extended with +/- infinity: Lagrangian tangency orders, isotropy
// indices and vanishing orders all live here.
struct ExtInt {
  enum Kind { NegInf, Finite, PosInf } kind = Finite;
  long v = 0;

  ExtInt() = default;
  ExtInt(long value) : kind(Finite), v(value) {}
  static ExtInt infinity() { return ExtInt(PosInf, 0); }
  static ExtInt neg_infinity() { return ExtInt(NegInf, 0); }

  bool is_finite() const { return kind == Finite; }
  bool operator==(const ExtInt& o) const {
    return kind == o.kind && (kind != Finite || v == o.v);
  }
  bool operator!=(const ExtInt& o) const { return !(*this == o); }
  bool operator<(const ExtInt& o) const {
    if (kind != o.kind) return kind < o.kind;
    return kind == Finite && v < o.v;
  }
  bool operator<=(const ExtInt& o) const { return *this < o || *this == o; }

 private:
  ExtInt(Kind k, long value) : kind(k), v(value) {}
};

inline std::string to_string(const ExtInt& x) {
  switch (x.kind) {
    case ExtInt::PosInf: return "inf";
    case ExtInt::NegInf: return "-inf";
    default: return std::to_string(x.v);
  }
}

inline ExtInt min(const ExtInt& a, const ExtInt& b) { return a < b ? a : b; }
inline ExtInt max(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }

}  // namespace algrest
