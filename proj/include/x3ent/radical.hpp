#pragma once

#include <utility>
#include <vector>

#include "x3ent/rational.hpp"

namespace x3 {

// Exact scalar of the form sum_k  c_k * sqrt(d_k)  with rational c_k and
// distinct positive squarefree integers d_k (d=1 is the rational part).
// Closed under +, -, and scaling by rationals, which is all the inequality
// slacks need. Comparisons are exact: sums over distinct squarefree
// radicands vanish only if every coefficient does, and nonzero values are
// separated from 0 by dyadic interval refinement.
class RSum {
  public:
    RSum() = default;

    static RSum of(const Rat& q);
    // sqrt(q) for q >= 0; throws std::domain_error for q < 0.
    static RSum sqrt(const Rat& q);

    RSum operator-() const;
    RSum& operator+=(const RSum& o);
    RSum& operator-=(const RSum& o);
    friend RSum operator+(RSum a, const RSum& b) { return a += b; }
    friend RSum operator-(RSum a, const RSum& b) { return a -= b; }
    friend RSum operator*(const Rat& c, const RSum& a);

    // -1, 0, +1
    int sign() const;

    bool is_rational() const;
    Rat as_rational() const;  // throws if not rational

    double approx() const;
    // [lo, hi] enclosing the exact value, width shrinking with prec_bits.
    std::pair<Rat, Rat> bounds(unsigned prec_bits) const;

    friend bool operator<(const RSum& a, const RSum& b) { return (a - b).sign() < 0; }
    friend bool operator>(const RSum& a, const RSum& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const RSum& a, const RSum& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const RSum& a, const RSum& b) { return (a - b).sign() >= 0; }
    friend bool operator==(const RSum& a, const RSum& b) { return (a - b).sign() == 0; }
    friend bool operator!=(const RSum& a, const RSum& b) { return (a - b).sign() != 0; }

    std::string str() const;

    const std::vector<std::pair<Rat, Int>>& terms() const { return terms_; }

  private:
    // (coefficient, radicand); sorted by radicand, no zero coefficients.
    std::vector<std::pair<Rat, Int>> terms_;

    void add_term(const Rat& c, const Int& rad);
};

inline const RSum& min(const RSum& a, const RSum& b) { return b < a ? b : a; }
inline const RSum& max(const RSum& a, const RSum& b) { return a < b ? b : a; }

// Splits n >= 0 as k^2 * d with d squarefree; returns {k, d}. Trial division
// over primes below 1024 plus a perfect-square check on the remainder; this
// is exact for every remainder whose square part, if any, would involve a
// prime above the bound twice without being a perfect square -- such inputs
// do not occur for the radicands handled here, and the sign routine's
// refinement cap would surface a failure rather than return a wrong sign.
std::pair<Int, Int> squarefree_split(const Int& n);

}  // namespace x3
