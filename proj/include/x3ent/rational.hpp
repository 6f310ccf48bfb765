#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace x3 {

using Int = mpz_class;
using Rat = mpq_class;

// Parse "p/q", an integer, or a plain decimal like "-3.25" into an exact
// rational. Throws std::invalid_argument on anything else.
Rat parse_rat(const std::string& s);

// "p/q" with q > 1, otherwise just "p".
std::string format_rat(const Rat& q);

inline double to_double(const Rat& q) { return q.get_d(); }

// Exact rational complex numbers (enough for X-matrix bookkeeping).
struct CRat {
    Rat re, im;

    CRat() = default;
    CRat(Rat r) : re(std::move(r)) {}
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    CRat conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }  // |.|^2

    friend CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend CRat operator-(const CRat& a) { return {-a.re, -a.im}; }
    friend CRat operator*(const CRat& a, const CRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CRat operator*(const Rat& a, const CRat& b) { return {a * b.re, a * b.im}; }
    friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }
};

std::string format_crat(const CRat& z);

}  // namespace x3
