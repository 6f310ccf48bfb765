#include "x3ent/radical.hpp"

#include <algorithm>
#include <cmath>

namespace x3 {

namespace {

const std::vector<unsigned>& small_primes() {
    static const std::vector<unsigned> primes = [] {
        std::vector<unsigned> ps;
        std::vector<bool> sieve(1024, true);
        for (unsigned p = 2; p < 1024; ++p) {
            if (!sieve[p]) continue;
            ps.push_back(p);
            for (unsigned q = p * p; q < 1024; q += p) sieve[q] = false;
        }
        return ps;
    }();
    return primes;
}

}  // namespace

std::pair<Int, Int> squarefree_split(const Int& n) {
    if (n < 0) throw std::domain_error("squarefree_split: negative input");
    if (n == 0) return {0, 1};
    Int k = 1, d = 1, m = n;
    for (unsigned p : small_primes()) {
        if (m == 1) break;
        if (Int(p) * p > m) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2) k *= p;
        if (e & 1) d *= p;
    }
    if (m > 1) {
        if (mpz_perfect_square_p(m.get_mpz_t())) {
            Int r;
            mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
            k *= r;
        } else {
            d *= m;  // treated as squarefree; see header note
        }
    }
    return {k, d};
}

void RSum::add_term(const Rat& cin, const Int& rad) {
    // GMP rational comparisons assume canonical form; enforce it here since
    // sqrt() builds coefficients as k/den without reducing.
    Rat c = cin;
    c.canonicalize();
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), rad,
                               [](const auto& t, const Int& r) { return t.second < r; });
    if (it != terms_.end() && it->second == rad) {
        it->first += c;
        if (it->first == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {c, rad});
    }
}

RSum RSum::of(const Rat& q) {
    RSum r;
    r.add_term(q, 1);
    return r;
}

RSum RSum::sqrt(const Rat& q) {
    if (q < 0) throw std::domain_error("RSum::sqrt of negative rational");
    RSum r;
    if (q == 0) return r;
    // sqrt(p/q) = sqrt(p*q) / q
    Int pq = q.get_num() * q.get_den();
    auto [k, d] = squarefree_split(pq);
    r.add_term(Rat(k, q.get_den()), d);
    return r;
}

RSum RSum::operator-() const {
    RSum r = *this;
    for (auto& t : r.terms_) t.first = -t.first;
    return r;
}

RSum& RSum::operator+=(const RSum& o) {
    for (const auto& t : o.terms_) add_term(t.first, t.second);
    return *this;
}

RSum& RSum::operator-=(const RSum& o) {
    for (const auto& t : o.terms_) add_term(-t.first, t.second);
    return *this;
}

RSum operator*(const Rat& c, const RSum& a) {
    RSum r;
    if (c == 0) return r;
    r.terms_ = a.terms_;
    for (auto& t : r.terms_) t.first *= c;
    return r;
}

bool RSum::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].second == 1);
}

Rat RSum::as_rational() const {
    if (terms_.empty()) return 0;
    if (terms_.size() == 1 && terms_[0].second == 1) return terms_[0].first;
    throw std::domain_error("RSum::as_rational: value is irrational");
}

std::pair<Rat, Rat> RSum::bounds(unsigned prec_bits) const {
    Rat lo = 0, hi = 0;
    Int scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), prec_bits);
    for (const auto& [c, d] : terms_) {
        if (d == 1) {
            lo += c;
            hi += c;
            continue;
        }
        Int t = d;
        mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), 2 * prec_bits);
        Int s;
        mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
        Rat slo(s, scale), shi(s + 1, scale);
        slo.canonicalize();
        shi.canonicalize();
        if (c > 0) {
            lo += c * slo;
            hi += c * shi;
        } else {
            lo += c * shi;
            hi += c * slo;
        }
    }
    return {lo, hi};
}

int RSum::sign() const {
    if (terms_.empty()) return 0;
    bool all_pos = true, all_neg = true;
    for (const auto& t : terms_) (t.first > 0 ? all_neg : all_pos) = false;
    if (all_pos) return 1;
    if (all_neg) return -1;
    // Mixed signs over distinct squarefree radicands: the value is nonzero,
    // so interval refinement terminates.
    for (unsigned prec = 32; prec <= 4096; prec *= 2) {
        auto [lo, hi] = bounds(prec);
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
    throw std::runtime_error("RSum::sign: refinement cap exceeded");
}

double RSum::approx() const {
    double v = 0;
    for (const auto& [c, d] : terms_) v += to_double(c) * std::sqrt(d.get_d());
    return v;
}

std::string RSum::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [c, d] : terms_) {
        if (!first) s += c > 0 ? " + " : " - ";
        Rat a = first ? c : Rat(abs(c));
        first = false;
        if (d == 1) {
            s += format_rat(a);
        } else {
            if (a != 1) s += format_rat(a) + "*";
            s += "sqrt(" + d.get_str() + ")";
        }
    }
    return s;
}

}  // namespace x3
