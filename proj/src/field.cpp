#include "field.hpp"

#include <algorithm>

#include "error.hpp"

namespace afg {
namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; (long long)d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense polynomials over Z_p, coefficient of x^i at index i, no trailing zeros.
using Poly = std::vector<int>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return trim(r);
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    a = trim(std::move(a));
    while (a.size() >= m.size()) {
        int lead = a.back();  // m is monic
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            int& c = a[i + shift];
            c = ((c - lead * m[i]) % p + p) % p;
        }
        a = trim(std::move(a));
    }
    return a;
}

int poly_to_code(const Poly& a, int p) {
    int code = 0;
    for (size_t i = a.size(); i-- > 0;) code = code * p + a[i];
    return code;
}

Poly code_to_poly(int code, int p) {
    Poly a;
    while (code) {
        a.push_back(code % p);
        code /= p;
    }
    return a;
}

bool is_irreducible(const Poly& m, int p) {
    int deg = (int)m.size() - 1;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (int d = 1; 2 * d <= deg; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long c = 0; c < count; ++c) {
            Poly div = code_to_poly((int)c, p);
            div.resize(d + 1, 0);
            div[d] = 1;
            if (poly_mod(m, div, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(int p, int ell) : p_(p), ell_(ell) {
    if (!is_prime(p)) fail(errc::invalid, "field characteristic " + std::to_string(p) + " is not prime");
    if (ell < 1) fail(errc::invalid, "field extension degree must be positive");
    long long q = 1;
    for (int i = 0; i < ell; ++i) {
        q *= p;
        if (q > caps().field) fail(errc::cap, "field size p^ell exceeds the field cap");
    }
    q_ = (int)q;

    // Lexicographically smallest monic irreducible: coefficient tuples
    // (c_{ell-1}, ..., c_0) in lex order are exactly the base-p codes of
    // 0..q-1 with c_0 in the least significant digit.
    modulus_.clear();
    for (int lower = 0; lower < q_; ++lower) {
        Poly m = code_to_poly(lower, p);
        m.resize(ell + 1, 0);
        m[ell] = 1;
        if (is_irreducible(m, p)) {
            modulus_ = m;
            break;
        }
    }
    if (modulus_.empty()) fail(errc::internal, "no irreducible modulus found");

    // Antilog/log tables from the smallest-code primitive element.
    log_.assign(q_, -1);
    antilog_.assign(std::max(1, q_ - 1), 1);
    omega_ = 0;
    for (int a = 1; a < q_; ++a) {
        Poly pa = code_to_poly(a, p);
        Poly acc = {1};
        int order = 0;
        do {
            acc = poly_mod(poly_mul(acc, pa, p), modulus_, p);
            ++order;
        } while (poly_to_code(acc, p) != 1);
        if (order == q_ - 1) {
            omega_ = a;
            break;
        }
    }
    if (omega_ == 0) fail(errc::internal, "no primitive element found");
    Poly acc = {1};
    Poly po = code_to_poly(omega_, p);
    for (int k = 0; k < q_ - 1; ++k) {
        int code = poly_to_code(acc, p);
        antilog_[k] = code;
        log_[code] = k;
        acc = poly_mod(poly_mul(acc, po, p), modulus_, p);
    }
}

int Field::check(int a) const {
    if (a < 0 || a >= q_) fail(errc::invalid, "element code out of range for " + name());
    return a;
}

int Field::add(int a, int b) const {
    check(a);
    check(b);
    int r = 0, mult = 1;
    while (a || b) {
        r += mult * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

int Field::neg(int a) const {
    check(a);
    int r = 0, mult = 1;
    while (a) {
        r += mult * ((p_ - a % p_) % p_);
        a /= p_;
        mult *= p_;
    }
    return r;
}

int Field::mul(int a, int b) const {
    check(a);
    check(b);
    if (a == 0 || b == 0) return 0;
    return antilog_[(log_[a] + log_[b]) % (q_ - 1)];
}

int Field::inv(int a) const {
    check(a);
    if (a == 0) fail(errc::invalid, "division by zero in " + name());
    return antilog_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int Field::pow(int a, long long e) const {
    check(a);
    if (a == 0) {
        if (e < 0) fail(errc::invalid, "division by zero in " + name());
        return e == 0 ? 1 : 0;
    }
    long long m = q_ - 1;
    long long k = ((long long)log_[a] * (e % m)) % m;
    if (k < 0) k += m;
    return antilog_[k];
}

int Field::frobenius(int a, int k) const {
    check(a);
    if (a == 0) return 0;
    k %= ell_;
    if (k < 0) k += ell_;
    long long pk = 1;
    for (int i = 0; i < k; ++i) pk = (pk * p_) % (q_ - 1 == 0 ? 1 : q_ - 1);
    if (q_ == 2) return a;
    return antilog_[((long long)log_[a] * pk) % (q_ - 1)];
}

int Field::dlog(int a) const {
    check(a);
    if (a == 0) fail(errc::invalid, "discrete log of zero in " + name());
    return log_[a];
}

std::string Field::name() const {
    if (ell_ == 1) return "GF(" + std::to_string(p_) + ")";
    return "GF(" + std::to_string(p_) + "^" + std::to_string(ell_) + ")";
}

}  // namespace afg
