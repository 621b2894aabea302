#pragma once

#include <string>
#include <vector>

namespace afg {

// GF(p^ell) with elements represented as integer codes in [0, q).  The base-p
// digits of a code are the coefficients of the residue polynomial, constant
// term in the least significant digit.  The modulus is the lexicographically
// smallest monic irreducible of degree ell (coefficients compared from the
// highest power down to the constant), so every (p, ell) names one field.
class Field {
public:
    Field(int p, int ell);

    int p() const { return p_; }
    int ell() const { return ell_; }
    int q() const { return q_; }
    // Modulus coefficients, constant term first, length ell+1, leading 1.
    const std::vector<int>& modulus() const { return modulus_; }
    // Smallest-code primitive element (generator of the multiplicative group).
    int omega() const { return omega_; }

    int add(int a, int b) const;
    int neg(int a) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const;
    int inv(int a) const;       // error on 0
    int div(int a, int b) const { return mul(a, inv(b)); }
    int pow(int a, long long e) const;
    int frobenius(int a, int k) const;  // a^(p^k)
    int dlog(int a) const;              // exponent of omega; error on 0

    std::string name() const;  // "GF(p)" or "GF(p^ell)"

private:
    int p_, ell_, q_;
    std::vector<int> modulus_;
    int omega_;
    std::vector<int> log_;      // log_[a] for a in [1, q)
    std::vector<int> antilog_;  // antilog_[k] = omega^k, k in [0, q-1)

    int check(int a) const;
};

}  // namespace afg
