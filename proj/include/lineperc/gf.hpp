#ifndef LINEPERC_GF_HPP
#define LINEPERC_GF_HPP

#include <vector>

#include "lineperc/errors.hpp"

namespace lineperc {

/// Exact arithmetic in GF(q), q = p^k. Elements are encoded as integers
/// 0..q-1 whose base-p digits are the coefficients of a polynomial over
/// GF(p) (digit i = coefficient of x^i). For k >= 2 the field is built
/// modulo the lexicographically smallest monic irreducible polynomial of
/// degree k (coefficients compared from the constant term upward).
///
/// Immutable after construction; safe to share across threads.
class Field {
public:
    /// Factors q = p^k and builds the field. Throws NotPrimePower if q is
    /// not a prime power or q < 2.
    static Field make(int q);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }

    /// Monic modulus of degree k, k+1 coefficients, constant term first.
    /// For k = 1 this is [0, 1], i.e. the polynomial x.
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int mul(int a, int b) const;
    int neg(int a) const;
    /// Multiplicative inverse; throws DivisionByZero for a = 0.
    int inv(int a) const;
    int pow(int a, long long e) const;

private:
    Field() = default;
    void build_tables();
    int add_slow(int a, int b) const;
    int mul_slow(int a, int b) const;

    int p_ = 0, k_ = 0, q_ = 0;
    std::vector<int> modulus_;
    // full operation tables, built whenever q <= 256
    bool has_tables_ = false;
    std::vector<int> add_tab_, mul_tab_, neg_tab_, inv_tab_;
};

namespace gfpoly {

// Polynomials over GF(p) as coefficient vectors, constant term first,
// no trailing zeros (deg(0) = -1). Shared with the irreducibility tests.
int degree(const std::vector<int>& f);
std::vector<int> trim(std::vector<int> f);
std::vector<int> mul(const std::vector<int>& f, const std::vector<int>& g, int p);
// remainder of f mod g, g monic
std::vector<int> rem(std::vector<int> f, const std::vector<int>& g, int p);
bool irreducible(const std::vector<int>& f, int p);

} // namespace gfpoly

} // namespace lineperc

#endif
