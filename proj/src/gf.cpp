#include "lineperc/gf.hpp"

#include <string>

namespace lineperc {

namespace gfpoly {

int degree(const std::vector<int>& f) {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

std::vector<int> trim(std::vector<int> f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

std::vector<int> mul(const std::vector<int>& f, const std::vector<int>& g, int p) {
    if (degree(f) < 0 || degree(g) < 0) return {};
    std::vector<int> r(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j)
            r[i + j] = (r[i + j] + f[i] * g[j]) % p;
    return trim(r);
}

std::vector<int> rem(std::vector<int> f, const std::vector<int>& g, int p) {
    int dg = degree(g);
    for (int df = degree(f); df >= dg; df = degree(f)) {
        // g is monic, so the quotient digit is just the leading coefficient
        int c = f[df];
        for (int i = 0; i <= dg; ++i) {
            int t = (f[df - dg + i] - c * g[i]) % p;
            f[df - dg + i] = t < 0 ? t + p : t;
        }
    }
    return trim(f);
}

bool irreducible(const std::vector<int>& f, int p) {
    int d = degree(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    // trial division by every monic polynomial of degree 1..d/2
    for (int dd = 1; dd <= d / 2; ++dd) {
        long long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long long m = 0; m < count; ++m) {
            std::vector<int> g(dd + 1, 0);
            long long t = m;
            for (int i = 0; i < dd; ++i) { g[i] = int(t % p); t /= p; }
            g[dd] = 1;
            if (degree(rem(f, g, p)) < 0) return false;
        }
    }
    return true;
}

} // namespace gfpoly

namespace {

// smallest monic irreducible of degree k over GF(p), coefficients compared
// from the constant term upward (constant term is most significant)
std::vector<int> smallest_irreducible(int p, int k) {
    std::vector<int> c(k, 0);
    while (true) {
        std::vector<int> f(c.begin(), c.end());
        f.push_back(1);
        if (gfpoly::irreducible(f, p)) return f;
        // increment the tuple (c0,...,c_{k-1}) with c_{k-1} fastest
        int i = k - 1;
        while (i >= 0 && c[i] == p - 1) c[i--] = 0;
        if (i < 0) break;
        ++c[i];
    }
    throw VerificationError("no irreducible polynomial found for p=" + std::to_string(p) +
                            " k=" + std::to_string(k));
}

} // namespace

Field Field::make(int q) {
    if (q < 2) throw NotPrimePower("field order must be >= 2, got " + std::to_string(q));
    int p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (p * p > q) p = q; // q itself is prime
    int k = 0;
    int m = q;
    while (m % p == 0) { m /= p; ++k; }
    if (m != 1) throw NotPrimePower(std::to_string(q) + " is not a prime power");

    Field f;
    f.p_ = p;
    f.k_ = k;
    f.q_ = q;
    f.modulus_ = (k == 1) ? std::vector<int>{0, 1} : smallest_irreducible(p, k);
    if (q <= 256) f.build_tables();
    return f;
}

int Field::add_slow(int a, int b) const {
    if (k_ == 1) return (a + b) % p_;
    int r = 0, mult = 1;
    for (int i = 0; i < k_; ++i) {
        r += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

int Field::mul_slow(int a, int b) const {
    if (k_ == 1) return int((long long)a * b % p_);
    std::vector<int> fa(k_), fb(k_);
    for (int i = 0; i < k_; ++i) { fa[i] = a % p_; a /= p_; }
    for (int i = 0; i < k_; ++i) { fb[i] = b % p_; b /= p_; }
    auto r = gfpoly::rem(gfpoly::mul(fa, fb, p_), modulus_, p_);
    int e = 0, mult = 1;
    for (size_t i = 0; i < r.size(); ++i) { e += r[i] * mult; mult *= p_; }
    return e;
}

void Field::build_tables() {
    add_tab_.resize(size_t(q_) * q_);
    mul_tab_.resize(size_t(q_) * q_);
    neg_tab_.resize(q_);
    inv_tab_.assign(q_, 0);
    for (int a = 0; a < q_; ++a)
        for (int b = 0; b < q_; ++b) {
            int s = add_slow(a, b);
            int m = mul_slow(a, b);
            add_tab_[size_t(a) * q_ + b] = s;
            mul_tab_[size_t(a) * q_ + b] = m;
            if (s == 0) neg_tab_[a] = b;
            if (m == 1) inv_tab_[a] = b;
        }
    has_tables_ = true;
}

int Field::add(int a, int b) const {
    return has_tables_ ? add_tab_[size_t(a) * q_ + b] : add_slow(a, b);
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul(int a, int b) const {
    return has_tables_ ? mul_tab_[size_t(a) * q_ + b] : mul_slow(a, b);
}

int Field::neg(int a) const {
    if (has_tables_) return neg_tab_[a];
    if (k_ == 1) return (p_ - a) % p_;
    int r = 0, mult = 1;
    for (int i = 0; i < k_; ++i) {
        r += ((p_ - a % p_) % p_) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

int Field::inv(int a) const {
    if (a == 0) throw DivisionByZero("inverse of 0 in GF(" + std::to_string(q_) + ")");
    if (has_tables_) return inv_tab_[a];
    return pow(a, q_ - 2); // a^(q-1) = 1 for a != 0
}

int Field::pow(int a, long long e) const {
    int r = 1;
    long long ee = e % (q_ - 1);
    if (ee < 0) ee += q_ - 1;
    if (a == 0) return e == 0 ? 1 : 0;
    while (ee) {
        if (ee & 1) r = mul(r, a);
        a = mul(a, a);
        ee >>= 1;
    }
    return r;
}

} // namespace lineperc
