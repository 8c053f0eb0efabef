// Copyright 2026 The mubforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mubforge/poly2.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace mubforge {

namespace {

using u128 = unsigned __int128;

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t n) {
    return static_cast<uint64_t>(static_cast<u128>(a) * b % n);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t n) {
    uint64_t result = 1 % n;
    base %= n;
    while (exp != 0) {
        if (exp & 1) {
            result = mulmod_u64(result, base, n);
        }
        base = mulmod_u64(base, base, n);
        exp >>= 1;
    }
    return result;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) {
            return n == p;
        }
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        s++;
    }
    // This witness set is deterministic for all 64-bit inputs.
    for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int r = 1; r < s; r++) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd composite n.
uint64_t pollard_brent(uint64_t n) {
    for (uint64_t c = 1;; c++) {
        auto step = [&](uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
        uint64_t y = 2, x = 2, q = 1, g = 1, ys = 2;
        uint64_t r = 1;
        const uint64_t batch = 128;
        do {
            x = y;
            for (uint64_t i = 0; i < r; i++) {
                y = step(y);
            }
            uint64_t k = 0;
            do {
                ys = y;
                for (uint64_t i = 0; i < std::min(batch, r - k); i++) {
                    y = step(y);
                    q = mulmod_u64(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += batch;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

void factor_into(uint64_t n, std::vector<uint64_t> &out) {
    if (n == 1) {
        return;
    }
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    uint64_t f = pollard_brent(n);
    factor_into(f, out);
    factor_into(n / f, out);
}

void append_divisors(uint64_t n, std::vector<uint64_t> &out) {
    auto primes = factorize(n);
    std::vector<uint64_t> divisors{1};
    size_t i = 0;
    while (i < primes.size()) {
        uint64_t p = primes[i];
        size_t mult = 0;
        while (i < primes.size() && primes[i] == p) {
            mult++;
            i++;
        }
        size_t existing = divisors.size();
        uint64_t power = 1;
        for (size_t e = 1; e <= mult; e++) {
            power *= p;
            for (size_t k = 0; k < existing; k++) {
                divisors.push_back(divisors[k] * power);
            }
        }
    }
    out.insert(out.end(), divisors.begin(), divisors.end());
}

using Mat2 = std::array<Poly2, 4>;

Mat2 mat2_mul(const Mat2 &a, const Mat2 &b, const Poly2 &modulus) {
    auto mul = [&](const Poly2 &x, const Poly2 &y) {
        return modulus.is_zero() ? x * y : poly_mulmod(x, y, modulus);
    };
    return {
        mul(a[0], b[0]) + mul(a[1], b[2]),
        mul(a[0], b[1]) + mul(a[1], b[3]),
        mul(a[2], b[0]) + mul(a[3], b[2]),
        mul(a[2], b[1]) + mul(a[3], b[3]),
    };
}

}  // namespace

Poly2 Poly2::from_bits(uint64_t bits) {
    Poly2 p;
    if (bits != 0) {
        p.words_.push_back(bits);
    }
    return p;
}

Poly2 Poly2::monomial(size_t exponent) {
    Poly2 p;
    p.set_coeff(exponent, true);
    return p;
}

Poly2 Poly2::from_exponents(std::initializer_list<size_t> exponents) {
    Poly2 p;
    for (size_t e : exponents) {
        p.set_coeff(e, !p.coeff(e));
    }
    return p;
}

Poly2 Poly2::from_hex(std::string_view hex) {
    if (hex.empty()) {
        throw std::invalid_argument("empty polynomial hex string");
    }
    Poly2 p;
    size_t bit = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
        char c = *it;
        int nibble;
        if (c >= '0' && c <= '9') {
            nibble = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            nibble = c - 'a' + 10;
        } else if (c >= 'A' && c <= 'F') {
            nibble = c - 'A' + 10;
        } else {
            throw std::invalid_argument("invalid hex digit in polynomial: " + std::string(hex));
        }
        for (int k = 0; k < 4; k++) {
            if ((nibble >> k) & 1) {
                p.set_coeff(bit + k, true);
            }
        }
    }
    return p;
}

int Poly2::degree() const {
    if (words_.empty()) {
        return -1;
    }
    return static_cast<int>(64 * (words_.size() - 1) + 63 - std::countl_zero(words_.back()));
}

bool Poly2::coeff(size_t exponent) const {
    size_t w = exponent / 64;
    return w < words_.size() && ((words_[w] >> (exponent % 64)) & 1);
}

void Poly2::set_coeff(size_t exponent, bool value) {
    size_t w = exponent / 64;
    if (value) {
        if (w >= words_.size()) {
            words_.resize(w + 1, 0);
        }
        words_[w] |= uint64_t{1} << (exponent % 64);
    } else if (w < words_.size()) {
        words_[w] &= ~(uint64_t{1} << (exponent % 64));
        trim();
    }
}

void Poly2::trim() {
    while (!words_.empty() && words_.back() == 0) {
        words_.pop_back();
    }
}

void Poly2::xor_shifted(const Poly2 &other, size_t shift) {
    if (other.words_.empty()) {
        return;
    }
    size_t word_shift = shift / 64;
    unsigned bit_shift = shift % 64;
    size_t needed = other.words_.size() + word_shift + 1;
    if (words_.size() < needed) {
        words_.resize(needed, 0);
    }
    for (size_t i = 0; i < other.words_.size(); i++) {
        uint64_t w = other.words_[i];
        words_[i + word_shift] ^= w << bit_shift;
        if (bit_shift != 0) {
            words_[i + word_shift + 1] ^= w >> (64 - bit_shift);
        }
    }
    trim();
}

Poly2 Poly2::shifted(size_t k) const {
    Poly2 result;
    result.xor_shifted(*this, k);
    return result;
}

std::string Poly2::to_hex() const {
    if (is_zero()) {
        return "0";
    }
    static constexpr char kDigits[] = "0123456789ABCDEF";
    std::string out;
    int top = degree() / 4;
    for (int nib = top; nib >= 0; nib--) {
        int v = 0;
        for (int k = 0; k < 4; k++) {
            v |= coeff(4 * nib + k) << k;
        }
        out.push_back(kDigits[v]);
    }
    return out;
}

std::string Poly2::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (int e = degree(); e >= 0; e--) {
        if (!coeff(e)) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        if (e == 0) {
            out += "1";
        } else if (e == 1) {
            out += "x";
        } else {
            out += "x^" + std::to_string(e);
        }
    }
    return out;
}

Poly2 &Poly2::operator+=(const Poly2 &other) {
    if (words_.size() < other.words_.size()) {
        words_.resize(other.words_.size(), 0);
    }
    for (size_t i = 0; i < other.words_.size(); i++) {
        words_[i] ^= other.words_[i];
    }
    trim();
    return *this;
}

Poly2 operator*(const Poly2 &a, const Poly2 &b) {
    const Poly2 &small = a.words_.size() <= b.words_.size() ? a : b;
    const Poly2 &large = &small == &a ? b : a;
    Poly2 result;
    for (size_t w = 0; w < small.words_.size(); w++) {
        uint64_t bits = small.words_[w];
        while (bits != 0) {
            int k = std::countr_zero(bits);
            bits &= bits - 1;
            result.xor_shifted(large, 64 * w + k);
        }
    }
    return result;
}

std::pair<Poly2, Poly2> poly_divmod(const Poly2 &a, const Poly2 &b) {
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    int db = b.degree();
    Poly2 quotient;
    Poly2 remainder = a;
    for (int e = remainder.degree(); e >= db; e = remainder.degree()) {
        quotient.set_coeff(e - db, true);
        remainder.xor_shifted(b, e - db);
    }
    return {quotient, remainder};
}

Poly2 operator%(const Poly2 &a, const Poly2 &b) {
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    int db = b.degree();
    Poly2 r = a;
    for (int e = r.degree(); e >= db; e = r.degree()) {
        r.xor_shifted(b, e - db);
    }
    return r;
}

Poly2 operator/(const Poly2 &a, const Poly2 &b) {
    return poly_divmod(a, b).first;
}

std::strong_ordering operator<=>(const Poly2 &a, const Poly2 &b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) {
        return c;
    }
    for (size_t i = a.words_.size(); i-- > 0;) {
        if (auto c = a.words_[i] <=> b.words_[i]; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

Poly2 poly_add(const Poly2 &a, const Poly2 &b) {
    return a + b;
}

Poly2 poly_mul(const Poly2 &a, const Poly2 &b) {
    return a * b;
}

Poly2 poly_mod(const Poly2 &a, const Poly2 &b) {
    return a % b;
}

Poly2 poly_gcd(Poly2 a, Poly2 b) {
    while (!b.is_zero()) {
        Poly2 r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly2 poly_mulmod(const Poly2 &a, const Poly2 &b, const Poly2 &modulus) {
    return (a * b) % modulus;
}

bool is_irreducible(const Poly2 &p) {
    int m = p.degree();
    if (m < 1) {
        return false;
    }
    const Poly2 x = Poly2::monomial(1);
    // frob[k] = x^(2^k) mod p
    std::vector<Poly2> frob{x % p};
    for (int k = 1; k <= m; k++) {
        frob.push_back(poly_mulmod(frob.back(), frob.back(), p));
    }
    if (!((frob[m] + x) % p).is_zero()) {
        return false;
    }
    std::vector<uint64_t> primes = factorize(static_cast<uint64_t>(m));
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (uint64_t q : primes) {
        Poly2 g = poly_gcd(p, (frob[m / q] + x) % p);
        if (!g.is_one()) {
            return false;
        }
    }
    return true;
}

Poly2 fibonacci_poly(uint64_t n) {
    Poly2 prev;  // F_0
    Poly2 cur = Poly2::from_bits(1);
    if (n == 0) {
        return prev;
    }
    for (uint64_t j = 1; j < n; j++) {
        Poly2 next = cur.shifted(1) + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::array<Poly2, 4> fibonacci_generator_power(uint64_t n, const Poly2 &modulus) {
    const Poly2 one = Poly2::from_bits(1);
    Mat2 result{one, Poly2(), Poly2(), one};
    Mat2 base{Poly2::monomial(1), one, one, Poly2()};
    if (!modulus.is_zero()) {
        for (auto &e : result) {
            e = e % modulus;
        }
        for (auto &e : base) {
            e = e % modulus;
        }
    }
    while (n != 0) {
        if (n & 1) {
            result = mat2_mul(result, base, modulus);
        }
        n >>= 1;
        if (n != 0) {
            base = mat2_mul(base, base, modulus);
        }
    }
    return result;
}

Poly2 fibonacci_poly_mod(uint64_t n, const Poly2 &p) {
    if (p.degree() < 1) {
        throw std::invalid_argument("fibonacci_poly_mod needs a modulus of degree >= 1");
    }
    return fibonacci_generator_power(n, p)[1];
}

std::vector<uint64_t> factorize(uint64_t n) {
    std::vector<uint64_t> out;
    if (n < 2) {
        return out;
    }
    for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    factor_into(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint64_t> fibonacci_index_candidates(int m) {
    if (m < 1 || m > kMaxIndexDegree) {
        throw std::invalid_argument("fibonacci index degree out of range: " + std::to_string(m));
    }
    uint64_t pow = uint64_t{1} << m;
    std::vector<uint64_t> out;
    append_divisors(pow - 1, out);
    append_divisors(pow + 1, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

uint64_t fibonacci_index(const Poly2 &p) {
    int m = p.degree();
    if (m > kMaxIndexDegree) {
        throw std::invalid_argument("fibonacci_index: degree " + std::to_string(m) + " exceeds cap");
    }
    if (!is_irreducible(p)) {
        throw std::invalid_argument("fibonacci_index: " + p.to_string() + " is not irreducible");
    }
    if (p == Poly2::monomial(1)) {
        return 2;
    }
    for (uint64_t n : fibonacci_index_candidates(m)) {
        if (fibonacci_poly_mod(n, p).is_zero()) {
            return n;
        }
    }
    throw std::logic_error("fibonacci_index: no divisor of 2^m +- 1 annihilates " + p.to_string());
}

}  // namespace mubforge
