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

#ifndef MUBFORGE_POLY2_H
#define MUBFORGE_POLY2_H

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mubforge {

/// A polynomial over F2. Bit i of the packed words is the coefficient of x^i.
///
/// The word vector never carries leading zero words, so equal polynomials have
/// equal representations and the zero polynomial is the empty vector.
class Poly2 {
   public:
    Poly2() = default;

    static Poly2 from_bits(uint64_t bits);
    static Poly2 monomial(size_t exponent);
    static Poly2 from_exponents(std::initializer_list<size_t> exponents);
    /// Parses the hex text format: the coefficient bitstring as a hex integer, e.g. "B" is x^3+x+1.
    static Poly2 from_hex(std::string_view hex);

    /// Degree, or -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const {
        return words_.empty();
    }
    bool is_one() const {
        return words_.size() == 1 && words_[0] == 1;
    }
    bool coeff(size_t exponent) const;
    void set_coeff(size_t exponent, bool value);

    /// Low 64 coefficients packed as bits.
    uint64_t low_word() const {
        return words_.empty() ? 0 : words_[0];
    }
    const std::vector<uint64_t> &words() const {
        return words_;
    }

    /// Multiplies by x^k.
    Poly2 shifted(size_t k) const;

    std::string to_hex() const;
    /// Human-readable form such as "x^3 + x + 1".
    std::string to_string() const;

    Poly2 &operator+=(const Poly2 &other);
    friend Poly2 operator+(Poly2 a, const Poly2 &b) {
        a += b;
        return a;
    }
    friend Poly2 operator*(const Poly2 &a, const Poly2 &b);
    friend Poly2 operator%(const Poly2 &a, const Poly2 &b);
    friend Poly2 operator/(const Poly2 &a, const Poly2 &b);
    friend std::pair<Poly2, Poly2> poly_divmod(const Poly2 &a, const Poly2 &b);
    friend bool operator==(const Poly2 &a, const Poly2 &b) = default;
    friend std::strong_ordering operator<=>(const Poly2 &a, const Poly2 &b);

   private:
    void trim();
    void xor_shifted(const Poly2 &other, size_t shift);

    std::vector<uint64_t> words_;
};

Poly2 poly_add(const Poly2 &a, const Poly2 &b);
Poly2 poly_mul(const Poly2 &a, const Poly2 &b);
/// Remainder of a by b. Throws std::domain_error when b is zero.
Poly2 poly_mod(const Poly2 &a, const Poly2 &b);
/// Quotient and remainder. Throws std::domain_error when b is zero.
std::pair<Poly2, Poly2> poly_divmod(const Poly2 &a, const Poly2 &b);
Poly2 poly_gcd(Poly2 a, Poly2 b);
Poly2 poly_mulmod(const Poly2 &a, const Poly2 &b, const Poly2 &modulus);

/// Rabin's test: p | x^(2^m) + x and gcd(p, x^(2^(m/q)) + x) = 1 for every prime q | m.
bool is_irreducible(const Poly2 &p);

/// F_0 = 0, F_1 = 1, F_{n+1} = x F_n + F_{n-1}. Linear in n; the slow reference path.
Poly2 fibonacci_poly(uint64_t n);

/// Entries (F_{n+1}, F_n, F_n, F_{n-1}) of [[x,1],[1,0]]^n in row-major order, reduced mod
/// `modulus` unless it is zero. F_{-1} is taken as 1, so n = 0 gives the identity.
std::array<Poly2, 4> fibonacci_generator_power(uint64_t n, const Poly2 &modulus = Poly2());

/// F_n mod p by square-and-multiply on the 2x2 generator; O(log n) multiplications.
Poly2 fibonacci_poly_mod(uint64_t n, const Poly2 &p);

/// Largest degree accepted by fibonacci_index; 2^63 + 1 is the largest 2^m + 1 in a uint64.
constexpr int kMaxIndexDegree = 63;

/// Sorted, deduplicated divisors of 2^m - 1 and 2^m + 1.
std::vector<uint64_t> fibonacci_index_candidates(int m);

/// Least n >= 1 with p | F_n.
///
/// For p != x the index divides 2^m - 1 or 2^m + 1, so only those divisors are tried, in
/// ascending order. p = x divides F_2 = x and is answered directly. Throws
/// std::invalid_argument if p is not irreducible or its degree exceeds kMaxIndexDegree.
uint64_t fibonacci_index(const Poly2 &p);

/// Prime factorization of n (with multiplicity, ascending). Pollard rho with Miller-Rabin.
std::vector<uint64_t> factorize(uint64_t n);

}  // namespace mubforge

#endif
