#pragma once

// Exact Laurent polynomials in x_1..x_n whose coefficients are integer
// combinations of Laurent monomials in z_1..z_m, i.e. elements of
// ZP[x_1^{±1}, ..., x_n^{±1}] for P = Trop(z_1, ..., z_m).
//
// Terms are kept in a map ordered by the canonical term order: graded
// lexicographic on the x-exponents, ties broken graded lexicographically on
// the z-exponents. The leading (largest) term comes first. Zero coefficients
// are never stored.

#include "clusterau/integer.hpp"
#include "clusterau/semifield.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace clusterau {

class LaurentPoly {
  public:
    /// x-exponents (n entries) followed by z-exponents (m entries).
    using Exponents = std::vector<Int>;

    /// Strict "greater than" in the canonical term order, so that maps
    /// iterate from the leading term down.
    struct TermOrder {
        std::size_t variables = 0;
        bool operator()(const Exponents& a, const Exponents& b) const;
    };
    using TermMap = std::map<Exponents, BigInt, TermOrder>;

    LaurentPoly() : LaurentPoly(0, 0) {}

    /// The zero polynomial.
    LaurentPoly(std::size_t variables, std::size_t generators);

    static LaurentPoly constant(std::size_t variables, std::size_t generators, BigInt c);
    /// x_{index+1}.
    static LaurentPoly variable(std::size_t variables, std::size_t generators, std::size_t index);
    static LaurentPoly monomial(std::size_t variables, Exponents exps, BigInt c = 1);
    /// The coefficient monomial z^a viewed as a polynomial in n variables.
    static LaurentPoly from_trop(std::size_t variables, const TropMonomial& a);

    std::size_t variables() const noexcept { return n_; }
    std::size_t generators() const noexcept { return m_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    /// True iff this is a single term with coefficient ±1.
    bool is_unit_monomial() const;

    LaurentPoly operator-() const;
    LaurentPoly pow(unsigned e) const;

    /// Multiplies every term by the monomial with exponents `shift`.
    LaurentPoly shifted(const Exponents& shift) const;

    /// Componentwise minimum of the exponents over all terms. Zero vector for 0.
    Exponents min_exponents() const;

    /// The z-part of a term key as a coefficient monomial.
    TropMonomial coefficient_monomial(const Exponents& key) const;

    /// Canonical text, e.g. `x1^-1*x2 + x1^-1` or `-2*x1*z2^-1 + 3`.
    std::string str() const;

    /// Inverse of str(); variables x1..xn and z1..zm.
    static LaurentPoly parse(std::string_view text, std::size_t variables, std::size_t generators);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  private:
    friend LaurentPoly lp_add(const LaurentPoly&, const LaurentPoly&);
    friend LaurentPoly lp_mul(const LaurentPoly&, const LaurentPoly&);
    friend LaurentPoly lp_exact_div(const LaurentPoly&, const LaurentPoly&);

    void accumulate(const Exponents& key, const BigInt& c);

    std::size_t n_;
    std::size_t m_;
    TermMap terms_;
};

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q);

/// Returns r with q·r = p, or throws NotDivisible.
///
/// Both operands are first shifted by monomials into genuine polynomials and
/// the monomial content of q is removed; since q is then coprime to every
/// variable, Laurent divisibility is polynomial divisibility, which is decided
/// by leading-term elimination under the canonical order.
LaurentPoly lp_exact_div(const LaurentPoly& p, const LaurentPoly& q);

/// Every term's z-monomial lies in r.
bool coeffs_in_ring(const LaurentPoly& p, const GroundRing& r);

inline LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) { return lp_add(p, q); }
inline LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return lp_add(p, -q); }
inline LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) { return lp_mul(p, q); }

}  // namespace clusterau
