#pragma once

// Tropical semifield Trop(z1, ..., zm) and ground rings between Z and ZP.
//
// A TropMonomial is an exponent vector. Multiplication adds exponents, the
// auxiliary addition takes the componentwise minimum. The generator count is
// carried by every value and checked whenever two values meet.

#include "clusterau/integer.hpp"

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clusterau {

class TropMonomial {
  public:
    TropMonomial() = default;

    /// The identity over `generators` generators.
    explicit TropMonomial(std::size_t generators) : exps_(generators) {}

    explicit TropMonomial(std::vector<BigInt> exps) : exps_(std::move(exps)) {}

    /// z_{index+1} over `generators` generators (index is 0-based).
    static TropMonomial generator(std::size_t generators, std::size_t index);

    std::size_t generators() const noexcept { return exps_.size(); }
    const std::vector<BigInt>& exponents() const noexcept { return exps_; }
    const BigInt& operator[](std::size_t i) const { return exps_.at(i); }

    bool is_one() const;
    TropMonomial inverse() const;
    TropMonomial pow(const BigInt& e) const;

    /// Same monomial over one more generator, whose exponent is `exponent`.
    TropMonomial appended(const BigInt& exponent) const;

    /// Drops generator `index` (its exponent is discarded).
    TropMonomial without(std::size_t index) const;

    /// `z1^2*z2^-1`; exponent 1 is written bare and the identity is `1`.
    std::string str() const;

    /// Inverse of str(). Accepts `^1`, repeated factors and whitespace.
    static TropMonomial parse(std::string_view text, std::size_t generators);

    friend bool operator==(const TropMonomial&, const TropMonomial&) = default;

  private:
    std::vector<BigInt> exps_;
};

TropMonomial trop_mul(const TropMonomial& a, const TropMonomial& b);

/// Auxiliary addition: exponentwise minimum.
TropMonomial trop_add(const TropMonomial& a, const TropMonomial& b);

inline TropMonomial operator*(const TropMonomial& a, const TropMonomial& b) { return trop_mul(a, b); }

/// a ⊕ 1, the denominator appearing in every exchange relation.
TropMonomial oplus_one(const TropMonomial& a);

/// Ground ring A with Z ⊆ A ⊆ ZP for a tropical P.
///
/// Localized(S) is Z[z_1..z_m] with the generators in S inverted. An empty S
/// is normalised to Polynomial so that equal rings compare equal.
class GroundRing {
  public:
    enum class Kind { FullLaurent, Polynomial, Localized };

    static GroundRing full_laurent() { return GroundRing(Kind::FullLaurent, {}); }
    static GroundRing polynomial() { return GroundRing(Kind::Polynomial, {}); }
    /// `inverted` holds 0-based generator indices.
    static GroundRing localized(std::set<std::size_t> inverted);

    Kind kind() const noexcept { return kind_; }
    const std::set<std::size_t>& inverted() const noexcept { return inverted_; }
    bool inverts(std::size_t generator) const;

    /// This ring with one more generator inverted, A[z^{±1}].
    GroundRing inverting(std::size_t generator) const;

    /// `zp`, `zp+`, or `zp+:z2,z5`.
    std::string str() const;
    static GroundRing parse(std::string_view text);

    friend bool operator==(const GroundRing&, const GroundRing&) = default;

  private:
    GroundRing(Kind kind, std::set<std::size_t> inverted) : kind_(kind), inverted_(std::move(inverted)) {}

    Kind kind_;
    std::set<std::size_t> inverted_;
};

bool in_ground_ring(const TropMonomial& a, const GroundRing& r);

/// Generators whose negative exponent in `a` keeps it out of `r`.
std::vector<std::size_t> blocking_generators(const TropMonomial& a, const GroundRing& r);

/// Both y/(1⊕y) and 1/(1⊕y) lie in r, for every y in `y`.
bool lp_conditions_hold(std::span<const TropMonomial> y, const GroundRing& r);

}  // namespace clusterau
